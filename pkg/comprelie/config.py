"""
This module reads the structure configuration files used by the
command-line interface. A configuration is a text file of "key = value"
lines, for example:

    # T(V,f) with the Fliess operator
    kind = tvf
    dim = 2
    f.0 = 0 0
    f.1 = 1 0

Blank lines and lines starting with "#" are ignored.
"""

import re

from .algebra import BialgebraContext, LinMap, LinForm, PreLieConsts, rational
from .polyx import FamilySpec
from .structures import tvf_structure, tvfl_structure, tvstar_structure, sfl_structure, kx_structure
from .errors import ComPreLieError, ConfigError



kinds = ('tvf', 'tvfl', 'tvstar', 'sfl', 'kx_family')

scalar_keys = ('lambda', 'mu', 'a', 'b')

# Keys each kind accepts, besides "kind" itself.
kind_keys = {
    'tvf': ('dim', 'f.'),
    'tvfl': ('dim', 'form', 'lambda'),
    'tvstar': ('dim', 'star.'),
    'sfl': ('dim', 'form', 'lambda'),
    'kx_family': ('family', 'N', 'lambda', 'mu', 'a', 'b'),
}

family_parameters = {
    'G1': ('N', 'lambda', 'a', 'b'),
    'G2': ('N', 'lambda', 'mu'),
    'G3': ('N', 'lambda', 'mu'),
    'G4': ('lambda',),
    'GPrime': ('lambda', 'mu'),
}

line_pattern = re.compile(r'^\s*([A-Za-z][\w.]*)\s*=\s*(.*?)\s*$')



class StructureConfig(object):
    """
    A parsed structure configuration. The payload entries are kept as
    exact rationals; structure() builds the StructureUnderTest.
    """

    def __init__(self, kind, dim=None, rows=None, form=None, star=None,
        scalars=None, family=None, N=None, path=None
    ):
        self.kind = kind
        self.dim = dim
        self.rows = rows or {}
        self.form = form
        self.star = star or {}
        self.scalars = scalars or {}
        self.family = family
        self.N = N
        self.path = path

    @classmethod
    def default(cls):
        """T(V,f) on two letters with f = 0, used when no file is given."""
        return cls('tvf', dim=2)

    @classmethod
    def load(cls, path):
        try:
            with open(path, 'r') as config_file:
                text = config_file.read()
        except (IOError, OSError) as error:
            raise ConfigError('Unable to read configuration: %s' % error, path)
        return cls.parse(text, path)

    @classmethod
    def parse(cls, text, path='<config>'):
        entries = {}
        lines = {}
        for number, line in enumerate(text.splitlines(), 1):
            if not line.strip() or line.lstrip().startswith('#'):
                continue
            match = line_pattern.match(line)
            if not match:
                raise ConfigError('Expected a "key = value" line.', path, number)
            key, value = match.groups()
            if key in entries:
                raise ConfigError('Duplicate key "%s".' % key, path, number)
            entries[key] = value
            lines[key] = number
        def fail(message, key):
            raise ConfigError(message, path, lines.get(key))
        def scalar(key):
            try:
                return rational(entries[key])
            except (ValueError, ZeroDivisionError) as error:
                fail(str(error), key)
        def vector(key, length):
            values = [value for value in re.split(r'[\s,]+', entries[key]) if value]
            if len(values) != length:
                fail('Key "%s" needs %s entries, got %s.' % (key, length, len(values)), key)
            try:
                return [rational(value) for value in values]
            except (ValueError, ZeroDivisionError) as error:
                fail(str(error), key)
        def integer(key, low):
            try:
                value = int(entries[key])
            except ValueError:
                fail('Key "%s" must be an integer, got "%s".' % (key, entries[key]), key)
            if value < low:
                fail('Key "%s" must be at least %s, got %s.' % (key, low, value), key)
            return value
        def index(key, text, dim):
            if not text.isdigit() or int(text) >= dim:
                fail('Key "%s" names letter %s, outside dimension %s.' % (key, text, dim), key)
            return int(text)

        if 'kind' not in entries:
            raise ConfigError('Missing key "kind".', path)
        kind = entries['kind']
        if kind not in kinds:
            fail('Unknown kind "%s"; expected one of %s.' % (kind, ', '.join(kinds)), 'kind')
        allowed = kind_keys[kind]
        for key in entries:
            if key != 'kind' and not any(
                key.startswith(name) if name.endswith('.') else key == name for name in allowed
            ):
                fail('Key "%s" does not apply to kind "%s".' % (key, kind), key)
        config = cls(kind, path=path)

        if kind == 'kx_family':
            if 'family' not in entries:
                raise ConfigError('Kind "kx_family" needs a "family" key.', path)
            family = entries['family']
            if family not in family_parameters:
                fail('Unknown family "%s"; expected one of %s.' % (
                    family, ', '.join(FamilySpec.families)
                ), 'family')
            config.family = family
            for key in ('N', 'mu', 'a', 'b'):
                if key in entries and key not in family_parameters[family]:
                    fail('Family %s takes no parameter "%s".' % (family, key), key)
            for key in family_parameters[family]:
                if key != 'lambda' and key not in entries:
                    raise ConfigError('Family %s needs the key "%s".' % (family, key), path)
            if 'N' in entries:
                config.N = integer('N', 1)
            for key in scalar_keys:
                if key in entries:
                    config.scalars[key] = scalar(key)
            return config

        if 'dim' not in entries:
            raise ConfigError('Kind "%s" needs a "dim" key.' % kind, path)
        dim = config.dim = integer('dim', 1)
        if 'lambda' in entries:
            config.scalars['lambda'] = scalar('lambda')
        if kind == 'tvf':
            for key in entries:
                if key.startswith('f.'):
                    config.rows[index(key, key[2:], dim)] = vector(key, dim)
        elif kind in ('tvfl', 'sfl'):
            if 'form' not in entries:
                raise ConfigError('Kind "%s" needs a "form" key.' % kind, path)
            config.form = vector('form', dim)
        else:
            for key in entries:
                if key.startswith('star.'):
                    parts = key.split('.')
                    if len(parts) != 3:
                        fail('Expected a key of the form "star.i.j", got "%s".' % key, key)
                    pair = (index(key, parts[1], dim), index(key, parts[2], dim))
                    config.star[pair] = vector(key, dim)
        return config

    @property
    def lam(self):
        return self.scalars.get('lambda', rational(0))

    def family_spec(self):
        get = self.scalars.get
        if self.family == 'G1':
            return FamilySpec.g1(self.N, self.lam, get('a'), get('b'))
        elif self.family == 'G2':
            return FamilySpec.g2(self.N, self.lam, get('mu'))
        elif self.family == 'G3':
            return FamilySpec.g3(self.N, self.lam, get('mu'))
        elif self.family == 'G4':
            return FamilySpec.g4(self.lam)
        return FamilySpec.gprime(self.lam, get('mu'))

    def structure(self):
        """Build the configured structure. Invalid parameters raise ConfigError."""
        try:
            if self.kind == 'kx_family':
                return kx_structure(self.family_spec())
            ctx = BialgebraContext(self.dim)
            if self.kind == 'tvf':
                rows = [self.rows.get(i, [0] * self.dim) for i in range(self.dim)]
                return tvf_structure(LinMap(ctx, rows))
            elif self.kind == 'tvfl':
                return tvfl_structure(LinForm(ctx, self.form), self.lam)
            elif self.kind == 'sfl':
                return sfl_structure(LinForm(ctx, self.form), self.lam)
            return tvstar_structure(PreLieConsts.from_pairs(ctx, self.star))
        except ConfigError:
            raise
        except ComPreLieError as error:
            raise ConfigError('Invalid structure: %s' % error, self.path)

    def __repr__(self):
        return 'StructureConfig(%s)' % self.kind
