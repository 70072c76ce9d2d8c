"""
This module implements the exact linear algebra that the rest of comprelie
is built on: rational scalars, words over a finite alphabet, finite linear
combinations of words (and of tensors of words), and the linear data that
parametrize the preLie constructions.

Words are tuples of letter indices. The empty tuple is the unit. All values
are immutable once constructed.
"""

import re, numbers, itertools
from fractions import Fraction

from .errors import DimensionMismatch, LetterOutOfRange, NotPreLie



rational_pattern = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$')

def rational(value):
    """
    Get an exact Fraction from an integer, a Fraction, or a string of the
    form "p" or "p/q". Floats are refused.
    """
    if isinstance(value, Fraction):
        return value
    elif isinstance(value, numbers.Integral):
        return Fraction(int(value))
    elif isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    elif isinstance(value, str):
        match = rational_pattern.match(value)
        if not match:
            raise ValueError('Expected a rational of the form "p" or "p/q", got "%s".' % value)
        denominator = int(match.group(2)) if match.group(2) else 1
        if denominator == 0:
            raise ZeroDivisionError('Rational "%s" has a zero denominator.' % value)
        return Fraction(int(match.group(1)), denominator)
    raise TypeError('Coefficients must be exact rationals, not %r.' % (value,))

def render_rational(value):
    return str(rational(value))



class BialgebraContext(object):
    """
    The ambient vector space V, known by its dimension. Elements carry their
    context so that elements of different spaces are never mixed silently.
    """

    def __init__(self, dim):
        if not isinstance(dim, numbers.Integral) or dim < 1:
            raise ValueError('Dimension must be a positive integer, got %r.' % (dim,))
        self.dim = int(dim)

    def __eq__(self, other):
        return isinstance(other, BialgebraContext) and self.dim == other.dim
    def __ne__(self, other):
        return not self == other
    def __hash__(self):
        return hash(('BialgebraContext', self.dim))
    def __repr__(self):
        return 'BialgebraContext(%s)' % self.dim

    def check_letter(self, letter):
        if not isinstance(letter, numbers.Integral) or not 0 <= letter < self.dim:
            raise LetterOutOfRange(letter, self.dim)
        return int(letter)

    def check_dim(self, dim, what='element'):
        if dim != self.dim:
            raise DimensionMismatch(self.dim, dim, what)

    def words(self, length):
        """All words of the given length, in lexicographic order."""
        return list(itertools.product(range(self.dim), repeat=length))

    def word(self, *letters):
        for letter in letters:
            self.check_letter(letter)
        return Elem(self, {tuple(letters): 1})

    def letter(self, letter):
        return self.word(letter)

    def unit(self):
        return Elem(self, {(): 1})

    def zero(self):
        return Elem(self)



def normal_terms(terms):
    """
    Accumulate (key, coefficient) pairs, or a mapping, into a dictionary
    that holds no zero coefficient.
    """
    items = terms.items() if isinstance(terms, dict) else terms
    accumulated = {}
    for key, coeff in items:
        coeff = rational(coeff)
        if key in accumulated:
            accumulated[key] += coeff
        else:
            accumulated[key] = coeff
    return dict((key, coeff) for key, coeff in accumulated.items() if coeff)



class LinComb(object):
    """
    A finite linear combination of basis keys with nonzero rational
    coefficients. Subclasses decide what a key is and how it is ordered and
    shown; arithmetic and equality live here.
    """

    def __init__(self, ctx, terms=()):
        self.ctx = ctx
        self.terms = normal_terms(terms)

    def like(self, terms):
        """Get a combination of the same kind and context as this one."""
        return type(self)(self.ctx, terms)

    def degree(self, key):
        raise NotImplementedError()
    def sort_key(self, key):
        raise NotImplementedError()
    def render_key(self, key):
        raise NotImplementedError()
    def json_key(self, key):
        raise NotImplementedError()
    def unit_key(self):
        raise NotImplementedError()

    def check_compatible(self, other):
        if not isinstance(other, LinComb):
            raise TypeError('Cannot combine %s with %r.' % (type(self).__name__, other))
        if type(self) is not type(other):
            raise TypeError('Cannot combine %s with %s.' % (
                type(self).__name__, type(other).__name__
            ))
        if self.ctx != other.ctx:
            raise DimensionMismatch(self.ctx.dim, other.ctx.dim)

    def items(self):
        """Terms in canonical order."""
        return sorted(self.terms.items(), key=lambda item: self.sort_key(item[0]))

    def __iter__(self):
        return iter(self.items())
    def __len__(self):
        return len(self.terms)
    def __bool__(self):
        return bool(self.terms)
    __nonzero__ = __bool__

    def coefficient(self, key):
        return self.terms.get(key, Fraction(0))

    def __eq__(self, other):
        if isinstance(other, numbers.Integral) and other == 0:
            return not self.terms
        return (
            type(self) is type(other) and self.ctx == other.ctx and
            self.terms == other.terms
        )
    def __ne__(self, other):
        return not self == other
    def __hash__(self):
        return hash((type(self).__name__, frozenset(self.terms.items())))

    def __add__(self, other):
        self.check_compatible(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return self.like(terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.like((key, -coeff) for key, coeff in self.terms.items())

    def scale(self, scalar):
        scalar = rational(scalar)
        if not scalar:
            return self.like(())
        return self.like((key, scalar * coeff) for key, coeff in self.terms.items())

    def __mul__(self, scalar):
        if isinstance(scalar, LinComb):
            return NotImplemented
        return self.scale(scalar)
    __rmul__ = __mul__

    def unit_coefficient(self):
        return self.coefficient(self.unit_key())

    def without_unit(self):
        unit = self.unit_key()
        return self.like((key, coeff) for key, coeff in self.terms.items() if key != unit)

    def homogeneous(self, degree):
        return self.like(
            (key, coeff) for key, coeff in self.terms.items() if self.degree(key) == degree
        )

    def basis_element(self, key):
        return self.like({key: 1})

    def render(self):
        """Render as text, e.g. "x0x1 - 1/2 x1x0"."""
        if not self.terms:
            return '0'
        parts = []
        for i, (key, coeff) in enumerate(self.items()):
            sign = '-' if coeff < 0 else '+'
            magnitude = abs(coeff)
            if key == self.unit_key():
                body = str(magnitude)
            elif magnitude == 1:
                body = self.render_key(key)
            else:
                body = '%s %s' % (magnitude, self.render_key(key))
            if i == 0:
                parts.append(body if sign == '+' else '-' + body)
            else:
                parts.append('%s %s' % (sign, body))
        return ' '.join(parts)

    def to_json(self):
        return {'terms': [
            dict(self.json_key(key), coeff=render_rational(coeff))
            for key, coeff in self.items()
        ]}

    def __str__(self):
        return self.render()
    def __repr__(self):
        return '%s(%s)' % (type(self).__name__, self.render())



class Elem(LinComb):
    """An element of the tensor algebra T(V): a combination of words."""

    def degree(self, key):
        return len(key)
    def sort_key(self, key):
        return (len(key), key)
    def render_key(self, key):
        return ''.join('x%s' % letter for letter in key) if key else '1'
    def json_key(self, key):
        return {'word': list(key)}
    def unit_key(self):
        return ()



class Tensor(LinComb):
    """
    A combination of tensors of basis keys of some side type, such as
    Word-Word pairs for T(V) or exponent pairs for K[X].
    """

    arity = 2

    def __init__(self, ctx, terms=(), side=Elem):
        self.side = side
        self.prototype = side(ctx)
        LinComb.__init__(self, ctx, terms)

    def like(self, terms):
        return type(self)(self.ctx, terms, self.side)

    def check_compatible(self, other):
        LinComb.check_compatible(self, other)
        if self.side is not other.side:
            raise TypeError('Cannot combine tensors over %s and %s.' % (
                self.side.__name__, other.side.__name__
            ))

    def degree(self, key):
        return sum(self.prototype.degree(part) for part in key)
    def sort_key(self, key):
        return (self.degree(key),) + tuple(self.prototype.sort_key(part) for part in key)
    def render_key(self, key):
        return '⊗'.join(self.prototype.render_key(part) for part in key)
    def unit_key(self):
        return (self.prototype.unit_key(),) * self.arity

    def render(self):
        if not self.terms:
            return '0'
        parts = []
        for i, (key, coeff) in enumerate(self.items()):
            magnitude = abs(coeff)
            body = self.render_key(key)
            if magnitude != 1:
                body = '%s %s' % (magnitude, body)
            if i == 0:
                parts.append(body if coeff > 0 else '-' + body)
            else:
                parts.append('%s %s' % ('-' if coeff < 0 else '+', body))
        return ' '.join(parts)

    def factor(self, part):
        """The side element for one component of a key."""
        return self.prototype.like({part: 1})

    @classmethod
    def pure(cls, *factors):
        """The tensor product of side elements."""
        first = factors[0]
        for factor in factors[1:]:
            first.check_compatible(factor)
        tensor_type = tensor_types[len(factors)]
        terms = []
        for combination in itertools.product(*(factor.terms.items() for factor in factors)):
            coeff = Fraction(1)
            for _, factor_coeff in combination:
                coeff *= factor_coeff
            terms.append((tuple(key for key, _ in combination), coeff))
        return tensor_type(first.ctx, terms, type(first))

    def apply(self, *functions, **options):
        """
        Apply one linear function per component and expand. Each function
        takes a side element and returns a side element, a tensor over the
        same side, or a scalar. Tensor results are flattened into the key,
        so the result has the given arity (by default, this tensor's own):
        0 means a scalar and 1 means a side element.
        """
        arity = options.get('arity', self.arity)
        if len(functions) != self.arity:
            raise ValueError('Expected %s functions, got %s.' % (self.arity, len(functions)))
        accumulated = {}
        for key, coeff in self.terms.items():
            partials = [((), coeff)]
            for part, function in zip(key, functions):
                image = function(self.factor(part))
                if isinstance(image, Tensor):
                    image_items = list(image.terms.items())
                elif isinstance(image, LinComb):
                    image_items = [((k,), c) for k, c in image.terms.items()]
                else:
                    image_items = [((), rational(image))]
                partials = [
                    (prefix + suffix, partial * c)
                    for prefix, partial in partials for suffix, c in image_items
                ]
            for result_key, result_coeff in partials:
                if len(result_key) != arity:
                    raise ValueError('Expected a result of arity %s, got %s.' % (
                        arity, len(result_key)
                    ))
                accumulated[result_key] = accumulated.get(result_key, 0) + result_coeff
        if arity == 0:
            return rational(accumulated.get((), 0))
        if arity == 1:
            return self.prototype.like((k[0], c) for k, c in accumulated.items())
        return tensor_types[arity](self.ctx, accumulated, self.side)

    def combine(self, other, *products):
        """
        Componentwise product of two tensors of equal arity, e.g.
        (a1 (x) a2) . (b1 (x) b2) = (a1.b1) (x) (a2.b2).
        """
        self.check_compatible(other)
        accumulated = {}
        for key, coeff in self.terms.items():
            for other_key, other_coeff in other.terms.items():
                images = [
                    product(self.factor(a), self.factor(b))
                    for product, a, b in zip(products, key, other_key)
                ]
                if not all(images):
                    continue
                for combination in itertools.product(*(image.terms.items() for image in images)):
                    result_coeff = coeff * other_coeff
                    for _, image_coeff in combination:
                        result_coeff *= image_coeff
                    result_key = tuple(part for part, _ in combination)
                    accumulated[result_key] = accumulated.get(result_key, 0) + result_coeff
        return self.like(accumulated)

    def to_json(self):
        entries = []
        for key, coeff in self.items():
            parts = [self.prototype.json_key(part) for part in key]
            parts = [list(part.values())[0] for part in parts]
            if self.arity == 2:
                entries.append({'left': parts[0], 'right': parts[1], 'coeff': render_rational(coeff)})
            else:
                entries.append({'factors': parts, 'coeff': render_rational(coeff)})
        return {'pairs' if self.arity == 2 else 'tensors': entries}

class Tensor2(Tensor):
    arity = 2

class Tensor3(Tensor):
    arity = 3

tensor_types = {2: Tensor2, 3: Tensor3}



def elem_add(a, b):
    return a + b

def elem_scale(c, a):
    return a.scale(c)

def left_concat(letter, a):
    """Prefix every word of a with the given letter."""
    a.ctx.check_letter(letter)
    return a.like(((letter,) + word, coeff) for word, coeff in a.terms.items())

def concat(a, b):
    """The (noncommutative) concatenation product, extended bilinearly."""
    a.check_compatible(b)
    return a.like(
        (u + v, c * d) for u, c in a.terms.items() for v, d in b.terms.items()
    )

def degree_project(a, n):
    if n < 0:
        raise ValueError('Degree must be nonnegative, got %s.' % n)
    return a.homogeneous(n)



class LinMap(object):
    """
    An endomorphism of V, stored as the image of each basis letter.
    Row i holds the coordinates of the image of letter i.
    """

    def __init__(self, ctx, rows):
        self.ctx = ctx
        rows = [[rational(value) for value in row] for row in rows]
        ctx.check_dim(len(rows), 'linear map')
        for row in rows:
            ctx.check_dim(len(row), 'linear map row')
        self.rows = tuple(tuple(row) for row in rows)

    @classmethod
    def identity(cls, ctx):
        return cls(ctx, [[int(i == j) for j in range(ctx.dim)] for i in range(ctx.dim)])

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, [[0] * ctx.dim for _ in range(ctx.dim)])

    @classmethod
    def scalar(cls, ctx, value):
        return cls.identity(ctx).scale(value)

    def scale(self, value):
        value = rational(value)
        return LinMap(self.ctx, [[value * c for c in row] for row in self.rows])

    def image(self, letter):
        """The image of a basis letter, as a degree-1 element."""
        letter = self.ctx.check_letter(letter)
        return Elem(self.ctx, (((j,), c) for j, c in enumerate(self.rows[letter])))

    def is_zero(self):
        return not any(any(row) for row in self.rows)

    def __eq__(self, other):
        return isinstance(other, LinMap) and self.ctx == other.ctx and self.rows == other.rows
    def __ne__(self, other):
        return not self == other
    def __hash__(self):
        return hash(self.rows)
    def __repr__(self):
        return 'LinMap(%s)' % ', '.join(
            '[%s]' % ' '.join(render_rational(c) for c in row) for row in self.rows
        )



class LinForm(object):
    """A linear form V -> K, stored as its values on the basis letters."""

    def __init__(self, ctx, values):
        self.ctx = ctx
        values = [rational(value) for value in values]
        ctx.check_dim(len(values), 'linear form')
        self.values = tuple(values)

    def value(self, letter):
        return self.values[self.ctx.check_letter(letter)]

    def __eq__(self, other):
        return isinstance(other, LinForm) and self.ctx == other.ctx and self.values == other.values
    def __ne__(self, other):
        return not self == other
    def __hash__(self):
        return hash(self.values)
    def __repr__(self):
        return 'LinForm(%s)' % ' '.join(render_rational(c) for c in self.values)



class PreLieConsts(object):
    """
    Structure constants of a preLie product on V, with
    e_i * e_j = sum_k c[i][j][k] e_k. The right preLie identity is checked
    on every basis triple when the table is constructed.
    """

    def __init__(self, ctx, table):
        self.ctx = ctx
        dim = ctx.dim
        ctx.check_dim(len(table), 'structure constant table')
        rows = []
        for i in range(dim):
            ctx.check_dim(len(table[i]), 'structure constant row')
            row = []
            for j in range(dim):
                ctx.check_dim(len(table[i][j]), 'structure constant vector')
                row.append(tuple(rational(c) for c in table[i][j]))
            rows.append(tuple(row))
        self.table = tuple(rows)
        self.validate()

    @classmethod
    def from_pairs(cls, ctx, pairs):
        """Build a table from {(i, j): vector}, with absent pairs zero."""
        table = [[[0] * ctx.dim for _ in range(ctx.dim)] for _ in range(ctx.dim)]
        for (i, j), vector in pairs.items():
            ctx.check_letter(i)
            ctx.check_letter(j)
            table[i][j] = list(vector)
        return cls(ctx, table)

    def star_vectors(self, u, v):
        """The product of two coordinate vectors."""
        result = [Fraction(0)] * self.ctx.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for k, c in enumerate(self.table[i][j]):
                    result[k] += a * b * c
        return result

    def star(self, i, j):
        """e_i * e_j as a degree-1 element."""
        i = self.ctx.check_letter(i)
        j = self.ctx.check_letter(j)
        return Elem(self.ctx, (((k,), c) for k, c in enumerate(self.table[i][j])))

    def validate(self):
        dim = self.ctx.dim
        basis = [[int(i == j) for j in range(dim)] for i in range(dim)]
        def associator(a, b, c):
            left = self.star_vectors(self.star_vectors(a, b), c)
            right = self.star_vectors(a, self.star_vectors(b, c))
            return [l - r for l, r in zip(left, right)]
        for i, j, k in itertools.product(range(dim), repeat=3):
            left = associator(basis[i], basis[j], basis[k])
            right = associator(basis[i], basis[k], basis[j])
            if left != right:
                raise NotPreLie((i, j, k), left, right)

    def is_zero(self):
        return not any(any(any(vector) for vector in row) for row in self.table)

    def __eq__(self, other):
        return isinstance(other, PreLieConsts) and self.ctx == other.ctx and self.table == other.table
    def __ne__(self, other):
        return not self == other
    def __hash__(self):
        return hash(self.table)



def apply_linmap(linmap, letter):
    return linmap.image(letter)

def apply_linform(form, letter):
    return form.value(letter)
