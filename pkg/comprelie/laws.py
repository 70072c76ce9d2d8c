"""
This module verifies the axioms of Com-PreLie and Zinbiel-PreLie
(bi)algebras, and their first consequences, against any StructureUnderTest.

Every law is checked on all tuples of basis elements up to a total degree
cap. Since all the laws are multilinear, a pass is a proof that the law
holds in every degree up to the cap. A failure carries the first witness
in a fixed order (total degree, then each argument by degree and key) and
both evaluated sides, and can be replayed.
"""

from fractions import Fraction

from .algebra import Tensor, LinComb, LinMap, render_rational
from .shuffle import tensor_map
from .errors import MissingHalfShuffle, PreconditionFA, NonPrimitiveImage



def identity(a):
    return a



class Clause(object):
    """
    One equation of a law: a name, the number of arguments, and a function
    computing both sides from a structure and the arguments.
    """

    def __init__(self, name, arity, sides, equation, nonempty=False):
        self.name = name
        self.arity = arity
        self.sides = sides
        self.equation = equation
        self.nonempty = nonempty

clauses = {}

def clause(name, arity, equation, nonempty=False):
    """Register a clause whose sides are computed by the decorated function."""
    def decorator(sides):
        clauses[name] = Clause(name, arity, sides, equation, nonempty)
        return sides
    return decorator



class LawReport(object):
    """
    The outcome of checking a law: pass, fail with a witness and both
    evaluated sides, or skip with the reason the law does not apply.
    """

    def __init__(
        self, law, structure, status, checked=0, cap=None, clause=None,
        witness=None, left=None, right=None, reason=None, subject=None
    ):
        self.law = law
        self.structure = structure
        self.status = status
        self.checked = checked
        self.cap = cap
        self.clause = clause
        self.witness = witness
        self.left = left
        self.right = right
        self.reason = reason
        self.subject = subject

    @property
    def passed(self):
        return self.status == 'pass'

    @property
    def failed(self):
        return self.status == 'fail'

    def replay(self, s=None):
        """Evaluate both sides again at the witness."""
        if not self.failed:
            raise ValueError('Only failing reports carry a witness to replay.')
        return self.clause.sides(s or self.subject, *self.witness)

    @staticmethod
    def json_value(value):
        if isinstance(value, LinComb):
            return value.to_json()
        return render_rational(value)

    @staticmethod
    def render_value(value):
        if isinstance(value, LinComb):
            return value.render()
        return render_rational(value)

    def to_json(self):
        result = {
            'law': self.law,
            'structure': self.structure,
            'status': self.status,
            'checked': self.checked,
        }
        if self.cap is not None:
            result['cap'] = self.cap
        if self.failed:
            result['clause'] = self.clause.name
            result['equation'] = self.clause.equation
            result['witness'] = [self.json_value(a) for a in self.witness]
            result['left'] = self.json_value(self.left)
            result['right'] = self.json_value(self.right)
        elif self.status == 'skip':
            result['reason'] = self.reason
        return result

    def render(self):
        if self.failed:
            return '%s: FAIL %s at (%s): %s != %s' % (
                self.law, self.clause.name,
                ', '.join(self.render_value(a) for a in self.witness),
                self.render_value(self.left), self.render_value(self.right)
            )
        elif self.status == 'skip':
            return '%s: skipped, %s' % (self.law, self.reason)
        return '%s: pass (%s tuples, cap %s)' % (self.law, self.checked, self.cap)

    def __repr__(self):
        return 'LawReport(%s)' % self.render()



def tuples_of_degree(s, arity, total, low):
    if arity == 1:
        for element in s.basis(total):
            yield (element,)
        return
    for first in range(low, total - low * (arity - 1) + 1):
        for element in s.basis(first):
            for rest in tuples_of_degree(s, arity - 1, total - first, low):
                yield (element,) + rest

def basis_tuples(s, arity, cap, nonempty=False):
    """All tuples of basis elements with total degree at most cap, in witness order."""
    low = 1 if nonempty else 0
    for total in range(low * arity, cap + 1):
        for arguments in tuples_of_degree(s, arity, total, low):
            yield arguments

def check_clauses(law, s, names, cap, candidates=None):
    """
    Check the named clauses in order and report the first failure. When
    candidates are given, only those tuples (of matching arity) are tried.
    """
    checked = 0
    for name in names:
        current = clauses[name] if isinstance(name, str) else name
        if candidates is not None:
            inputs = [tuple(c) for c in candidates if len(c) == current.arity]
        else:
            inputs = basis_tuples(s, current.arity, cap, current.nonempty)
        for arguments in inputs:
            left, right = current.sides(s, *arguments)
            checked += 1
            if left != right:
                return LawReport(law, s.name, 'fail', checked, cap, current,
                    arguments, left, right, subject=s
                )
    return LawReport(law, s.name, 'pass', checked, cap)

def evaluate_law(name, s, *arguments):
    """Both sides of a named clause at the given arguments."""
    return clauses[name].sides(s, *arguments)

def require_half_shuffle(s):
    if s.half_shuffle is None:
        raise MissingHalfShuffle(s.name)



@clause('commutativity', 2, 'a.b = b.a')
def commutativity(s, a, b):
    return s.product(a, b), s.product(b, a)

@clause('associativity', 3, '(a.b).c = a.(b.c)')
def associativity(s, a, b, c):
    return s.product(s.product(a, b), c), s.product(a, s.product(b, c))

@clause('prelie', 3, '(a*b)*c - a*(b*c) = (a*c)*b - a*(c*b)')
def prelie(s, a, b, c):
    p = s.prelie
    return p(p(a, b), c) - p(a, p(b, c)), p(p(a, c), b) - p(a, p(c, b))

@clause('prelie_associativity', 3, '(a*b)*c = a*(b*c)')
def prelie_associativity(s, a, b, c):
    p = s.prelie
    return p(p(a, b), c), p(a, p(b, c))

@clause('derivation', 3, '(a.b)*c = (a*c).b + a.(b*c)')
def derivation(s, a, b, c):
    m, p = s.product, s.prelie
    return p(m(a, b), c), m(p(a, c), b) + m(a, p(b, c))

@clause('zinbiel', 3, '(a<b)<c = a<(b<c + c<b)', nonempty=True)
def zinbiel(s, a, b, c):
    h = s.half_shuffle
    return h(h(a, b), c), h(a, h(b, c) + h(c, b))

@clause('zinbiel_symmetrization', 2, 'a<b + b<a = a.b', nonempty=True)
def zinbiel_symmetrization(s, a, b):
    h = s.half_shuffle
    return h(a, b) + h(b, a), s.product(a, b)

@clause('zinbiel_prelie', 3, '(a<b)*c = (a*c)<b + a<(b*c)', nonempty=True)
def zinbiel_prelie(s, a, b, c):
    h, p = s.half_shuffle, s.prelie
    return p(h(a, b), c), h(p(a, c), b) + h(a, p(b, c))

@clause('coassociativity', 1, '(D (x) id)D(a) = (id (x) D)D(a)')
def coassociativity(s, a):
    delta = s.coproduct(a)
    return (
        delta.apply(s.coproduct, identity, arity=3),
        delta.apply(identity, s.coproduct, arity=3),
    )

@clause('left_counit', 1, '(e (x) id)D(a) = a')
def left_counit(s, a):
    return s.coproduct(a).apply(s.counit, identity, arity=1), a

@clause('right_counit', 1, '(id (x) e)D(a) = a')
def right_counit(s, a):
    return s.coproduct(a).apply(identity, s.counit, arity=1), a

@clause('multiplicativity', 2, 'D(a.b) = D(a).D(b)')
def multiplicativity(s, a, b):
    return s.coproduct(s.product(a, b)), s.coproduct(a).combine(
        s.coproduct(b), s.product, s.product
    )

@clause('bialgebra_compat', 2, "D(a*b) = a' (x) a''*b + a'*b' (x) a''.b''")
def bialgebra_compat(s, a, b):
    delta_a = s.coproduct(a)
    right = delta_a.apply(identity, lambda r: s.prelie(r, b))
    right = right + delta_a.combine(s.coproduct(b), s.prelie, s.product)
    return s.coproduct(s.prelie(a, b)), right

@clause('zinbiel_coproduct_compat', 2,
    "d(a<b) = a'<b' (x) a''.b'' + a'<b (x) a'' + a' (x) a''.b + a<b' (x) b'' + a (x) b",
    nonempty=True
)
def zinbiel_coproduct_compat(s, a, b):
    h, m = s.half_shuffle, s.product
    delta_a = s.reduced_coproduct(a)
    delta_b = s.reduced_coproduct(b)
    right = delta_a.combine(delta_b, h, m)
    right = right + delta_a.apply(lambda l: h(l, b), identity)
    right = right + delta_a.apply(identity, lambda r: m(r, b))
    right = right + delta_b.apply(lambda l: h(a, l), identity)
    right = right + Tensor.pure(a, b)
    return s.reduced_coproduct(h(a, b)), right

@clause('unit_annihilates', 1, '1*a = 0')
def unit_annihilates(s, a):
    return s.prelie(s.unit(), a), s.zero()

@clause('counit_vanishes', 2, 'e(a*b) = 0')
def counit_vanishes(s, a, b):
    return s.counit(s.prelie(a, b)), Fraction(0)

@clause('prim_closure', 2, 'D(x*y) = x*y (x) 1 + 1 (x) x*y')
def prim_closure(s, a, b):
    image = s.prelie(a, b)
    unit = s.unit()
    return s.coproduct(image), Tensor.pure(image, unit) + Tensor.pure(unit, image)

@clause('unit_primitive', 1, 'D(x*1) = x*1 (x) 1 + 1 (x) x*1')
def unit_primitive(s, a):
    return prim_closure(s, a, s.unit())



def check_com_assoc(s, cap, candidates=None):
    return check_clauses('com_assoc', s, ['commutativity', 'associativity'], cap, candidates)

def check_prelie(s, cap, candidates=None):
    return check_clauses('prelie', s, ['prelie'], cap, candidates)

def check_derivation(s, cap, candidates=None):
    return check_clauses('derivation', s, ['derivation'], cap, candidates)

def check_zinbiel(s, cap, candidates=None):
    require_half_shuffle(s)
    return check_clauses('zinbiel', s, ['zinbiel', 'zinbiel_symmetrization'], cap, candidates)

def check_zinbiel_prelie(s, cap, candidates=None):
    require_half_shuffle(s)
    return check_clauses('zinbiel_prelie', s, ['zinbiel_prelie'], cap, candidates)

def check_bialgebra(s, cap, candidates=None):
    return check_clauses('bialgebra', s, [
        'coassociativity', 'left_counit', 'right_counit', 'multiplicativity'
    ], cap, candidates)

def check_bialgebra_compat(s, cap, candidates=None):
    return check_clauses('bialgebra_compat', s, ['bialgebra_compat'], cap, candidates)

def check_zinbiel_coproduct_compat(s, cap, candidates=None):
    require_half_shuffle(s)
    return check_clauses(
        'zinbiel_coproduct_compat', s, ['zinbiel_coproduct_compat'], cap, candidates
    )

def check_unit_counit(s, cap, candidates=None):
    return check_clauses(
        'unit_counit', s, ['unit_annihilates', 'counit_vanishes'], cap, candidates
    )

def is_associative(s, cap):
    return check_clauses('prelie_associativity', s, ['prelie_associativity'], cap).passed



def extract_fA(s):
    """
    The matrix of x -> x*1 on the degree-1 basis. Each image must be
    primitive; otherwise NonPrimitiveImage is raised.
    """
    basis = s.basis(1)
    keys = [list(element.terms)[0] for element in basis]
    rows = []
    for element in basis:
        image = s.prelie(element, s.unit())
        if not s.is_primitive(image):
            raise NonPrimitiveImage(element, image)
        rows.append([image.coefficient(key) for key in keys])
    return LinMap(s.ctx, rows)

def check_prim_closure(s, cap=1, candidates=None):
    """
    Check that primitives are closed under the preLie product, on degree-1
    basis pairs. Requires x*1 = 0 on primitives.
    """
    try:
        fA = extract_fA(s)
    except NonPrimitiveImage as error:
        return check_clauses('prim_closure', s, ['unit_primitive'], 1, [(error.element,)])
    if not fA.is_zero():
        raise PreconditionFA(s.name)
    if candidates is None:
        basis = s.basis(1)
        candidates = [(a, b) for a in basis for b in basis]
    return check_clauses('prim_closure', s, ['prim_closure'], cap, candidates)



def check_morphism(source, target, linmap, cap, candidates=None):
    """
    Check that T(F) intertwines the preLie products of two structures on
    T(V): T(F)(a*b) = T(F)(a)*T(F)(b), on word pairs up to the cap.
    """
    def sides(s, a, b):
        mapped = lambda x: tensor_map(linmap, x)
        return mapped(source.prelie(a, b)), target.prelie(mapped(a), mapped(b))
    morphism = Clause('morphism', 2, sides, 'T(F)(a*b) = T(F)(a)*T(F)(b)')
    return check_clauses('morphism', source, [morphism], cap, candidates)



suites = {
    'comprelie': ('com_assoc', 'prelie', 'derivation', 'unit_counit'),
    'zinbiel': ('zinbiel', 'zinbiel_prelie'),
    'bialgebra': ('bialgebra', 'bialgebra_compat', 'zinbiel_coproduct_compat', 'prim_closure'),
}
suites['all'] = suites['comprelie'] + suites['zinbiel'] + suites['bialgebra'] + ('jacobi',)

checks = {
    'com_assoc': check_com_assoc,
    'prelie': check_prelie,
    'derivation': check_derivation,
    'unit_counit': check_unit_counit,
    'zinbiel': check_zinbiel,
    'zinbiel_prelie': check_zinbiel_prelie,
    'bialgebra': check_bialgebra,
    'bialgebra_compat': check_bialgebra_compat,
    'zinbiel_coproduct_compat': check_zinbiel_coproduct_compat,
    'prim_closure': check_prim_closure,
}

# Laws whose clauses take at most two arguments run one degree higher.
binary_laws = frozenset(('bialgebra_compat', 'zinbiel_coproduct_compat', 'bialgebra'))

def run_suite(s, suite, cap, logger=None, candidates=None):
    """
    Run every law of a suite and return the reports in suite order. A law
    whose precondition does not hold for the structure is reported as
    skipped. Candidates, when given, replace the exhaustive basis tuples.
    """
    if suite not in suites:
        raise ValueError('Unknown suite "%s"; expected one of %s.' % (
            suite, ', '.join(sorted(suites))
        ))
    reports = []
    for law in suites[suite]:
        law_cap = cap + 1 if law in binary_laws else cap
        if logger is not None:
            logger.debug('Checking law "%s" on %s up to degree %s.', law, s.name, law_cap)
        try:
            reports.append(checks[law](s, law_cap, candidates))
        except (MissingHalfShuffle, PreconditionFA) as error:
            reports.append(LawReport(law, s.name, 'skip', cap=law_cap, reason=str(error)))
    return reports
