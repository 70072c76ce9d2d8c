"""
This module implements K[X] as a Com-PreLie candidate.

A sequence of scalars (lambda_j) defines the graded product
X^i * X^j = i lambda_j X^(i+j). The four graded families, their parameter
validation, the condition that makes such a product preLie, and the
procedure that recovers a family from a finite prefix of its sequence are
all here, together with the non-graded family g'(l, m), the binomial
coproduct, the half-shuffle on K[X], and the isomorphism Theta onto the
one-letter shuffle algebra.
"""

import math, collections
from fractions import Fraction

from .algebra import BialgebraContext, LinComb, Tensor2, rational, render_rational
from .errors import (
    InvalidFamily, NotGraded, IndexBeyondPrefix, Undefined11, ComPreLieError
)
from .prelie import binomial



kx_context = BialgebraContext(1)



class Poly(LinComb):
    """A polynomial in K[X]: a combination of exponents."""

    def degree(self, key):
        return key
    def sort_key(self, key):
        return key
    def render_key(self, key):
        if key == 0:
            return '1'
        elif key == 1:
            return 'X'
        return 'X^%s' % key
    def json_key(self, key):
        return {'exponent': key}
    def unit_key(self):
        return 0

    @classmethod
    def of(cls, terms):
        """Build a polynomial from {exponent: coefficient}."""
        return cls(kx_context, terms)

    @classmethod
    def power(cls, n, coeff=1):
        if n < 0:
            raise ValueError('Exponent must be nonnegative, got %s.' % n)
        return cls(kx_context, {n: coeff})

def poly_mul(p, q):
    p.check_compatible(q)
    return p.like((i + j, c * d) for i, c in p.terms.items() for j, d in q.terms.items())



class FamilySpec(object):
    """
    A tagged parameter record selecting one of the product families on
    K[X]. Use the classmethod constructors, which validate parameters:

        G1(N, lam, a, b)    a != 0 and b not a negative integer
        G2(N, lam, mu)      mu != 0
        G3(N, lam, mu)      mu != 0
        G4(lam)
        GPrime(lam, mu)
    """

    families = ('G1', 'G2', 'G3', 'G4', 'GPrime')

    def __init__(self, family, **parameters):
        if family not in self.families:
            raise InvalidFamily('Unknown family "%s".' % family)
        self.family = family
        self.parameters = {}
        for name, value in parameters.items():
            if name == 'N':
                if isinstance(value, bool) or int(value) != value or value < 1:
                    raise InvalidFamily('N must be a positive integer, got %r.' % (value,))
                self.parameters[name] = int(value)
            else:
                self.parameters[name] = rational(value)

    @classmethod
    def g1(cls, N, lam, a, b):
        a = rational(a)
        b = rational(b)
        if not a:
            raise InvalidFamily('Family G1 requires a != 0.')
        if b.denominator == 1 and b < 0:
            raise InvalidFamily('Family G1 requires b not a negative integer, got %s.' % b)
        return cls('G1', N=N, lam=lam, a=a, b=b)

    @classmethod
    def g1_ab(cls, N, a, b):
        """The two-parameter form g1(N, a, b), with lam = a / b."""
        b = rational(b)
        if not b:
            raise InvalidFamily('The form g1(N, a, b) requires b != 0.')
        return cls.g1(N, rational(a) / b, a, b)

    @classmethod
    def g2(cls, N, lam, mu):
        if not rational(mu):
            raise InvalidFamily('Family G2 requires mu != 0.')
        return cls('G2', N=N, lam=lam, mu=mu)

    @classmethod
    def g3(cls, N, lam, mu):
        if not rational(mu):
            raise InvalidFamily('Family G3 requires mu != 0.')
        return cls('G3', N=N, lam=lam, mu=mu)

    @classmethod
    def g4(cls, lam):
        return cls('G4', lam=lam)

    @classmethod
    def gprime(cls, lam, mu):
        return cls('GPrime', lam=lam, mu=mu)

    def __getattr__(self, name):
        parameters = self.__dict__.get('parameters', {})
        if name in parameters:
            return parameters[name]
        raise AttributeError(name)

    @property
    def graded(self):
        return self.family != 'GPrime'

    def __eq__(self, other):
        return (
            isinstance(other, FamilySpec) and self.family == other.family and
            self.parameters == other.parameters
        )
    def __ne__(self, other):
        return not self == other
    def __hash__(self):
        return hash((self.family, tuple(sorted(self.parameters.items()))))

    def to_json(self):
        names = {'lam': 'lambda'}
        return {
            'family': self.family,
            'parameters': dict(
                (names.get(name, name), value if name == 'N' else render_rational(value))
                for name, value in sorted(self.parameters.items())
            ),
        }

    def __repr__(self):
        return '%s(%s)' % (self.family, ', '.join(
            '%s=%s' % (name, value) for name, value in sorted(self.parameters.items())
        ))



def lambda_of(spec, j):
    if j < 0:
        raise ValueError('Lambda index must be nonnegative, got %s.' % j)
    if not spec.graded:
        raise NotGraded(spec.family)
    if j == 0:
        return spec.lam
    if spec.family == 'G1':
        if j % spec.N:
            return Fraction(0)
        return spec.a / (Fraction(j, spec.N) + spec.b)
    elif spec.family == 'G2':
        return spec.mu if j == spec.N else Fraction(0)
    elif spec.family == 'G3':
        return Fraction(0) if j % spec.N else spec.mu
    return Fraction(0)



class LambdaSeq(object):
    """
    The scalars lambda_j, either an explicit finite list lambda_0..lambda_M
    or generated on demand by a graded family.
    """

    def __init__(self, values=None, spec=None):
        if (values is None) == (spec is None):
            raise ValueError('A lambda sequence needs either explicit values or a family.')
        if spec is not None and not spec.graded:
            raise NotGraded(spec.family)
        self.spec = spec
        self.values = None if values is None else tuple(rational(v) for v in values)
        if self.values is not None and not self.values:
            raise ValueError('An explicit lambda sequence needs at least lambda_0.')

    @classmethod
    def explicit(cls, values):
        return cls(values=values)

    @classmethod
    def of_family(cls, spec):
        return cls(spec=spec)

    @property
    def M(self):
        return None if self.values is None else len(self.values) - 1

    def __getitem__(self, j):
        if self.values is None:
            return lambda_of(self.spec, j)
        if j < 0:
            raise ValueError('Lambda index must be nonnegative, got %s.' % j)
        if j >= len(self.values):
            raise IndexBeyondPrefix(j, self.M)
        return self.values[j]

    def prefix(self, M):
        return LambdaSeq.explicit([self[j] for j in range(M + 1)])

    def __repr__(self):
        if self.values is None:
            return 'LambdaSeq(%r)' % self.spec
        return 'LambdaSeq(%s)' % ' '.join(render_rational(v) for v in self.values)



def graded_product(seq, p, q):
    """X^i * X^j = i lambda_j X^(i+j), extended bilinearly."""
    p.check_compatible(q)
    accumulated = collections.defaultdict(Fraction)
    for i, c in p.terms.items():
        if not i:
            continue
        for j, d in q.terms.items():
            accumulated[i + j] += c * d * i * seq[j]
    return p.like(accumulated)

def gprime_product(lam, mu, k, l):
    """
    X^k * X^l = lam k l! sum over k <= i < k+l of mu^(k+l-i-1) / (i-k+1)! X^i
    in g'(lam, mu). Zero when k = 0 or l = 0.
    """
    lam = rational(lam)
    mu = rational(mu)
    terms = []
    if k > 0 and l > 0:
        for i in range(k, k + l):
            coeff = lam * k * math.factorial(l) * mu ** (k + l - i - 1)
            terms.append((i, coeff / math.factorial(i - k + 1)))
    return Poly.of(terms)

def gprime_bilinear(lam, mu, p, q):
    p.check_compatible(q)
    result = Poly.of(())
    for k, c in p.terms.items():
        for l, d in q.terms.items():
            result = result + gprime_product(lam, mu, k, l).scale(c * d)
    return result

def spec_product(spec):
    """The bilinear product function selected by a family spec."""
    if spec.graded:
        seq = LambdaSeq.of_family(spec)
        return lambda p, q: graded_product(seq, p, q)
    return lambda p, q: gprime_bilinear(spec.lam, spec.mu, p, q)



def prelie_condition_holds(seq, j, k):
    """(j lambda_k - k lambda_j) lambda_(j+k) = (j - k) lambda_j lambda_k."""
    left = (j * seq[k] - k * seq[j]) * seq[j + k]
    right = (j - k) * seq[j] * seq[k]
    return left == right

def prelie_condition_check(seq, maxidx):
    """
    The pairs (j, k) with 1 <= j, k <= maxidx for which the graded product
    defined by seq fails to be preLie. An empty list means it holds.
    """
    if seq.M is not None and seq.M < 2 * maxidx:
        raise IndexBeyondPrefix(2 * maxidx, seq.M)
    return [
        (j, k)
        for j in range(1, maxidx + 1) for k in range(1, maxidx + 1)
        if not prelie_condition_holds(seq, j, k)
    ]

def first_violation(seq, limit):
    """The first violating pair with j + k <= limit, by j + k then j."""
    for total in range(2, limit + 1):
        for j in range(1, total):
            if not prelie_condition_holds(seq, j, total - j):
                return (j, total - j)
    return None



class ClassifyResult(object):
    """
    The outcome of classifying a lambda prefix: a family, an inconsistency
    with a witness pair (j, k), or a request for a longer prefix.
    """

    def __init__(self, outcome, spec=None, witness=None, need=None, checked_through=None):
        self.outcome = outcome
        self.spec = spec
        self.witness = witness
        self.need = need
        self.checked_through = checked_through

    @classmethod
    def family(cls, spec, checked_through):
        return cls('family', spec=spec, checked_through=checked_through)

    @classmethod
    def inconsistent(cls, witness, checked_through):
        return cls('inconsistent', witness=tuple(witness), checked_through=checked_through)

    @classmethod
    def insufficient(cls, need, checked_through):
        return cls('insufficient', need=need, checked_through=checked_through)

    def __eq__(self, other):
        return isinstance(other, ClassifyResult) and (
            (self.outcome, self.spec, self.witness, self.need) ==
            (other.outcome, other.spec, other.witness, other.need)
        )
    def __ne__(self, other):
        return not self == other
    def __hash__(self):
        return hash((self.outcome, self.spec, self.witness, self.need))

    def to_json(self):
        result = {'outcome': self.outcome}
        if self.outcome == 'family':
            result.update(self.spec.to_json())
        elif self.outcome == 'inconsistent':
            result['witness'] = list(self.witness)
        else:
            result['need'] = self.need
        result['checked_through'] = self.checked_through
        return result

    def render(self):
        if self.outcome == 'family':
            parameters = self.spec.to_json()['parameters']
            return '%s %s' % (self.spec.family, ' '.join(
                '%s=%s' % (name, parameters[name])
                for name in ('N', 'lambda', 'a', 'b', 'mu') if name in parameters
            ))
        elif self.outcome == 'inconsistent':
            return 'inconsistent: preLie condition fails at (j, k) = (%s, %s)' % self.witness
        return 'insufficient: need lambda_0 through lambda_%s' % self.need

    def __repr__(self):
        if self.outcome == 'family':
            return 'ClassifyResult(%r)' % self.spec
        elif self.outcome == 'inconsistent':
            return 'ClassifyResult(inconsistent at %s)' % (self.witness,)
        return 'ClassifyResult(need prefix through %s)' % self.need



def classify(prefix):
    """
    Identify the graded family whose lambda sequence begins with the given
    explicit prefix lambda_0..lambda_M.
    """
    if not isinstance(prefix, LambdaSeq):
        prefix = LambdaSeq.explicit(prefix)
    M = prefix.M
    if M is None:
        raise ValueError('Only explicit prefixes can be classified.')
    if M < 1:
        return ClassifyResult.insufficient(1, M)
    lam = prefix[0]
    nonzero = [j for j in range(1, M + 1) if prefix[j]]
    if not nonzero:
        return ClassifyResult.family(FamilySpec.g4(lam), M)
    N = nonzero[0]
    if M < 3 * N:
        return ClassifyResult.insufficient(3 * N, M)
    first = prefix[N]
    mu2 = prefix[2 * N] / first
    pole = None
    if not mu2:
        candidate = FamilySpec.g2(N, lam, first)
    elif mu2 == 1:
        candidate = FamilySpec.g3(N, lam, first)
    else:
        b = (2 * mu2 - 1) / (1 - mu2)
        a = first * mu2 / (1 - mu2)
        if b.denominator == 1 and b < 0:
            pole = int(-b)
            expected = lambda j: (
                Fraction(0) if j % N or j // N == pole else a / (Fraction(j, N) + b)
            )
        else:
            candidate = FamilySpec.g1(N, lam, a, b)
    if pole is None:
        expected = lambda j: lambda_of(candidate, j)
    for i in range(1, M + 1):
        if prefix[i] != expected(i):
            witness = first_violation(prefix, M) or (i - N, N)
            return ClassifyResult.inconsistent(witness, M)
    if pole is not None:
        # The pair ((pole-1)N, N) fails once lambda_(pole N) is in the prefix.
        if pole * N > M:
            return ClassifyResult.insufficient(pole * N, M)
        return ClassifyResult.inconsistent(((pole - 1) * N, N), M)
    return ClassifyResult.family(candidate, M)



def binom_coproduct(p):
    """Delta(X^n) = sum of C(n, i) X^i (x) X^(n-i)."""
    return Tensor2(p.ctx, (
        ((i, n - i), c * binomial(n, i))
        for n, c in p.terms.items() for i in range(n + 1)
    ), Poly)

def half_shuffle_kx(i, j):
    """X^i < X^j = i/(i+j) X^(i+j), with X^i < 1 = X^i and 1 < X^j = 0."""
    if i == 0 and j == 0:
        raise Undefined11()
    if i == 0:
        return Poly.of(())
    return Poly.power(i + j, Fraction(i, i + j))

def half_shuffle_poly(p, q):
    p.check_compatible(q)
    if p.unit_coefficient() and q.unit_coefficient():
        raise Undefined11()
    result = Poly.of(())
    for i, c in p.terms.items():
        if not i:
            continue
        for j, d in q.terms.items():
            result = result + half_shuffle_kx(i, j).scale(c * d)
    return result

def poly_counit(p):
    return p.unit_coefficient()



def theta_iso(n, ctx=None):
    """Theta(X^n) = x sh ... sh x = n! x^n in the one-letter shuffle algebra."""
    ctx = ctx or BialgebraContext(1)
    if ctx.dim != 1:
        raise ComPreLieError('Theta maps into the one-letter shuffle algebra.')
    return ctx.word(*([0] * n)).scale(math.factorial(n))

def theta(p, ctx=None):
    """Theta extended linearly to polynomials."""
    ctx = ctx or BialgebraContext(1)
    result = ctx.zero()
    for n, c in p.terms.items():
        result = result + theta_iso(n, ctx).scale(c)
    return result
