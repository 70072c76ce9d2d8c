"""
This module implements the Lie bracket [a, b] = a*b - b*a induced by a
preLie product, the Jacobi identity as a law, and verification of the
bracket tables that present the graded K[X] families as Lie algebras.
"""

from fractions import Fraction

from . import laws
from .laws import clause, check_clauses, Clause, LawReport
from .polyx import Poly, FamilySpec
from .structures import kx_structure
from .errors import WrongFamily



def bracket(s, a, b):
    return s.prelie(a, b) - s.prelie(b, a)

@clause('jacobi', 3, '[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0')
def jacobi(s, a, b, c):
    total = (
        bracket(s, a, bracket(s, b, c)) +
        bracket(s, b, bracket(s, c, a)) +
        bracket(s, c, bracket(s, a, b))
    )
    return total, s.zero()

@clause('antisymmetry', 2, '[a,b] = -[b,a]')
def antisymmetry(s, a, b):
    return bracket(s, a, b), -bracket(s, b, a)

def check_jacobi(s, cap, candidates=None):
    return check_clauses('jacobi', s, ['jacobi'], cap, candidates)

def check_antisymmetry(s, cap, candidates=None):
    return check_clauses('antisymmetry', s, ['antisymmetry'], cap, candidates)

laws.checks['jacobi'] = check_jacobi



def fdb_basis(spec):
    """
    E_i = (i+b)/(N a) X^(Ni) for G1 and E_i = 1/(N mu) X^(Ni) for G3, as a
    function of i.
    """
    N = spec.N
    if spec.family == 'G1':
        return lambda i: Poly.power(N * i, (i + spec.b) / (N * spec.a))
    return lambda i: Poly.power(N * i, 1 / (N * spec.mu))

def fdb_module_basis(spec):
    """F_i^(r) = X^(N(i-1)+r) for 1 <= r <= N-1."""
    N = spec.N
    return lambda i, r: Poly.power(N * (i - 1) + r)

def table_report(law, s, relations, imax):
    """
    Check a list of (label, arguments, left, right) bracket relations and
    report the first that fails.
    """
    checked = 0
    for label, arguments, left, right in relations:
        checked += 1
        if left != right:
            relation = Clause(label, len(arguments),
                lambda s, *args, expected=right: (bracket(s, *args), expected), label
            )
            return LawReport(law, s.name, 'fail', checked, imax, relation,
                arguments, left, right, subject=s
            )
    return LawReport(law, s.name, 'pass', checked, imax)

def check_fdb_presentation(spec, imax, e_basis=None):
    """
    Verify the bracket table of G1 or G3 in the basis E_i, F_i^(r):

        [E_i, E_j] = (i - j) E_(i+j)
        [F_i^(r), F_j^(s)] = 0
        [F_i^(r), E_j] = (i + (r - N)/N) F_(i+j)^(r)

    for all i + j <= imax.
    """
    if spec.family not in ('G1', 'G3'):
        raise WrongFamily('The Faa di Bruno presentation applies to G1 and G3, not %s.' % spec.family)
    s = kx_structure(spec)
    N = spec.N
    E = e_basis or fdb_basis(spec)
    F = fdb_module_basis(spec)
    def relations():
        for total in range(2, imax + 1):
            for i in range(1, total):
                j = total - i
                arguments = (E(i), E(j))
                yield ('[E_i,E_j]', arguments, bracket(s, *arguments), E(i + j).scale(i - j))
                for r in range(1, N):
                    arguments = (F(i, r), E(j))
                    expected = F(i + j, r).scale(i + Fraction(r - N, N))
                    yield ('[F_i,E_j]', arguments, bracket(s, *arguments), expected)
                    for t in range(1, N):
                        arguments = (F(i, r), F(j, t))
                        yield ('[F_i,F_j]', arguments, bracket(s, *arguments), s.zero())
    return table_report('fdb_presentation', s, relations(), imax)

def g2_module_vector(N, mu, r, i):
    """
    The spanning vectors f_i of the modules in the G2 decomposition:
    mu^i prod(1 <= j < i) (r + jN) X^(r+iN) for r < N, and
    mu^i N^i (i+1)! X^((i+2)N) for r = N.
    """
    if r < N:
        coeff = mu ** i
        for j in range(1, i):
            coeff *= r + j * N
        return Poly.power(r + i * N, coeff)
    coeff = mu ** i * N ** i
    for j in range(2, i + 2):
        coeff *= j
    return Poly.power((i + 2) * N, coeff)

def check_g2_presentation(N, mu, imax, lam=0, module_depth=6):
    """
    Verify the bracket table of G2(N, lam, mu):

        [X^i, X^j] = 0              for i, j != N
        [X^i, X^N] = mu i X^(i+N)   for i != N

    for i, j <= imax, and that each module vector satisfies [f_i, X^N] = f_(i+1).
    """
    spec = FamilySpec.g2(N, lam, mu)
    s = kx_structure(spec)
    mu = spec.mu
    z = Poly.power(N)
    def relations():
        for i in range(1, imax + 1):
            for j in range(1, imax + 1):
                arguments = (Poly.power(i), Poly.power(j))
                if i != N and j != N:
                    yield ('[X^i,X^j]', arguments, bracket(s, *arguments), s.zero())
                elif j == N and i != N:
                    expected = Poly.power(i + N, mu * i)
                    yield ('[X^i,X^N]', arguments, bracket(s, *arguments), expected)
        for r in range(1, N + 1):
            for i in range(1, module_depth + 1):
                arguments = (g2_module_vector(N, mu, r, i), z)
                expected = g2_module_vector(N, mu, r, i + 1)
                yield ('[f_i,z]', arguments, bracket(s, *arguments), expected)
    return table_report('g2_presentation', s, relations(), imax)
