"""
This module implements the preLie products on the shuffle algebra T(V):

    T(V,f)      built from an endomorphism f of V,
    T(V,f,l)    built from a linear form f and a scalar l,
    T(V,*)      built from a preLie product * on V,

and the product of S(V,f,l) on the symmetric algebra, which works directly
on monomials.
"""

import itertools, threading, collections, math
from fractions import Fraction

from .algebra import LinComb, Tensor2, rational
from .shuffle import shuffle, shuffle_words
from .errors import DimensionMismatch



def binomial(n, k):
    """C(n, k), taken as zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)

def check_context(data, element, what):
    if data.ctx != element.ctx:
        raise DimensionMismatch(element.ctx.dim, data.ctx.dim, what)



class TVf(object):
    """
    The preLie product of T(V,f):

        1 * w = 0
        xv * w = x(v * w) + f(x)(v sh w)

    Products of word pairs are memoized on the instance.
    """

    def __init__(self, linmap):
        self.linmap = linmap
        self.ctx = linmap.ctx
        self.images = [linmap.image(letter).terms for letter in range(self.ctx.dim)]
        self.memo = {}
        self.lock = threading.Lock()

    def word_product(self, u, w):
        key = (u, w)
        with self.lock:
            cached = self.memo.get(key)
        if cached is not None:
            return cached
        accumulated = collections.defaultdict(Fraction)
        if u:
            head, tail = u[0], u[1:]
            for word, coeff in self.word_product(tail, w).items():
                accumulated[(head,) + word] += coeff
            for (image,), image_coeff in self.images[head].items():
                for word, count in shuffle_words(tail, w):
                    accumulated[(image,) + word] += image_coeff * count
        result = dict((word, coeff) for word, coeff in accumulated.items() if coeff)
        with self.lock:
            self.memo[key] = result
        return result

    def product(self, u, v):
        check_context(self.linmap, u, 'element')
        u.check_compatible(v)
        accumulated = collections.defaultdict(Fraction)
        for a, c in u.terms.items():
            for b, d in v.terms.items():
                for word, coeff in self.word_product(a, b).items():
                    accumulated[word] += c * d * coeff
        return u.like(accumulated)

def tvf_product(linmap, u, v):
    return TVf(linmap).product(u, v)



def tvfl_partial(form, u):
    """d(1) = 0 and d(x1...xn) = f(x1) x2...xn."""
    return u.like(
        (word[1:], form.value(word[0]) * coeff)
        for word, coeff in u.terms.items() if word
    )

def tvfl_phi(form, lam, u):
    """phi(x1...xn) = sum over i < n of lam^i f(x1)...f(xi) x(i+1)...xn."""
    lam = rational(lam)
    terms = []
    for word, coeff in u.terms.items():
        factor = coeff
        for i in range(len(word)):
            if not factor:
                break
            terms.append((word[i:], factor))
            factor = factor * lam * form.value(word[i])
    return u.like(terms)

def tvfl_product(form, lam, u, v):
    check_context(form, u, 'element')
    return shuffle(tvfl_partial(form, u), tvfl_phi(form, lam, v))

def one_letter_closed_form(nu, mu, m, n):
    """
    Coefficients of x^m * x^n in T(V,f,l) on one letter with f(x) = nu and
    mu = l nu, as a map from the power j to its coefficient.
    """
    nu = rational(nu)
    mu = rational(mu)
    coefficients = {}
    if m <= 0 or n <= 0:
        return coefficients
    for j in range(m, m + n):
        coeff = nu * mu ** (m + n - j - 1) * binomial(j, m - 1)
        if coeff:
            coefficients[j] = coeff
    return coefficients



def tvstar_product(consts, u, v):
    """
    x1...xk * y1...yl =
        sum over i of x1...x(i-1) (xi * y1) (x(i+1)...xk sh y2...yl)
    and zero when either word is empty.
    """
    check_context(consts, u, 'element')
    u.check_compatible(v)
    accumulated = collections.defaultdict(Fraction)
    for x, c in u.terms.items():
        if not x:
            continue
        for y, d in v.terms.items():
            if not y:
                continue
            for i in range(len(x)):
                prefix = x[:i]
                star = consts.table[x[i]][y[0]]
                for k, star_coeff in enumerate(star):
                    if not star_coeff:
                        continue
                    for word, count in shuffle_words(x[i + 1:], y[1:]):
                        accumulated[prefix + (k,) + word] += c * d * star_coeff * count
    return u.like(accumulated)



def monomial(exponents):
    """
    Normalize a monomial given as {letter: multiplicity} or as pairs to a
    sorted tuple of (letter, multiplicity) with every multiplicity positive.
    """
    items = exponents.items() if isinstance(exponents, dict) else exponents
    counts = collections.Counter()
    for letter, multiplicity in items:
        if multiplicity < 0:
            raise ValueError('Multiplicities must be nonnegative, got %s.' % multiplicity)
        counts[letter] += multiplicity
    return tuple(sorted((letter, m) for letter, m in counts.items() if m > 0))

def monomial_from_letters(letters):
    return monomial(collections.Counter(letters))

def monomial_letters(mono):
    """The letters of a monomial with repetition, in increasing order."""
    return tuple(letter for letter, m in mono for _ in range(m))

def monomial_mul(first, second):
    return monomial(tuple(first) + tuple(second))

def monomials(ctx, degree):
    return [
        monomial_from_letters(letters) for letters in
        itertools.combinations_with_replacement(range(ctx.dim), degree)
    ]



class SElem(LinComb):
    """An element of the symmetric algebra S(V): a combination of monomials."""

    def degree(self, key):
        return sum(m for _, m in key)
    def sort_key(self, key):
        return (self.degree(key), monomial_letters(key))
    def render_key(self, key):
        if not key:
            return '1'
        return ''.join(
            'x%s' % letter if m == 1 else 'x%s^%s' % (letter, m) for letter, m in key
        )
    def json_key(self, key):
        return {'monomial': [[letter, m] for letter, m in key]}
    def unit_key(self):
        return ()

def selem(ctx, terms):
    """Build an SElem from {monomial-like: coefficient}."""
    items = terms.items() if isinstance(terms, dict) else terms
    return SElem(ctx, ((monomial(key), coeff) for key, coeff in items))

def s_letter(ctx, letter):
    ctx.check_letter(letter)
    return SElem(ctx, {((letter, 1),): 1})

def s_unit(ctx):
    return SElem(ctx, {(): 1})

def s_mul(a, b):
    a.check_compatible(b)
    return a.like(
        (monomial_mul(m, n), c * d)
        for m, c in a.terms.items() for n, d in b.terms.items()
    )

def s_coproduct(a):
    """Delta(x^m) = sum over s of C(m, s) x^s (x) x^(m-s), letter by letter."""
    terms = []
    for mono, coeff in a.terms.items():
        ranges = [range(m + 1) for _, m in mono]
        for split in itertools.product(*ranges):
            weight = coeff
            left = []
            right = []
            for (letter, m), s in zip(mono, split):
                weight *= binomial(m, s)
                left.append((letter, s))
                right.append((letter, m - s))
            terms.append(((monomial(left), monomial(right)), weight))
    return Tensor2(a.ctx, terms, SElem)

def s_counit(a):
    return a.unit_coefficient()



def sfl_generator_product(form, lam, letter, mono):
    """
    x * x1...xk = sum over proper subsets I of {1..k} of
        |I|! lam^|I| f(x) prod(i in I) f(xi) prod(i not in I) xi
    where repeated letters are counted by choosing how many copies of each
    letter fall in I.
    """
    fx = form.value(letter)
    result = {}
    if not fx:
        return result
    exponents = [m for _, m in mono]
    for split in itertools.product(*(range(m + 1) for m in exponents)):
        if list(split) == exponents:
            continue
        size = sum(split)
        coeff = fx * math.factorial(size) * lam ** size
        for (x, m), s in zip(mono, split):
            coeff *= binomial(m, s) * form.value(x) ** s
        if coeff:
            rest = monomial((x, m - s) for (x, m), s in zip(mono, split))
            result[rest] = result.get(rest, 0) + coeff
    return result

def sfl_product(form, lam, a, b):
    """
    The product of S(V,f,l): 1 * b = 0, the generator case above, and the
    Leibniz rule in the first argument.
    """
    check_context(form, a, 'element')
    a.check_compatible(b)
    lam = rational(lam)
    accumulated = collections.defaultdict(Fraction)
    for first, c in a.terms.items():
        for second, d in b.terms.items():
            for letter, multiplicity in first:
                rest = monomial((x, m - (x == letter)) for x, m in first)
                for mono, coeff in sfl_generator_product(form, lam, letter, second).items():
                    accumulated[monomial_mul(mono, rest)] += c * d * multiplicity * coeff
    return a.like(accumulated)



def binomial_identity_check(jmax):
    """
    Check C(j-l,k-1)C(j-1,j-l-1) + C(j-k,l-1)C(j-1,k-1) = C(j,k+l-1)C(k+l-1,k-1)
    for all k, l >= 1 with k + l <= j <= jmax.
    """
    for j in range(2, jmax + 1):
        for k in range(1, j):
            for l in range(1, j - k + 1):
                left = (
                    binomial(j - l, k - 1) * binomial(j - 1, j - l - 1) +
                    binomial(j - k, l - 1) * binomial(j - 1, k - 1)
                )
                right = binomial(j, k + l - 1) * binomial(k + l - 1, k - 1)
                if left != right:
                    return False
    return True
