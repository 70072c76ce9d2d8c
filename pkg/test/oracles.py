"""
Independent brute-force implementations used to cross-check the products
computed by comprelie. Each works from the explicit formula rather than
from the recursions used by the package.
"""

import itertools, collections, math
from fractions import Fraction

from comprelie.algebra import Elem



def interleavings(u, v):
    """Shuffle of two words by enumerating the positions taken by u."""
    counts = collections.Counter()
    n = len(u) + len(v)
    for positions in itertools.combinations(range(n), len(u)):
        word = []
        ui = iter(u)
        vi = iter(v)
        chosen = set(positions)
        for i in range(n):
            word.append(next(ui) if i in chosen else next(vi))
        counts[tuple(word)] += 1
    return counts

def shuffle_oracle(ctx, u, v):
    return Elem(ctx, interleavings(u, v).items())



def tvf_closed_form(linmap, u, w):
    """
    x1...xn * w = sum over i of x1...x(i-1) f(xi) (x(i+1)...xn sh w)
    for words u and w.
    """
    ctx = linmap.ctx
    terms = collections.defaultdict(Fraction)
    for i, letter in enumerate(u):
        for image, image_coeff in enumerate(linmap.rows[letter]):
            if not image_coeff:
                continue
            for word, count in interleavings(u[i + 1:], w).items():
                terms[u[:i] + (image,) + word] += image_coeff * count
    return Elem(ctx, terms)

def tvfl_double_sum(form, lam, u, v):
    """
    x1...xm * y1...yn =
        sum over i < n of lam^i f(x1) f(y1)...f(yi) (x2...xm sh y(i+1)...yn)
    for words u and v.
    """
    ctx = form.ctx
    terms = collections.defaultdict(Fraction)
    if not u:
        return Elem(ctx)
    for i in range(len(v)):
        coeff = Fraction(lam) ** i * form.values[u[0]]
        for letter in v[:i]:
            coeff *= form.values[letter]
        if not coeff:
            continue
        for word, count in interleavings(u[1:], v[i:]).items():
            terms[word] += coeff * count
    return Elem(ctx, terms)

def zinbiel_one_letter(k, l):
    """x^k < x^l = C(k+l-1, k-1) x^(k+l) on one letter, for k >= 1."""
    return math.comb(k + l - 1, k - 1)
