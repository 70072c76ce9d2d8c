"""
This module implements the shuffle bialgebra (T(V), sh, Delta): the shuffle
and half-shuffle products, deconcatenation, the counit, the morphisms T(F),
symmetrization onto symmetric tensors, and primitivity testing.
"""

import functools, collections
from fractions import Fraction

from .algebra import Tensor, Tensor2, concat
from .errors import Undefined11, NotAugmentation, DimensionMismatch



@functools.lru_cache(maxsize=1 << 16)
def shuffle_words(u, v):
    """
    Shuffle two words by the recursion
    xu sh yv = x(u sh yv) + y(xu sh v). Returns (word, count) pairs.
    """
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    counts = collections.defaultdict(int)
    for word, count in shuffle_words(u[1:], v):
        counts[(u[0],) + word] += count
    for word, count in shuffle_words(u, v[1:]):
        counts[(v[0],) + word] += count
    return tuple(counts.items())

def shuffle(u, v):
    u.check_compatible(v)
    accumulated = collections.defaultdict(Fraction)
    for a, c in u.terms.items():
        for b, d in v.terms.items():
            for word, count in shuffle_words(a, b):
                accumulated[word] += c * d * count
    return u.like(accumulated)

def shuffle_many(ctx, elements):
    result = ctx.unit()
    for element in elements:
        result = shuffle(result, element)
    return result



def half_shuffle(u, v):
    """
    The half-shuffle xu < v = x(u sh v), extended to the unit by a < 1 = a
    and 1 < a = 0. Raises Undefined11 when both arguments have a unit
    component.
    """
    u.check_compatible(v)
    alpha = u.unit_coefficient()
    beta = v.unit_coefficient()
    if alpha and beta:
        raise Undefined11()
    accumulated = collections.defaultdict(Fraction)
    for a, c in u.terms.items():
        if not a:
            continue
        head, tail = a[0], a[1:]
        for b, d in v.terms.items():
            for word, count in shuffle_words(tail, b):
                accumulated[(head,) + word] += c * d * count
    return u.like(accumulated)



def deconcat(a):
    """Delta(x1...xn) = sum of prefix (x) suffix over all cut points."""
    terms = []
    for word, coeff in a.terms.items():
        for i in range(len(word) + 1):
            terms.append(((word[:i], word[i:]), coeff))
    return Tensor2(a.ctx, terms)

def counit(a):
    return a.unit_coefficient()

def reduced_coproduct(a):
    if counit(a):
        raise NotAugmentation(counit(a))
    unit = a.ctx.unit()
    return deconcat(a) - Tensor.pure(a, unit) - Tensor.pure(unit, a)

def is_primitive(a):
    return not counit(a) and not reduced_coproduct(a)



def tensor_map(linmap, a):
    """T(F): x1...xn -> F(x1)...F(xn), expanded multilinearly."""
    if linmap.ctx != a.ctx:
        raise DimensionMismatch(a.ctx.dim, linmap.ctx.dim, 'linear map')
    images = [linmap.image(letter) for letter in range(a.ctx.dim)]
    result = a.like(())
    for word, coeff in a.terms.items():
        term = a.ctx.unit().scale(coeff)
        for letter in word:
            term = concat(term, images[letter])
            if not term:
                break
        result = result + term
    return result

def tensor_shuffle(s, t):
    """(a (x) b) sh (c (x) d) = (a sh c) (x) (b sh d)."""
    return s.combine(t, shuffle, shuffle)



def symmetrize(ctx, letters):
    """
    The symmetric tensor x_i1 sh ... sh x_ik for a multiset of letters,
    given as an iterable of letter indices or as (letter, multiplicity)
    pairs of a monomial. The empty multiset gives 1.
    """
    expanded = []
    for letter in letters:
        if isinstance(letter, tuple):
            expanded.extend([letter[0]] * letter[1])
        else:
            expanded.append(letter)
    return shuffle_many(ctx, [ctx.letter(letter) for letter in expanded])

def symmetrize_selem(ctx, element):
    """Extend symmetrize linearly to an element of S(V)."""
    result = ctx.zero()
    for monomial, coeff in element.terms.items():
        result = result + symmetrize(ctx, monomial).scale(coeff)
    return result
