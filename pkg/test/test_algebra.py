"""
Tests for exact scalars, linear combinations of words, tensors, and the
linear data of the preLie constructions.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from comprelie.algebra import (
    rational, BialgebraContext, Elem, Tensor, Tensor2, Tensor3, LinMap, LinForm,
    PreLieConsts, concat, left_concat, degree_project
)
from comprelie.errors import DimensionMismatch, LetterOutOfRange, NotPreLie
from .test_utils import ctx1, ctx2



fractions = st.fractions(min_value=-12, max_value=12, max_denominator=12)
words = st.lists(st.integers(min_value=0, max_value=1), max_size=3).map(tuple)
elements = st.dictionaries(words, fractions, max_size=4).map(lambda terms: Elem(ctx2, terms))



def test_rational():
    assert rational('3/6') == Fraction(1, 2)
    assert rational(' -2 ') == Fraction(-2)
    assert rational(4) == Fraction(4)
    assert rational(Fraction(2, 3)) == Fraction(2, 3)
    with pytest.raises(TypeError):
        rational(0.5)
    with pytest.raises(ValueError):
        rational('one half')
    with pytest.raises(ZeroDivisionError):
        rational('1/0')

def test_normal_form():
    a = Elem(ctx2, {(0,): 1, (1,): 0})
    assert len(a) == 1
    assert a - a == 0
    assert not (a - a)
    assert ctx2.word(0, 1) + ctx2.word(0, 1) == ctx2.word(0, 1).scale(2)
    assert 3 * ctx2.letter(0) == ctx2.letter(0).scale(3)

def test_render():
    a = ctx2.word(0, 1) - ctx2.word(1, 0).scale(Fraction(1, 2))
    assert a.render() == 'x0x1 - 1/2 x1x0'
    assert ctx2.unit().scale(3).render() == '3'
    assert ctx2.zero().render() == '0'
    assert (ctx2.word(1, 1) - ctx2.letter(0) + ctx2.unit()).render() == '1 - x0 + x1x1'
    assert ctx2.letter(1).scale(-2).render() == '-2 x1'

def test_canonical_order():
    a = ctx2.word(1, 0) + ctx2.word(0, 1, 1) + ctx2.letter(1) + ctx2.word(0, 1)
    assert [word for word, _ in a.items()] == [(1,), (0, 1), (1, 0), (0, 1, 1)]

def test_to_json():
    a = ctx2.word(0, 1) - ctx2.letter(1).scale(Fraction(1, 3))
    assert a.to_json() == {'terms': [
        {'word': [1], 'coeff': '-1/3'},
        {'word': [0, 1], 'coeff': '1'},
    ]}

def test_context_errors():
    with pytest.raises(LetterOutOfRange):
        ctx2.word(0, 2)
    with pytest.raises(DimensionMismatch):
        ctx1.letter(0) + ctx2.letter(0)
    with pytest.raises(TypeError):
        ctx2.letter(0) + 1
    with pytest.raises(ValueError):
        BialgebraContext(0)

def test_concat():
    a = ctx2.letter(0) + ctx2.letter(1)
    assert concat(a, ctx2.letter(1)) == ctx2.word(0, 1) + ctx2.word(1, 1)
    assert left_concat(1, ctx2.word(0)) == ctx2.word(1, 0)
    assert concat(a, ctx2.unit()) == a
    assert degree_project(a + ctx2.word(0, 0), 2) == ctx2.word(0, 0)

def test_tensor_pure_and_render():
    t = Tensor.pure(ctx2.letter(0), ctx2.word(0, 1) + ctx2.unit())
    assert isinstance(t, Tensor2)
    assert t.render() == 'x0⊗1 + x0⊗x0x1'
    assert t.to_json() == {'pairs': [
        {'left': [0], 'right': [], 'coeff': '1'},
        {'left': [0], 'right': [0, 1], 'coeff': '1'},
    ]}
    triple = Tensor.pure(ctx2.letter(0), ctx2.letter(1), ctx2.unit())
    assert isinstance(triple, Tensor3)
    assert triple.degree(((0,), (1,), ())) == 2

def test_tensor_apply():
    t = Tensor.pure(ctx2.word(0, 1), ctx2.letter(1).scale(2))
    swap = lambda a: a.like((tuple(reversed(word)), c) for word, c in a.terms.items())
    assert t.apply(swap, lambda a: a) == Tensor.pure(ctx2.word(1, 0), ctx2.letter(1).scale(2))
    assert t.apply(lambda a: a.unit_coefficient(), lambda a: a, arity=1) == 0
    assert t.apply(lambda a: a, lambda a: Fraction(3), arity=1) == ctx2.word(0, 1).scale(6)

def test_linmap():
    f = LinMap(ctx2, [[0, 0], ['1', '0']])
    assert f.image(1) == ctx2.letter(0)
    assert f.image(0) == 0
    assert not f.is_zero()
    assert LinMap.zero(ctx2).is_zero()
    assert LinMap.scalar(ctx2, 2).image(1) == ctx2.letter(1).scale(2)
    with pytest.raises(DimensionMismatch):
        LinMap(ctx2, [[1, 0]])
    with pytest.raises(DimensionMismatch):
        LinMap(ctx2, [[1], [0]])

def test_linform():
    form = LinForm(ctx2, ['1/2', 3])
    assert form.value(0) == Fraction(1, 2)
    with pytest.raises(LetterOutOfRange):
        form.value(2)
    with pytest.raises(DimensionMismatch):
        LinForm(ctx2, [1])

def test_prelie_consts():
    consts = PreLieConsts.from_pairs(ctx2, {(1, 0): [0, 1]})
    assert consts.star(1, 0) == ctx2.letter(1)
    assert consts.star(0, 1) == 0
    assert not consts.is_zero()
    # e0*e0 = e1 and e1*e0 = e0 breaks the identity at (e0, e0, e1).
    with pytest.raises(NotPreLie) as error:
        PreLieConsts.from_pairs(ctx2, {(0, 0): [0, 1], (1, 0): [1, 0]})
    assert error.value.triple == (0, 0, 1)
    assert error.value.left == [0, 0]
    assert error.value.right == [0, -1]

@settings(max_examples=50, deadline=None)
@given(elements, elements, fractions)
def test_linear_combination_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) - b == a
    assert (a + b).scale(c) == a.scale(c) + b.scale(c)
    assert a.scale(0) == 0
    assert hash(a + b) == hash(b + a)



def __main__():
    test_rational()
    test_normal_form()
    test_render()
    test_canonical_order()
    test_to_json()
    test_context_errors()
    test_concat()
    test_tensor_pure_and_render()
    test_tensor_apply()
    test_linmap()
    test_linform()
    test_prelie_consts()
    test_linear_combination_laws()

if __name__ == '__main__':
    __main__()
