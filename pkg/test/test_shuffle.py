"""
Tests for the shuffle bialgebra: products, half-shuffles, deconcatenation,
the morphisms T(F), and symmetric tensors.
"""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from comprelie.algebra import Tensor, LinMap
from comprelie.shuffle import (
    shuffle, shuffle_many, half_shuffle, deconcat, counit, reduced_coproduct,
    is_primitive, tensor_map, tensor_shuffle, symmetrize, symmetrize_selem
)
from comprelie.prelie import selem
from comprelie.errors import Undefined11, NotAugmentation, DimensionMismatch
from .oracles import shuffle_oracle, zinbiel_one_letter
from .test_utils import ctx1, ctx2, ctx3



def test_shuffle_letters():
    x0, x1 = ctx2.letter(0), ctx2.letter(1)
    assert shuffle(x0, x1) == ctx2.word(0, 1) + ctx2.word(1, 0)
    assert shuffle(x0, x0) == ctx2.word(0, 0).scale(2)
    assert shuffle(ctx2.unit(), x1) == x1
    assert shuffle(ctx2.word(0, 1), x1) == ctx2.word(0, 1, 1).scale(2) + ctx2.word(1, 0, 1)

def test_shuffle_interleavings():
    for total in range(8):
        for split in range(total + 1):
            for u in ctx2.words(split):
                for v in ctx2.words(total - split):
                    assert shuffle(ctx2.word(*u), ctx2.word(*v)) == shuffle_oracle(ctx2, u, v)

def test_shuffle_many():
    letters = [ctx3.letter(i) for i in range(3)]
    result = shuffle_many(ctx3, letters)
    assert len(result) == 6
    assert all(coeff == 1 for _, coeff in result.items())
    assert shuffle_many(ctx3, []) == ctx3.unit()

def test_half_shuffle():
    x0, x1 = ctx2.letter(0), ctx2.letter(1)
    assert half_shuffle(ctx2.word(0, 1), x0) == ctx2.word(0, 1, 0) + ctx2.word(0, 0, 1)
    assert half_shuffle(x0, ctx2.unit()) == x0
    assert half_shuffle(ctx2.unit(), x0) == 0
    with pytest.raises(Undefined11):
        half_shuffle(ctx2.unit(), ctx2.unit())
    with pytest.raises(Undefined11):
        half_shuffle(x0 + ctx2.unit(), ctx2.unit().scale(2))

def test_half_shuffle_one_letter():
    for k in range(1, 6):
        for l in range(0, 6):
            x = ctx1.word(*([0] * k))
            y = ctx1.word(*([0] * l))
            assert half_shuffle(x, y) == ctx1.word(*([0] * (k + l))).scale(zinbiel_one_letter(k, l))

def test_half_shuffle_symmetrization():
    for u, v in itertools.product(ctx2.words(2), ctx2.words(1) + ctx2.words(2)):
        a, b = ctx2.word(*u), ctx2.word(*v)
        assert half_shuffle(a, b) + half_shuffle(b, a) == shuffle(a, b)

def test_deconcat():
    delta = deconcat(ctx2.word(0, 1))
    assert delta.render() == '1⊗x0x1 + x0⊗x1 + x0x1⊗1'
    assert deconcat(ctx2.unit()) == Tensor.pure(ctx2.unit(), ctx2.unit())
    assert counit(ctx2.unit().scale(3) + ctx2.letter(0)) == 3
    assert reduced_coproduct(ctx2.word(0, 1)) == Tensor.pure(ctx2.letter(0), ctx2.letter(1))
    with pytest.raises(NotAugmentation):
        reduced_coproduct(ctx2.unit())

def test_primitives():
    assert is_primitive(ctx2.letter(0))
    assert is_primitive(ctx2.letter(0) - ctx2.letter(1).scale(2))
    assert not is_primitive(ctx2.word(0, 1))
    assert not is_primitive(ctx2.word(0, 1) - ctx2.word(1, 0))
    assert not is_primitive(ctx2.unit())

def test_tensor_map():
    swap = LinMap(ctx2, [[0, 1], [1, 0]])
    assert tensor_map(swap, ctx2.word(0, 1)) == ctx2.word(1, 0)
    assert tensor_map(swap, ctx2.unit()) == ctx2.unit()
    assert tensor_map(LinMap.zero(ctx2), ctx2.word(0, 1) + ctx2.unit()) == ctx2.unit()
    assert tensor_map(LinMap.scalar(ctx2, 2), ctx2.word(0, 1, 1)) == ctx2.word(0, 1, 1).scale(8)
    with pytest.raises(DimensionMismatch):
        tensor_map(LinMap.identity(ctx1), ctx2.letter(0))

def test_tensor_map_is_a_morphism():
    f = LinMap(ctx2, [[1, 2], ['-1/2', 0]])
    for u, v in itertools.product(ctx2.words(2), ctx2.words(1)):
        a, b = ctx2.word(*u), ctx2.word(*v)
        assert tensor_map(f, shuffle(a, b)) == shuffle(tensor_map(f, a), tensor_map(f, b))

def test_tensor_shuffle():
    s = Tensor.pure(ctx2.letter(0), ctx2.unit())
    t = Tensor.pure(ctx2.letter(1), ctx2.letter(1))
    assert tensor_shuffle(s, t) == Tensor.pure(
        ctx2.word(0, 1) + ctx2.word(1, 0), ctx2.letter(1)
    )

def test_symmetrize():
    assert symmetrize(ctx2, [0, 1]) == ctx2.word(0, 1) + ctx2.word(1, 0)
    assert symmetrize(ctx2, [(0, 2)]) == ctx2.word(0, 0).scale(2)
    assert symmetrize(ctx2, []) == ctx2.unit()
    element = selem(ctx2, {((0, 1), (1, 1)): 1, (): 3})
    assert symmetrize_selem(ctx2, element) == ctx2.word(0, 1) + ctx2.word(1, 0) + ctx2.unit().scale(3)

@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(0, 1), max_size=3), st.lists(st.integers(0, 1), max_size=3),
    st.lists(st.integers(0, 1), max_size=2)
)
def test_shuffle_is_commutative_and_associative(u, v, w):
    a, b, c = ctx2.word(*u), ctx2.word(*v), ctx2.word(*w)
    assert shuffle(a, b) == shuffle(b, a)
    assert shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c))
    assert deconcat(shuffle(a, b)) == tensor_shuffle(deconcat(a), deconcat(b))



def __main__():
    test_shuffle_letters()
    test_shuffle_interleavings()
    test_shuffle_many()
    test_half_shuffle()
    test_half_shuffle_one_letter()
    test_half_shuffle_symmetrization()
    test_deconcat()
    test_primitives()
    test_tensor_map()
    test_tensor_map_is_a_morphism()
    test_tensor_shuffle()
    test_symmetrize()
    test_shuffle_is_commutative_and_associative()

if __name__ == '__main__':
    __main__()
