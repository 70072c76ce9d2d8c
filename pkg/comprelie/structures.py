"""
This module adapts every construction in comprelie to a single interface,
StructureUnderTest, so that the law checker can verify any of them without
knowing how its products are computed.
"""

import functools

from .algebra import Elem, Tensor
from .shuffle import shuffle, half_shuffle, deconcat, counit
from .prelie import (
    TVf, tvfl_product, tvstar_product, SElem, s_mul, s_coproduct, s_counit,
    sfl_product, monomials, monomial_from_letters
)
from .polyx import (
    Poly, kx_context, poly_mul, binom_coproduct, half_shuffle_poly, poly_counit,
    spec_product, graded_product, LambdaSeq
)
from .errors import NotAugmentation



class StructureUnderTest(object):
    """
    Handles to the operations of a candidate Com-PreLie (bi)algebra: the
    commutative product, its unit, an optional half-shuffle, the preLie
    product, the coproduct and counit, and an enumerator of basis elements
    by degree. All handles act on the same element type.
    """

    def __init__(
        self, name, ctx, element_type, basis, product, prelie, coproduct,
        counit, half_shuffle=None, from_word=None, from_power=None
    ):
        self.name = name
        self.ctx = ctx
        self.element_type = element_type
        self.basis_keys = basis
        self.product = product
        self.prelie = prelie
        self.coproduct = coproduct
        self.counit = counit
        self.half_shuffle = half_shuffle
        self.from_word = from_word
        self.from_power = from_power
        self.basis_cache = {}

    def __repr__(self):
        return 'StructureUnderTest(%s)' % self.name

    def element(self, terms):
        return self.element_type(self.ctx, terms)

    def unit(self):
        return self.element_type(self.ctx).basis_element(
            self.element_type(self.ctx).unit_key()
        )

    def zero(self):
        return self.element_type(self.ctx)

    def basis(self, degree):
        """Basis elements of the given degree, in canonical order."""
        if degree not in self.basis_cache:
            self.basis_cache[degree] = [
                self.element({key: 1}) for key in self.basis_keys(degree)
            ]
        return self.basis_cache[degree]

    def reduced_coproduct(self, a):
        if self.counit(a):
            raise NotAugmentation(self.counit(a))
        unit = self.unit()
        return self.coproduct(a) - Tensor.pure(a, unit) - Tensor.pure(unit, a)

    def is_primitive(self, a):
        return not self.counit(a) and not self.reduced_coproduct(a)



def word_structure(name, ctx, prelie):
    return StructureUnderTest(
        name=name,
        ctx=ctx,
        element_type=Elem,
        basis=ctx.words,
        product=shuffle,
        prelie=prelie,
        coproduct=deconcat,
        counit=counit,
        half_shuffle=half_shuffle,
        from_word=lambda letters: ctx.word(*letters),
    )

def shuffle_structure(ctx):
    """The plain shuffle bialgebra, with the zero preLie product."""
    return word_structure('T(V)', ctx, lambda a, b: a.like(()))

def tvf_structure(linmap):
    return word_structure('T(V,f)', linmap.ctx, TVf(linmap).product)

def tvfl_structure(form, lam):
    return word_structure(
        'T(V,f,lambda)', form.ctx, functools.partial(tvfl_product, form, lam)
    )

def tvstar_structure(consts):
    return word_structure(
        'T(V,*)', consts.ctx, functools.partial(tvstar_product, consts)
    )

def sfl_structure(form, lam):
    ctx = form.ctx
    return StructureUnderTest(
        name='S(V,f,lambda)',
        ctx=ctx,
        element_type=SElem,
        basis=lambda degree: monomials(ctx, degree),
        product=s_mul,
        prelie=functools.partial(sfl_product, form, lam),
        coproduct=s_coproduct,
        counit=s_counit,
        from_word=lambda letters: SElem(ctx, {monomial_from_letters(
            ctx.check_letter(letter) for letter in letters
        ): 1}),
    )

def kx_structure(spec=None, seq=None, name=None):
    """
    K[X] with its ordinary product, binomial coproduct and half-shuffle,
    and the preLie product of a family spec or of an explicit lambda
    sequence.
    """
    if spec is not None:
        prelie = spec_product(spec)
        name = name or 'K[X] %r' % spec
    else:
        prelie = lambda p, q: graded_product(seq, p, q)
        name = name or 'K[X] %r' % seq
    return StructureUnderTest(
        name=name,
        ctx=kx_context,
        element_type=Poly,
        basis=lambda degree: [degree],
        product=poly_mul,
        prelie=prelie,
        coproduct=binom_coproduct,
        counit=poly_counit,
        half_shuffle=half_shuffle_poly,
        from_power=Poly.power,
    )

def kx_lambda_structure(values):
    return kx_structure(seq=LambdaSeq.explicit(values))
