__version__ = (0, 1, 0)
__versionstr__ = '.'.join(str(i) for i in __version__)

from .algebra import (
    rational, BialgebraContext, LinComb, Elem, Tensor, Tensor2, Tensor3,
    LinMap, LinForm, PreLieConsts
)
from .shuffle import shuffle, half_shuffle, deconcat, counit, reduced_coproduct, is_primitive
from .prelie import tvf_product, tvfl_product, tvstar_product, sfl_product, SElem
from .polyx import Poly, FamilySpec, LambdaSeq, classify, graded_product
from .structures import StructureUnderTest
from .laws import LawReport, run_suite
from .lie import bracket
from .logger import Logger
