"""Cyclicity of tensor products for quantum affine algebras: exact toolkit."""

from .cartan import AffineType, CartanData, build_cartan, cartan, parse_type
from .monomial import Monomial, SpectralParam, a_monomial, plus_minus_split, sp, truncate
from .notation import format_monomial, parse_monomial
from .qchar import QCharacter, fm_fundamental, sl2_simple_qchar, verify_useqt
from .criteria import (
    CyclicVerdict,
    admissible_factorization,
    fundamental_order_ok,
    maincyc_conclude,
    pairwise_cyclic_sufficient,
)
from .sl2 import eval_module, is_cyclic, simple_module, tensor, verify_relations
from .intertwiner import check_hexagon, check_inverse_relation, intertwiner_I, solve_T
from .worked import example_suite

__version__ = "0.1.0"
