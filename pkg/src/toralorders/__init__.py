"""Toral terminal orders over two-dimensional local rings, computed at desk scale.

Finite fields and truncated local rings stand in for the residue fields and
Hensel local rings; everything reduces to exact linear algebra over F_q.
"""

__version__ = "0.1.0"

from .algebra import (
    StructureConstantAlgebra,
    TruncatedLocalRing,
    is_hereditary_finite,
    is_normal_with_uniformiser,
    radical,
    simples_with_action,
    verify_associativity,
    wedderburn_decompose,
)
from .classifier import LocalisedBrauerClass, classify, construct, ramification_profile
from .fields import GF, field
from .hj import (
    IntersectionData,
    LatticePoint,
    ToralDivisor,
    basic_toral_data,
    determinant_of_R,
    divisor_of_lattice_point,
    lattice_point_of_divisor,
    nu_sequence,
    pullback_divisor,
    singularity_type,
)
from .orders import build_delta_d, flags_and_projectives, hom_table, uniformiser_and_checks, verify_assumption
from .symbols import (
    CyclicExtension,
    SymbolPresentation,
    build_cover,
    build_hj_symbol,
    build_symbol,
    split_witness,
    tame_ramification,
)

__all__ = [name for name in dir() if not name.startswith("_")]
