"""Multipartite entanglement potential of n-qubit pure states.

Computes reduced-density purities over balanced bipartitions, the
entanglement potential pi_ME, the four-qubit closed-form criterion
K1 + K2 = 0 for maximal entanglement, and numerical minimization of the
potential over the unit sphere.
"""

__version__ = "0.1.0"

from .closed_form import (
    KDecomposition,
    PairPurities,
    k1_value,
    k2_value,
    k_total,
    pair_purities,
)
from .errors import (
    ArityError,
    CatalogMissError,
    ConfigError,
    DegenerateStateError,
    DimensionError,
    EntpotError,
    FormatError,
    KetError,
    KetEvalError,
    KetSyntaxError,
    KetTypeError,
    KetWidthError,
    NonUnitaryError,
    NormalizationError,
    SubsetError,
)
from .ket_parser import eval_ket, format_ket, parse_ket
from .mmes_search import (
    MinimizeConfig,
    MinimizeResult,
    gradient,
    minimize_potential,
    objective,
)
from .potential import BipartitionReport, analyze, pi_me
from .qstate import (
    CatalogEntry,
    PureState,
    apply_local_unitary,
    catalog_names,
    catalog_state,
    make_state,
    random_state,
)
from .reduction import (
    DensityMatrix,
    all_balanced_purities,
    balanced_subsets,
    purity,
    reduced_density,
)

__all__ = [
    "ArityError",
    "BipartitionReport",
    "CatalogEntry",
    "CatalogMissError",
    "ConfigError",
    "DegenerateStateError",
    "DensityMatrix",
    "DimensionError",
    "EntpotError",
    "FormatError",
    "KDecomposition",
    "KetError",
    "KetEvalError",
    "KetSyntaxError",
    "KetTypeError",
    "KetWidthError",
    "MinimizeConfig",
    "MinimizeResult",
    "NonUnitaryError",
    "NormalizationError",
    "PairPurities",
    "PureState",
    "SubsetError",
    "all_balanced_purities",
    "analyze",
    "apply_local_unitary",
    "balanced_subsets",
    "catalog_names",
    "catalog_state",
    "eval_ket",
    "format_ket",
    "gradient",
    "k1_value",
    "k2_value",
    "k_total",
    "make_state",
    "minimize_potential",
    "objective",
    "pair_purities",
    "parse_ket",
    "pi_me",
    "purity",
    "random_state",
    "reduced_density",
]
