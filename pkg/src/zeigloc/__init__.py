"""Z-eigenvalue localization sets, spectral-radius bounds, and a desk-scale
eigenpair oracle for dense real tensors."""

__version__ = "0.1.0"

from .bounds import (
    BOUND_NAMES,
    BoundReport,
    BoundValue,
    bound_maxR,
    bound_omega,
    bound_report,
    bound_wang,
    bound_zhao,
)
from .intervals import IntervalSet, quadratic_region
from .localization import (
    SET_NAMES,
    ChainCheck,
    RowAggregates,
    SetReport,
    build_sets,
    inclusion_chain_check,
    row_aggregates,
    set_K,
    set_L,
    set_Omega,
    set_Psi,
)
from .oracle import (
    OracleConfig,
    VerificationDocument,
    ZEigenPair,
    circle_solve,
    residual,
    solve,
    sshopm,
    verify_inclusion,
)
from .tensor import (
    EntryRecord,
    Tensor,
    TensorFormatError,
    WeakSymmetryCheck,
    apply,
    gradient,
    is_nonnegative,
    is_symmetric,
    is_weakly_symmetric,
    load_tensor,
    nonzero_records,
    parse_tensor,
    polyval,
    serialize_tensor,
    weak_symmetry_check,
)

__all__ = [
    "__version__",
    "BOUND_NAMES",
    "BoundReport",
    "BoundValue",
    "ChainCheck",
    "EntryRecord",
    "IntervalSet",
    "OracleConfig",
    "RowAggregates",
    "SET_NAMES",
    "SetReport",
    "Tensor",
    "TensorFormatError",
    "VerificationDocument",
    "WeakSymmetryCheck",
    "ZEigenPair",
    "apply",
    "bound_maxR",
    "bound_omega",
    "bound_report",
    "bound_wang",
    "bound_zhao",
    "build_sets",
    "circle_solve",
    "gradient",
    "inclusion_chain_check",
    "is_nonnegative",
    "is_symmetric",
    "is_weakly_symmetric",
    "load_tensor",
    "nonzero_records",
    "parse_tensor",
    "polyval",
    "quadratic_region",
    "residual",
    "row_aggregates",
    "serialize_tensor",
    "set_K",
    "set_L",
    "set_Omega",
    "set_Psi",
    "solve",
    "sshopm",
    "verify_inclusion",
    "weak_symmetry_check",
]
