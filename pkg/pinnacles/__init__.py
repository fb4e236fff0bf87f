from .actions import (
    classical_fs,
    classical_fs_set,
    classical_orbit,
    dual_fs,
    dual_fs_set,
    dual_orbit,
    orbit_expand,
    orbit_partition,
)
from .admissibility import (
    compositions_C,
    gap_sets,
    is_admissible_pair,
    is_admissible_pinnacle_set,
    npv,
    vale_sets,
    witness_permutation,
)
from .config import ExhaustiveLimitError
from .counting import (
    canonical_arrangements,
    count_canonical,
    count_O_P,
    count_pin,
    fs_minimal_from_arrangement,
    pin_bounds,
    stirling2,
)
from .generation import generate_constructive, generate_naive
from .minimal import fs_minimal_count_all, is_fs_minimal, to_fs_minimal
from .permutation import (
    Permutation,
    descent_count,
    has_double_descent,
    peak_set,
    pinnacle_set,
    restrict,
    vale_set,
    valley_set,
    w0_conjugate,
    x_factorization,
)

__all__ = [
    "ExhaustiveLimitError",
    "Permutation",
    "canonical_arrangements",
    "classical_fs",
    "classical_fs_set",
    "classical_orbit",
    "compositions_C",
    "count_O_P",
    "count_canonical",
    "count_pin",
    "descent_count",
    "dual_fs",
    "dual_fs_set",
    "dual_orbit",
    "fs_minimal_count_all",
    "fs_minimal_from_arrangement",
    "gap_sets",
    "generate_constructive",
    "generate_naive",
    "has_double_descent",
    "is_admissible_pair",
    "is_admissible_pinnacle_set",
    "is_fs_minimal",
    "npv",
    "orbit_expand",
    "orbit_partition",
    "peak_set",
    "pin_bounds",
    "pinnacle_set",
    "restrict",
    "stirling2",
    "to_fs_minimal",
    "vale_set",
    "vale_sets",
    "valley_set",
    "w0_conjugate",
    "witness_permutation",
    "x_factorization",
]
