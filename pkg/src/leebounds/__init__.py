"""Linear codes over Z/p^sZ in the Lee metric, with upper bounds on their minimum distance."""

from __future__ import annotations

from .bounds import (
    BoundReport,
    FiltrationProfile,
    TABLE_PARAMETERS,
    all_bounds,
    filtration_profile,
    table_block,
)
from .code import (
    EnumerationCapError,
    Isometry,
    LinearCode,
    ZeroCodeError,
    apply_isometry,
    codeword_array,
    filtration_subcode,
    load_code,
    reduced_systematic_form,
    socle,
    systematic_form,
    torsion_code,
)
from .ring import Modulus, Residue, lee_weight, lee_weight_vector, p_valuation
from .weights import (
    column_hierarchy,
    column_lee_weight_code,
    filtration_hierarchy,
    join_hierarchy,
    min_hamming_distance,
    min_lee_distance,
    wt_join,
    wt_meet,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "EnumerationCapError", "FiltrationProfile", "Isometry", "LinearCode",
    "Modulus", "Residue", "TABLE_PARAMETERS", "ZeroCodeError", "all_bounds", "apply_isometry",
    "codeword_array", "column_hierarchy", "column_lee_weight_code", "filtration_hierarchy",
    "filtration_profile", "filtration_subcode", "join_hierarchy", "lee_weight",
    "lee_weight_vector", "load_code", "min_hamming_distance", "min_lee_distance", "p_valuation",
    "reduced_systematic_form", "socle", "systematic_form", "table_block", "torsion_code",
    "wt_join", "wt_meet",
]
