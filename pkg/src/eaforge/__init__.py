"""Entanglement-assisted quantum error-correcting codes from classical linear codes."""

from __future__ import annotations

__version__ = "0.1.0"

from .codes import (
    LinearCode,
    code_from_generator,
    code_from_json,
    code_from_parity,
    dual,
    hermitian_dual,
    hull_dim,
    is_dual_containing,
    is_lcd,
)
from .cyclic import all_cyclic_codes, cyclic_code, rs_code
from .distance import min_distance
from .eaqecc import (
    EaqeccParams,
    check_singleton,
    classify,
    eaqecc_from_hull,
    eaqecc_from_two_codes,
    eaqecc_hermitian,
)
from .expansion import expand_code
from .field import FieldSpec, field_make, gf
from .grs import GrsSpec, grs_code
from .linalg import MatGF, gram_rank, null_space, rank, rref

__all__ = [
    "EaqeccParams",
    "FieldSpec",
    "GrsSpec",
    "LinearCode",
    "MatGF",
    "all_cyclic_codes",
    "check_singleton",
    "classify",
    "code_from_generator",
    "code_from_json",
    "code_from_parity",
    "cyclic_code",
    "dual",
    "eaqecc_from_hull",
    "eaqecc_from_two_codes",
    "eaqecc_hermitian",
    "expand_code",
    "field_make",
    "gf",
    "gram_rank",
    "grs_code",
    "hermitian_dual",
    "hull_dim",
    "is_dual_containing",
    "is_lcd",
    "min_distance",
    "null_space",
    "rank",
    "rref",
    "rs_code",
]
