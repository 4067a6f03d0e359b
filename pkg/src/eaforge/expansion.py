"""Subfield expansion of codes over GF(q^m)."""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from .codes import LinearCode, code_from_generator, zero_code
from .errors import DependentBasis
from .field import FieldSpec, embed, field_make
from .linalg import MatGF


def coordinate_table(big: FieldSpec, small: FieldSpec, basis: Sequence[int]) -> np.ndarray:
    """table[a] = coordinates of a in ``basis`` over ``small`` (shape q^m x m)."""
    m = len(basis)
    b = np.array([int(x) for x in basis], dtype=np.int64)
    coeffs = np.array(list(itertools.product(range(small.order), repeat=m)), dtype=np.int64)
    values = big.sum(big.mul(embed(big, small, coeffs), b[None, :]), axis=1)
    if len(np.unique(values)) != big.order:
        raise DependentBasis(f"basis {list(b)} is dependent over GF({small.order})")
    table = np.zeros((big.order, m), dtype=np.int64)
    table[values] = coeffs
    return table


def expand_code(C: LinearCode, basis: Sequence[int]) -> LinearCode:
    """The [nm, km] image of C under the coordinate map of ``basis``."""
    big = C.field
    m = len(basis)
    if m < 1 or big.m % m:
        raise DependentBasis(f"{m} elements cannot form a basis of {big!r} over a subfield")
    small = field_make(big.p, big.m // m)
    table = coordinate_table(big, small, basis)
    if C.k == 0:
        return zero_code(small, C.n * m)
    b = np.array([int(x) for x in basis], dtype=np.int64)
    words = big.mul(b[:, None, None], C.gen.data[None, :, :]).reshape(-1, C.n)
    G = table[words].reshape(words.shape[0], C.n * m)
    return code_from_generator(small, MatGF(small, G))
