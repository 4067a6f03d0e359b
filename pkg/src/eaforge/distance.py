"""Exact minimum distance.

Two exact strategies:

* message enumeration, used when q^k fits the budget.  Only messages whose
  first nonzero coefficient is 1 are visited, since scalar multiples share a
  weight.
* column-dependency search on the parity-check matrix: d is the least t such
  that some t columns are linearly dependent.  The Singleton level n-k is
  tried first when affordable, which settles MDS codes in one pass.
"""

from __future__ import annotations

import itertools
from math import comb
from typing import TYPE_CHECKING

import numpy as np

from .errors import BudgetExceeded
from .field import FieldSpec
from .linalg import batch_rank

if TYPE_CHECKING:
    from .codes import LinearCode

DEFAULT_BUDGET = 1 << 22
_BLOCK = 1 << 15
_BATCH = 4096


def _span_table(F: FieldSpec, rows: np.ndarray, n: int) -> np.ndarray:
    table = np.zeros((1, n), dtype=np.int64)
    scalars = np.arange(F.order, dtype=np.int64)
    for g in rows:
        multiples = F.mul(scalars[:, None], g[None, :])
        table = F.add(table[None, :, :], multiples[:, None, :]).reshape(-1, n)
    return table


def enumerate_min_weight(F: FieldSpec, G: np.ndarray) -> int:
    """Minimum nonzero weight of the row space of G (rows independent)."""
    k, n = G.shape
    q = F.order
    best = n
    for i in range(k):
        rest = G[i + 1 :]
        j = 0
        while j < len(rest) and q ** (j + 1) <= _BLOCK:
            j += 1
        inner = rest[len(rest) - j :]
        outer = rest[: len(rest) - j]
        table = _span_table(F, inner, n)
        for coeffs in itertools.product(range(q), repeat=len(outer)):
            offset = G[i]
            for a, g in zip(coeffs, outer):
                if a:
                    offset = F.add(offset, F.mul(a, g))
            words = F.add(table, offset[None, :])
            best = min(best, int((words != 0).sum(axis=1).min()))
            if best == 1:
                return 1
    return best


def _level_has_dependency(F: FieldSpec, H: np.ndarray, t: int, spent: list[int], budget: int) -> bool:
    n = H.shape[1]
    if spent[0] + comb(n, t) > budget:
        # a full pass over this level would not fit; fail before doing any of it
        raise BudgetExceeded(f"column-dependency search needs {spent[0] + comb(n, t)} rank tests, budget {budget}")
    combos = itertools.combinations(range(n), t)
    while True:
        chunk = list(itertools.islice(combos, _BATCH))
        if not chunk:
            return False
        spent[0] += len(chunk)
        idx = np.array(chunk, dtype=np.int64)
        sub = np.transpose(H[:, idx], (1, 0, 2))
        if np.any(batch_rank(F, sub) < t):
            return True


def column_search_distance(F: FieldSpec, H: np.ndarray, n: int, budget: int) -> int:
    """Least t such that some t columns of H are dependent (H has full row rank)."""
    r = H.shape[0]
    if r == 0:
        return 1
    spent = [0]
    lower = 1
    try:
        if comb(n, r) <= budget // 2:
            if not _level_has_dependency(F, H, r, spent, budget):
                return r + 1
        for t in range(1, r + 1):
            if _level_has_dependency(F, H, t, spent, budget):
                return t
            lower = t + 1
    except BudgetExceeded as exc:
        exc.lower = lower
        raise
    return r + 1


def min_distance(C: LinearCode, budget: int | None = None) -> int | None:
    """Exact minimum distance; None for the zero code."""
    if C._distance_known:
        return C._distance
    if C.k == 0:
        d = None
    else:
        budget = DEFAULT_BUDGET if budget is None else budget
        F = C.field
        if F.order**C.k <= budget:
            d = enumerate_min_weight(F, C.gen.data)
        else:
            try:
                d = column_search_distance(F, C.par.data, C.n, budget)
            except BudgetExceeded as exc:
                exc.upper = int((C.gen.data != 0).sum(axis=1).min())
                raise
    C._distance = d
    C._distance_known = True
    return d
