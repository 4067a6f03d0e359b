"""Linear codes, duals and hulls."""

from __future__ import annotations

from functools import cached_property
from typing import Literal

import numpy as np

from .errors import InconsistentComputation, ParseError, ZeroMatrix
from .field import FieldSpec
from .linalg import (
    Form,
    MatGF,
    gram,
    gram_rank,
    intersect_rowspaces,
    is_nonsingular,
    null_space,
    row_basis,
)


class LinearCode:
    """An [n, k] code over ``field``.

    ``gen`` is the canonical RREF generator matrix.  ``par`` is the Euclidean
    parity-check matrix (its rows generate the Euclidean dual), and
    ``hermitian_par`` is its conjugate, whose rows generate the Hermitian dual.
    Hull dimensions and the minimum distance are cached after the first
    computation.
    """

    def __init__(self, field: FieldSpec, gen: MatGF, canonical: bool = False):
        if gen.field != field:
            raise ValueError("generator matrix is over a different field")
        self.field = field
        self.gen = gen if canonical else row_basis(gen)
        self._hull: dict[str, int] = {}
        self._distance: int | None = None
        self._distance_known = False

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    @cached_property
    def par(self) -> MatGF:
        return null_space(self.gen)

    @cached_property
    def hermitian_par(self) -> MatGF:
        return self.par.conj()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.field == other.field and self.gen == other.gen

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over {self.field!r})"

    def contains(self, v) -> bool:
        vec = np.asarray(v, dtype=np.int64)
        if self.k == self.n:
            return True
        return not np.any(self.field.matmul(self.par.data, vec[:, None]))

    def distance(self, budget: int | None = None) -> int | None:
        from .distance import min_distance

        return min_distance(self, budget)

    def to_json(self, kind: Literal["generator", "parity"] = "generator") -> dict:
        mat = self.gen if kind == "generator" else self.par
        return {"field": self.field.to_json(), "kind": kind, "matrix": mat.entries, "n": self.n}


def code_from_generator(F: FieldSpec, G: MatGF) -> LinearCode:
    """Code spanned by the rows of G; redundant rows are dropped."""
    if not np.any(G.data):
        raise ZeroMatrix("generator matrix is zero")
    return LinearCode(F, G)


def code_from_parity(F: FieldSpec, H: MatGF) -> LinearCode:
    """Code {v : H v^t = 0}."""
    return LinearCode(F, null_space(H), canonical=True)


def zero_code(F: FieldSpec, n: int) -> LinearCode:
    return LinearCode(F, MatGF.zeros(F, 0, n), canonical=True)


def full_code(F: FieldSpec, n: int) -> LinearCode:
    return LinearCode(F, MatGF.identity(F, n), canonical=True)


def code_from_json(obj: dict) -> LinearCode:
    try:
        F = FieldSpec.from_json(obj["field"])
        kind = obj["kind"]
        rows = obj["matrix"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed code object: {exc}") from exc
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ParseError("matrix must be a list of rows")
    n = obj.get("n", len(rows[0]) if rows else None)
    if n is None:
        raise ParseError("empty matrix needs an explicit 'n'")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ParseError(f"matrix row {i} has length {len(row)}, expected {n}")
        for c in row:
            if not isinstance(c, int) or not 0 <= c < F.order:
                raise ParseError(f"matrix row {i} has invalid entry {c!r}")
    M = MatGF(F, np.array(rows, dtype=np.int64).reshape(len(rows), n))
    if kind == "generator":
        return LinearCode(F, M)
    if kind == "parity":
        return code_from_parity(F, M)
    raise ParseError(f"unknown code kind {kind!r}")


def dual(C: LinearCode) -> LinearCode:
    return LinearCode(C.field, C.par, canonical=True)


def hermitian_dual(C: LinearCode, q: int | None = None) -> LinearCode:
    C.field.base_order(q)
    return LinearCode(C.field, C.hermitian_par, canonical=True)


def dual_for(C: LinearCode, form: Form) -> LinearCode:
    return hermitian_dual(C) if form == "hermitian" else dual(C)


def hull_dim(C: LinearCode, form: Form = "euclidean") -> int:
    """dim(C ∩ C^⊥) or dim(C ∩ C^⊥h).

    Computed twice, by explicit subspace intersection and by the Gram-rank
    identity k - rank(G G^t); the two must agree.
    """
    if form in C._hull:
        return C._hull[form]
    if form == "hermitian":
        C.field.base_order()
        other = C.hermitian_par
    elif form == "euclidean":
        other = C.par
    else:
        raise ValueError(f"unknown form {form!r}")
    via_intersection = intersect_rowspaces(C.gen, other).rows
    via_rank = C.k - gram_rank(C.gen, form)
    if via_intersection != via_rank:
        raise InconsistentComputation(
            f"hull of {C!r}: intersection gives {via_intersection}, rank identity gives {via_rank}"
        )
    C._hull[form] = via_intersection
    return via_intersection


def is_lcd(C: LinearCode, form: Form = "euclidean") -> bool:
    h = hull_dim(C, form)
    H = C.hermitian_par if form == "hermitian" else C.par
    nonsingular = is_nonsingular(gram(H, form))
    if nonsingular != (h == 0):
        raise InconsistentComputation(f"LCD test disagrees with Gram criterion for {C!r}")
    return h == 0


def is_dual_containing(C: LinearCode, form: Form = "euclidean") -> bool:
    return hull_dim(C, form) == C.n - C.k
