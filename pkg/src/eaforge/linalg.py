"""Dense exact linear algebra over finite fields.

Matrices hold element codes in an immutable int64 numpy array.  Every basis
returned by this module is in reduced row echelon form, so equality of
subspaces is plain matrix equality.
"""

from __future__ import annotations

from typing import Literal, Sequence

import numpy as np

from .errors import DimensionMismatch, MixedFields, NotSquare, ParseError
from .field import FieldSpec

Form = Literal["euclidean", "hermitian"]


class MatGF:
    """Dense matrix over a finite field."""

    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data, cols: int | None = None):
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, cols or 0)
        if arr.ndim != 2:
            raise ValueError(f"matrix data must be 2-D, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.order):
            raise ValueError(f"entries out of range for {field!r}")
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> MatGF:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> MatGF:
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def entries(self) -> list[list[int]]:
        return self.data.tolist()

    @property
    def T(self) -> MatGF:
        return MatGF(self.field, self.data.T)

    def conj(self, q: int | None = None) -> MatGF:
        return MatGF(self.field, self.field.conj(self.data, q))

    def __matmul__(self, other: MatGF) -> MatGF:
        if other.field != self.field:
            raise MixedFields(f"{self.field!r} vs {other.field!r}")
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        return MatGF(self.field, self.field.matmul(self.data, other.data))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatGF):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.data, other.data))
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"MatGF({self.field!r}, {self.entries})"

    def vstack(self, other: MatGF) -> MatGF:
        _same(self, other)
        return MatGF(self.field, np.vstack([self.data, other.data]))

    def hstack(self, other: MatGF) -> MatGF:
        if other.field != self.field:
            raise MixedFields(f"{self.field!r} vs {other.field!r}")
        if self.rows != other.rows:
            raise DimensionMismatch(f"row counts {self.rows} and {other.rows} differ")
        return MatGF(self.field, np.hstack([self.data, other.data]))

    def take_cols(self, cols: Sequence[int]) -> MatGF:
        return MatGF(self.field, self.data[:, list(cols)].reshape(self.rows, len(cols)))

    def scale(self, c: int) -> MatGF:
        return MatGF(self.field, self.field.mul(c, self.data))

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": self.entries}

    @classmethod
    def from_json(cls, field: FieldSpec, obj: dict) -> MatGF:
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        if len(entries) != rows:
            raise ParseError(f"matrix declares {rows} rows but has {len(entries)}")
        for i, row in enumerate(entries):
            if len(row) != cols:
                raise ParseError(f"matrix row {i} has length {len(row)}, expected {cols}")
        return cls(field, np.array(entries, dtype=np.int64).reshape(rows, cols))


def _same(a: MatGF, b: MatGF) -> None:
    if a.field != b.field:
        raise MixedFields(f"{a.field!r} vs {b.field!r}")
    if a.cols != b.cols:
        raise DimensionMismatch(f"column counts {a.cols} and {b.cols} differ")


def rref(M: MatGF) -> tuple[MatGF, int, list[int]]:
    """Reduced row echelon form; returns (R, rank, pivot columns)."""
    F = M.field
    A = M.data.copy()
    rows, cols = A.shape
    r = 0
    pivots: list[int] = []
    for j in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, j])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        piv = int(A[r, j])
        if piv != 1:
            A[r] = F.mul(F.inv(piv), A[r])
        col = A[:, j].copy()
        col[r] = 0
        idx = np.flatnonzero(col)
        if idx.size:
            A[idx] = F.sub(A[idx], F.mul(col[idx][:, None], A[r][None, :]))
        pivots.append(j)
        r += 1
    return MatGF(F, A), r, pivots


def rank(M: MatGF) -> int:
    return rref(M)[1]


def row_basis(M: MatGF) -> MatGF:
    """Canonical RREF basis of the row space (zero rows dropped)."""
    R, r, _ = rref(M)
    return MatGF(M.field, R.data[:r], cols=M.cols)


def null_space(M: MatGF) -> MatGF:
    """RREF basis of {v : M v^t = 0}."""
    F = M.field
    R, r, pivots = rref(M)
    n = M.cols
    free = [j for j in range(n) if j not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for b, f in enumerate(free):
        basis[b, f] = 1
        for i, pc in enumerate(pivots):
            basis[b, pc] = F.neg(int(R.data[i, f]))
    return row_basis(MatGF(F, basis, cols=n))


def intersect_rowspaces(M1: MatGF, M2: MatGF) -> MatGF:
    """RREF basis of rowspace(M1) intersected with rowspace(M2)."""
    _same(M1, M2)
    return null_space(null_space(M1).vstack(null_space(M2)))


def mat_dagger(M: MatGF, q: int | None = None) -> MatGF:
    """Conjugate transpose over GF(q^2)."""
    return M.conj(q).T


def gram(M: MatGF, form: Form = "euclidean", q: int | None = None) -> MatGF:
    if form == "euclidean":
        return M @ M.T
    if form == "hermitian":
        return M @ mat_dagger(M, q)
    raise ValueError(f"unknown form {form!r}")


def gram_rank(M: MatGF, form: Form = "euclidean", q: int | None = None) -> int:
    """rank(M M^t) or rank(M M^dagger)."""
    return rank(gram(M, form, q))


def is_nonsingular(M: MatGF) -> bool:
    if M.rows != M.cols:
        raise NotSquare(f"matrix of shape {M.shape} is not square")
    return rank(M) == M.rows


def in_rowspace(M: MatGF, v: Sequence[int]) -> bool:
    vec = MatGF(M.field, [list(v)])
    return rank(M.vstack(vec)) == rank(M)


def batch_rank(F: FieldSpec, A: np.ndarray) -> np.ndarray:
    """Ranks of a stack of matrices with shape (batch, rows, cols)."""
    M = np.array(A, dtype=np.int64)
    B, R, C = M.shape
    rk = np.zeros(B, dtype=np.int64)
    row_idx = np.arange(R)
    for j in range(C):
        cand = (M[:, :, j] != 0) & (row_idx[None, :] >= rk[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = np.flatnonzero(has)
        piv = np.argmax(cand[b], axis=1)
        r0 = rk[b]
        top = M[b, r0].copy()
        M[b, r0] = M[b, piv]
        M[b, piv] = top
        pr = F.mul(F.inv(M[b, r0, j])[:, None], M[b, r0])
        M[b, r0] = pr
        factors = M[b, :, j].copy()
        factors[row_idx[None, :] <= r0[:, None]] = 0
        M[b] = F.sub(M[b], F.mul(factors[:, :, None], pr[:, None, :]))
        rk[b] += 1
    return rk


def random_invertible(F: FieldSpec, n: int, rng: np.random.Generator) -> MatGF:
    """Rejection-sample an invertible n x n matrix."""
    while True:
        A = MatGF(F, rng.integers(0, F.order, size=(n, n)))
        if rank(A) == n:
            return A
