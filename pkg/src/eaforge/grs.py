"""Generalized Reed-Solomon codes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .codes import LinearCode, zero_code
from .errors import NoWitness, ParseError, RepeatedEvaluationPoint, ZeroMultiplier
from .field import FieldSpec
from .linalg import MatGF


@dataclass(frozen=True)
class GrsSpec:
    field: FieldSpec
    k: int
    gamma: tuple[int, ...]
    w: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "gamma", tuple(int(x) for x in self.gamma))
        object.__setattr__(self, "w", tuple(int(x) for x in self.w))
        if len(self.gamma) != len(self.w):
            raise ValueError("gamma and w must have equal length")
        if len(set(self.w)) != len(self.w):
            raise RepeatedEvaluationPoint(f"evaluation points {list(self.w)} repeat")
        if 0 in self.gamma:
            raise ZeroMultiplier("column multipliers must be nonzero")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"k={self.k} outside [0, {self.n}]")

    @property
    def n(self) -> int:
        return len(self.w)

    def moment_matrix(self, rows: int | None = None) -> MatGF:
        """Rows gamma_j w_j^i for i = 0 .. rows-1 (default k)."""
        F = self.field
        rows = self.k if rows is None else rows
        w = np.array(self.w, dtype=np.int64)
        g = np.array(self.gamma, dtype=np.int64)
        data = np.array([F.mul(g, F.pow(w, i)) for i in range(rows)], dtype=np.int64)
        return MatGF(F, data.reshape(rows, self.n))

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "k": self.k, "gamma": list(self.gamma), "w": list(self.w)}

    @classmethod
    def from_json(cls, obj: dict) -> GrsSpec:
        try:
            F = FieldSpec.from_json(obj["field"])
            return cls(F, int(obj["k"]), tuple(obj["gamma"]), tuple(obj["w"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed GRS spec: {exc}") from exc


def grs_code(spec: GrsSpec) -> LinearCode:
    if spec.k == 0:
        return zero_code(spec.field, spec.n)
    return LinearCode(spec.field, spec.moment_matrix())


def dual_multipliers(F: FieldSpec, w: Sequence[int], gamma: Sequence[int]) -> tuple[int, ...]:
    """gamma' with GRS_k(gamma, w)^perp = GRS_{n-k}(gamma', w)."""
    out = []
    for i, wi in enumerate(w):
        prod = int(gamma[i])
        for j, wj in enumerate(w):
            if j != i:
                prod = F.mul(prod, F.sub(int(wi), int(wj)))
        out.append(F.inv(prod))
    return tuple(out)


def dual_spec(spec: GrsSpec) -> GrsSpec:
    F = spec.field
    return GrsSpec(F, spec.n - spec.k, dual_multipliers(F, spec.w, spec.gamma), spec.w)


def hermitian_dual_spec(spec: GrsSpec) -> GrsSpec:
    """Moment form of the Hermitian dual: conjugate multipliers and points."""
    d = dual_spec(spec)
    F = spec.field
    return GrsSpec(
        F,
        d.k,
        tuple(int(x) for x in F.conj(np.array(d.gamma, dtype=np.int64))),
        tuple(int(x) for x in F.conj(np.array(d.w, dtype=np.int64))),
    )


def _norm_root(F: FieldSpec, q: int, lam: int) -> int:
    """Least-encoding b with b^(q+1) = lam."""
    for b in range(1, F.order):
        if F.pow(b, q + 1) == lam:
            return b
    raise NoWitness(f"{lam} is not a norm")


def hermitian_dual_containing_spec(
    F: FieldSpec, w: Sequence[int], k: int, next_row_in_code: bool = False, limit: int = 1 << 20
) -> GrsSpec:
    """A Hermitian dual-containing GRS_k(gamma, w) over GF(q^2), found by a linear solve.

    With v = conj(w) and beta the Hermitian-dual multipliers, the code contains
    its Hermitian dual iff lambda_i = beta_i^(q+1) in GF(q)^* satisfies
    sum_i lambda_i v_i^(a + q b) = 0 for 0 <= a, b < n - k.  With
    ``next_row_in_code`` the equations for a = n - k are added, which puts the
    moment row beta v^(n-k) inside the code.  The least solution in
    lexicographic order of null-space coordinates is used; at most ``limit``
    candidates are tried.
    """
    from .expansion import coordinate_table
    from .field import embed, field_make
    from .linalg import null_space

    q = F.base_order()
    S = field_make(F.p, F.m // 2)
    n = len(w)
    r = n - k
    v = np.asarray(F.conj(np.array(w, dtype=np.int64)), dtype=np.int64)
    table = coordinate_table(F, S, [1, F.tables.primitive])
    blocks = []
    for a in range(r + (1 if next_row_in_code else 0)):
        for b in range(r):
            blocks.append(table[F.pow(v, a + q * b)].T)
    M = MatGF(S, np.vstack(blocks)) if blocks else MatGF.zeros(S, 0, n)
    N = null_space(M)
    for coeffs in itertools.islice(itertools.product(range(S.order), repeat=N.rows), limit):
        lam = S.sum(S.mul(np.array(coeffs, dtype=np.int64)[:, None], N.data), axis=0)
        if np.all(lam != 0):
            lam_big = embed(F, S, lam)
            beta = [_norm_root(F, q, int(x)) for x in lam_big]
            gamma_dual = [int(x) for x in F.conj(np.array(beta, dtype=np.int64))]
            return GrsSpec(F, k, dual_multipliers(F, w, gamma_dual), tuple(w))
    if S.order**N.rows > limit:
        raise NoWitness(f"no solution among the first {limit} candidates")
    raise NoWitness(f"no Hermitian dual-containing GRS_{k} on the given points")
