"""EAQECC parameters derived from classical codes."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .codes import LinearCode, dual_for, hull_dim
from .errors import DimensionMismatch, LengthMismatch, MixedFields
from .linalg import Form, rank

Verdict = Literal["ok", "mds", "violated"]


@dataclass(frozen=True)
class EaqeccParams:
    """[[n, k, d; c]]_q.  ``d`` is None when the classical distance is undefined."""

    q: int
    n: int
    k: int
    d: int | None
    c: int
    derivation: str = ""
    claimed: dict = field(default_factory=dict, compare=False)

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    @property
    def net_rate(self) -> Fraction:
        return Fraction(self.k - self.c, self.n)

    @property
    def degenerate(self) -> bool:
        return self.k <= 0

    @property
    def maximal(self) -> bool:
        return self.c == self.n - self.k

    @property
    def singleton(self) -> Verdict:
        return check_singleton(self)

    @property
    def mds(self) -> bool:
        return self.singleton == "mds"

    def __str__(self) -> str:
        d = "-" if self.d is None else self.d
        return f"[[{self.n},{self.k},{d};{self.c}]]_{self.q}"

    def to_json(self) -> dict:
        out = {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "c": self.c,
            "rate": [self.rate.numerator, self.rate.denominator],
            "net_rate": [self.net_rate.numerator, self.net_rate.denominator],
            "flags": {
                "singleton": self.singleton,
                "maximal": self.maximal,
                "degenerate": self.degenerate,
            },
            "derivation": self.derivation,
        }
        if self.claimed:
            out["claimed"] = dict(self.claimed)
        return out


def check_singleton(p: EaqeccParams) -> Verdict:
    """n + c - k >= 2(d - 1): equality is 'mds', failure 'violated'."""
    if p.d is None:
        return "ok"
    lhs, rhs = p.n + p.c - p.k, 2 * (p.d - 1)
    if lhs < rhs:
        return "violated"
    return "mds" if lhs == rhs else "ok"


def classify(p: EaqeccParams) -> dict:
    return {
        "rate": p.rate,
        "net_rate": p.net_rate,
        "maximal": p.maximal,
        "degenerate": p.degenerate,
        "singleton": p.singleton,
        "positive_net_rate": p.net_rate > 0,
        "rate_above_half": p.rate > Fraction(1, 2),
    }


def _min_or_none(a: int | None, b: int | None) -> int | None:
    vals = [x for x in (a, b) if x is not None]
    return min(vals) if vals else None


def eaqecc_from_two_codes(C1: LinearCode, C2: LinearCode, budget: int | None = None) -> EaqeccParams:
    """[[n, k1 + k2 - n + c, min(d1, d2); c]] with c = rank(H1 H2^t)."""
    if C1.field != C2.field:
        raise MixedFields(f"{C1.field!r} vs {C2.field!r}")
    if C1.n != C2.n:
        raise LengthMismatch(f"lengths {C1.n} and {C2.n} differ")
    n = C1.n
    c = rank(C1.par @ C2.par.T) if C1.par.rows and C2.par.rows else 0
    d = _min_or_none(C1.distance(budget), C2.distance(budget))
    return EaqeccParams(C1.field.order, n, C1.k + C2.k - n + c, d, c, "two_codes")


def eaqecc_hermitian(C: LinearCode, budget: int | None = None) -> EaqeccParams:
    """[[n, 2k - n + c, d; c]]_q over GF(q^2) with c = rank(H H^dagger)."""
    q = C.field.base_order()
    H = C.hermitian_par
    c = rank(H @ H.conj().T) if H.rows else 0
    return EaqeccParams(q, C.n, 2 * C.k - C.n + c, C.distance(budget), c, "hermitian")


def base_alphabet(C: LinearCode, form: Form) -> int:
    return C.field.base_order() if form == "hermitian" else C.field.order


def eaqecc_from_hull(
    C: LinearCode, form: Form = "euclidean", budget: int | None = None
) -> tuple[EaqeccParams, EaqeccParams]:
    """The pair [[n, k-h, d; n-k-h]] and [[n, n-k-h, d_dual; k-h]], h the hull dimension."""
    h = hull_dim(C, form)
    q = base_alphabet(C, form)
    n, k = C.n, C.k
    D = dual_for(C, form)
    primary = EaqeccParams(q, n, k - h, C.distance(budget), n - k - h, f"hull_primary_{form}")
    dual = EaqeccParams(q, n, n - k - h, D.distance(budget), k - h, f"hull_dual_{form}")
    return primary, dual


def require_same_length(a: LinearCode, b: LinearCode) -> None:
    if a.n != b.n:
        raise DimensionMismatch(f"lengths {a.n} and {b.n} differ")
