"""Maximal-entanglement EAQECCs from LCD codes."""

from __future__ import annotations

import itertools
from typing import Literal

import numpy as np

from ..codes import LinearCode, is_lcd
from ..cyclic import cyclic_code
from ..eaqecc import EaqeccParams, eaqecc_from_hull
from ..errors import CongruenceMismatch, ConditionViolated, NotLcd, NoWitness, ParityNotSupported
from ..field import FieldSpec, gf
from ..linalg import MatGF, gram, is_nonsingular, rref
from ..poly import poly_reciprocal_test
from .report import ConstructionReport

WitnessKind = Literal["neg_one_square", "two_square", "four_square"]

_LENGTH = {"neg_one_square": 1, "two_square": 2, "four_square": 4}


def lcd_maximal(C: LinearCode, budget: int | None = None) -> tuple[EaqeccParams, EaqeccParams]:
    """[[n, k, d; n-k]] and [[n, n-k, d_dual; k]] from a Euclidean LCD code."""
    if not is_lcd(C):
        raise NotLcd(f"{C!r} is not LCD")
    return eaqecc_from_hull(C, "euclidean", budget)


def lcd_maximal_report(C: LinearCode, budget: int | None = None) -> ConstructionReport:
    primary, dual = lcd_maximal(C, budget)
    rep = ConstructionReport(
        "lcd-maximal", {}, C.to_json(), output_code=C, eaqecc=primary, eaqecc_dual=dual,
        checks={"hull_e": 0},
    )
    rep.claim("c", C.n - C.k, primary.c)
    rep.claim("dual.c", C.k, dual.c)
    rep.claim("maximal", True, primary.maximal)
    rep.claim("dual.maximal", True, dual.maximal)
    return rep


def cyclic_mds_lcd(q: int, k: int, budget: int | None = None) -> ConstructionReport:
    """[[q+1, k, q-k+2; q+1-k]]_q from a self-reciprocal cyclic MDS code of length q+1."""
    F = gf(q)
    n = q + 1
    if not 1 <= k <= n:
        raise ConditionViolated(f"k={k} outside [1, {n}]")
    if q % 2 and k % 2 == 0:
        raise ParityNotSupported(f"q={q} is odd and k={k} is even")
    if (n - k) % 2:
        mu = (q - k) // 2
        T = sorted({i % n for i in range(-mu, mu + 1)})
        which = "g1"
    else:
        mu = (q - 1 - k) // 2
        T = sorted({s * i % n for i in range(q // 2 - mu, q // 2 + 1) for s in (1, -1)})
        which = "g2"
    spec, C = cyclic_code(F, n, T)
    primary, dual = eaqecc_from_hull(C, "euclidean", budget)
    d = C.distance(budget)
    rep = ConstructionReport(
        "cyclic-mds-lcd",
        {"q": q, "k": k},
        {"q": q, "k": k},
        witnesses={"generator": which, "mu": mu, "defining_set": list(spec.defining_set), "g": list(spec.g.coeffs)},
        output_code=C,
        eaqecc=primary,
        eaqecc_dual=dual,
        checks={"output_n": C.n, "output_k": C.k, "output_d": d},
    )
    rep.claim("output.k", k, C.k)
    rep.claim("output.d", q - k + 2, d)
    rep.claim("self_reciprocal", True, poly_reciprocal_test(spec.g))
    rep.claim("lcd", True, is_lcd(C))
    rep.claim("eaqecc", [n, k, q - k + 2, n - k], [primary.n, primary.k, primary.d, primary.c])
    rep.claim("mds", True, primary.mds)
    rep.claim("maximal", True, primary.maximal)
    return rep


def find_square_witnesses(F: FieldSpec, kind: WitnessKind) -> tuple[int, ...]:
    """Least tuple (by encoding, lexicographic) with 1 + sum of squares = 0.

    ``neg_one_square`` has one entry (a^2 = -1), ``two_square`` two and
    ``four_square`` four.
    """
    q = F.order
    if kind == "neg_one_square" and q % 4 != 1:
        raise CongruenceMismatch(f"neg_one_square needs q = 1 mod 4, got q={q}")
    if kind == "two_square" and q % 4 != 3:
        raise CongruenceMismatch(f"two_square needs q = 3 mod 4, got q={q}")
    if kind not in _LENGTH:
        raise ValueError(f"unknown witness kind {kind!r}")
    t = _LENGTH[kind]
    squares = F.mul(np.arange(q), np.arange(q))
    root: dict[int, int] = {}
    for x in range(q - 1, -1, -1):
        root[int(squares[x])] = x
    for prefix in itertools.product(range(q), repeat=t - 1):
        acc = 1
        for a in prefix:
            acc = F.add(acc, int(squares[a]))
        last = root.get(F.neg(acc))
        if last is not None:
            return tuple(prefix) + (last,)
    raise NoWitness(f"no {kind} witness in {F!r}")


_S_KIND: dict[int, WitnessKind | None] = {2: None, 3: "neg_one_square", 4: "two_square", 5: "four_square"}


def _check_congruence(q: int, s: int) -> None:
    ok = {2: q % 2 == 0, 3: q % 4 == 1, 4: q % 4 == 3, 5: True}
    if s not in ok:
        raise ConditionViolated(f"s must be one of 2, 3, 4, 5, got {s}")
    if not ok[s]:
        raise CongruenceMismatch(f"s={s} is not available for q={q}")


def lcd_s_expand(C: LinearCode, s: int, budget: int | None = None) -> ConstructionReport:
    """LCD code (I A A ...) of length sn - (s-1)k built from a systematic generator (I A)."""
    F = C.field
    q = F.order
    _check_congruence(q, s)
    kind = _S_KIND[s]
    wit = find_square_witnesses(F, kind) if kind else ()
    n, k = C.n, C.k
    _, _, pivots = rref(C.gen)
    free = [j for j in range(n) if j not in pivots]
    A = C.gen.data[:, free]
    if s == 2:
        extra = [1]
    elif s == 5:
        # blocks alpha A, beta A, delta A, gamma A
        a, b, g, dl = wit
        extra = [a, b, dl, g]
    else:
        extra = list(wit)
    blocks = [C.gen.data] + [F.mul(x, A) for x in extra]
    Gp = MatGF(F, np.hstack(blocks))
    Cp = LinearCode(F, Gp)
    Gram = gram(Gp)
    identity = Gram == MatGF.identity(F, k)
    nonsingular = is_nonsingular(Gram)
    primary, dual = eaqecc_from_hull(Cp, "euclidean", budget)
    d = C.distance(budget)
    dp = Cp.distance(budget)
    N = s * n - (s - 1) * k
    rep = ConstructionReport(
        "lcd-expand",
        {"s": s},
        C.to_json(),
        witnesses={"kind": kind, "squares": list(wit), "column_order": list(pivots) + free},
        output_code=Cp,
        matrices={"generator": Gp.entries},
        eaqecc=primary,
        eaqecc_dual=dual,
        checks={"gram_identity": identity, "gram_nonsingular": nonsingular, "input_d": d, "output_d": dp,
                "distance_window": [d, s * d - 1]},
    )
    rep.claim("gram_nonsingular", True, nonsingular)
    if s in (2, 3):
        rep.claim("gram_identity", True, identity)
    rep.claim("N", N, Cp.n)
    rep.claim("k", k, primary.k)
    rep.claim("c", s * (n - k), primary.c)
    rep.claim("distance_in_window", True, dp is not None and d <= dp <= s * d - 1)
    return rep

