"""GRS based constructions: the MDS one-column extension and the Hermitian hull family."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..codes import hull_dim, is_dual_containing
from ..eaqecc import eaqecc_from_hull, eaqecc_hermitian
from ..errors import ConditionViolated, InvalidR, NoWitness, NotDualContaining, NotMomentForm
from ..field import FieldSpec, gf
from ..grs import GrsSpec, grs_code, hermitian_dual_spec
from ..linalg import MatGF, gram_rank, intersect_rowspaces, row_basis
from .extend import inner, kernel, least_alpha
from .report import ConstructionReport


def grs_mds_extend(spec: GrsSpec, budget: int | None = None) -> ConstructionReport:
    """Extend a Hermitian dual-containing GRS code by one column and one moment row."""
    F = spec.field
    q = F.base_order()
    if q <= 2:
        raise ConditionViolated(f"needs q > 2, got q={q}")
    original = spec
    C = grs_code(spec)
    normalized = False
    if not is_dual_containing(C, "hermitian"):
        if 2 * spec.k < spec.n and spec.k and hull_dim(C, "hermitian") == spec.k:
            spec = hermitian_dual_spec(spec)
            C = grs_code(spec)
            normalized = True
        else:
            raise NotDualContaining("the GRS code does not contain its Hermitian dual")
    n, k = spec.n, spec.k
    hs = hermitian_dual_spec(spec)
    H = hs.moment_matrix()
    if row_basis(H) != row_basis(C.hermitian_par):
        raise NotMomentForm("Hermitian dual is not generated by the expected moment rows")
    beta = np.array(hs.gamma, dtype=np.int64)
    v = np.array(hs.w, dtype=np.int64)
    x = F.mul(beta, F.pow(v, n - k))
    alpha = least_alpha(F, inner(F, x, x, "hermitian"), "hermitian")
    Hp = np.zeros((n - k + 1, n + 1), dtype=np.int64)
    Hp[: n - k, 1:] = H.data
    Hp[n - k, 0] = alpha
    Hp[n - k, 1:] = x
    Hp = MatGF(F, Hp)
    Cp = kernel(Hp, "hermitian")
    gr = gram_rank(Hp, "hermitian")
    ea = eaqecc_hermitian(Cp, budget)
    _, ea_dual = eaqecc_from_hull(Cp, "hermitian", budget)
    dp = Cp.distance(budget)
    rep = ConstructionReport(
        "grs-mds",
        {},
        original.to_json(),
        witnesses={
            "alpha": alpha,
            "x": x.tolist(),
            "beta": list(hs.gamma),
            "v": list(hs.w),
            "normalized_to_dual": normalized,
            "x_in_code": bool(C.contains(x)),
        },
        output_code=Cp,
        matrices={"bordered_parity": Hp.entries},
        eaqecc=ea,
        eaqecc_dual=ea_dual,
        checks={
            "gram_rank": gr,
            "output_n": Cp.n,
            "output_k": Cp.k,
            "output_d": dp,
            "hull_h": hull_dim(Cp, "hermitian"),
        },
    )
    rep.claim("output.d", n - k + 2, dp)
    rep.claim("gram_rank", 1, gr)
    rep.claim("n", n + 1, ea.n)
    rep.claim("k", 2 * k - n, ea.k)
    rep.claim("c", 1, ea.c)
    rep.claim("mds", True, ea.mds)
    rep.claim("dual.k", 1, ea_dual.k)
    rep.claim("dual.d", k + 1, ea_dual.d)
    rep.claim("dual.c", 2 * k - n - 1, ea_dual.c)
    rep.claim("dual.c_from_hull", 2 * k - n, ea_dual.c)
    rep.claim("dual.mds", True, ea_dual.mds)
    return rep


def table_instance(q: int, a: int, m: int, k: int) -> GrsSpec:
    """Hermitian dual-containing GRS code of length (q^2-1)/a over GF(q^2), q = 2am+1.

    Evaluation points are the order-n subgroup sorted by code; multipliers
    come from the linear solve in :func:`hermitian_dual_containing_spec`,
    with the next moment row forced into the code whenever that is solvable.
    """
    from ..grs import hermitian_dual_containing_spec

    if q != 2 * a * m + 1:
        raise ConditionViolated(f"q={q} is not 2*{a}*{m}+1")
    F = gf(q * q)
    n = (q * q - 1) // a
    if not n - (a + 1) * m <= k <= n - 1:
        raise ConditionViolated(f"k={k} outside [{n - (a + 1) * m}, {n - 1}]")
    omega = F.tables.primitive
    # the order-n subgroup
    w = sorted(int(F.pow(omega, a * j)) for j in range(n))
    # prefer multipliers that also put the next moment row inside the code,
    # which is what makes the bordered Gram matrix rank one
    try:
        return hermitian_dual_containing_spec(F, w, k, next_row_in_code=True)
    except NoWitness:
        return hermitian_dual_containing_spec(F, w, k)


@dataclass
class GrsHullFamily:
    q: int
    r: int
    n: int
    with_extra_point: bool
    gamma: tuple[int, ...]
    w: tuple[int, ...]
    alpha: int | None
    rows: list[dict] = field(default_factory=list)


def predicted_step(q: int, k: int) -> tuple[str, int]:
    """Case label and hull increment h(k) - h(k-1) from the closed-form recursion."""
    i = -(-k // (q - 1))
    if k == (i - 1) * (q - 1) + 1:
        return "case1", 0
    if (i - 1) * (q - 1) + 1 < k <= q * (i - 1) + i + 1:
        return "case2", -1
    return "case3", 1


def corollary_hull(q: int, k: int) -> int | None:
    """Hull dimension given by the three corollary formulas, where they apply."""
    if 1 <= k < q - 1:
        return k - 1
    if q - 1 <= k < 2 * (q - 1):
        return k - 2
    if k == 2 * (q - 1):
        return k - 3
    return None


def family_points(q: int, r: int, with_extra_point: bool) -> tuple[FieldSpec, list[int], list[int], int | None]:
    if q <= 2:
        raise InvalidR(f"needs q > 2, got q={q}")
    if not 1 <= r <= q + 1 or math.gcd(r, q) != 1:
        raise InvalidR(f"r={r} must satisfy 1 <= r <= {q + 1} and gcd(r, q) = 1")
    F = gf(q * q)
    w2 = F.tables.primitive
    omega = int(F.pow(w2, q + 1))
    w = [int(F.mul(F.pow(w2, t), F.pow(omega, m))) for t in range(r) for m in range(q - 1)]
    gamma = [1] * len(w)
    alpha = None
    if with_extra_point:
        gg = int(F.sum(np.ones(len(w), dtype=np.int64)))
        alpha = least_alpha(F, gg, "hermitian")
        w = [0] + w
        gamma = [alpha] + gamma
    return F, gamma, w, alpha


def grs_hull_family(
    q: int, r: int, with_extra_point: bool = False, budget: int | None = None
) -> ConstructionReport:
    """Hermitian hull dimensions of GRS_k(gamma, w) for k = 0..n, with the derived EAQECCs."""
    F, gamma, w, alpha = family_points(q, r, with_extra_point)
    n = len(w)
    fam = GrsHullFamily(q, r, n, with_extra_point, tuple(gamma), tuple(w), alpha)
    rep = ConstructionReport(
        "grs-hull",
        {"q": q, "r": r, "extra_point": with_extra_point},
        {"q": q, "r": r, "extra_point": with_extra_point},
        witnesses={"gamma": gamma, "w": w, "alpha": alpha},
    )
    prev = None
    for k in range(n + 1):
        spec = GrsSpec(F, k, gamma, w)
        C = grs_code(spec)
        h_int = intersect_rowspaces(C.gen, C.hermitian_par).rows if k else 0
        h_rank = k - gram_rank(C.gen, "hermitian") if k else 0
        h = hull_dim(C, "hermitian")
        primary, dual = eaqecc_from_hull(C, "hermitian", budget)
        row = {
            "k": k,
            "hull_intersection": h_int,
            "hull_rank_identity": h_rank,
            "primary": primary.to_json(),
            "dual": dual.to_json(),
        }
        if k:
            case, step = predicted_step(q, k)
            row.update(
                {"delta": h - prev, "case": case, "predicted_delta": step, "prediction_match": h - prev == step}
            )
        cor = corollary_hull(q, k)
        if cor is not None:
            row.update({"corollary_hull": cor, "corollary_match": cor == h})
        fam.rows.append(row)
        prev = h
    # the recursion and the corollaries are advisory; only part (i) is a claim
    rep.claim("k=0.hull", 0, fam.rows[0]["hull_intersection"])
    rep.extra["family"] = {"n": n, "rows": fam.rows}
    rep.checks["n"] = n
    return rep
