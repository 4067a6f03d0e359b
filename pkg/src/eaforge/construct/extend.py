"""Parity-check extensions of dual-containing codes.

The multi-column variant borders the parity-check matrix H with c new
columns and c rows (alpha_i e_i | x_i), where the x_i are pairwise orthogonal
anisotropic codewords taken from a complement D of the dual inside C.  The
single-column variant adds one column and the row (alpha | x) with x holding
c-1 ones on pivot positions of H.

For the Hermitian form H generates the Hermitian dual and the output code
is the Hermitian kernel {v : H' v^dagger = 0}, whose Hermitian dual is the
row space of H'.
"""

from __future__ import annotations

import math

import numpy as np

from ..codes import LinearCode, code_from_parity, is_dual_containing
from ..eaqecc import EaqeccParams, base_alphabet, eaqecc_from_two_codes, eaqecc_hermitian
from ..errors import (
    ConditionViolated,
    NotDualContaining,
    TooManyEbitsRequested,
    WitnessSearchFailed,
)
from ..field import FieldSpec
from ..linalg import Form, MatGF, gram_rank, null_space, rank, row_basis, rref
from .report import ConstructionReport


def inner(F: FieldSpec, u: np.ndarray, v: np.ndarray, form: Form) -> int:
    w = F.conj(v) if form == "hermitian" else v
    return int(F.sum(F.mul(u, w)))


def norm(F: FieldSpec, a: int, form: Form) -> int:
    if form == "hermitian":
        return int(F.pow(a, F.base_order() + 1))
    return int(F.mul(a, a))


def dual_generator(C: LinearCode, form: Form) -> MatGF:
    return C.hermitian_par if form == "hermitian" else C.par


def kernel(H: MatGF, form: Form) -> LinearCode:
    return code_from_parity(H.field, H.conj() if form == "hermitian" else H)


def wilde(C: LinearCode, form: Form, budget: int | None) -> EaqeccParams:
    if form == "hermitian":
        return eaqecc_hermitian(C, budget)
    return eaqecc_from_two_codes(C, C, budget)


def complement_basis(sub: MatGF, whole: MatGF) -> MatGF:
    """Rows of ``whole`` that extend a basis of rowspace(sub) to one of rowspace(whole)."""
    basis = sub
    picked = []
    r = rank(basis)
    for row in whole.data:
        trial = basis.vstack(MatGF(whole.field, row[None, :]))
        if rank(trial) > r:
            basis, r = trial, r + 1
            picked.append(row)
    return MatGF(whole.field, np.array(picked, dtype=np.int64).reshape(len(picked), whole.cols))


def least_alpha(F: FieldSpec, target: int, form: Form) -> int:
    """Least nonzero a with norm(a) != -target."""
    forbidden = F.neg(target)
    for a in range(1, F.order):
        if norm(F, a, form) != forbidden:
            return a
    raise WitnessSearchFailed(f"every unit has norm {forbidden}")


def _anisotropic(F: FieldSpec, W: MatGF, form: Form) -> np.ndarray | None:
    rows = W.data
    for w in rows:
        if inner(F, w, w, form):
            return w
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            for lam in range(1, F.order):
                v = F.add(rows[a], F.mul(lam, rows[b]))
                if inner(F, v, v, form):
                    return v
    return None


def orthogonal_witnesses(D: MatGF, c: int, form: Form) -> list[np.ndarray]:
    """c pairwise orthogonal vectors of rowspace(D), each with nonzero self inner product."""
    F = D.field
    chosen: list[np.ndarray] = []
    for i in range(c):
        if chosen:
            X = MatGF(F, np.array(chosen))
            Xs = X.conj() if form == "hermitian" else X
            coeffs = null_space((D @ Xs.T).T)
            W = row_basis(coeffs @ D) if coeffs.rows else MatGF.zeros(F, 0, D.cols)
        else:
            W = D
        v = _anisotropic(F, W, form) if W.rows else None
        if v is None:
            raise WitnessSearchFailed(f"no anisotropic vector left after {i} witnesses")
        chosen.append(np.asarray(v, dtype=np.int64))
    return chosen


def _check_input(C: LinearCode, form: Form) -> int:
    q = base_alphabet(C, form)
    if not is_dual_containing(C, form):
        raise NotDualContaining(f"{C!r} does not contain its {form} dual")
    return q


def _name(kind: str, form: Form) -> str:
    return f"extend-{'h' if form == 'hermitian' else 'e'}-{kind}"


def _finish(
    rep: ConstructionReport,
    C: LinearCode,
    Hp: MatGF,
    form: Form,
    claimed: tuple[int, int, int],
    window: tuple[int, int],
    budget: int | None,
) -> ConstructionReport:
    Cp = kernel(Hp, form)
    gr = gram_rank(Hp, form)
    ea = wilde(Cp, form, budget)
    d = C.distance(budget)
    dp = Cp.distance(budget)
    n_c, k_c, c_c = claimed
    rep.output_code = Cp
    rep.matrices["bordered_parity"] = Hp.entries
    rep.eaqecc = ea
    rep.checks.update({"gram_rank": gr, "input_d": d, "output_n": Cp.n, "output_k": Cp.k, "output_d": dp})
    rep.claim("gram_rank", c_c, gr)
    rep.claim("n", n_c, ea.n)
    rep.claim("k", k_c, ea.k)
    rep.claim("c", c_c, ea.c)
    rep.claim("output.k", C.k, Cp.k)
    lo, hi = window
    rep.checks["distance_window"] = [lo, hi]
    rep.claim("distance_in_window", True, dp is not None and lo <= dp <= hi)
    return rep


def extend_multi(
    C: LinearCode, c: int, form: Form = "euclidean", budget: int | None = None
) -> ConstructionReport:
    """[[n+c, 2k-n, d'; c]] with d <= d' <= d + c."""
    q = base_alphabet(C, form)
    if form == "euclidean" and q <= 3:
        raise ConditionViolated(f"the multi-column Euclidean extension needs q > 3, got q={q}")
    if form == "hermitian" and q <= 2:
        raise ConditionViolated(f"the multi-column Hermitian extension needs q > 2, got q={q}")
    _check_input(C, form)
    F = C.field
    n, k = C.n, C.k
    ell = 2 * k - n
    if not 0 <= c <= ell:
        raise TooManyEbitsRequested(f"c={c} outside [0, {ell}]")
    H = dual_generator(C, form)
    D = complement_basis(H, C.gen)
    xs = orthogonal_witnesses(D, c, form)
    alphas = [least_alpha(F, inner(F, x, x, form), form) for x in xs]
    r = H.rows
    Hp = np.zeros((r + c, c + n), dtype=np.int64)
    Hp[:r, c:] = H.data
    for i, (a, x) in enumerate(zip(alphas, xs)):
        Hp[r + i, i] = a
        Hp[r + i, c:] = x
    rep = ConstructionReport(
        _name("multi", form),
        {"c": c, "form": form},
        C.to_json(),
        witnesses={"complement": D.entries, "x": [x.tolist() for x in xs], "alpha": alphas},
    )
    d = C.distance(budget)
    return _finish(rep, C, MatGF(F, Hp), form, (n + c, 2 * k - n, c), (d, d + c), budget)


def admissible_single(q: int, c: int) -> bool:
    if q == 2:
        return c % 2 == 1
    if q == 3:
        return c % 3 != 0
    return q >= 4


def extend_single(
    C: LinearCode, c: int, form: Form = "euclidean", budget: int | None = None
) -> ConstructionReport:
    """[[n+1, 2k-n-1+c, d'; c]] with d' in {d, d+1}."""
    q = base_alphabet(C, form)
    if form == "hermitian" and q <= 2:
        raise ConditionViolated(f"the Hermitian single extension needs q > 2, got q={q}")
    if form == "euclidean" and not admissible_single(q, c):
        raise ConditionViolated(f"(q, c) = ({q}, {c}) is not admissible")
    _check_input(C, form)
    F = C.field
    n, k = C.n, C.k
    r = n - k
    if not 1 <= c <= r + 1:
        raise TooManyEbitsRequested(f"c={c} outside [1, {r + 1}]")
    H = dual_generator(C, form)
    _, _, pivots = rref(H)
    top = np.zeros(n + 1, dtype=np.int64)
    for j in pivots[: c - 1]:
        top[1 + j] = 1
    xx = int(F.sum(np.ones(c - 1, dtype=np.int64))) if c > 1 else 0
    recipe = 1 if math.gcd(q, c) == 1 else F.tables.primitive
    recipe_ok = F.add(norm(F, recipe, form), xx) != 0
    alpha = recipe if recipe_ok else least_alpha(F, xx, form)
    top[0] = alpha
    Hp = np.zeros((r + 1, n + 1), dtype=np.int64)
    Hp[0] = top
    Hp[1:, 1:] = H.data
    rep = ConstructionReport(
        _name("single", form),
        {"c": c, "form": form},
        C.to_json(),
        witnesses={
            "alpha": alpha,
            "alpha_recipe": recipe,
            "recipe_used": bool(recipe_ok),
            "x": [1] * (c - 1) + [0] * (r - c + 1),
            "column_order": list(pivots) + [j for j in range(n) if j not in pivots],
        },
    )
    d = C.distance(budget)
    return _finish(rep, C, MatGF(F, Hp), form, (n + 1, 2 * k - n - 1 + c, c), (d, d + 1), budget)

