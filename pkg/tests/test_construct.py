from __future__ import annotations

import json

import numpy as np
import pytest

from eaforge.codes import code_from_generator, hull_dim, is_lcd
from eaforge.construct import NAMES, build, replay
from eaforge.construct.extend import admissible_single, extend_multi, extend_single
from eaforge.construct.grs_family import (
    corollary_hull,
    family_points,
    grs_hull_family,
    grs_mds_extend,
    predicted_step,
    table_instance,
)
from eaforge.construct.lcd import cyclic_mds_lcd, find_square_witnesses, lcd_maximal, lcd_s_expand
from eaforge.construct.report import KNOWN_DISCREPANCIES
from eaforge.cyclic import rs_code
from eaforge.errors import (
    ClaimMismatch,
    CongruenceMismatch,
    ConditionViolated,
    InvalidR,
    NotDualContaining,
    NotLcd,
    ParityNotSupported,
    TooManyEbitsRequested,
    UnknownConstruction,
)
from eaforge.field import gf
from eaforge.grs import GrsSpec, grs_code
from eaforge.linalg import MatGF, gram_rank

import oracles


def tup(p) -> tuple:
    return (p.n, p.k, p.d, p.c)


# -- parity-check extensions -------------------------------------------------------

def test_single_hamming_c1(hamming):
    rep = extend_single(hamming, 1)
    assert tup(rep.eaqecc) == (8, 1, 3, 1)
    assert rep.failures() == []
    assert rep.witnesses["x"] == [0, 0, 0]


def test_single_hamming_c3_rank_is_two(hamming):
    # a Gram rank of 3 is impossible here: H H^t = 0 caps the Gram rank at 2
    rep = extend_single(hamming, 3)
    Hp = MatGF(gf(2), rep.matrices["bordered_parity"])
    assert gram_rank(Hp) == 2
    assert tup(rep.eaqecc) == (8, 2, 3, 2)
    assert {c.name for c in rep.failures()} == {"gram_rank", "k", "c"}
    with pytest.raises(ClaimMismatch):
        rep.enforce("strict")
    assert rep.enforce("audit") is rep


def test_single_q2_even_c_rejected(hamming):
    with pytest.raises(ConditionViolated):
        extend_single(hamming, 2)


def test_admissible_single():
    assert admissible_single(2, 3) and not admissible_single(2, 2)
    assert admissible_single(3, 2) and not admissible_single(3, 3)
    assert admissible_single(4, 2)


def test_hermitian_single(gf9_parity_code):
    for c in (1, 2):
        rep = extend_single(gf9_parity_code, c, "hermitian")
        assert rep.eaqecc.c == c and rep.eaqecc.n == 4 and rep.eaqecc.q == 3
        assert rep.eaqecc.d in (2, 3)
        assert rep.failures() == []
    with pytest.raises(TooManyEbitsRequested):
        extend_single(gf9_parity_code, 3, "hermitian")


def test_hermitian_single_rejects_gf4():
    F = gf(4)
    C = code_from_generator(F, MatGF(F, [[1, 2]]))
    with pytest.raises(ConditionViolated):
        extend_single(C, 1, "hermitian")


def test_hermitian_multi(gf9_parity_code):
    rep = extend_multi(gf9_parity_code, 1, "hermitian")
    assert rep.eaqecc.c == 1 and rep.eaqecc.n == 4 and rep.failures() == []
    rep0 = extend_multi(gf9_parity_code, 0, "hermitian")
    assert tup(rep0.eaqecc) == (3, 1, 2, 0)
    with pytest.raises(TooManyEbitsRequested):
        extend_multi(gf9_parity_code, 2, "hermitian")


def test_euclidean_multi_rs():
    _, C = rs_code(gf(5), 2)  # [4,3,2], contains its dual
    rep = extend_multi(C, 1)
    assert (rep.eaqecc.n, rep.eaqecc.k, rep.eaqecc.c) == (5, 2, 1)
    assert rep.eaqecc.d in (2, 3)
    assert rep.failures() == []
    assert gram_rank(MatGF(gf(5), rep.matrices["bordered_parity"])) == 1


def test_euclidean_multi_small_q(hamming):
    with pytest.raises(ConditionViolated):
        extend_multi(hamming, 1)


def test_multi_needs_dual_containing(repetition):
    F = gf(5)
    C = code_from_generator(F, MatGF(F, [[1, 1, 1]]))
    with pytest.raises(NotDualContaining):
        extend_multi(C, 0)


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9])
def test_extensions_over_rs_family(q):
    """Every dual-containing RS code and every admissible c matches its claims."""
    F = gf(q)
    for r in range(1, q):
        _, C = rs_code(F, r)
        if C.k == C.n or hull_dim(C) != C.n - C.k:
            continue
        ell = 2 * C.k - C.n
        for c in range(0, ell + 1):
            rep = extend_multi(C, c)
            assert rep.failures() == [], (q, r, c)
        for c in range(1, C.n - C.k + 2):
            if admissible_single(q, c):
                rep = extend_single(C, c)
                assert rep.eaqecc.d in (C.distance(), C.distance() + 1)


def test_output_is_hermitian_kernel(gf9_parity_code):
    from eaforge.codes import hermitian_dual
    from eaforge.linalg import row_basis

    rep = extend_single(gf9_parity_code, 2, "hermitian")
    Hp = MatGF(gf(9), rep.matrices["bordered_parity"])
    assert hermitian_dual(rep.output_code).gen == row_basis(Hp)


# -- GRS ------------------------------------------------------------------------------

def test_table_instance_q3():
    spec = table_instance(3, 1, 1, 6)
    C = grs_code(spec)
    assert (C.n, C.k, C.distance()) == (8, 6, 3)
    assert hull_dim(C, "hermitian") == 2


def test_grs_mds_q3_k6():
    rep = grs_mds_extend(table_instance(3, 1, 1, 6))
    assert rep.output_code.distance() == 4
    assert tup(rep.eaqecc) == (9, 5, 4, 2)
    assert rep.eaqecc.mds and rep.eaqecc_dual.mds
    # no length-8 instance puts the next moment row in the code
    assert rep.witnesses["x_in_code"] is False


def test_grs_mds_q3_k7_meets_claims():
    rep = grs_mds_extend(table_instance(3, 1, 1, 7))
    assert rep.witnesses["x_in_code"] is True
    assert tup(rep.eaqecc) == (9, 6, 3, 1)
    assert rep.failures() == []
    # only the whitelisted dual ebit count disagrees
    bad = [c.name for c in rep.claims if not c.match]
    assert bad == ["dual.c"]
    assert ("grs-mds", "dual.c") in KNOWN_DISCREPANCIES


def test_grs_mds_rejects_non_dual_containing():
    F = gf(9)
    with pytest.raises(NotDualContaining):
        grs_mds_extend(GrsSpec(F, 4, (1,) * 8, tuple(range(1, 9))))


def test_grs_hull_q3_r2():
    rep = grs_hull_family(3, 2)
    rows = rep.extra["family"]["rows"]
    assert rep.extra["family"]["n"] == 4
    assert [r["hull_intersection"] for r in rows] == [0, 0, 1, 1, 0]
    assert all(r["hull_intersection"] == r["hull_rank_identity"] for r in rows)
    assert rep.failures() == []


def test_grs_hull_q4_r5_sequence():
    rows = grs_hull_family(4, 5).extra["family"]["rows"]
    assert [r["hull_intersection"] for r in rows] == [0, 0, 1, 2, 2, 3, 4, 4, 3, 4, 4, 3, 2, 2, 1, 0]


def test_family_points_validation():
    with pytest.raises(InvalidR):
        family_points(3, 3, False)
    with pytest.raises(InvalidR):
        family_points(4, 6, False)
    F, gamma, w, alpha = family_points(3, 2, True)
    assert w[0] == 0 and alpha is not None and len(w) == 5


def test_predicted_step_and_corollaries():
    assert predicted_step(3, 1) == ("case1", 0)
    assert corollary_hull(4, 1) == 0
    assert corollary_hull(4, 3) == 1
    assert corollary_hull(4, 6) == 3
    assert corollary_hull(4, 7) is None


# -- LCD --------------------------------------------------------------------------------

def test_lcd_maximal(repetition, hamming):
    a, b = lcd_maximal(repetition)
    assert tup(a) == (3, 1, 3, 2) and tup(b) == (3, 2, 2, 1)
    with pytest.raises(NotLcd):
        lcd_maximal(hamming)


@pytest.mark.parametrize(("q", "k", "expected"), [(4, 2, (5, 2, 4, 3)), (5, 3, (6, 3, 4, 3)), (4, 1, (5, 1, 5, 4))])
def test_cyclic_mds_lcd_examples(q, k, expected):
    rep = cyclic_mds_lcd(q, k)
    assert tup(rep.eaqecc) == expected
    assert rep.eaqecc.mds and rep.eaqecc.maximal
    assert rep.failures() == []


def test_cyclic_mds_lcd_parity():
    with pytest.raises(ParityNotSupported):
        cyclic_mds_lcd(5, 2)


@pytest.mark.parametrize(
    ("q", "kind", "expected"),
    [(5, "neg_one_square", (2,)), (3, "two_square", (1, 1)), (4, "four_square", (0, 0, 0, 1))],
)
def test_square_witnesses(q, kind, expected):
    assert find_square_witnesses(gf(q), kind) == expected


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13])
def test_four_square_exhaustive(q):
    F = gf(q)
    wit = find_square_witnesses(F, "four_square")
    R = oracles.ref_field(F)
    acc = 1
    for a in wit:
        acc = R.add(acc, R.mul(a, a))
    assert acc == 0


def test_square_witness_congruence():
    with pytest.raises(CongruenceMismatch):
        find_square_witnesses(gf(7), "neg_one_square")
    with pytest.raises(CongruenceMismatch):
        find_square_witnesses(gf(5), "two_square")


def test_lcd_expand_s2(hamming):
    rep = lcd_s_expand(hamming, 2)
    assert tup(rep.eaqecc) == (10, 4, 3, 6)
    assert rep.checks["gram_identity"] and rep.failures() == []


@pytest.mark.parametrize("s", [3, 4])
def test_lcd_expand_generator_is_one_block_short(s):
    """(I A aA) and (I A aA bA) have one A-block fewer than the claimed length."""
    C = rs_code(gf(5), 3)[1] if s == 3 else code_from_generator(gf(3), MatGF(gf(3), [[1, 0, 1, 1], [0, 1, 1, 2]]))
    rep = lcd_s_expand(C, s)
    n, k = C.n, C.k
    assert rep.output_code.n == (s - 1) * n - (s - 2) * k
    assert rep.checks["gram_identity"] and rep.checks["gram_nonsingular"]
    assert {c.name for c in rep.failures()} == {"N", "c"}


@pytest.mark.parametrize("q", [3, 5, 7])
def test_lcd_expand_s5(q, rng):
    F = gf(q)
    G = np.hstack([np.eye(2, dtype=np.int64), rng.integers(0, q, size=(2, 3))])
    C = code_from_generator(F, MatGF(F, G))
    rep = lcd_s_expand(C, 5)
    assert rep.failures() == []
    assert rep.checks["gram_identity"]
    assert is_lcd(rep.output_code)


def test_lcd_expand_congruence(hamming):
    with pytest.raises(CongruenceMismatch):
        lcd_s_expand(hamming, 3)
    with pytest.raises(ConditionViolated):
        lcd_s_expand(hamming, 6)


# -- registry -------------------------------------------------------------------------

def test_unknown_construction():
    with pytest.raises(UnknownConstruction):
        build("nope")


def test_missing_parameter(hamming):
    with pytest.raises(ConditionViolated):
        build("extend-e-single", code=hamming)


def test_names_cover_registry():
    assert len(NAMES) == 9


def test_replay_is_byte_stable(hamming):
    rep = build("lcd-expand", code=hamming, s=2)
    text = rep.dumps()
    assert replay(json.loads(text)).dumps() == text
    assert build("lcd-expand", code=hamming, s=2).dumps() == text
