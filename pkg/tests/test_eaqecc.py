from __future__ import annotations

from fractions import Fraction

import pytest

from eaforge.codes import code_from_generator, code_from_parity, full_code
from eaforge.eaqecc import (
    EaqeccParams,
    check_singleton,
    classify,
    eaqecc_from_hull,
    eaqecc_from_two_codes,
    eaqecc_hermitian,
)
from eaforge.errors import LengthMismatch, NotQuadraticExtension
from eaforge.field import gf
from eaforge.linalg import MatGF


def tup(p: EaqeccParams) -> tuple:
    return (p.n, p.k, p.d, p.c)


def test_two_codes_hamming(hamming):
    assert tup(eaqecc_from_two_codes(hamming, hamming)) == (7, 1, 3, 0)


def test_two_codes_repetition(repetition):
    p = eaqecc_from_two_codes(repetition, repetition)
    assert tup(p) == (3, 1, 3, 2)
    assert p.mds


def test_two_codes_full_space(hamming):
    F = gf(2)
    p = eaqecc_from_two_codes(full_code(F, 7), hamming)
    assert (p.c, p.k, p.d) == (0, 4, 1)


def test_two_codes_length_mismatch(hamming, repetition):
    with pytest.raises(LengthMismatch):
        eaqecc_from_two_codes(hamming, repetition)


def test_hermitian_examples(gf9_parity_code):
    F4 = gf(4)
    p = eaqecc_hermitian(code_from_parity(F4, MatGF(F4, [[1, 0]])))
    assert tup(p) == (2, 1, 1, 1) and p.q == 2
    p = eaqecc_hermitian(code_from_generator(F4, MatGF(F4, [[1, 2]])))
    assert (p.k, p.c) == (0, 0) and p.degenerate
    p = eaqecc_hermitian(gf9_parity_code)
    assert tup(p) == (3, 1, 2, 0) and p.q == 3


def test_hermitian_needs_quadratic(repetition):
    with pytest.raises(NotQuadraticExtension):
        eaqecc_hermitian(repetition)


def test_hull_pair_hamming(hamming):
    a, b = eaqecc_from_hull(hamming)
    assert tup(a) == (7, 1, 3, 0)
    assert tup(b) == (7, 0, 4, 1) and b.degenerate


def test_hull_pair_repetition(repetition):
    a, b = eaqecc_from_hull(repetition)
    assert tup(a) == (3, 1, 3, 2) and a.mds
    assert tup(b) == (3, 2, 2, 1) and b.mds


def test_hull_pair_self_dual_hermitian():
    F4 = gf(4)
    a, b = eaqecc_from_hull(code_from_generator(F4, MatGF(F4, [[1, 2]])), "hermitian")
    assert (a.n, a.k, a.c) == (2, 0, 0) and a.degenerate
    assert (b.n, b.k, b.c) == (2, 0, 0)


@pytest.mark.parametrize(
    ("params", "verdict"),
    [((3, 1, 3, 2), "mds"), ((7, 1, 3, 0), "ok"), ((3, 2, 3, 0), "violated"), ((4, 2, None, 0), "ok")],
)
def test_singleton(params, verdict):
    n, k, d, c = params
    assert check_singleton(EaqeccParams(2, n, k, d, c)) == verdict


def test_rates_and_flags():
    p = EaqeccParams(4, 5, 2, 4, 3)
    assert p.rate == Fraction(2, 5) and p.net_rate == Fraction(-1, 5) and p.maximal
    p = EaqeccParams(2, 7, 1, 3, 0)
    info = classify(p)
    assert info["positive_net_rate"] and not info["maximal"]
    assert EaqeccParams(2, 5, 5, 1, 0).rate == 1
    assert str(EaqeccParams(3, 9, 5, 4, 2)) == "[[9,5,4;2]]_3"


def test_to_json_keys():
    doc = EaqeccParams(2, 3, 1, 3, 2, "two_codes").to_json()
    assert doc["flags"] == {"singleton": "mds", "maximal": True, "degenerate": False}
    assert doc["rate"] == [1, 3] and doc["net_rate"] == [-1, 3]
