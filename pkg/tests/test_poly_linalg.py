from __future__ import annotations

import numpy as np
import pytest

from eaforge.errors import DimensionMismatch, NonCoprimeLength, ZeroConstantTerm
from eaforge.field import gf
from eaforge.linalg import (
    MatGF,
    batch_rank,
    gram_rank,
    in_rowspace,
    intersect_rowspaces,
    is_nonsingular,
    mat_dagger,
    null_space,
    rank,
    row_basis,
    rref,
)
from eaforge.poly import PolyGF, cyclotomic_cosets, is_coset_union, multiplicative_order, poly_reciprocal_test

import oracles
from conftest import HAMMING_H


# -- polynomials -------------------------------------------------------------

@pytest.mark.parametrize(
    ("n", "q", "cosets"),
    [(7, 2, [[0], [1, 2, 4], [3, 5, 6]]), (5, 4, [[0], [1, 4], [2, 3]]), (3, 4, [[0], [1], [2]])],
)
def test_cyclotomic_cosets(n, q, cosets):
    assert cyclotomic_cosets(n, q) == cosets


def test_cosets_need_coprime_length():
    with pytest.raises(NonCoprimeLength):
        cyclotomic_cosets(6, 3)


def test_coset_union():
    assert is_coset_union([1, 2, 4], 7, 2)
    assert not is_coset_union([1, 2], 7, 2)


def test_multiplicative_order():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(4, 5) == 2


def test_reciprocal_examples():
    F2, F3 = gf(2), gf(3)
    assert poly_reciprocal_test(PolyGF(F2, (1, 1, 1)))
    assert poly_reciprocal_test(PolyGF(F3, (1, 1)))
    # 2^{-1} x (1/x + 2) = x + 2 over GF(3), so x + 2 is self-reciprocal
    assert poly_reciprocal_test(PolyGF(F3, (2, 1)))
    assert not poly_reciprocal_test(PolyGF(F2, (1, 1, 0, 1)))
    with pytest.raises(ZeroConstantTerm):
        poly_reciprocal_test(PolyGF(F2, (0, 1)))


def test_reciprocal_pair_in_gf16():
    E = gf(16)
    a = E.pow(E.tables.primitive, 3)  # order 5
    g = PolyGF.from_roots(E, [a, E.inv(a)])
    assert all(E.is_in_subfield(c, 4) for c in g.coeffs)
    assert poly_reciprocal_test(g)


def test_poly_divmod_roundtrip():
    F = gf(5)
    a = PolyGF(F, (1, 2, 3, 4, 1))
    b = PolyGF(F, (2, 0, 1))
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert rem.degree < b.degree


def test_x_pow_minus_one_factor():
    F = gf(2)
    g = PolyGF(F, (1, 1, 0, 1))
    assert (PolyGF.x_pow_minus_one(F, 7) % g).is_zero()


# -- matrices ----------------------------------------------------------------

def test_rank_examples():
    assert rref(MatGF(gf(2), [[1, 1], [1, 1]]))[1:] == (1, [0])
    assert rank(MatGF.identity(gf(5), 3)) == 3
    assert rank(MatGF(gf(3), [[1, 2], [2, 1]])) == 1


def test_null_space_examples():
    F = gf(2)
    assert null_space(MatGF(F, [[1, 1, 1]])).entries == [[1, 0, 1], [0, 1, 1]]
    assert null_space(MatGF.identity(F, 4)).rows == 0
    N = null_space(MatGF(F, HAMMING_H))
    assert N.rows == 4
    assert not np.any((MatGF(F, HAMMING_H) @ N.T).data)


def test_intersection_examples():
    F = gf(2)
    out = intersect_rowspaces(MatGF(F, [[1, 0], [0, 1]]), MatGF(F, [[1, 1]]))
    assert out.entries == [[1, 1]]
    H = MatGF(F, HAMMING_H)
    G = null_space(H)
    assert intersect_rowspaces(G, H) == row_basis(H)


def test_dagger():
    F = gf(4)
    assert mat_dagger(MatGF(F, [[2]])).entries == [[3]]
    M = MatGF(F, [[1, 2, 3], [0, 1, 2]])
    assert mat_dagger(M).shape == (3, 2)
    assert mat_dagger(mat_dagger(M)) == M


def test_gram_rank_examples():
    assert gram_rank(MatGF(gf(2), HAMMING_H)) == 0
    assert gram_rank(MatGF(gf(2), [[1, 1, 1]])) == 1
    assert gram_rank(MatGF(gf(4), [[1, 0]]), "hermitian") == 1


def test_nonsingular_examples():
    assert is_nonsingular(MatGF.identity(gf(3), 4))
    assert not is_nonsingular(MatGF.zeros(gf(2), 2, 2))
    assert not is_nonsingular(MatGF(gf(2), [[1, 1], [1, 1]]))


def test_in_rowspace():
    F = gf(3)
    M = MatGF(F, [[1, 0, 2], [0, 1, 1]])
    assert in_rowspace(M, [1, 1, 0])
    assert not in_rowspace(M, [0, 0, 1])


def test_shape_mismatch():
    F = gf(2)
    with pytest.raises(DimensionMismatch):
        MatGF(F, [[1, 0]]) @ MatGF(F, [[1, 0]])


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_rank_matches_span_oracle(q, rng):
    F = gf(q)
    R = oracles.ref_field(F)
    for _ in range(15):
        rows, cols = rng.integers(1, 4), rng.integers(1, 5)
        M = MatGF(F, rng.integers(0, q, size=(rows, cols)))
        assert rank(M) == oracles.rank(R, M.data)


@pytest.mark.parametrize("q", [2, 3, 4, 7, 9])
def test_batch_rank_matches_rank(q, rng):
    F = gf(q)
    A = rng.integers(0, q, size=(200, 4, 5))
    A[::3, 2] = A[::3, 0]  # force some rank drops
    expected = [rank(MatGF(F, a)) for a in A]
    assert batch_rank(F, A).tolist() == expected


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_rref_is_canonical(q, rng):
    F = gf(q)
    for _ in range(20):
        M = MatGF(F, rng.integers(0, q, size=(3, 6)))
        R, r, piv = rref(M)
        # a random invertible row mix has the same reduced form
        T = MatGF(F, rng.integers(0, q, size=(3, 3)))
        if rank(T) == 3:
            assert rref(T @ M)[0] == R
        for i, j in enumerate(piv):
            assert R.data[i, j] == 1
            assert not np.any(np.delete(R.data[:, j], i))
