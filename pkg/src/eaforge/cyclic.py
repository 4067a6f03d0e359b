"""Cyclic codes from defining sets or generator polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .codes import LinearCode, code_from_generator, zero_code
from .errors import NotCosetClosed, NotDivisor, RedundancyOutOfRange
from .field import FieldSpec, embed, field_make, restrict
from .linalg import MatGF
from .poly import PolyGF, is_coset_union, multiplicative_order


@dataclass(frozen=True)
class CyclicSpec:
    """Cyclic code data.

    ``defining_set`` lists the exponents i with g(alpha^i) = 0, where alpha is
    the canonical primitive n-th root of unity in GF(q^ext_degree).
    """

    field: FieldSpec
    n: int
    defining_set: tuple[int, ...]
    g: PolyGF
    ext_degree: int

    @property
    def k(self) -> int:
        return self.n - self.g.degree


def splitting_field(F: FieldSpec, n: int) -> tuple[FieldSpec, int]:
    """(E, alpha) with E = GF(q^t), t = ord_n(q), alpha of order n in E."""
    t = multiplicative_order(F.order, n)
    E = F if t == 1 else field_make(F.p, F.m * t)
    omega = E.tables.primitive
    return E, int(E.pow(omega, (E.order - 1) // n))


def _generator_matrix(F: FieldSpec, g: PolyGF, n: int) -> MatGF:
    k = n - g.degree
    G = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        G[i, i : i + g.degree + 1] = g.coeffs
    return MatGF(F, G)


def _code_of(F: FieldSpec, g: PolyGF, n: int) -> LinearCode:
    if g.degree == n:
        return zero_code(F, n)
    return code_from_generator(F, _generator_matrix(F, g, n))


def cyclic_code(
    F: FieldSpec, n: int, defining: Union[Iterable[int], PolyGF]
) -> tuple[CyclicSpec, LinearCode]:
    """Cyclic code of length n given a defining set T or a generator g | x^n - 1."""
    E, alpha = splitting_field(F, n)
    roots = [E.pow(alpha, i) for i in range(n)]
    if isinstance(defining, PolyGF):
        g = defining.monic()
        if g.is_zero() or not (PolyGF.x_pow_minus_one(F, n) % g).is_zero():
            raise NotDivisor(f"{defining!r} does not divide x^{n} - 1")
        gE = PolyGF(E, tuple(embed(E, F, c) for c in g.coeffs))
        T = tuple(i for i in range(n) if gE(int(roots[i])) == 0)
    else:
        T = tuple(sorted({int(t) % n for t in defining}))
        if not is_coset_union(T, n, F.order):
            raise NotCosetClosed(f"defining set {list(T)} is not a union of cyclotomic cosets")
        gE = PolyGF.from_roots(E, (int(roots[i]) for i in T))
        g = PolyGF(F, tuple(restrict(E, F, c) for c in gE.coeffs))
    t = multiplicative_order(F.order, n)
    return CyclicSpec(F, n, T, g, t), _code_of(F, g, n)


def all_cyclic_codes(F: FieldSpec, n: int) -> list[tuple[CyclicSpec, LinearCode]]:
    """Every cyclic code of length n, one per union of cyclotomic cosets."""
    from .poly import cyclotomic_cosets

    cosets = cyclotomic_cosets(n, F.order)
    out = []
    for mask in range(1 << len(cosets)):
        T = [a for j, cs in enumerate(cosets) if mask >> j & 1 for a in cs]
        out.append(cyclic_code(F, n, T))
    return out


def rs_code(F: FieldSpec, r: int) -> tuple[CyclicSpec, LinearCode]:
    """Narrow-sense RS code of length q-1 with g = (x - a)...(x - a^(r-1))."""
    n = F.order - 1
    if not 1 <= r <= n:
        raise RedundancyOutOfRange(f"r={r} outside [1, {n}]")
    return cyclic_code(F, n, range(1, r))
