"""Univariate polynomials over a FieldSpec, cyclotomic cosets, reciprocal test."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DivisionByZero, MixedFields, NonCoprimeLength, ZeroConstantTerm
from .field import FieldSpec


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class PolyGF:
    """Polynomial with little-endian coefficient codes; the zero polynomial has degree -1."""

    owner: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def from_roots(cls, F: FieldSpec, roots: Iterable[int]) -> PolyGF:
        """prod (x - r) for r in roots."""
        c = [1]
        for r in roots:
            nr = F.neg(int(r))
            out = [0] * (len(c) + 1)
            for i, ci in enumerate(c):
                out[i + 1] = F.add(out[i + 1], ci)
                out[i] = F.add(out[i], F.mul(ci, nr))
            c = out
        return cls(F, tuple(c))

    @classmethod
    def x_pow_minus_one(cls, F: FieldSpec, n: int) -> PolyGF:
        return cls(F, (F.neg(1),) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def _check(self, other: PolyGF) -> None:
        if other.owner != self.owner:
            raise MixedFields(f"{self.owner!r} vs {other.owner!r}")

    def __add__(self, other: PolyGF) -> PolyGF:
        self._check(other)
        F = self.owner
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return PolyGF(F, tuple(F.add(x, y) for x, y in zip(a, b)))

    def __neg__(self) -> PolyGF:
        return PolyGF(self.owner, tuple(self.owner.neg(c) for c in self.coeffs))

    def __sub__(self, other: PolyGF) -> PolyGF:
        return self + (-other)

    def __mul__(self, other: PolyGF) -> PolyGF:
        self._check(other)
        F = self.owner
        if self.is_zero() or other.is_zero():
            return PolyGF(F, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return PolyGF(F, tuple(out))

    def scale(self, c: int) -> PolyGF:
        return PolyGF(self.owner, tuple(self.owner.mul(c, x) for x in self.coeffs))

    def __divmod__(self, other: PolyGF) -> tuple[PolyGF, PolyGF]:
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        F = self.owner
        rem = list(self.coeffs)
        d = other.degree
        inv_lead = F.inv(other.lead())
        quot = [0] * max(len(rem) - d, 0)
        while len(rem) - 1 >= d and rem:
            f = F.mul(rem[-1], inv_lead)
            shift = len(rem) - 1 - d
            quot[shift] = f
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = F.sub(rem[shift + i], F.mul(f, b))
            while rem and rem[-1] == 0:
                rem.pop()
        return PolyGF(F, tuple(quot)), PolyGF(F, tuple(rem))

    def __mod__(self, other: PolyGF) -> PolyGF:
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        F = self.owner
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def monic(self) -> PolyGF:
        if self.is_zero():
            return self
        return self.scale(self.owner.inv(self.lead()))

    def reciprocal(self) -> PolyGF:
        """Normalised reciprocal g(0)^-1 x^deg g(1/x)."""
        if not self.coeffs or self.coeffs[0] == 0:
            raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
        return PolyGF(self.owner, tuple(reversed(self.coeffs))).scale(self.owner.inv(self.coeffs[0]))

    def __repr__(self) -> str:
        return f"PolyGF({self.owner!r}, {list(self.coeffs)})"


def poly_reciprocal_test(g: PolyGF) -> bool:
    """True iff g is self-reciprocal.

    The test is made on the monic normalisation of g so it does not depend on
    a nonzero scalar factor.
    """
    if g.is_zero() or g.coeffs[0] == 0:
        raise ZeroConstantTerm("self-reciprocal test needs g(0) != 0")
    h = g.monic()
    return h.reciprocal() == h


def multiplicative_order(q: int, n: int) -> int:
    """Least t >= 1 with q^t = 1 (mod n)."""
    if n == 1:
        return 1
    if math.gcd(q, n) != 1:
        raise NonCoprimeLength(f"gcd({n}, {q}) != 1")
    t, x = 1, q % n
    while x != 1:
        x = (x * q) % n
        t += 1
    return t


def cyclotomic_cosets(n: int, q: int) -> list[list[int]]:
    """q-cyclotomic cosets modulo n, each sorted, ordered by their minimum."""
    if n < 1:
        raise ValueError("length must be positive")
    if math.gcd(n, q) != 1:
        raise NonCoprimeLength(f"gcd({n}, {q}) != 1")
    seen: set[int] = set()
    out = []
    for a in range(n):
        if a in seen:
            continue
        orbit = set()
        x = a
        while x not in orbit:
            orbit.add(x)
            x = (x * q) % n
        seen |= orbit
        out.append(sorted(orbit))
    return out


def is_coset_union(T: Sequence[int], n: int, q: int) -> bool:
    s = set(T)
    return all((t * q) % n in s for t in s)
