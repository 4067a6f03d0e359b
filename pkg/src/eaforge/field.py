"""Exact arithmetic in GF(p^m).

Elements are encoded as integers: the little-endian base-p integer of their
polynomial-basis coefficients, so ``code = sum(c_i * p**i)``.  All vectorised
operations accept Python ints or numpy integer arrays of codes and return the
same kind of object.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from ._moduli import BUILTIN_MODULI
from .errors import (
    DivisionByZero,
    MixedFields,
    NonPrimeCharacteristic,
    NotQuadraticExtension,
    ReducibleModulus,
)

MAX_ORDER = 1 << 20
# full q*q addition/multiplication tables are kept up to this order
TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p) as little-endian coefficient lists ---------------


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    b = _trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(a) - 1 >= db:
        f = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - f * bc) % p
        _trim(a)
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ac in enumerate(a):
        if ac:
            for j, bc in enumerate(b):
                prod[i + j] = (prod[i + j] + ac * bc) % p
    return _poly_mod(prod, f, p)


def _poly_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _digits(code: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        code, r = divmod(code, p)
        out.append(r)
    return out


def _undigits(d: Sequence[int], p: int) -> int:
    code = 0
    for c in reversed(d):
        code = code * p + c
    return code


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..m//2."""
    f = _trim(list(modulus))
    m = len(f) - 1
    if m < 1:
        return False
    for deg in range(1, m // 2 + 1):
        for low in range(p**deg):
            g = _digits(low, p, deg) + [1]
            if not _poly_mod(f, g, p):
                return False
    return True


def is_primitive_poly(modulus: Sequence[int], p: int) -> bool:
    """True iff ``modulus`` is irreducible and x generates the multiplicative group."""
    f = list(modulus)
    m = len(f) - 1
    if not is_irreducible(f, p):
        return False
    order = p**m - 1
    if m == 1:
        x = (-f[0]) % p
        return all(pow(x, order // r, p) != 1 for r in prime_factors(order)) if order > 1 else x == 1
    return all(_poly_powmod([0, 1], order // r, f, p) != [1] for r in prime_factors(order))


def least_primitive_modulus(p: int, m: int) -> tuple[int, ...]:
    """Least-encoding primitive monic polynomial of degree m (generator of the shipped table)."""
    for low in range(p**m):
        cand = _digits(low, p, m) + [1]
        if cand[0] and is_primitive_poly(cand, p):
            return tuple(cand)
    raise ReducibleModulus(f"no primitive polynomial of degree {m} over GF({p})")  # pragma: no cover


def least_irreducible_modulus(p: int, m: int) -> tuple[int, ...]:
    for low in range(p**m):
        cand = _digits(low, p, m) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise ReducibleModulus(f"no irreducible polynomial of degree {m} over GF({p})")  # pragma: no cover


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    if (p, m) in BUILTIN_MODULI:
        return BUILTIN_MODULI[(p, m)]
    return least_irreducible_modulus(p, m)


@functools.lru_cache(maxsize=None)
def _validate(p: int, m: int, modulus: tuple[int, ...]) -> None:
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_ORDER:
        raise ValueError(f"field order {p}^{m} exceeds the supported maximum {MAX_ORDER}")
    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {m}, got {list(modulus)}")
    if any(not 0 <= c < p for c in modulus):
        raise ReducibleModulus(f"modulus coefficients must lie in [0, {p}), got {list(modulus)}")
    if not is_irreducible(modulus, p):
        raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")


class _Tables:
    """Lookup tables for one field; built once per FieldSpec."""

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        q = p**m
        self.q = q
        powers = np.array([p**i for i in range(m)], dtype=np.int64)
        codes = np.arange(q, dtype=np.int64)
        self.digits = (codes[:, None] // powers[None, :]) % p
        self.powers = powers
        self.neg = (((-self.digits) % p) @ powers).astype(np.int64)

        if m == 1:
            mulc = lambda a, b: (a * b) % p  # noqa: E731
        elif p == 2:
            mask = 1 << m
            red = _undigits(modulus, 2)

            def mulc(a: int, b: int) -> int:
                r = 0
                while b:
                    if b & 1:
                        r ^= a
                    b >>= 1
                    a <<= 1
                    if a & mask:
                        a ^= red
                return r
        else:
            def mulc(a: int, b: int) -> int:
                return _undigits(
                    _poly_mulmod(_digits(a, p, m), _digits(b, p, m), modulus, p) + [0] * m, p
                )

        def powc(a: int, e: int) -> int:
            r = 1
            while e:
                if e & 1:
                    r = mulc(r, a)
                a = mulc(a, a)
                e >>= 1
            return r

        order = q - 1
        factors = prime_factors(order)
        gen = 1
        for cand in range(1, q):
            if all(powc(cand, order // f) != 1 for f in factors):
                gen = cand
                break
        self.primitive = gen

        exp = np.zeros(2 * order + 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = mulc(x, gen)
        exp[order : 2 * order] = exp[:order]
        exp[2 * order] = exp[0]
        self.exp = exp
        self.log = log
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(order - log[1:]) % order]
        self.inv = inv

        self.add: np.ndarray | None = None
        self.mul: np.ndarray | None = None
        if q <= TABLE_LIMIT and m > 1:
            if p == 2:
                self.add = np.bitwise_xor.outer(codes, codes)
            else:
                s = (self.digits[:, None, :] + self.digits[None, :, :]) % p
                self.add = s @ powers
            la = log[:, None] + log[None, :]
            mul = exp[la]
            mul[0, :] = 0
            mul[:, 0] = 0
            self.mul = mul


@functools.lru_cache(maxsize=None)
def _tables(p: int, m: int, modulus: tuple[int, ...]) -> _Tables:
    return _Tables(p, m, modulus)


def _out(x, scalar: bool):
    return int(x) if scalar else x


@dataclass(frozen=True)
class FieldSpec:
    """A concrete finite field GF(p^m) with a fixed irreducible modulus."""

    p: int
    m: int
    modulus: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))
        _validate(self.p, self.m, self.modulus)

    def __repr__(self) -> str:
        return f"GF({self.order})"

    def __call__(self, code: int) -> FieldElem:
        return FieldElem(self, code)

    @property
    def order(self) -> int:
        return self.p**self.m

    q = order

    @property
    def tables(self) -> _Tables:
        return _tables(self.p, self.m, self.modulus)

    def elements(self) -> Iterator[FieldElem]:
        for c in range(self.order):
            yield FieldElem(self, c)

    # -- vectorised arithmetic on codes --------------------------------------

    def add(self, a, b):
        scalar = isinstance(a, (int, np.integer)) and isinstance(b, (int, np.integer))
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            r = (a + b) % self.p
        elif self.p == 2:
            r = a ^ b
        else:
            t = self.tables
            if t.add is not None:
                r = t.add[a, b]
            else:
                r = ((t.digits[a] + t.digits[b]) % self.p) @ t.powers
        return _out(r, scalar)

    def neg(self, a):
        scalar = isinstance(a, (int, np.integer))
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            r = (-a) % self.p
        elif self.p == 2:
            r = a
        else:
            r = self.tables.neg[a]
        return _out(r, scalar)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        scalar = isinstance(a, (int, np.integer)) and isinstance(b, (int, np.integer))
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            r = (a * b) % self.p
        else:
            t = self.tables
            if t.mul is not None:
                r = t.mul[a, b]
            else:
                r = np.where((a == 0) | (b == 0), 0, t.exp[t.log[a] + t.log[b]])
        return _out(r, scalar)

    def inv(self, a):
        scalar = isinstance(a, (int, np.integer))
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return _out(self.tables.inv[a], scalar)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        scalar = isinstance(a, (int, np.integer))
        a = np.asarray(a, dtype=np.int64)
        t = self.tables
        order = self.order - 1
        if e == 0:
            r = np.ones_like(a)
        elif e < 0:
            if np.any(a == 0):
                raise DivisionByZero("negative power of zero")
            r = t.exp[(t.log[a] * ((-e) % order) * (order - 1)) % order]
        else:
            r = np.where(a == 0, 0, t.exp[(t.log[a] * (e % order)) % order])
        return _out(r, scalar)

    def sum(self, a, axis=None):
        """Field sum of an array of codes along ``axis``."""
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis) if axis is not None else int(
                np.bitwise_xor.reduce(a.ravel()) if a.size else 0
            )
        if self.m == 1:
            r = a.sum(axis=axis) % self.p
        else:
            t = self.tables
            d = t.digits[a]
            if axis is None:
                r = (d.reshape(-1, self.m).sum(axis=0) % self.p) @ t.powers
            else:
                ax = axis if axis >= 0 else a.ndim + axis
                r = (d.sum(axis=ax) % self.p) @ t.powers
        return int(r) if axis is None else r

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if A.shape[1] == 0:
            return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        if self.m == 1:
            return (A @ B) % self.p
        return self.sum(self.mul(A[:, :, None], B[None, :, :]), axis=1)

    # -- structure -------------------------------------------------------------

    def base_order(self, q: int | None = None) -> int:
        """Order of the subfield GF(q) when this field is GF(q^2)."""
        if self.m % 2:
            raise NotQuadraticExtension(f"{self!r} is not a quadratic extension")
        base = self.p ** (self.m // 2)
        if q is not None and q != base:
            raise NotQuadraticExtension(f"{self!r} is not GF({q}^2)")
        return base

    def conj(self, a, q: int | None = None):
        """Frobenius conjugation a -> a^q for GF(q^2)."""
        return self.pow(a, self.base_order(q))

    def is_in_subfield(self, a, sub_order: int):
        return np.asarray(self.pow(a, sub_order)) == np.asarray(a)

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, obj: dict) -> FieldSpec:
        """Inverse of :meth:`to_json`; a missing modulus means the built-in default."""
        mod = obj.get("modulus")
        return field_make(int(obj["p"]), int(obj["m"]), None if mod is None else tuple(mod))


@dataclass(frozen=True)
class FieldElem:
    owner: FieldSpec
    code: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "code", int(self.code))
        if not 0 <= self.code < self.owner.order:
            raise ValueError(f"code {self.code} out of range for {self.owner!r}")

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.owner != self.owner:
                raise MixedFields(f"{self.owner!r} vs {other.owner!r}")
            return other.code
        if isinstance(other, int):
            # integers act through the prime subfield
            return other % self.owner.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return FieldElem(self.owner, self.owner.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return FieldElem(self.owner, self.owner.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        return FieldElem(self.owner, self.owner.sub(o, self.code))

    def __mul__(self, other):
        o = self._other(other)
        return FieldElem(self.owner, self.owner.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return FieldElem(self.owner, self.owner.div(self.code, o))

    def __neg__(self):
        return FieldElem(self.owner, self.owner.neg(self.code))

    def __pow__(self, e: int):
        return FieldElem(self.owner, self.owner.pow(self.code, e))

    def inverse(self) -> FieldElem:
        return FieldElem(self.owner, self.owner.inv(self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        return f"{self.owner!r}({self.code})"


def field_make(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build a validated GF(p^m); the built-in modulus is used when none is given."""
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
    if modulus is None:
        if m < 1 or p**m > MAX_ORDER:
            raise ValueError(f"unsupported field GF({p}^{m})")
        modulus = default_modulus(p, m)
    return FieldSpec(p, m, tuple(modulus))


def gf(q: int) -> FieldSpec:
    """GF(q) with the built-in modulus."""
    for p in prime_factors(q)[:1]:
        m = round(math.log(q, p))
        if p**m == q:
            return field_make(p, m)
    raise NonPrimeCharacteristic(f"{q} is not a prime power")


def primitive_element(F: FieldSpec) -> FieldElem:
    """Least-encoding element of multiplicative order q-1."""
    return FieldElem(F, F.tables.primitive)


def element_order(F: FieldSpec, a: int) -> int:
    if a == 0:
        raise DivisionByZero("zero has no multiplicative order")
    order = F.order - 1
    return order // math.gcd(order, int(F.tables.log[a]))


def conjugate(a: FieldElem, base_order: int | None = None) -> FieldElem:
    return FieldElem(a.owner, a.owner.conj(a.code, base_order))


def power_sum(F: FieldSpec, i: int) -> FieldElem:
    """Sum of a^i over the nonzero elements of F."""
    units = np.arange(1, F.order, dtype=np.int64)
    return FieldElem(F, F.sum(F.pow(units, i)))


@functools.lru_cache(maxsize=None)
def _embedding(big: FieldSpec, small: FieldSpec) -> tuple[np.ndarray, dict[int, int]]:
    if big.p != small.p or big.m % small.m:
        raise ValueError(f"{small!r} is not a subfield of {big!r}")
    if small.m == 1:
        fwd = np.arange(small.order, dtype=np.int64)
    else:
        # least-encoding root of the small modulus inside the big field
        xs = np.arange(big.order, dtype=np.int64)
        val = np.zeros_like(xs)
        for c in reversed(small.modulus):
            val = big.add(big.mul(val, xs), c)
        theta = int(np.flatnonzero(val == 0)[0])
        basis = [big.pow(theta, i) for i in range(small.m)]
        digits = small.tables.digits
        fwd = np.zeros(small.order, dtype=np.int64)
        for code in range(small.order):
            acc = 0
            for i in range(small.m):
                acc = big.add(acc, big.mul(int(digits[code, i]), basis[i]))
            fwd[code] = acc
    back = {int(b): s for s, b in enumerate(fwd)}
    return fwd, back


def embed(big: FieldSpec, small: FieldSpec, a):
    """Image of codes of ``small`` in ``big`` under the canonical embedding."""
    fwd, _ = _embedding(big, small)
    scalar = isinstance(a, (int, np.integer))
    return _out(fwd[np.asarray(a, dtype=np.int64)], scalar)


def restrict(big: FieldSpec, small: FieldSpec, a):
    """Inverse of :func:`embed`; raises ValueError for elements outside the subfield."""
    _, back = _embedding(big, small)
    if isinstance(a, (int, np.integer)):
        try:
            return back[int(a)]
        except KeyError:
            raise ValueError(f"{int(a)} is not in the image of {small!r}") from None
    arr = np.asarray(a, dtype=np.int64)
    try:
        return np.vectorize(lambda x: back[int(x)], otypes=[np.int64])(arr) if arr.size else arr
    except KeyError as exc:
        raise ValueError(f"element outside the image of {small!r}") from exc
