"""Slow, independent reference implementations used to pin library results.

Nothing here imports the package.  Field elements use the same integer
encoding (little-endian base-p coefficient digits) so results can be
compared directly, but the arithmetic is plain polynomial arithmetic mod
the modulus rather than log tables.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


class RefField:
    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p, self.m, self.modulus = p, m, tuple(modulus)
        self.q = p**m

    def digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.m)]

    def undigits(self, d) -> int:
        return sum(int(c) * self.p**i for i, c in enumerate(d))

    def add(self, a: int, b: int) -> int:
        return self.undigits([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        return self.undigits([(-x) % self.p for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        return _mul(self.p, self.m, self.modulus, a, b)

    def pow(self, a: int, e: int) -> int:
        out = 1
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def inv(self, a: int) -> int:
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise ZeroDivisionError

    def dot(self, u, v) -> int:
        acc = 0
        for x, y in zip(u, v):
            acc = self.add(acc, self.mul(int(x), int(y)))
        return acc

    def conj(self, a: int, q: int) -> int:
        return self.pow(a, q)


@lru_cache(maxsize=None)
def _mul(p: int, m: int, modulus: tuple[int, ...], a: int, b: int) -> int:
    da = [(a // p**i) % p for i in range(m)]
    db = [(b // p**i) % p for i in range(m)]
    prod = [0] * (2 * m)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    # reduce by the monic modulus
    for deg in range(2 * m - 1, m - 1, -1):
        c = prod[deg]
        if c:
            for i, mc in enumerate(modulus):
                prod[deg - m + i] = (prod[deg - m + i] - c * mc) % p
    return sum(prod[i] * p**i for i in range(m))


def ref_field(F) -> RefField:
    return RefField(F.p, F.m, tuple(F.modulus))


def span(R: RefField, rows) -> set[tuple[int, ...]]:
    """Every codeword of the row space, by brute force."""
    rows = [list(map(int, r)) for r in rows]
    if not rows:
        return set()
    n = len(rows[0])
    out = set()
    for coeffs in itertools.product(range(R.q), repeat=len(rows)):
        v = [0] * n
        for a, r in zip(coeffs, rows):
            if a:
                v = [R.add(x, R.mul(a, y)) for x, y in zip(v, r)]
        out.add(tuple(v))
    return out


def rank(R: RefField, rows) -> int:
    """Rank as log_q of the span size."""
    size = len(span(R, rows)) if len(rows) else 1
    k = 0
    while R.q**k < size:
        k += 1
    return k


def min_weight(words) -> int | None:
    ws = [sum(1 for x in w if x) for w in words if any(w)]
    return min(ws) if ws else None


def dual_words(R: RefField, words, n: int, hermitian_q: int | None = None) -> set[tuple[int, ...]]:
    """All vectors of F^n orthogonal to every word (Hermitian when hermitian_q is set)."""
    words = list(words)
    out = set()
    for v in itertools.product(range(R.q), repeat=n):
        vv = [R.conj(x, hermitian_q) for x in v] if hermitian_q else list(v)
        if all(R.dot(w, vv) == 0 for w in words):
            out.add(tuple(v))
    return out


def hull_by_enumeration(R: RefField, rows, n: int, hermitian_q: int | None = None) -> int:
    C = span(R, rows) if len(rows) else {tuple([0] * n)}
    D = dual_words(R, C, n, hermitian_q)
    inter = C & D
    k = 0
    while R.q**k < len(inter):
        k += 1
    return k


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))
