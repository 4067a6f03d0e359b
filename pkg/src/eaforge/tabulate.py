"""Parameter tables for the GRS families realizable over a given field."""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Iterator

from .construct import build
from .construct.report import ConstructionReport
from .errors import BudgetExceeded, ConditionViolated, NoWitness, NotDualContaining
from .field import is_prime, prime_factors
from .verify import verify_report

COLUMNS = ("q", "n", "k", "d", "c", "mds", "maximal", "source_construction")


@dataclass(frozen=True)
class Row:
    q: int
    n: int
    k: int
    d: int | None
    c: int
    mds: bool
    maximal: bool
    source_construction: str

    def key(self) -> tuple:
        return (self.n, self.k, -1 if self.d is None else self.d, self.c)

    def as_list(self) -> list:
        d = "" if self.d is None else self.d
        return [self.q, self.n, self.k, d, self.c, str(self.mds).lower(), str(self.maximal).lower(),
                self.source_construction]


def _row(q: int, ea: dict, source: str) -> Row:
    flags = ea["flags"]
    return Row(q, ea["n"], ea["k"], ea["d"], ea["c"], flags["singleton"] == "mds", flags["maximal"], source)


def _verified(rep: ConstructionReport, budget: int | None) -> dict:
    doc = json.loads(rep.dumps())
    verify_report(doc, budget)
    return doc


def _is_prime_power(q: int) -> bool:
    ps = prime_factors(q)
    return len(ps) == 1 and is_prime(ps[0])


def hull_family_rows(q: int, budget: int | None, log=None) -> Iterator[Row]:
    for r in range(1, q + 2):
        if math.gcd(r, q) != 1:
            continue
        for extra in (False, True):
            tag = f"grs-hull(r={r}{',extra' if extra else ''})"
            try:
                doc = _verified(build("grs-hull", budget, q=q, r=r, extra_point=extra), budget)
            except BudgetExceeded as exc:
                if log:
                    log(f"skipped {tag}: {exc}")
                continue
            for row in doc["extra"]["family"]["rows"]:
                for part in ("primary", "dual"):
                    ea = row[part]
                    if ea["k"] > 0:
                        yield _row(q, ea, f"{tag}:k={row['k']}:{part}")


def grs_mds_rows(q: int, budget: int | None, log=None) -> Iterator[Row]:
    """Extensions of the length q^2-1 dual-containing GRS codes (odd q only)."""
    if q % 2 == 0:
        return
    n, m = q * q - 1, (q - 1) // 2
    for k in range(max(n - 2 * m, n // 2 + 1), n):
        tag = f"grs-mds(k={k})"
        try:
            doc = _verified(build("grs-mds", budget, q=q, k=k), budget)
        except (BudgetExceeded, NoWitness, NotDualContaining, ConditionViolated) as exc:
            if log:
                log(f"skipped {tag}: {exc}")
            continue
        for part in ("eaqecc", "eaqecc_dual"):
            if doc[part]["k"] > 0:
                yield _row(q, doc[part], f"{tag}:{'primary' if part == 'eaqecc' else 'dual'}")


def mds_grs_table(q: int, budget: int | None = None, log=None) -> list[Row]:
    if q < 3 or not _is_prime_power(q):
        raise ConditionViolated(f"q must be a prime power >= 3, got {q}")
    seen: dict[tuple, Row] = {}
    for row in [*hull_family_rows(q, budget, log), *grs_mds_rows(q, budget, log)]:
        seen.setdefault(row.key(), row)
    return sorted(seen.values(), key=Row.key)


def to_csv(rows: list[Row]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        w.writerow(r.as_list())
    return buf.getvalue()


def stderr_log(msg: str) -> None:
    print(msg, file=sys.stderr)
