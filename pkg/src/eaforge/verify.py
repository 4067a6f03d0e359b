"""Independent re-checking of stored construction reports.

A report passes when (a) its stored matrices reproduce the stored output
code, Gram data and EAQECC parameters, and (b) replaying the construction
from its input and parameters yields the identical JSON document.
"""

from __future__ import annotations

from typing import Any

from .codes import LinearCode, code_from_json
from .construct import replay
from .construct.extend import kernel
from .construct.report import _plain
from .eaqecc import EaqeccParams, eaqecc_from_hull, eaqecc_from_two_codes, eaqecc_hermitian
from .errors import BudgetExceeded, ForgeError, ParseError, VerificationFailed
from .linalg import MatGF, gram, gram_rank, is_nonsingular

_REQUIRED = ("construction", "params", "input", "witnesses", "output_code", "matrices", "eaqecc", "checks", "claims")


def first_difference(a: Any, b: Any, path: str = "") -> str | None:
    """Dotted path of the first place where two JSON values differ, or None."""
    if isinstance(a, dict) and isinstance(b, dict):
        for key in sorted(set(a) | set(b)):
            sub = f"{path}.{key}" if path else str(key)
            if key not in a or key not in b:
                return sub
            found = first_difference(a[key], b[key], sub)
            if found:
                return found
        return None
    if isinstance(a, list) and isinstance(b, list):
        if len(a) != len(b):
            return f"{path}.length" if path else "length"
        for i, (x, y) in enumerate(zip(a, b)):
            found = first_difference(x, y, f"{path}[{i}]")
            if found:
                return found
        return None
    if type(a) is not type(b) or a != b:
        return path or "<root>"
    return None


def derive_again(C: LinearCode, tag: str, budget: int | None = None) -> EaqeccParams:
    if tag == "two_codes":
        return eaqecc_from_two_codes(C, C, budget)
    if tag == "hermitian":
        return eaqecc_hermitian(C, budget)
    for which, idx in (("hull_primary_", 0), ("hull_dual_", 1)):
        if tag.startswith(which):
            return eaqecc_from_hull(C, tag[len(which):], budget)[idx]  # type: ignore[arg-type]
    raise ParseError(f"unknown derivation tag {tag!r}")


def _compare_params(stored: dict, computed: EaqeccParams, prefix: str) -> None:
    path = first_difference(stored, _plain(computed.to_json()), prefix)
    if path:
        raise VerificationFailed(path, "stored value does not match recomputation")


def _matrix(rep: dict, key: str, F) -> MatGF:
    try:
        return MatGF(F, rep["matrices"][key])
    except (TypeError, ValueError) as exc:
        raise ParseError(f"matrices.{key}: {exc}") from exc


def check_matrices(rep: dict, budget: int | None = None) -> LinearCode | None:
    """Recompute everything that follows from the stored matrices alone."""
    stored = rep["output_code"]
    if stored is None:
        return None
    C = code_from_json(stored)
    if C.gen.entries != stored["matrix"]:
        raise VerificationFailed("output_code.matrix", "generator is not in canonical reduced form")
    F = C.field
    checks = rep["checks"]
    mats = rep["matrices"]
    if "bordered_parity" in mats:
        form = rep["params"].get("form", "hermitian")
        Hp = _matrix(rep, "bordered_parity", F)
        if "gram_rank" in checks and gram_rank(Hp, form) != checks["gram_rank"]:
            raise VerificationFailed("checks.gram_rank", "Gram rank of the stored parity matrix differs")
        if kernel(Hp, form) != C:
            raise VerificationFailed("output_code", "stored parity matrix does not define the stored code")
    if "generator" in mats:
        Gp = _matrix(rep, "generator", F)
        G = gram(Gp)
        if is_nonsingular(G) != checks.get("gram_nonsingular"):
            raise VerificationFailed("checks.gram_nonsingular", "Gram matrix of the stored generator")
        if (G == MatGF.identity(F, Gp.rows)) != checks.get("gram_identity"):
            raise VerificationFailed("checks.gram_identity", "Gram matrix of the stored generator")
        if LinearCode(F, Gp) != C:
            raise VerificationFailed("output_code", "stored generator does not span the stored code")
    for key in ("eaqecc", "eaqecc_dual"):
        if rep.get(key) is not None:
            tag = rep[key].get("derivation", "")
            _compare_params(rep[key], derive_again(C, tag, budget), key)
    return C


def verify_report(rep: Any, budget: int | None = None) -> dict:
    """Raise :class:`VerificationFailed` naming the first divergent field, else return a summary."""
    if not isinstance(rep, dict) or any(k not in rep for k in _REQUIRED):
        raise ParseError("not a construction report")
    try:
        check_matrices(rep, budget)
    except (VerificationFailed, BudgetExceeded):
        raise
    except ForgeError as exc:
        # stored data no longer parses; let the replay diff say where it diverges
        try:
            path = first_difference(rep, replay(rep, budget).to_json())
        except ForgeError:
            path = None
        raise VerificationFailed(path or "<stored>", f"stored data is invalid: {exc}") from exc
    fresh = replay(rep, budget).to_json()
    path = first_difference(rep, fresh)
    if path:
        raise VerificationFailed(path, "replaying the construction gives a different value")
    return {
        "construction": rep["construction"],
        "claims": len(rep["claims"]),
        "mismatches": sum(1 for c in rep["claims"] if not c["match"]),
    }
