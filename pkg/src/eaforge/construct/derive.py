"""Report wrapper for the two hull-derived EAQECCs of a single code."""

from __future__ import annotations

from ..codes import LinearCode, hull_dim
from ..eaqecc import eaqecc_from_hull
from ..linalg import Form
from .report import ConstructionReport


def derive_report(C: LinearCode, form: Form = "euclidean", budget: int | None = None) -> ConstructionReport:
    primary, dual = eaqecc_from_hull(C, form, budget)
    rep = ConstructionReport(
        f"derive-{form}",
        {"form": form},
        C.to_json(),
        output_code=C,
        eaqecc=primary,
        eaqecc_dual=dual,
        checks={"hull": hull_dim(C, form), "d": primary.d, "d_dual": dual.d},
    )
    if primary.d is not None and primary.d == C.n - C.k + 1:
        # an MDS classical code gives MDS quantum codes on both sides
        rep.claim("primary.mds", True, primary.mds)
        rep.claim("dual.mds", True, dual.mds)
    return rep
