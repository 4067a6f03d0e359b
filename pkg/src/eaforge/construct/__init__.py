"""Named constructions and their replay from stored reports."""

from __future__ import annotations

from typing import Any, Callable

from ..codes import LinearCode, code_from_json
from ..errors import ConditionViolated, UnknownConstruction
from ..grs import GrsSpec
from .derive import derive_report
from .extend import extend_multi, extend_single
from .grs_family import grs_hull_family, grs_mds_extend, table_instance
from .lcd import cyclic_mds_lcd, lcd_maximal_report, lcd_s_expand
from .report import KNOWN_DISCREPANCIES, Claim, ConstructionReport, dumps

NAMES = (
    "extend-e-multi",
    "extend-e-single",
    "extend-h-multi",
    "extend-h-single",
    "grs-mds",
    "grs-hull",
    "lcd-maximal",
    "cyclic-mds-lcd",
    "lcd-expand",
)


def _need(opts: dict, *keys: str) -> list[Any]:
    missing = [k for k in keys if opts.get(k) is None]
    if missing:
        raise ConditionViolated(f"missing parameter(s): {', '.join(missing)}")
    return [opts[k] for k in keys]


def _extend(kind: str, form: str) -> Callable[..., ConstructionReport]:
    fn = extend_multi if kind == "multi" else extend_single

    def run(opts: dict, budget: int | None) -> ConstructionReport:
        code, c = _need(opts, "code", "c")
        return fn(code, int(c), form, budget)

    return run


def _grs_mds(opts: dict, budget: int | None) -> ConstructionReport:
    spec = opts.get("grs")
    if spec is None:
        q, k = _need(opts, "q", "k")
        # a = 1: length q^2 - 1 over the full multiplicative group
        spec = table_instance(int(q), 1, (int(q) - 1) // 2, int(k))
    return grs_mds_extend(spec, budget)


def _grs_hull(opts: dict, budget: int | None) -> ConstructionReport:
    q, r = _need(opts, "q", "r")
    return grs_hull_family(int(q), int(r), bool(opts.get("extra_point")), budget)


def _lcd_maximal(opts: dict, budget: int | None) -> ConstructionReport:
    (code,) = _need(opts, "code")
    return lcd_maximal_report(code, budget)


def _cyclic(opts: dict, budget: int | None) -> ConstructionReport:
    q, k = _need(opts, "q", "k")
    return cyclic_mds_lcd(int(q), int(k), budget)


def _expand(opts: dict, budget: int | None) -> ConstructionReport:
    code, s = _need(opts, "code", "s")
    return lcd_s_expand(code, int(s), budget)


BUILDERS: dict[str, Callable[[dict, int | None], ConstructionReport]] = {
    "extend-e-multi": _extend("multi", "euclidean"),
    "extend-e-single": _extend("single", "euclidean"),
    "extend-h-multi": _extend("multi", "hermitian"),
    "extend-h-single": _extend("single", "hermitian"),
    "grs-mds": _grs_mds,
    "grs-hull": _grs_hull,
    "lcd-maximal": _lcd_maximal,
    "cyclic-mds-lcd": _cyclic,
    "lcd-expand": _expand,
}


def _derive(form: str) -> Callable[..., ConstructionReport]:
    def run(opts: dict, budget: int | None) -> ConstructionReport:
        (code,) = _need(opts, "code")
        return derive_report(code, form, budget)  # type: ignore[arg-type]

    return run


# reachable through replay and the derive subcommand, not through construct
BUILDERS["derive-euclidean"] = _derive("euclidean")
BUILDERS["derive-hermitian"] = _derive("hermitian")


def build(name: str, budget: int | None = None, **opts: Any) -> ConstructionReport:
    """Run construction ``name``.

    ``code`` is a :class:`LinearCode`, ``grs`` a :class:`GrsSpec`; the
    remaining keywords are the integer parameters q, k, r, c, s and the
    boolean ``extra_point``.
    """
    try:
        fn = BUILDERS[name]
    except KeyError:
        raise UnknownConstruction(f"unknown construction {name!r}; expected one of {', '.join(NAMES)}") from None
    return fn(opts, budget)


def replay_options(rep: dict) -> dict:
    """Recover the build keywords from a stored report."""
    name = rep["construction"]
    p = rep.get("params", {})
    inp = rep.get("input")
    if name.startswith("extend-"):
        return {"code": code_from_json(inp), "c": p["c"]}
    if name == "grs-mds":
        return {"grs": GrsSpec.from_json(inp)}
    if name == "grs-hull":
        return {"q": p["q"], "r": p["r"], "extra_point": p["extra_point"]}
    if name in ("lcd-maximal", "derive-euclidean", "derive-hermitian"):
        return {"code": code_from_json(inp)}
    if name == "cyclic-mds-lcd":
        return {"q": p["q"], "k": p["k"]}
    if name == "lcd-expand":
        return {"code": code_from_json(inp), "s": p["s"]}
    raise UnknownConstruction(f"unknown construction {name!r}")


def replay(rep: dict, budget: int | None = None) -> ConstructionReport:
    return build(rep["construction"], budget, **replay_options(rep))


__all__ = [
    "BUILDERS",
    "KNOWN_DISCREPANCIES",
    "NAMES",
    "Claim",
    "ConstructionReport",
    "LinearCode",
    "build",
    "derive_report",
    "dumps",
    "replay",
    "replay_options",
]
