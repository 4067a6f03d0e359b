"""Reading and writing code files and reports."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .codes import LinearCode, code_from_json
from .construct.report import dumps
from .errors import ParseError
from .grs import GrsSpec


def read_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc


def write_json(path: str | Path, obj: Any) -> None:
    Path(path).write_text(dumps(obj))


def load_code(path: str | Path) -> LinearCode:
    obj = read_json(path)
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: expected a JSON object")
    return code_from_json(obj)


def save_code(path: str | Path, C: LinearCode, kind: str = "generator") -> None:
    write_json(path, C.to_json(kind))  # type: ignore[arg-type]


def load_grs(path: str | Path) -> GrsSpec:
    obj = read_json(path)
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: expected a JSON object")
    return GrsSpec.from_json(obj)


def looks_like_grs(obj: Any) -> bool:
    return isinstance(obj, dict) and {"gamma", "w", "k"} <= obj.keys()
