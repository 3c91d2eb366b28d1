"""Fixed-format text output so result files are byte-stable across runs."""

from __future__ import annotations

import json


def fmt_float(value: float) -> str:
    """Render a float with fixed 9-decimal formatting."""
    return f"{value:.9f}"


def fmt_cell(value: object) -> str:
    """Render one CSV cell; None becomes an empty cell, floats are 9-decimal."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return fmt_float(value)
    return str(value)


def csv_text(header: list[str], rows: list[list[object]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(fmt_cell(cell) for cell in row) for row in rows)
    return "\n".join(lines) + "\n"


def render_json(obj: object) -> str:
    """Serialize to JSON with floats written as fixed 9-decimal literals."""
    return _render(obj) + "\n"


def _render(obj: object) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {_render(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_render(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")
