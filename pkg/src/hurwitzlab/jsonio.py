"""Deterministic JSON emission with 17-significant-digit floats.

The standard json module prints shortest round-trip floats; reports here
pin 17 significant digits instead so identical runs emit identical bytes
and downstream parsers recover the exact double.
"""

from __future__ import annotations

import math


def _fmt_float(x: float) -> str:
    if math.isnan(x):
        return "null"
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return format(x, ".17g")


def dumps(obj, indent: int = 0, _level: int = 0) -> str:
    """Serialize dicts/lists/scalars; float values get 17 significant digits.

    Key order is insertion order, matching the dataclass to_dict methods,
    so output is byte-stable across runs.
    """
    pad = " " * (indent * (_level + 1)) if indent else ""
    end_pad = " " * (indent * _level) if indent else ""
    sep = ",\n" if indent else ", "
    colon = ": "
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, str):
        return '"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            pad + dumps(str(k), indent, _level + 1) + colon + dumps(v, indent, _level + 1)
            for k, v in obj.items()
        ]
        open_, close = ("{\n", "\n" + end_pad + "}") if indent else ("{", "}")
        return open_ + sep.join(items) + close
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        open_, close = ("[\n", "\n" + end_pad + "]") if indent else ("[", "]")
        return open_ + sep.join(items) + close
    raise TypeError(f"cannot serialize {type(obj).__name__}")
