"""Deterministic JSON serialization with 17-significant-digit floats.

The stdlib encoder formats floats with ``repr`` (shortest round-trip),
which is lossless but not byte-stable across schema tweaks; every file
this package writes goes through :func:`dumps` so that identical inputs
produce identical bytes and every float survives a parse round-trip.
"""

from __future__ import annotations

import json
import math
from typing import Any

import numpy as np

__all__ = ["format_float", "dumps", "dump", "load"]


def format_float(x: float) -> str:
    """Render a finite float with 17 significant digits (lossless)."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite float {x!r}")
    return format(x, ".17g")


def _encode(obj: Any, parts: list[str]) -> None:
    if isinstance(obj, dict):
        parts.append("{")
        for i, (key, val) in enumerate(obj.items()):
            if i:
                parts.append(", ")
            parts.append(json.dumps(str(key)))
            parts.append(": ")
            _encode(val, parts)
        parts.append("}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        parts.append("[")
        seq = obj.tolist() if isinstance(obj, np.ndarray) else obj
        for i, val in enumerate(seq):
            if i:
                parts.append(", ")
            _encode(val, parts)
        parts.append("]")
    elif isinstance(obj, bool) or obj is None:
        parts.append(json.dumps(obj))
    elif isinstance(obj, (int, np.integer)):
        parts.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        parts.append(format_float(obj))
    elif isinstance(obj, str):
        parts.append(json.dumps(obj))
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    """Serialize to a single-line JSON string with stable float text."""
    parts: list[str] = []
    _encode(obj, parts)
    return "".join(parts)


def dump(obj: Any, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))
        fh.write("\n")


def load(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
