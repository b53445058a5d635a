"""JSON encoding with fixed float precision (17 significant digits)."""

from __future__ import annotations

import json
import math
from fractions import Fraction

import numpy as np

SCHEMA_VERSION = 1


def _float(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    text = f"{x:.17g}"
    if all(c not in text for c in ".en"):
        text += ".0"
    return text


def dumps(obj, indent: int | None = None) -> str:
    """Serialize plain data, numpy scalars/arrays and fractions.

    Floats always use 17 significant digits; complex numbers become
    ``[re, im]`` pairs.
    """
    pad = "" if indent is None else "\n"

    def enc(o, level):
        inner = "" if indent is None else " " * (indent * (level + 1))
        outer = "" if indent is None else " " * (indent * level)
        sep = "," if indent is None else ",\n"
        if o is None or isinstance(o, (bool, np.bool_)):
            return json.dumps(bool(o) if o is not None else None)
        if isinstance(o, (int, np.integer)):
            return str(int(o))
        if isinstance(o, (float, np.floating)):
            return _float(float(o))
        if isinstance(o, Fraction):
            return json.dumps(str(o))
        if isinstance(o, (complex, np.complexfloating)):
            return enc([o.real, o.imag], level)
        if isinstance(o, str):
            return json.dumps(o)
        if isinstance(o, np.ndarray):
            return enc(o.tolist(), level)
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [f"{inner}{json.dumps(str(k))}: {enc(v, level + 1)}" for k, v in o.items()]
            return "{" + pad + sep.join(items) + pad + outer + "}"
        if isinstance(o, (list, tuple)):
            if not o:
                return "[]"
            items = [inner + enc(v, level + 1) for v in o]
            return "[" + pad + sep.join(items) + pad + outer + "]"
        raise TypeError(f"cannot serialize {type(o).__name__}")

    return enc(obj, 0)


def unitary_to_json(matrix) -> list:
    """Row-major list of rows of ``[re, im]`` pairs."""
    m = np.asarray(getattr(matrix, "matrix", matrix))
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def state_to_json(s) -> dict:
    from .expr import format_state
    return {
        "d": s.d,
        "n": s.n,
        "text": format_state(s),
        "terms": [{"ket": list(k), "amplitude": [v.real, v.imag]} for k, v in s],
    }
