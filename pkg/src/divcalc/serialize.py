"""JSON encoding with exact rationals written as ``"p/q"`` strings."""
from __future__ import annotations

import dataclasses
import json
import math
from enum import Enum
from fractions import Fraction
from typing import Any

from .lattice import DivisorClass


def rational(x) -> str:
    return str(Fraction(x))


def parse_rational(text) -> Fraction:
    if isinstance(text, bool) or isinstance(text, float):
        raise TypeError(f"expected an exact rational, got {text!r}")
    return Fraction(text)


def to_jsonable(obj: Any) -> Any:
    """Recursively convert library values into plain JSON data."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, float):
        if obj == -math.inf:
            return "-inf"
        raise TypeError("floats are not serialized")
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, DivisorClass):
        return [rational(c) for c in obj.coords]
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(to_jsonable(x) for x in obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), indent=2, ensure_ascii=False)


def class_from_json(values) -> DivisorClass:
    return DivisorClass(tuple(parse_rational(v) for v in values))
