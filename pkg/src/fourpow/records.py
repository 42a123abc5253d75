"""JSON records used on the command line, one object per line."""

from __future__ import annotations

import json

from . import paths as P
from .bijections import HeightLabeledPath, MarkedBridge, MarkedPeakPath, TwoColoredBridge
from .compositions import CompositionPair, check_colored, check_composition, check_pair
from .errors import FourPowError

RECORD_TYPES = (
    "path",
    "marked_peak",
    "height_labeled",
    "marked_bridge",
    "two_colored_bridge",
    "composition",
    "colored_composition",
    "pair",
)


class RecordError(FourPowError):
    pass


def to_record(obj, kind: str | None = None) -> dict:
    """Serialize a domain object.

    ``kind`` is only needed to tell an empty composition apart from an empty
    colored one.
    """
    if isinstance(obj, str):
        return {"type": "path", "steps": obj}
    if isinstance(obj, MarkedPeakPath):
        return {"type": "marked_peak", "steps": obj.path, "peak": obj.peak}
    if isinstance(obj, HeightLabeledPath):
        return {"type": "height_labeled", "steps": obj.path, "peak": obj.peak, "label": obj.label}
    if isinstance(obj, MarkedBridge):
        return {"type": "marked_bridge", "steps": obj.path, "peak": obj.peak}
    if isinstance(obj, TwoColoredBridge):
        return {"type": "two_colored_bridge", "first": obj.first, "second": obj.second}
    if isinstance(obj, CompositionPair):
        return {"type": "pair", "first": list(obj.first), "second": list(obj.second)}
    if isinstance(obj, tuple):
        if kind == "colored_composition" or (obj and isinstance(obj[0], tuple)):
            return {"type": "colored_composition", "parts": [list(p) for p in obj]}
        return {"type": "composition", "parts": list(obj)}
    raise RecordError(f"cannot serialize {obj!r}")


def _field(rec, name, typ):
    if name not in rec:
        raise RecordError(f"record of type {rec.get('type')!r} is missing {name!r}")
    value = rec[name]
    if typ is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise RecordError(f"field {name!r} must be an integer")
    if typ is not int and not isinstance(value, typ):
        raise RecordError(f"field {name!r} must be of type {typ.__name__}")
    return value


def from_record(rec) -> tuple[str, object]:
    """Validate a parsed record and return ``(type, object)``."""
    if not isinstance(rec, dict):
        raise RecordError("a record must be a JSON object")
    kind = rec.get("type")
    if kind == "path":
        return kind, P.check_path(_field(rec, "steps", str))
    if kind == "marked_peak":
        return kind, MarkedPeakPath(_field(rec, "steps", str), _field(rec, "peak", int))
    if kind == "height_labeled":
        return kind, HeightLabeledPath(
            _field(rec, "steps", str), _field(rec, "peak", int), _field(rec, "label", int)
        )
    if kind == "marked_bridge":
        return kind, MarkedBridge(_field(rec, "steps", str), _field(rec, "peak", int))
    if kind == "two_colored_bridge":
        return kind, TwoColoredBridge(_field(rec, "first", str), _field(rec, "second", str))
    if kind == "composition":
        return kind, check_composition(_field(rec, "parts", list))
    if kind == "colored_composition":
        return kind, check_colored(_field(rec, "parts", list))
    if kind == "pair":
        return kind, check_pair(_field(rec, "first", list), _field(rec, "second", list))
    raise RecordError(f"unknown record type {kind!r}")


def dumps(rec: dict) -> str:
    return json.dumps(rec, separators=(",", ":"))


def loads(line: str) -> tuple[str, object]:
    try:
        rec = json.loads(line)
    except json.JSONDecodeError as exc:
        raise RecordError(f"invalid JSON: {exc}") from None
    return from_record(rec)
