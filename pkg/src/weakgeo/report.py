"""Check reports and their JSON wire format.

Rationals travel as ``"p/q"`` strings and residues as decimal strings, so no
JSON consumer loses precision.  Points are two-element arrays, lines
three-element arrays ``[u, v, w]``.
"""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Optional

from . import __version__
from .arith import Mod
from .plane import Line, MetricModel, Point

KEYS = (
    "command",
    "model",
    "mode",
    "seed",
    "checked_count",
    "gated_count",
    "violations",
    "witnesses",
    "elapsed_ms",
    "version",
)

_VALUE = {
    "oneOf": [
        {"type": "string"},
        {"type": "integer"},
        {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 3},
    ]
}

_ENTRY = {
    "type": "object",
    "required": ["check", "verdict"],
    "properties": {
        "check": {"type": "string"},
        "verdict": {"type": "string"},
        "assignment": {"type": "object", "additionalProperties": _VALUE},
        "counts": {"type": "object", "additionalProperties": {"type": "integer"}},
        "note": {"type": "string"},
    },
    "additionalProperties": False,
}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "weakgeo report",
    "type": "object",
    "required": list(KEYS),
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "model": {"type": "string", "pattern": r"^(q:c=-?\d+(/\d+)?|gf:\d+:c=-?\d+)$"},
        "mode": {"type": "string", "pattern": r"^(exhaustive|sampled\(\d+,\s*-?\d+\)|constructed)$"},
        "seed": {"type": ["integer", "null"]},
        "checked_count": {"type": "integer", "minimum": 0},
        "gated_count": {"type": "integer", "minimum": 0},
        "violations": {"type": "array", "items": _ENTRY},
        "witnesses": {"type": "array", "items": _ENTRY},
        "elapsed_ms": {"type": "integer", "minimum": 0},
        "version": {"type": "string"},
    },
}


def encode_scalar(x) -> str:
    if isinstance(x, Mod):
        return str(x.value)
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def encode_value(v) -> Any:
    if isinstance(v, Point):
        return [encode_scalar(v.x), encode_scalar(v.y)]
    if isinstance(v, Line):
        return [encode_scalar(v.u), encode_scalar(v.v), encode_scalar(v.w)]
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, int):
        return v
    if isinstance(v, (Fraction, Mod)):
        return encode_scalar(v)
    return str(v)


def decode_scalar(m: MetricModel, s: str):
    if "/" in s:
        num, den = s.split("/")
        return m.scalar(Fraction(int(num), int(den)))
    return m.scalar(int(s))


def decode_value(m: MetricModel, v):
    """Inverse of :func:`encode_value` for points, lines and scalars."""
    if isinstance(v, list):
        vals = [decode_scalar(m, s) for s in v]
        return Point(*vals) if len(vals) == 2 else Line(*vals)
    if isinstance(v, str) and v not in ("true", "false"):
        try:
            return decode_scalar(m, v)
        except ValueError:
            return v
    return v


def entry(check: str, verdict: str, assignment: Optional[dict] = None, counts: Optional[dict] = None,
          note: Optional[str] = None) -> dict:
    out: dict[str, Any] = {"check": check, "verdict": verdict}
    if assignment is not None:
        out["assignment"] = {k: encode_value(v) for k, v in assignment.items()}
    if counts is not None:
        out["counts"] = {str(k): int(v) for k, v in counts.items()}
    if note is not None:
        out["note"] = note
    return out


def decode_assignment(m: MetricModel, e: dict) -> dict:
    return {k: decode_value(m, v) for k, v in e.get("assignment", {}).items()}


@dataclass
class Report:
    command: str
    model: str
    mode: str
    seed: Optional[int] = None
    checked_count: int = 0
    gated_count: int = 0
    violations: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    elapsed_ms: int = 0
    version: str = __version__

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            d["elapsed_ms"] = 0
        return {k: d[k] for k in KEYS}

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        d = json.loads(text)
        return cls(**{k: d[k] for k in KEYS})

    def summary(self) -> str:
        lines = [
            f"{self.command} [{self.model}] {self.mode}",
            f"  checked: {self.checked_count}  gated: {self.gated_count}  "
            f"violations: {len(self.violations)}  witnesses: {len(self.witnesses)}  "
            f"({self.elapsed_ms} ms)",
        ]
        for v in self.violations[:10]:
            lines.append(f"  VIOLATION {v['check']}: {_fmt(v)}")
        if len(self.violations) > 10:
            lines.append(f"  ... {len(self.violations) - 10} more")
        for w in self.witnesses[:10]:
            lines.append(f"  {w['verdict']} {w['check']}: {_fmt(w)}")
        return "\n".join(lines)


def _fmt(e: dict) -> str:
    parts = []
    for k, v in e.get("assignment", {}).items():
        parts.append(f"{k}=({', '.join(v)})" if isinstance(v, list) else f"{k}={v}")
    for k, v in e.get("counts", {}).items():
        parts.append(f"{k}:{v}")
    if "note" in e:
        parts.append(e["note"])
    return " ".join(parts)


def validate(doc: dict) -> None:
    import jsonschema

    jsonschema.validate(doc, SCHEMA)


@contextmanager
def timed(report: Report):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed_ms = int((time.perf_counter() - start) * 1000)


def sampled_mode(n: int, seed: int) -> str:
    return f"sampled({n}, {seed})"


def merge(command: str, reports: list[Report]) -> Report:
    """Fold several reports on one model into a single report."""
    out = Report(command, reports[0].model, reports[0].mode, reports[0].seed)
    for r in reports:
        out.checked_count += r.checked_count
        out.gated_count += r.gated_count
        out.violations += r.violations
        out.witnesses += r.witnesses
        out.elapsed_ms += r.elapsed_ms
    return out
