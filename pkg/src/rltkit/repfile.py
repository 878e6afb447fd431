"""Text serialization of linear representations.

Files are JSON objects; every number is a string, either a decimal
integer ("-3") or a reduced fraction ("5/7"), so magnitude is unbounded.

    {
      "format": "rltkit-linrep",
      "version": 1,
      "rank": 2,
      "order": "msd",
      "v": ["1", "0"],
      "gamma0": [["1", "0"], ["1", "0"]],
      "gamma1": [["0", "1"], ["1", "1"]],
      "w": ["1", "1"],
      "provenance": {"spec": ["1", "-1", "0", "2"], "minimized": true, "tool": "rltkit 0.1.0"}
    }
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from . import __version__
from .linrep import LinearRepresentation

FORMAT = "rltkit-linrep"
VERSION = 1

_NUMBER = re.compile(r"-?\d+(/\d+)?")


class RepFileError(ValueError):
    pass


def encode_number(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def decode_number(s) -> Fraction:
    if not isinstance(s, str) or not _NUMBER.fullmatch(s):
        raise RepFileError(f"bad number {s!r}: expected a decimal integer or 'p/q' string")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise RepFileError(f"bad number {s!r}: zero denominator") from None


def to_dict(R: LinearRepresentation, provenance: dict | None = None) -> dict:
    out = {
        "format": FORMAT,
        "version": VERSION,
        "rank": R.rank,
        "order": R.order,
        "v": [encode_number(x) for x in R.v],
        "gamma0": [[encode_number(x) for x in row] for row in R.gamma0],
        "gamma1": [[encode_number(x) for x in row] for row in R.gamma1],
        "w": [encode_number(x) for x in R.w],
    }
    if provenance is not None:
        out["provenance"] = {"tool": f"rltkit {__version__}", **provenance}
    return out


def from_dict(data: dict) -> LinearRepresentation:
    if not isinstance(data, dict) or data.get("format") != FORMAT:
        raise RepFileError(f"not a {FORMAT} document")
    if data.get("version") != VERSION:
        raise RepFileError(f"unsupported version {data.get('version')!r}")
    try:
        v = [decode_number(x) for x in data["v"]]
        w = [decode_number(x) for x in data["w"]]
        g0 = [[decode_number(x) for x in row] for row in data["gamma0"]]
        g1 = [[decode_number(x) for x in row] for row in data["gamma1"]]
        order = data["order"]
        rank = data["rank"]
    except (KeyError, TypeError) as e:
        raise RepFileError(f"malformed representation: {e}") from None
    if rank != len(v):
        raise RepFileError(f"declared rank {rank} but v has length {len(v)}")
    try:
        return LinearRepresentation(v, g0, g1, w, order)
    except ValueError as e:
        raise RepFileError(str(e)) from None


def dumps(R: LinearRepresentation, provenance: dict | None = None) -> str:
    """JSON text with one matrix row per line."""
    data = to_dict(R, provenance)
    lines = []
    for key, val in data.items():
        if key in ("gamma0", "gamma1"):
            rows = ",\n    ".join(json.dumps(r) for r in val)
            text = f"[\n    {rows}\n  ]"
        else:
            text = json.dumps(val)
        lines.append(f"  {json.dumps(key)}: {text}")
    return "{\n" + ",\n".join(lines) + "\n}\n"


def loads(text: str) -> LinearRepresentation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise RepFileError(f"invalid JSON: {e}") from None
    return from_dict(data)


def provenance_of(text: str) -> dict:
    try:
        return json.loads(text).get("provenance", {}) or {}
    except (json.JSONDecodeError, AttributeError):
        return {}


def write(path, R: LinearRepresentation, provenance: dict | None = None) -> None:
    Path(path).write_text(dumps(R, provenance))


def read(path) -> LinearRepresentation:
    return loads(Path(path).read_text())
