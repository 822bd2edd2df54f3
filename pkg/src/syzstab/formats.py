"""Family documents: a hand-editable text format and a JSON format.

Text format::

    # optional comment lines
    3 4            <- number of variables, optional common degree
    4 0 0          <- one exponent vector per line
    2 1 1

JSON format: {"vars": 3, "monomials": [[4, 0, 0], [2, 1, 1]], "metadata": {...}}.
Both serialize monomials in canonical order.
"""

from __future__ import annotations

import json
import re

from .errors import FamilyError, MonomialError, ParseError
from .monomials import Family

_INT_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def dump_json(obj) -> str:
    """Deterministic JSON: sorted keys, two-space indent, integer lists on one line."""
    text = json.dumps(obj, indent=2, sort_keys=True)
    return _INT_LIST.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text) + "\n"


METADATA_KEYS = ("recipe", "expected", "verdict", "repaired", "min_margin", "N", "d", "n")


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def _build(vars, rows, degree=None):
    if degree is not None:
        for row in rows:
            if sum(row) != degree:
                raise ParseError(f"monomial {row} has degree {sum(row)}, header says {degree}")
    try:
        return Family(vars, [tuple(r) for r in rows])
    except (FamilyError, MonomialError) as exc:
        raise ParseError(str(exc)) from None


def parse_text(text: str):
    """Returns (family, metadata). Comment lines of the form `# key: value` become metadata."""
    header = None
    rows = []
    meta = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            key, sep, value = body.partition(":")
            if sep and key.strip() in METADATA_KEYS:
                meta[key.strip()] = value.strip()
            continue
        tokens = line.split()
        if header is None:
            header = _ints(tokens, lineno)
            if len(header) not in (1, 2):
                raise ParseError(f"line {lineno}: header must be `vars` or `vars degree`")
            if header[0] < 2:
                raise ParseError(f"line {lineno}: need at least two variables")
            continue
        row = _ints(tokens, lineno)
        if len(row) != header[0]:
            raise ParseError(f"line {lineno}: expected {header[0]} exponents, got {len(row)}")
        if any(e < 0 for e in row):
            raise ParseError(f"line {lineno}: negative exponent")
        rows.append(row)
    if header is None:
        raise ParseError("empty document: missing `vars degree?` header")
    degree = header[1] if len(header) == 2 else None
    return _build(header[0], rows, degree), meta


def parse_json(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("JSON family must be an object")
    vars = doc.get("vars")
    mons = doc.get("monomials")
    if not isinstance(vars, int) or isinstance(vars, bool) or vars < 2:
        raise ParseError("`vars` must be an integer >= 2")
    if not isinstance(mons, list):
        raise ParseError("`monomials` must be a list of exponent vectors")
    rows = []
    for m in mons:
        if not isinstance(m, list) or len(m) != vars:
            raise ParseError(f"monomial {m!r} is not a list of {vars} integers")
        if any(not isinstance(e, int) or isinstance(e, bool) or e < 0 for e in m):
            raise ParseError(f"monomial {m!r} has a non-integer or negative exponent")
        rows.append(m)
    degree = doc.get("degree")
    if degree is not None and (not isinstance(degree, int) or isinstance(degree, bool)):
        raise ParseError("`degree` must be an integer")
    meta = doc.get("metadata") or {}
    if not isinstance(meta, dict):
        raise ParseError("`metadata` must be an object")
    return _build(vars, rows, degree), meta


def parse_family(text: str):
    """Detect the format from the first non-blank character."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def _scalar(v):
    return str(v).lower() if isinstance(v, bool) else str(v)


def to_text(f: Family, metadata=None) -> str:
    lines = [f"# {k}: {_scalar(v)}" for k, v in (metadata or {}).items() if v is not None]
    d = f.degree
    lines.append(f"{f.vars} {d}" if d is not None else f"{f.vars}")
    lines += [" ".join(str(e) for e in m) for m in f]
    return "\n".join(lines) + "\n"


def family_dict(f: Family, metadata=None) -> dict:
    doc = {"vars": f.vars, "monomials": [list(m) for m in f]}
    if f.degree is not None:
        doc["degree"] = f.degree
    if metadata:
        doc["metadata"] = dict(metadata)
    return doc


def to_json(f: Family, metadata=None) -> str:
    return dump_json(family_dict(f, metadata))
