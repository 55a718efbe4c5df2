"""JSON encodings and text input formats.

Every encoder returns plain dicts/lists; :func:`dumps` fixes key order and
separators so identical inputs give identical bytes.
"""
from __future__ import annotations

import json

from .geometry import Coord, Drawing, Family, GraphPair, PathPair, Shape, as_coord, lshape, normalize_path_pair


class FormatError(ValueError):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def shape_to_json(s: Shape) -> dict:
    return {"kind": s.kind.value, "coords": {k: c.to_list() for k, c in s.coords().items()}}


def _coord(raw, key) -> Coord:
    if not (isinstance(raw, list) and len(raw) == 2 and all(isinstance(x, int) for x in raw)):
        raise FormatError(f"coordinate {key!r} must be a [base, eps] pair of integers, got {raw!r}")
    return as_coord(raw)


def shape_from_json(obj) -> Shape:
    try:
        kind = Family(obj["kind"])
        raw = obj["coords"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad shape record {obj!r}") from exc
    keys = ("l", "b", "w", "h") if kind is Family.LSHAPE else ("l", "r", "b", "t")
    if not isinstance(raw, dict) or set(raw) != set(keys):
        raise FormatError(f"{kind.value} shape needs coords {list(keys)}, got {raw!r}")
    c = {k: _coord(raw[k], k) for k in keys}
    if kind is Family.LSHAPE:
        return lshape(c["l"], c["b"], c["w"], c["h"])
    return Shape(kind, c["l"], c["r"], c["b"], c["t"])


def drawing_to_json(d: Drawing) -> dict:
    return {"family": d.family.value, "shapes": [shape_to_json(s) for s in d]}


def drawing_from_json(obj) -> Drawing:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        shapes = [shape_from_json(s) for s in obj["shapes"]]
        family = Family(obj.get("family") or (shapes[0].kind if shapes else Family.RECT))
    except (KeyError, TypeError) as exc:
        raise FormatError("drawing JSON needs a 'shapes' list") from exc
    return Drawing(tuple(shapes), family)


def pair_to_json(g: GraphPair) -> dict:
    return {"n": g.n, "ev": [list(e) for e in sorted(g.ev)], "eh": [list(e) for e in sorted(g.eh)]}


def pair_from_json(obj) -> GraphPair:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        return GraphPair(int(obj["n"]), [tuple(e) for e in obj["ev"]], [tuple(e) for e in obj["eh"]])
    except (KeyError, TypeError) as exc:
        raise FormatError('graph pair JSON needs {"n", "ev", "eh"}') from exc


def _token(tok: str):
    try:
        return int(tok)
    except ValueError:
        return tok


def parse_path_pair(text: str) -> PathPair:
    """Two non-empty lines: the horizontal path, then the vertical path."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) != 2:
        raise FormatError(f"expected two vertex sequences, found {len(lines)}")
    seq_h, seq_v = ([_token(t) for t in ln] for ln in lines)
    return normalize_path_pair(seq_v, seq_h)


def decision_to_json(dec, p: PathPair) -> dict:
    return {
        "exists": dec.exists,
        "orientation": dec.orientation,
        "violations": {k: list(v) for k, v in dec.violations.items()},
        "labels": list(p.labels),
        "drawing": drawing_to_json(dec.drawing) if dec.drawing is not None else None,
    }
