"""JSON matroid spec files.

A spec is a JSON object with a ``type`` and the parameters of that class::

    {"type": "uniform", "r": 2, "n": 4}
    {"type": "partition", "blocks": [[1, 2], [2, 5]]}
    {"type": "nested", "n": 4, "gale": [2, 4]}
    {"type": "nested_presentation", "elements": [...], "presentation": [[...], ...]}
    {"type": "transversal", "elements": [...], "presentation": [[...], ...]}
    {"type": "laminar", "elements": [...], "sets": [[...], ...], "capacities": [...]}
    {"type": "graphic", "vertices": 4, "edges": [[0, 1], ...]}
    {"type": "gf2", "matrix": [[1, 0, 1], [0, 1, 1]]}
    {"type": "explicit", "elements": [...], "bases": [[...], ...]}
    {"type": "free", "n": 5}

``elements`` optionally names the ground set of the numbered classes.
Optional keys applied in this sequence: ``delete`` and ``contract``
(element lists), ``dual`` (bool), then ``order`` (a permutation of the
resulting ground set).
"""

import json
from dataclasses import dataclass

from . import matroid as mt
from .dd import ElementOrder

COMMON = {"type", "order", "dual", "delete", "contract"}
FIELDS = {
    "free": ({"n"}, {"elements"}),
    "uniform": ({"r", "n"}, {"elements"}),
    "partition": ({"blocks"}, {"elements"}),
    "nested": ({"n", "gale"}, {"elements"}),
    "nested_presentation": ({"elements", "presentation"}, set()),
    "transversal": ({"elements", "presentation"}, set()),
    "laminar": ({"elements", "sets", "capacities"}, set()),
    "graphic": ({"vertices", "edges"}, {"elements"}),
    "gf2": ({"matrix"}, {"elements"}),
    "explicit": ({"elements"}, {"bases", "independent"}),
}


class SpecError(ValueError):
    pass


@dataclass
class MatroidSpec:
    matroid: mt.Matroid
    order: ElementOrder
    raw: dict


def _int(d, key, minimum=0):
    v = d[key]
    if isinstance(v, bool) or not isinstance(v, int) or v < minimum:
        raise SpecError(f"field {key!r}: expected an integer >= {minimum}, got {v!r}")
    return v


def _list(d, key):
    v = d[key]
    if not isinstance(v, list):
        raise SpecError(f"field {key!r}: expected a list, got {type(v).__name__}")
    return v


def _names_list(d, key):
    v = _list(d, key)
    for item in v:
        if not isinstance(item, list):
            raise SpecError(f"field {key!r}: expected a list of element lists")
    return v


def _build(d):
    t = d["type"]
    names = d.get("elements")
    if t == "free":
        return mt.free(_int(d, "n"), names)
    if t == "uniform":
        return mt.uniform(_int(d, "r"), _int(d, "n"), names)
    if t == "partition":
        blocks = _list(d, "blocks")
        if any(not isinstance(b, list) or len(b) != 2 for b in blocks):
            raise SpecError("field 'blocks': expected a list of [r, n] pairs")
        return mt.partition(blocks, names)
    if t == "nested":
        return mt.nested_from_gale(_int(d, "n"), _list(d, "gale"), names)
    if t == "nested_presentation":
        return mt.nested(_names_list(d, "presentation"), _list(d, "elements"))
    if t == "transversal":
        return mt.transversal(_names_list(d, "presentation"), _list(d, "elements"))
    if t == "laminar":
        return mt.laminar(_names_list(d, "sets"), _list(d, "capacities"), _list(d, "elements"))
    if t == "graphic":
        edges = _list(d, "edges")
        if any(not isinstance(e, list) or len(e) != 2 for e in edges):
            raise SpecError("field 'edges': expected a list of [u, v] pairs")
        return mt.graphic(_int(d, "vertices"), edges, names)
    if t == "gf2":
        return mt.gf2(_names_list(d, "matrix"), names)
    if t == "explicit":
        has_b, has_i = "bases" in d, "independent" in d
        if has_b == has_i:
            raise SpecError("explicit spec needs exactly one of 'bases' or 'independent'")
        key = "bases" if has_b else "independent"
        fam = _names_list(d, key)
        return mt.explicit(_list(d, "elements"), **{key: fam})
    raise SpecError(f"field 'type': unknown matroid type {t!r}")


def parse_spec(d):
    """Matroid and element order from a decoded spec object."""
    if not isinstance(d, dict):
        raise SpecError("spec must be a JSON object")
    if "type" not in d:
        raise SpecError("missing field 'type'")
    t = d["type"]
    if t not in FIELDS:
        raise SpecError(f"field 'type': unknown matroid type {t!r}; expected one of {sorted(FIELDS)}")
    required, optional = FIELDS[t]
    missing = sorted(required - d.keys())
    if missing:
        raise SpecError(f"type {t!r} is missing field(s) {missing}")
    unknown = sorted(d.keys() - required - optional - COMMON)
    if unknown:
        raise SpecError(f"type {t!r} does not take field(s) {unknown}")
    try:
        M = _build(d)
        for key in ("delete", "contract"):
            if key in d:
                items = _list(d, key)
                M = mt.delete(M, items) if key == "delete" else mt.contract(M, items)
        if "dual" in d:
            if not isinstance(d["dual"], bool):
                raise SpecError("field 'dual': expected true or false")
            if d["dual"]:
                M = mt.dual(M)
        order = M.ground
        if "order" in d:
            order = ElementOrder(_list(d, "order"))
            if not order.is_permutation_of(M.ground):
                raise SpecError(f"field 'order': not a permutation of the ground set {list(M.ground)}")
    except SpecError:
        raise
    except (mt.MatroidError, ValueError, KeyError, TypeError) as exc:
        raise SpecError(str(exc.args[0]) if exc.args else str(exc)) from None
    return MatroidSpec(M, order, d)


def load_spec(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecError(f"{path}: {exc.strerror}") from None
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    try:
        return parse_spec(d)
    except SpecError as exc:
        raise SpecError(f"{path}: {exc}") from None
