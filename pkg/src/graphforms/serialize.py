"""Input parsing and output encodings for the command-line front end.

Graph files are JSON objects ``{"vertices": N, "edges": [[i, j], ...]}``
with 1-based indices; the shorthand ``complete:N`` is accepted wherever a
file path is.  Elements serialize as
``{"degree": n, "terms": [{"path": [...], "coeff": ["p/q", ...]}]}`` with
coefficients listed in ascending powers of the connection parameter as
reduced fraction strings, terms sorted by path.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path as FilePath

from .calculus import Digraph
from .elements import Element
from .scalars import GammaPoly

_COMPLETE = re.compile(r"^complete:(\d+)$")


class GraphSpecError(ValueError):
    """Malformed graph input; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def parse_graph_json(obj: object) -> Digraph:
    if not isinstance(obj, dict):
        raise GraphSpecError("(root)", "expected a JSON object")
    unknown = set(obj) - {"vertices", "edges"}
    if unknown:
        raise GraphSpecError(sorted(unknown)[0], "unknown field")
    if "vertices" not in obj:
        raise GraphSpecError("vertices", "missing")
    n = obj["vertices"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise GraphSpecError("vertices", f"expected an integer >= 2, got {n!r}")
    if "edges" not in obj:
        raise GraphSpecError("edges", "missing")
    raw_edges = obj["edges"]
    if not isinstance(raw_edges, list):
        raise GraphSpecError("edges", "expected a list of [i, j] pairs")
    edges: list[tuple[int, int]] = []
    seen = set()
    for k, entry in enumerate(raw_edges):
        field = f"edges[{k}]"
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in entry)
        ):
            raise GraphSpecError(field, f"expected a pair of integers, got {entry!r}")
        i, j = entry
        if i == j:
            raise GraphSpecError(field, f"loop edge [{i}, {j}] is not allowed")
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphSpecError(field, f"edge [{i}, {j}] out of range 1..{n}")
        if (i, j) in seen:
            raise GraphSpecError(field, f"duplicate edge [{i}, {j}]")
        seen.add((i, j))
        edges.append((i, j))
    return Digraph(n, edges)


def load_graph(spec: str) -> Digraph:
    """Resolve a CLI graph argument: ``complete:N`` or a JSON file path."""
    match = _COMPLETE.match(spec)
    if match:
        n = int(match.group(1))
        if n < 2:
            raise GraphSpecError("complete", f"need at least 2 vertices, got {n}")
        return Digraph.complete(n)
    path = FilePath(spec)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphSpecError("(file)", f"cannot read {spec}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphSpecError("(file)", f"invalid JSON in {spec}: {exc}") from exc
    return parse_graph_json(obj)


def parse_gamma(text: str) -> GammaPoly:
    """CLI connection parameter: 'symbolic' or an exact rational p/q."""
    if text == "symbolic":
        return GammaPoly.GAMMA
    try:
        return GammaPoly.const(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(
            f"bad parameter {text!r}: expected 'symbolic' or a rational like 2/3"
        ) from exc


def poly_to_strings(poly: GammaPoly) -> list[str]:
    return [str(c) for c in poly.coeffs]


def poly_from_strings(strings: list[str]) -> GammaPoly:
    return GammaPoly(Fraction(s) for s in strings)


def element_to_json(x: Element) -> dict:
    return {
        "degree": x.degree,
        "terms": [
            {"path": list(path), "coeff": poly_to_strings(coeff)}
            for path, coeff in x.items()
        ],
    }


def element_from_json(obj: dict) -> Element:
    if not isinstance(obj, dict):
        raise ValueError("element: expected a JSON object")
    degree = obj.get("degree")
    if not isinstance(degree, int) or degree < 0:
        raise ValueError(f"element.degree: expected a non-negative integer, got {degree!r}")
    terms = {}
    for k, entry in enumerate(obj.get("terms", [])):
        path = tuple(entry["path"])
        coeff = poly_from_strings(entry["coeff"])
        if not coeff:
            raise ValueError(f"element.terms[{k}].coeff: zero coefficient array")
        if path in terms:
            raise ValueError(f"element.terms[{k}].path: duplicate path {list(path)}")
        terms[path] = coeff
    return Element(degree, terms)


def render_element(x: Element) -> str:
    return str(x)
