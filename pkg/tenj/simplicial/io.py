"""Triangulation files.

``{"vertices": [...], "facets": [[...], ...], "order": [...], "moves": [...]}`` where
``order`` and the provenance log ``moves`` are optional.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from tenj.errors import MalformedFacet, ParseError
from tenj.simplicial.complex import SimplicialComplex, Vertex, build_complex
from tenj.simplicial.orientation import OrderedOrientedComplex, orient_complex


def _read_json(path: Union[str, Path]) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", f"{path}:{e.lineno}:{e.colno}") from None


def _vertex(v: Any, location: str) -> Vertex:
    if isinstance(v, (str, int)) and not isinstance(v, bool):
        return v
    if isinstance(v, list):
        return tuple(_vertex(x, location) for x in v)
    raise ParseError(f"vertex ids must be strings or integers, got {v!r}", location)


def parse_triangulation(data: Any, source: str = "") -> Tuple[SimplicialComplex, Tuple[Vertex, ...]]:
    if not isinstance(data, dict) or "facets" not in data:
        raise ParseError('expected an object with a "facets" list', source)
    raw = data["facets"]
    if not isinstance(raw, list):
        raise ParseError('"facets" must be a list', f"{source}:facets")
    facets = []
    for i, facet in enumerate(raw):
        if not isinstance(facet, list):
            raise ParseError("facet must be a list of vertex ids", f"{source}:facets[{i}]")
        facets.append([_vertex(v, f"{source}:facets[{i}]") for v in facet])
    vertices: Optional[List[Vertex]] = None
    if "vertices" in data:
        vertices = [_vertex(v, f"{source}:vertices") for v in data["vertices"]]
    try:
        c = build_complex(facets, vertices=vertices)
    except MalformedFacet as e:
        raise ParseError(str(e), f"{source}:facets") from None
    order = c.vertices
    if data.get("order") is not None:
        order = tuple(_vertex(v, f"{source}:order") for v in data["order"])
        if sorted(map(str, order)) != sorted(map(str, c.vertices)) or len(order) != len(c.vertices):
            raise ParseError('"order" must list every vertex exactly once', f"{source}:order")
    return c, tuple(order)


def load_triangulation(path: Union[str, Path]) -> Tuple[SimplicialComplex, Tuple[Vertex, ...]]:
    return parse_triangulation(_read_json(path), str(path))


def load_oriented(path: Union[str, Path], validate: bool = True) -> OrderedOrientedComplex:
    c, order = load_triangulation(path)
    return orient_complex(c, order, validate=validate)


def triangulation_to_dict(o: OrderedOrientedComplex) -> Dict[str, Any]:
    """Canonical form: vertices in order, facets order-sorted and sorted by ranks."""
    out: Dict[str, Any] = {
        "vertices": list(o.order),
        "facets": [list(f) for f in o.ordered_facets],
        "order": list(o.order),
    }
    if o.history:
        out["moves"] = [m.to_dict() for m in o.history]
    return out


def save_triangulation(o: OrderedOrientedComplex, path: Union[str, Path]) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(triangulation_to_dict(o), f, indent=1)
        f.write("\n")
