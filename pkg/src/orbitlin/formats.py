"""JSON-compatible file formats for structures, vectors, subspaces and automata."""
from __future__ import annotations

import json
from pathlib import Path

from .fields import QQ
from .vectors import VectorFS, vector_on_orbit
from .world import FiniteStructure, World, preset


def structure_as_data(S: FiniteStructure) -> dict:
    return {
        "elements": list(S.elements),
        "unary_facts": sorted([s, x] for s, x in S.unary_facts),
        "binary_facts": sorted([s, x, y] for s, x, y in S.binary_facts),
        "order": None if S.order is None else list(S.order),
    }


def structure_from_data(data: dict) -> FiniteStructure:
    if "edges" in data:
        # plain undirected graph shorthand
        return FiniteStructure.graph(data["elements"], [tuple(e) for e in data["edges"]], data.get("symbol", "E"))
    return FiniteStructure(
        tuple(data["elements"]),
        frozenset((s, x) for s, x in data.get("unary_facts", ())),
        frozenset((s, x, y) for s, x, y in data.get("binary_facts", ())),
        None if data.get("order") is None else tuple(data["order"]),
    )


def world_from_data(data: dict, default: str = "order") -> tuple[World, dict]:
    """A preset world with an optional structure loaded into it; returns (world, element -> atom)."""
    world = preset(data.get("world", default), data.get("constants", ()))
    names = {}
    if data.get("structure") is not None:
        names = world.load_structure(structure_from_data(data["structure"]))
    return world, names


def vector_as_data(v: VectorFS) -> dict:
    f = v.coeffs
    return {
        "support": sorted(v.orbit.support) if v.orbit is not None else [],
        "orbit": v.orbit.as_data() if v.orbit is not None else None,
        "entries": [[list(t), f.fmt(c)] for t, c in sorted(v.items())],
    }


def vector_from_data(world: World, data: dict, names: dict | None = None, field=QQ) -> VectorFS:
    """Read ``{support, entries: [[atoms, coefficient], ...]}``; element names are mapped through ``names``."""
    names = names or {}
    rename = lambda a: names.get(a, a)  # noqa: E731
    entries = [(tuple(rename(a) for a in t), field.parse(str(c))) for t, c in data["entries"]]
    support = [rename(a) for a in data.get("support", ())]
    if data.get("any_orbit"):
        return VectorFS(entries, field=field)
    return vector_on_orbit(world, entries, support, field)


def read_json(path) -> dict:
    return json.loads(Path(path).read_text())


def dumps(record) -> str:
    """One report line; keys are sorted so equal runs give byte-identical output."""
    return json.dumps(record, sort_keys=True, default=str)
