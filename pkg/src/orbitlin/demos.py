"""Ready-made configurations used by the CLI self-test and the acceptance suite."""
from __future__ import annotations

from dataclasses import dataclass

from .fields import QQ
from .vectors import Coeffs, Duo, VectorFS, expand, vector_on_orbit
from .world import World, preset

TRIANGLE_FREE_EDGES = ("ab", "ah", "ae", "ce", "cg", "dg", "df", "bf", "bi", "gh", "gi")
TRIANGLE_FREE_TERMS = ("+ah", "-ae", "+ce", "-cg", "+dg", "-df", "+bf", "-bi", "+gi", "-gh")


@dataclass
class Configuration:
    world: World
    atoms: dict  # letter -> atom id
    vector: VectorFS


def triangle_free_configuration(world: World | None = None) -> Configuration:
    """Nine ordered atoms a < b < ... < i with eleven edges, and a balanced vector on pairs.

    The vector alternates edges so that every atom appears with total
    coefficient zero in each position.
    """
    world = world or preset("ordered-henson-k3")
    at = {n: world.register() for n in "abcdefghi"}
    for e in TRIANGLE_FREE_EDGES:
        world.add_edge(at[e[0]], at[e[1]])
    entries = [((at[t[1]], at[t[2]]), 1 if t[0] == "+" else -1) for t in TRIANGLE_FREE_TERMS]
    return Configuration(world, at, vector_on_orbit(world, entries))


def manual_witness(conf: Configuration):
    """A hand-made seven-cog presentation built from two helper atoms and one top atom.

    The helpers g2 (between g and h) and b2 (between b and c) repair the two
    obstructions to a single top atom: g occurs in both positions, and the
    adjacent atoms a and b both occur first.  Returns (terms, extra atoms).
    """
    w, at = conf.world, conf.atoms
    a, b, c, d, e, f, g, h, i = (at[x] for x in "abcdefghi")
    g2 = w.fresh(edges=[h, i], above=[g], below=[h])
    b2 = w.fresh(edges=[f, i], above=[b], below=[c])
    z = w.fresh(edges=[a, c, d, g2, b2], above=list(at.values()) + [g2, b2])
    O = conf.vector.orbit
    duo = lambda p, m: Duo(p, m, O)  # noqa: E731
    terms = [
        (1, duo((a, h), (g2, z))),
        (-1, duo((a, e), (c, z))),
        (-1, duo((c, g), (d, z))),
        (1, duo((b2, f), (d, z))),
        (-1, duo((b2, i), (g2, z))),
        (-1, duo((g, h), (g2, i))),
        (1, duo((b, f), (b2, i))),
    ]
    return [(QQ(k), t) for k, t in terms], {"g2": g2, "b2": b2, "z": z}


def expand_witness(terms, orbit) -> VectorFS:
    return expand(terms, Coeffs(QQ), orbit)
