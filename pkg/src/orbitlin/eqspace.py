"""Equivariant subspaces represented by finite-dimensional coefficient spaces.

Every tuple of a vector is normalized to an S-ordered orbit.  Its projections
onto subsets J of positions land in projected orbits, and projected orbits of
the same type (after reindexing) form one class.  A coordinate of a class is
a pair (ambient orbit, J).  An equivariant subspace is then one echelon basis
per class, and a vector belongs to it exactly when all of its restriction
values do.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .errors import ClassMismatch, UnsupportedWorld
from .fields import QQ
from .linalg import Echelon
from .orbits import (
    OrbitDescriptor,
    RestrictionClass,
    TypeDescriptor,
    ambient_orbits,
    default_index,
    enumerate_orbit_reps,
    normalize,
    projected_classes,
)
from .vectors import VectorFS, make_duo, project
from .world import World


def _require(world: World):
    if not world.free_amalgamation_ordered:
        raise UnsupportedWorld(
            f"{world.name}: coefficient spaces are exact only for generically ordered "
            "free amalgamation worlds"
        )


def _support_of(v: VectorFS, support) -> frozenset:
    if support is not None:
        return frozenset(support)
    return v.orbit.support if v.orbit is not None else frozenset()


# ------------------------------------------------------------------ restriction
def restriction_values(world: World, v: VectorFS, support: Iterable | None = None) -> dict:
    """All nonzero restriction values of ``v``, grouped across ambient orbits.

    Returns ``{class type: {tuple: {coordinate: coefficient}}}`` where a
    coordinate is ``(tag, pattern, ambient type, J)``; plain vectors use the
    empty tag.
    """
    if v.coeffs.width is not None:
        raise ValueError("restriction values need scalar coefficients")
    S = _support_of(v, support)
    return tagged_restriction_values(world, (((), t, c) for t, c in v.items()), S, v.field)


def tagged_restriction_values(world: World, items: Iterable, support: Iterable, field) -> dict:
    """Restriction values of a vector in a direct sum of tagged copies of powers of A.

    ``items`` yields ``(tag, tuple, coefficient)``; tags must be mutually comparable.
    """
    S = frozenset(support)
    f = field
    out: dict = {}
    cache: dict = {}
    for tag, t, c in items:
        hit = cache.get(t)
        if hit is None:
            hit = cache[t] = normalize(world, t, S)
        orbit, nt, pmap = hit
        for r in range(len(nt) + 1):
            for slots in itertools.combinations(range(len(nt)), r):
                key = orbit.type.restrict(slots)
                coord = (tag, pmap, orbit.type, tuple(orbit.index[s] for s in slots))
                a = tuple(nt[s] for s in slots)
                vec = out.setdefault(key, {}).setdefault(a, {})
                s = f.add(vec.get(coord, f.zero), c)
                if s == f.zero:
                    vec.pop(coord, None)
                else:
                    vec[coord] = s
    for key in list(out):
        vals = {a: vec for a, vec in out[key].items() if vec}
        if vals:
            out[key] = vals
        else:
            del out[key]
    return out


def restrict(world: World, v: VectorFS, cls: RestrictionClass) -> dict:
    """Per-orbit restriction: tuple of the class -> coefficients indexed by the class's J sets.

    ``v`` must live on an ordered orbit whose projected classes include ``cls``.
    """
    orbit = v.orbit
    if orbit is None:
        raise ClassMismatch("per-orbit restriction needs a vector with a known orbit")
    if cls not in projected_classes(orbit):
        raise ClassMismatch("the class is not a projected class of the vector's orbit")
    f = v.field
    zero = f.zero
    out: dict = {}
    Js = cls.multiplicity_sets
    for k, J in enumerate(Js):
        for a, c in project(v, J).items():
            row = out.setdefault(a, [zero] * len(Js))
            row[k] = c
    return {a: tuple(row) for a, row in out.items() if any(x != zero for x in row)}


# ------------------------------------------------------------------ subspaces
@dataclass(frozen=True)
class Certificate:
    """A restriction value outside the coefficient space of its class."""

    cls: TypeDescriptor
    tuple: tuple
    value: dict

    def as_data(self, field=QQ):
        return {
            "class": self.cls.as_data(),
            "tuple": list(self.tuple),
            "value": [_coord_data(k) + [field.fmt(c)] for k, c in sorted(self.value.items())],
        }


@dataclass
class EqSubspace:
    """Coefficient spaces per class over a fixed support; absent classes are zero."""

    field: object
    support: frozenset
    spaces: dict = dc_field(default_factory=dict)

    def space(self, cls: TypeDescriptor) -> Echelon:
        return self.spaces.get(cls) or Echelon(self.field)

    def dims(self) -> dict:
        return {k: e.dim for k, e in self.spaces.items() if e.dim}

    @property
    def total_dim(self) -> int:
        return sum(e.dim for e in self.spaces.values())

    def copy(self) -> "EqSubspace":
        return EqSubspace(self.field, self.support, {k: e.copy() for k, e in self.spaces.items()})

    def add_values(self, values: dict) -> bool:
        """Absorb restriction values; True when some coefficient space grew."""
        grew = False
        for key, per_tuple in values.items():
            e = self.spaces.setdefault(key, Echelon(self.field))
            for vec in per_tuple.values():
                grew |= e.add(vec)
        return grew

    def __eq__(self, other):
        if not isinstance(other, EqSubspace):
            return NotImplemented
        mine = {k: e.rows for k, e in self.spaces.items() if e.dim}
        theirs = {k: e.rows for k, e in other.spaces.items() if e.dim}
        return self.field == other.field and self.support == other.support and mine == theirs

    def le(self, other: "EqSubspace") -> bool:
        """Inclusion of subspaces, checked class by class."""
        return all(all(row in other.space(k) for row in e.basis()) for k, e in self.spaces.items())

    def as_data(self):
        f = self.field
        return {
            "support": sorted(self.support),
            "classes": [
                {
                    "class": k.as_data(),
                    "basis": [[_coord_data(c) + [f.fmt(x)] for c, x in sorted(row.items())] for row in e.basis()],
                }
                for k, e in sorted(self.spaces.items())
                if e.dim
            ],
        }


def _coord_data(coord) -> list:
    tag, pattern, amb, J = coord
    return [list(tag) if isinstance(tag, tuple) else tag, [[p[0], str(p[1])] for p in pattern], amb.as_data(), [str(j) for j in J]]


def subspace_from_generators(world: World, gens: Iterable, support: Iterable = (), field=None) -> EqSubspace:
    """The equivariant subspace spanned by all images of ``gens`` under automorphisms fixing ``support``."""
    _require(world)
    gens = list(gens)
    if field is None:
        field = gens[0].field if gens else QQ
    S = frozenset(support) | world.named_constants
    W = EqSubspace(field, S)
    for g in gens:
        if g.field != field:
            raise ValueError("generators over different fields")
        W.add_values(restriction_values(world, g, S))
    return W


def member(world: World, v: VectorFS, W: EqSubspace):
    """(True, None) if ``v`` lies in ``W``, else (False, Certificate)."""
    _require(world)
    if v.field != W.field:
        raise ValueError("vector and subspace over different fields")
    return member_values(world, restriction_values(world, v, W.support), W)


def member_values(world: World, vals: dict, W: EqSubspace):
    """Membership test on precomputed restriction values."""
    for key in sorted(vals):
        e = W.space(key)
        for a in sorted(vals[key], key=lambda t: [world.sort_key(x) for x in t]):
            vec = vals[key][a]
            if e.reduce(vec)[0]:
                return False, Certificate(key, a, vec)
    return True, None


def check_certificate(W: EqSubspace, cert: Certificate) -> bool:
    """Re-verify that the certified value is outside the class's coefficient space."""
    return bool(W.space(cert.cls).reduce(cert.value)[0])


# ------------------------------------------------------------------ solving
@dataclass(frozen=True)
class ColumnFamily:
    """Columns indexed by one orbit: the column at ``index`` is ``column``.

    The column at any other index of the orbit is the image of ``column``
    under an automorphism (fixing the support) carrying ``index`` there.
    """

    index: tuple
    column: VectorFS

    def check(self, support: frozenset):
        stray = self.column.atoms() - set(self.index) - support
        if stray:
            raise ValueError(f"column template mentions atoms {sorted(stray)} outside its index and the support")


def solve(world: World, families: Sequence[ColumnFamily], b: VectorFS, support: Iterable = ()):
    """Decide whether ``b`` is a finite combination of columns; returns (bool, certificate)."""
    S = frozenset(support) | world.named_constants
    for fam in families:
        fam.check(S)
    W = subspace_from_generators(world, [fam.column for fam in families], S, field=b.field)
    return member(world, b, W)


# ------------------------------------------------------------------ chains
@dataclass
class ChainStep:
    subset: tuple
    vector: VectorFS
    grown: TypeDescriptor


@dataclass
class SubspaceChain:
    subspaces: list
    steps: list

    @property
    def length(self) -> int:
        return len(self.subspaces) - 1

    def is_strict(self) -> bool:
        return all(
            a.le(b) and not b.le(a) for a, b in zip(self.subspaces, self.subspaces[1:])
        )


def build_chain(world: World, orbit: OrbitDescriptor, field=QQ) -> SubspaceChain:
    """A strictly increasing chain of length 2^d inside Lin of an ordered orbit.

    Starting from a duo ``a || b``, the vector for a subset J is the product of
    (1 - swap_j) over j in J applied to ``a``; adding these in order of
    decreasing |J| makes every step strict.
    """
    _require(world)
    a = enumerate_orbit_reps(world, orbit)[0]
    duo = make_duo(world, a, orbit)
    d = orbit.dim
    one = field.one
    cur = EqSubspace(field, orbit.support)
    subspaces = [cur.copy()]
    steps = []
    for r in range(d, -1, -1):
        for J in itertools.combinations(range(d), r):
            entries = {}
            for k in range(len(J) + 1):
                for K in itertools.combinations(J, k):
                    entries[duo.mix(K)] = one if k % 2 == 0 else field.neg(one)
            v = VectorFS(entries, orbit=orbit, field=field)
            before = cur.dims()
            if not cur.add_values(restriction_values(world, v, orbit.support)):
                raise AssertionError(f"chain step for {J} did not grow")
            after = cur.dims()
            grown = [k for k in after if after[k] != before.get(k, 0)]
            assert len(grown) == 1 and after[grown[0]] == before.get(grown[0], 0) + 1
            steps.append(ChainStep(tuple(orbit.index[j] for j in J), v, grown[0]))
            subspaces.append(cur.copy())
    return SubspaceChain(subspaces, steps)


def length_upper_bound(world: World, ambient, support: Iterable = ()) -> int:
    """Sum of the class dimensions n_i, i.e. of 2^dim over the ambient orbits.

    ``ambient`` is an OrbitDescriptor, an integer d (all of A^d), or a list of these.
    """
    if isinstance(ambient, OrbitDescriptor):
        return 2 ** ambient.dim
    if isinstance(ambient, int):
        return sum(2 ** t.dim for _, t in ambient_orbits(world, ambient, support))
    return sum(length_upper_bound(world, x, support) for x in ambient)


def class_dimensions(world: World, d: int, support: Iterable = ()) -> dict:
    """n_i for each class of A^d over ``support``: how many (ambient orbit, J) coordinates it has."""
    out: dict = {}
    for _, t in ambient_orbits(world, d, support):
        for r in range(t.dim + 1):
            for slots in itertools.combinations(range(t.dim), r):
                key = t.restrict(slots)
                out[key] = out.get(key, 0) + 1
    return out


def full_space(world: World, d: int, support: Iterable = (), field=QQ) -> EqSubspace:
    """Lin A^d itself, as a coefficient-space representation."""
    S = frozenset(support) | world.named_constants
    W = EqSubspace(field, S)
    for pattern, t in ambient_orbits(world, d, S):
        for r in range(t.dim + 1):
            for slots in itertools.combinations(range(t.dim), r):
                labels = default_index(t.dim)
                coord = ((), pattern, t, tuple(labels[s] for s in slots))
                W.spaces.setdefault(t.restrict(slots), Echelon(field)).add({coord: field.one})
    return W
