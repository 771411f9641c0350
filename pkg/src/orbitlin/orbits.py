"""Quantifier-free types of tuples and the orbits they describe.

In a homogeneous structure two tuples lie in the same orbit over ``S`` exactly
when they satisfy the same quantifier-free formulas with parameters from
``S``, so a type descriptor (pairwise relation codes plus unary facts) is a
complete orbit invariant.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ForbiddenSubstructure, InvalidStructure
from .world import World

EQUAL = (0, (), ())


@dataclass(frozen=True, order=True)
class TypeDescriptor:
    """Canonical quantifier-free type of a tuple relative to a support set.

    ``pairs`` lists the codes of (x_p, x_q) for p < q in lexicographic order;
    ``towards`` holds, per position, the codes toward the sorted support.
    """

    dim: int
    unary: tuple
    pairs: tuple
    support: tuple
    towards: tuple

    def pair(self, p: int, q: int) -> tuple:
        """Code of (x_p, x_q) for 0-based slots."""
        if p == q:
            return EQUAL
        if p < q:
            return self.pairs[_pair_index(self.dim, p, q)]
        return _flip(self.pairs[_pair_index(self.dim, q, p)])

    def restrict(self, slots: Sequence[int]) -> "TypeDescriptor":
        """Type of the subtuple at the given 0-based slots, in that order."""
        k = len(slots)
        pairs = tuple(self.pair(slots[i], slots[j]) for i in range(k) for j in range(i + 1, k))
        return TypeDescriptor(
            k,
            tuple(self.unary[s] for s in slots),
            pairs,
            self.support,
            tuple(self.towards[s] for s in slots),
        )

    def with_support(self, support: Iterable) -> "TypeDescriptor":
        """Drop support atoms outside ``support`` (a coarser orbit)."""
        keep = [i for i, s in enumerate(self.support) if s in set(support)]
        return TypeDescriptor(
            self.dim,
            self.unary,
            self.pairs,
            tuple(self.support[i] for i in keep),
            tuple(tuple(t[i] for i in keep) for t in self.towards),
        )

    def as_data(self):
        return {
            "dim": self.dim,
            "unary": [list(u) for u in self.unary],
            "pairs": [_code_data(c) for c in self.pairs],
            "support": list(self.support),
            "towards": [[_code_data(c) for c in t] for t in self.towards],
        }

    @classmethod
    def from_data(cls, data) -> "TypeDescriptor":
        return cls(
            data["dim"],
            tuple(tuple(u) for u in data["unary"]),
            tuple(_code_from(c) for c in data["pairs"]),
            tuple(data["support"]),
            tuple(tuple(_code_from(c) for c in t) for t in data["towards"]),
        )


def _code_data(c):
    return [c[0], list(c[1]), list(c[2])]


def _code_from(c):
    return (c[0], tuple(c[1]), tuple(c[2]))


def _pair_index(d: int, p: int, q: int) -> int:
    # index of (p, q), p < q, in the lexicographic listing of pairs
    return p * d - p * (p + 1) // 2 + (q - p - 1)


def _flip(code: tuple) -> tuple:
    cmp, fwd, bwd = code
    if cmp in (-1, 1):
        cmp = -cmp
    return (cmp, bwd, fwd)


def qf_type(world: World, tup: Sequence, support: Iterable = ()) -> TypeDescriptor:
    support = tuple(sorted(set(support) | world.named_constants))
    for a in tup:
        world._check(a)
    for s in support:
        world._check(s)
    d = len(tup)
    return TypeDescriptor(
        d,
        tuple(world.unary_code(a) for a in tup),
        tuple(world.pair_code(tup[p], tup[q]) for p in range(d) for q in range(p + 1, d)),
        support,
        tuple(tuple(world.pair_code(a, s) for s in support) for a in tup),
    )


def default_index(d: int) -> tuple:
    return tuple(Fraction(i) for i in range(1, d + 1))


@dataclass(frozen=True)
class OrbitDescriptor:
    support: frozenset
    index: tuple
    type: TypeDescriptor

    def __post_init__(self):
        idx = tuple(Fraction(i) for i in self.index)
        object.__setattr__(self, "index", idx)
        object.__setattr__(self, "support", frozenset(self.support))
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError("index positions must be strictly increasing")
        if len(idx) != self.type.dim:
            raise ValueError("index set and type disagree on dimension")

    @property
    def dim(self) -> int:
        return len(self.index)

    def slot(self, position) -> int:
        return self.index.index(Fraction(position))

    def is_ordered(self) -> bool:
        """S-ordered: distinct entries avoiding S, increasing with the index."""
        t = self.type
        for p in range(t.dim):
            if any(c == EQUAL for c in t.towards[p]):
                return False
            for q in range(p + 1, t.dim):
                if t.pair(p, q)[0] != -1:
                    return False
        return True

    def contains(self, world: World, tup: Sequence) -> bool:
        return len(tup) == self.dim and qf_type(world, tup, self.support) == self.type

    def project(self, positions: Iterable) -> "OrbitDescriptor":
        """The projected orbit, keeping the original position labels."""
        pos = sorted(Fraction(p) for p in positions)
        slots = [self.slot(p) for p in pos]
        return OrbitDescriptor(self.support, tuple(pos), self.type.restrict(slots))

    def reindexed(self) -> "OrbitDescriptor":
        return OrbitDescriptor(self.support, default_index(self.dim), self.type)

    def as_data(self):
        return {
            "support": sorted(self.support),
            "index": [str(i) for i in self.index],
            "type": self.type.as_data(),
        }

    @classmethod
    def from_data(cls, data) -> "OrbitDescriptor":
        return cls(frozenset(data["support"]), tuple(Fraction(i) for i in data["index"]), TypeDescriptor.from_data(data["type"]))


def orbit_of(world: World, tup: Sequence, support: Iterable = (), index: Sequence | None = None) -> OrbitDescriptor:
    """Descriptor of the orbit of ``tup`` (which should be S-ordered) over ``support``."""
    support = frozenset(support) | world.named_constants
    index = default_index(len(tup)) if index is None else index
    return OrbitDescriptor(support, tuple(index), qf_type(world, tup, support))


@dataclass(frozen=True)
class ReindexMap:
    source: tuple
    target: tuple

    def __post_init__(self):
        if len(self.source) != len(self.target):
            raise ValueError("reindexing needs equally many positions")

    def __call__(self, position):
        return self.target[self.source.index(position)]


def normalize(world: World, tup: Sequence, support: Iterable = ()):
    """Drop entries from the support and repeated entries, then sort the rest.

    Returns ``(orbit, normalized_tuple, position_map)`` where the map sends
    each original slot to ``("pos", label)`` or ``("const", atom)``.
    """
    support = frozenset(support) | world.named_constants
    seen = []
    for a in tup:
        world._check(a)
        if a not in support and a not in seen:
            seen.append(a)
    if world.ordered:
        seen = world.sorted_atoms(seen)
    labels = default_index(len(seen))
    where = {a: labels[i] for i, a in enumerate(seen)}
    pmap = tuple(("const", a) if a in support else ("pos", where[a]) for a in tup)
    orbit = OrbitDescriptor(support, labels, qf_type(world, seen, support))
    return orbit, tuple(seen), pmap


@dataclass(frozen=True)
class RestrictionClass:
    """A projected orbit up to reindexing, with the subsets J that project onto it."""

    representative: OrbitDescriptor
    multiplicity_sets: tuple  # tuple of tuples of position labels

    @property
    def dim(self) -> int:
        return self.representative.dim

    @property
    def key(self) -> TypeDescriptor:
        return self.representative.type


def projected_classes(orbit: OrbitDescriptor) -> list:
    groups: dict = {}
    for r in range(orbit.dim, -1, -1):
        for J in itertools.combinations(orbit.index, r):
            t = orbit.type.restrict([orbit.slot(p) for p in J])
            groups.setdefault(t, []).append(J)
    classes = [
        RestrictionClass(OrbitDescriptor(orbit.support, default_index(t.dim), t), tuple(Js))
        for t, Js in groups.items()
    ]
    classes.sort(key=lambda c: (-c.dim, c.multiplicity_sets[0]))
    return classes


def enumerate_orbit_reps(world: World, orbit: OrbitDescriptor, n: int = 1) -> list:
    """Realize ``n`` tuples of the orbit on fresh atoms (one tuple for a 0-dim orbit)."""
    if n < 1:
        raise ValueError("n must be positive")
    if orbit.dim == 0:
        return [()]
    t = orbit.type
    out = []
    for _ in range(n):
        atoms: list = []
        for p in range(t.dim):
            reuse = next((atoms[q] for q in range(p) if t.pair(q, p) == EQUAL), None)
            if reuse is None:
                reuse = next((s for s, c in zip(t.support, t.towards[p]) if c == EQUAL), None)
            if reuse is not None:
                atoms.append(reuse)
                continue
            out_f, in_f, above, below = {}, {}, set(), set()
            for s, (cmp, fwd, bwd) in zip(t.support, t.towards[p]):
                out_f[s], in_f[s] = frozenset(fwd), frozenset(bwd)
                (above if cmp == 1 else below if cmp == -1 else set()).add(s)
            for q in range(p):
                cmp, fwd, bwd = t.pair(p, q)
                out_f[atoms[q]], in_f[atoms[q]] = frozenset(fwd), frozenset(bwd)
                (above if cmp == 1 else below if cmp == -1 else set()).add(atoms[q])
            if world.kind == "rado-bit":
                out_f = {x: s for x, s in out_f.items() if s}
                in_f = {x: s for x, s in in_f.items() if s}
            a = world.fresh(
                out_facts=out_f,
                in_facts=in_f,
                above=above,
                below=below,
                unary=t.unary[p],
            )
            atoms.append(a)
        out.append(tuple(atoms))
    return out


def type_census(world: World, window: Sequence, d: int, support: Iterable = ()) -> int:
    """Number of distinct types of d-tuples drawn from ``window``."""
    return len({qf_type(world, tup, support) for tup in itertools.product(window, repeat=d)})


def _subsets(items) -> list:
    items = sorted(items)
    return [frozenset(c) for r in range(len(items) + 1) for c in itertools.combinations(items, r)]


def ordered_types(world: World, k: int, support: Iterable = ()) -> list:
    """Every type of an S-ordered k-tuple, found by realizing candidates in a scratch world."""
    support = frozenset(support) | world.named_constants
    scratch = world.scratch(support)
    S = scratch.sorted_atoms(support) if scratch.ordered else sorted(support)
    unaries = _subsets(scratch.vocabulary.unary)
    codes = [(f, b) for f in _subsets(scratch.vocabulary.binary) for b in _subsets(scratch.vocabulary.binary)]
    gaps = range(len(S) + 1) if scratch.ordered else [0]
    found: dict = {}

    def place(points, gap_floor):
        if len(points) == k:
            t = qf_type(scratch, points, support)
            found.setdefault(t, None)
            return
        others = list(S) + points
        for gap in gaps:
            if gap < gap_floor:
                continue
            above = S[:gap] + points if scratch.ordered else []
            below = S[gap:] if scratch.ordered else []
            for unary in unaries:
                for rel in itertools.product(codes, repeat=len(others)):
                    try:
                        a = scratch.fresh(
                            out_facts={x: r[0] for x, r in zip(others, rel)},
                            in_facts={x: r[1] for x, r in zip(others, rel)},
                            above=above,
                            below=below,
                            unary=unary,
                        )
                    except (ForbiddenSubstructure, InvalidStructure):
                        continue
                    place(points + [a], gap)
                    scratch.discard(a)

    place([], 0)
    return list(found)


def ambient_orbits(world: World, d: int, support: Iterable = ()) -> list:
    """The orbits of d-tuples over ``support`` as (position pattern, S-ordered type) pairs.

    A pattern entry is ``("pos", label)`` or ``("const", atom)``, as in ``normalize``.
    """
    support = frozenset(support) | world.named_constants
    consts = sorted(support)
    out = []
    for k in range(d + 1):
        labels = default_index(k)
        types = ordered_types(world, k, support)
        for pattern in itertools.product([("pos", l) for l in labels] + [("const", s) for s in consts], repeat=d):
            used = [p[1] for p in pattern if p[0] == "pos"]
            if set(used) != set(labels):
                continue
            # unordered worlds label entries by first occurrence
            if not world.ordered and list(dict.fromkeys(used)) != list(labels):
                continue
            out.extend((pattern, t) for t in types)
    return out
