"""Atom universes presented as growing finite registries.

A :class:`World` stands in for an infinite homogeneous structure.  Only the
atoms that some computation has touched are registered; new atoms are minted
on demand by :meth:`World.realize`, which is where genericity (the extension
property of the limit) is used.

Four kinds of universe are supported:

``equality``     pure sets, no relations
``dense-order``  the rationals with ``<``
``rado-bit``     the random graph on the naturals, ``n ~ m`` iff bit ``n`` of ``m`` is set
``ordered-forb`` generic orderings of a free amalgamation class ``Forb(F)``
"""
from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    ForbiddenSubstructure,
    InconsistentOrder,
    InvalidStructure,
    NotTypePreserving,
    UnknownAtom,
)

EQUALITY = "equality"
DENSE_ORDER = "dense-order"
RADO_BIT = "rado-bit"
ORDERED_FORB = "ordered-forb"

EMPTY = frozenset()


@dataclass(frozen=True)
class Vocabulary:
    unary: tuple = ()
    binary: tuple = ()
    has_order: bool = True

    def __post_init__(self):
        names = list(self.unary) + list(self.binary)
        if len(set(names)) != len(names):
            raise InvalidStructure("symbol names must be distinct")
        if "<" in self.binary:
            raise InvalidStructure("'<' is built in and cannot be declared")
        object.__setattr__(self, "unary", tuple(sorted(self.unary)))
        object.__setattr__(self, "binary", tuple(sorted(self.binary)))


@dataclass(frozen=True)
class FiniteStructure:
    """A finite structure; facts are stored as frozensets of tuples."""

    elements: tuple
    unary_facts: frozenset = EMPTY  # (symbol, x)
    binary_facts: frozenset = EMPTY  # (symbol, x, y)
    order: tuple | None = None

    def __post_init__(self):
        els = set(self.elements)
        if len(els) != len(self.elements):
            raise InvalidStructure("repeated element")
        for sym, x in self.unary_facts:
            if x not in els:
                raise InvalidStructure(f"unary fact on unknown element {x!r}")
        for sym, x, y in self.binary_facts:
            if x not in els or y not in els:
                raise InvalidStructure(f"binary fact on unknown element ({x!r}, {y!r})")
            if x == y:
                raise InvalidStructure(f"binary fact {sym}({x!r},{x!r}) is reflexive")
        if self.order is not None and sorted(map(repr, self.order)) != sorted(map(repr, self.elements)):
            raise InvalidStructure("order must list every element exactly once")

    @classmethod
    def build(cls, elements, unary=None, binary=None, order=None) -> "FiniteStructure":
        uf = frozenset((s, x) for s, xs in (unary or {}).items() for x in xs)
        bf = frozenset((s, x, y) for s, ps in (binary or {}).items() for x, y in ps)
        return cls(tuple(elements), uf, bf, None if order is None else tuple(order))

    @classmethod
    def graph(cls, vertices, edges, symbol="E") -> "FiniteStructure":
        """Undirected graph: each edge is stored in both directions."""
        pairs = set()
        for x, y in edges:
            pairs.add((x, y))
            pairs.add((y, x))
        return cls.build(vertices, binary={symbol: pairs})

    def __len__(self):
        return len(self.elements)

    def unary_of(self, x) -> frozenset:
        return frozenset(s for s, y in self.unary_facts if y == x)

    def binary_between(self, x, y):
        fwd = frozenset(s for s, a, b in self.binary_facts if a == x and b == y)
        bwd = frozenset(s for s, a, b in self.binary_facts if a == y and b == x)
        return fwd, bwd

    def related(self, x, y) -> bool:
        if x == y:
            return True
        return any((a, b) in ((x, y), (y, x)) for _, a, b in self.binary_facts)

    def adjacency(self, symbol="E") -> dict:
        adj = {x: set() for x in self.elements}
        for s, a, b in self.binary_facts:
            if s == symbol:
                adj[a].add(b)
        return adj


class ForbiddenFamily:
    """A finite family of structures whose members have all pairs related."""

    def __init__(self, structures: Iterable[FiniteStructure] = ()):
        self.structures = tuple(structures)
        for i, F in enumerate(self.structures):
            for x, y in itertools.combinations(F.elements, 2):
                if not F.related(x, y):
                    raise InvalidStructure(
                        f"forbidden structure #{i} has unrelated elements {x!r}, {y!r}; "
                        "it does not define a free amalgamation class"
                    )

    def __iter__(self):
        return iter(self.structures)

    def __len__(self):
        return len(self.structures)


@dataclass(frozen=True)
class RelationProfile:
    equal: bool
    cmp: int | None  # -1, 0, 1; None when the universe is unordered
    forward: frozenset  # symbols R with R(a, b)
    backward: frozenset  # symbols R with R(b, a)
    unary_a: frozenset
    unary_b: frozenset

    @property
    def related(self) -> bool:
        return self.equal or bool(self.forward) or bool(self.backward)


@dataclass
class FreshRequest:
    """What a fresh atom should look like.

    Setting ``anchor`` selects the copy mode: the new atom copies the anchor's
    unary facts and its relations toward ``fixed``, is unrelated to ``avoid``
    and to the anchor, and is placed immediately above the anchor.
    Otherwise the explicit facts below are used.
    """

    anchor: int | None = None
    fixed: frozenset = EMPTY
    avoid: frozenset = EMPTY
    out_facts: Mapping = field(default_factory=dict)  # x -> symbols R with R(new, x)
    in_facts: Mapping = field(default_factory=dict)  # x -> symbols R with R(x, new)
    unary: frozenset = EMPTY
    above: frozenset = EMPTY
    below: frozenset = EMPTY


@dataclass(frozen=True)
class PartialAutomorphism:
    mapping: Mapping
    support: frozenset

    def __call__(self, atom):
        return self.mapping.get(atom, atom)


def _triangle(sym="E"):
    return FiniteStructure.graph((0, 1, 2), [(0, 1), (1, 2), (0, 2)], sym)


def _one_way(sym="E"):
    return FiniteStructure.build((0, 1), binary={sym: [(0, 1)]})


def _two_way(sym="E"):
    return FiniteStructure.graph((0, 1), [(0, 1)], sym)


class World:
    """Mutable registry of atoms and their facts.

    The world has a single writer: ``realize`` and the ``register`` helpers
    mutate it, everything else only reads.
    """

    def __init__(
        self,
        kind: str,
        vocabulary: Vocabulary | None = None,
        forbidden: ForbiddenFamily | None = None,
        name: str | None = None,
        constants: Iterable[int] = (),
    ):
        if kind not in (EQUALITY, DENSE_ORDER, RADO_BIT, ORDERED_FORB):
            raise ValueError(f"unknown universe kind {kind!r}")
        self.kind = kind
        self.name = name or kind
        if kind == RADO_BIT:
            vocabulary = Vocabulary(binary=("E",), has_order=False)
        elif kind == EQUALITY:
            vocabulary = Vocabulary(has_order=False)
        elif kind == DENSE_ORDER:
            vocabulary = Vocabulary(has_order=True)
        else:
            vocabulary = vocabulary or Vocabulary()
        self.vocabulary = vocabulary
        self.forbidden = forbidden if forbidden is not None else ForbiddenFamily()
        self.ordered = kind in (DENSE_ORDER, ORDERED_FORB)
        self._next = 0
        self._atoms: list = []
        self._known: set = set()
        self._key: dict = {}
        self._keys_sorted: list = []
        self._unary: dict = {}
        self._out: dict = {}
        self._in: dict = {}
        self._related: dict = {}
        self.named_constants = frozenset()
        for c in constants:
            self.register(c)
        self.named_constants = frozenset(constants)

    # ------------------------------------------------------------------ basics
    @property
    def free_amalgamation_ordered(self) -> bool:
        """True for the worlds the cog and coefficient-space theory covers."""
        return self.kind in (DENSE_ORDER, ORDERED_FORB)

    def atoms(self) -> list:
        return list(self._atoms)

    def __contains__(self, atom) -> bool:
        return atom in self._known

    def __len__(self):
        return len(self._atoms)

    def _check(self, atom):
        if atom not in self._known:
            raise UnknownAtom(atom)

    def key(self, atom) -> Fraction:
        self._check(atom)
        return self._key[atom]

    def sort_key(self, atom):
        """Key used to sort atoms: the order key when ordered, else the id."""
        return self._key[atom] if self.ordered else atom

    def sorted_atoms(self, atoms) -> list:
        return sorted(atoms, key=self.sort_key)

    def less(self, a, b) -> bool:
        self._check(a)
        self._check(b)
        if not self.ordered:
            raise TypeError("the universe is unordered")
        return self._key[a] < self._key[b]

    def unary_of(self, atom) -> frozenset:
        self._check(atom)
        return self._unary.get(atom, EMPTY)

    def binary(self, a, b):
        """(symbols R with R(a,b), symbols R with R(b,a))."""
        if self.kind == RADO_BIT:
            self._check(a)
            self._check(b)
            e = frozenset(("E",)) if _bit_edge(a, b) else EMPTY
            return e, e
        self._check(a)
        self._check(b)
        return self._out[a].get(b, EMPTY), self._in[a].get(b, EMPTY)

    def is_related(self, a, b) -> bool:
        if a == b:
            return True
        if self.kind == RADO_BIT:
            return _bit_edge(a, b)
        return b in self._related.get(a, ())

    def related_atoms(self, a) -> set:
        """Registered atoms related to ``a`` by some binary fact."""
        self._check(a)
        if self.kind == RADO_BIT:
            return {b for b in self._atoms if b != a and _bit_edge(a, b)}
        return set(self._related[a])

    def relate(self, a, b) -> RelationProfile:
        self._check(a)
        self._check(b)
        fwd, bwd = self.binary(a, b) if a != b else (EMPTY, EMPTY)
        cmp = None
        if self.ordered:
            ka, kb = self._key[a], self._key[b]
            cmp = (ka > kb) - (ka < kb)
        return RelationProfile(a == b, cmp, fwd, bwd, self.unary_of(a), self.unary_of(b))

    def pair_code(self, a, b) -> tuple:
        """Sortable, hashable summary of the relation profile of (a, b) minus unary facts."""
        if a == b:
            return (0, (), ())
        if self.ordered:
            cmp = -1 if self._key[a] < self._key[b] else 1
        else:
            cmp = 2
        if self.kind == RADO_BIT:
            e = ("E",) if _bit_edge(a, b) else ()
            return (cmp, e, e)
        if self.kind == EQUALITY or self.kind == DENSE_ORDER:
            return (cmp, (), ())
        return (
            cmp,
            tuple(sorted(self._out[a].get(b, EMPTY))),
            tuple(sorted(self._in[a].get(b, EMPTY))),
        )

    def unary_code(self, a) -> tuple:
        return tuple(sorted(self._unary.get(a, EMPTY)))

    # ------------------------------------------------------------ registration
    def _mint(self) -> int:
        while self._next in self._known:
            self._next += 1
        atom = self._next
        self._next += 1
        return atom

    def _insert(self, atom, key):
        self._atoms.append(atom)
        self._known.add(atom)
        self._out[atom] = {}
        self._in[atom] = {}
        self._related[atom] = set()
        if self.ordered:
            if key is None:
                key = self._keys_sorted[-1][0] + 1 if self._keys_sorted else Fraction(0)
            key = Fraction(key)
            pos = bisect.bisect_left(self._keys_sorted, (key,))
            if pos < len(self._keys_sorted) and self._keys_sorted[pos][0] == key:
                self._remove(atom)
                raise InconsistentOrder(f"order key {key} is already taken")
            self._key[atom] = key
            self._keys_sorted.insert(pos, (key, atom))

    def _remove(self, atom):
        self._atoms.remove(atom)
        self._known.discard(atom)
        for other in list(self._out.get(atom, {})):
            self._in[other].pop(atom, None)
        for other in list(self._in.get(atom, {})):
            self._out[other].pop(atom, None)
        for other in self._related.get(atom, ()):
            self._related[other].discard(atom)
        self._out.pop(atom, None)
        self._in.pop(atom, None)
        self._related.pop(atom, None)
        self._unary.pop(atom, None)
        if atom in self._key:
            key = self._key.pop(atom)
            self._keys_sorted.remove((key, atom))

    def _set_fact(self, sym, a, b):
        if sym not in self.vocabulary.binary:
            raise InvalidStructure(f"unknown binary symbol {sym!r}")
        if a == b:
            raise InvalidStructure("binary facts are irreflexive")
        self._out[a][b] = self._out[a].get(b, EMPTY) | {sym}
        self._in[b][a] = self._in[b].get(a, EMPTY) | {sym}
        self._related[a].add(b)
        self._related[b].add(a)

    def register(self, atom=None, key=None, unary=()) -> int:
        """Register a named atom (for loading structures and windows)."""
        if self.kind == RADO_BIT:
            if atom is None:
                atom = self._mint()
            if not isinstance(atom, int) or atom < 0:
                raise InvalidStructure("rado-bit atoms are natural numbers")
            if atom not in self._known:
                self._atoms.append(atom)
                self._known.add(atom)
            return atom
        if atom is None:
            atom = self._mint()
        if atom in self._known:
            raise InvalidStructure(f"atom {atom!r} already registered")
        for u in unary:
            if u not in self.vocabulary.unary:
                raise InvalidStructure(f"unknown unary symbol {u!r}")
        self._insert(atom, key)
        if unary:
            self._unary[atom] = frozenset(unary)
        return atom

    def add_fact(self, sym, a, b, check: bool = True):
        """Add R(a,b) between registered atoms; rolls back if a forbidden structure appears."""
        if self.kind in (RADO_BIT, EQUALITY, DENSE_ORDER):
            raise InvalidStructure(f"{self.kind} worlds have fixed relations")
        self._check(a)
        self._check(b)
        had = sym in self._out[a].get(b, EMPTY)
        self._set_fact(sym, a, b)
        if check and not had:
            hit = self._forbidden_through(a)
            if hit is not None:
                self._out[a][b] = self._out[a][b] - {sym}
                self._in[b][a] = self._in[b][a] - {sym}
                if not self._out[a][b] and not self._in[a].get(b):
                    self._related[a].discard(b)
                    self._related[b].discard(a)
                raise ForbiddenSubstructure(*hit)

    def add_edge(self, a, b, sym="E"):
        """Symmetric fact, both directions at once."""
        self._set_fact(sym, a, b)
        self._set_fact(sym, b, a)
        hit = self._forbidden_through(a)
        if hit is not None:
            for x, y in ((a, b), (b, a)):
                self._out[x][y] = self._out[x][y] - {sym}
                self._in[y][x] = self._in[y][x] - {sym}
            if not self._out[a][b] and not self._out[b][a]:
                self._related[a].discard(b)
                self._related[b].discard(a)
            raise ForbiddenSubstructure(*hit)

    def discard(self, atom):
        """Unregister an atom and every fact touching it (scratch worlds only)."""
        self._check(atom)
        if atom in self.named_constants:
            raise ValueError("named constants cannot be discarded")
        if self.kind == RADO_BIT:
            self._atoms.remove(atom)
            self._known.discard(atom)
            return
        self._remove(atom)

    def scratch(self, atoms=()) -> "World":
        """A new world of the same kind holding a copy of the induced structure on ``atoms``."""
        keep = set(atoms) | self.named_constants
        w = World(self.kind, self.vocabulary, self.forbidden, self.name)
        for a in self.sorted_atoms(keep) if self.ordered else sorted(keep):
            w.register(a, key=self._key.get(a), unary=self._unary.get(a, EMPTY))
        if self.kind not in (RADO_BIT, EQUALITY, DENSE_ORDER):
            for a in keep:
                for b, syms in self._out[a].items():
                    if b in keep:
                        for sym in syms:
                            w._set_fact(sym, a, b)
        w.named_constants = self.named_constants
        w._next = self._next
        return w

    # ---------------------------------------------------------------- realize
    def _place(self, above, below) -> Fraction | None:
        if not self.ordered:
            return None
        lo = max((self._key[a] for a in above), default=None)
        hi = min((self._key[b] for b in below), default=None)
        if lo is not None and hi is not None and lo >= hi:
            raise InconsistentOrder("requested interval is empty")
        if lo is not None:
            pos = bisect.bisect_right(self._keys_sorted, (lo, float("inf")))
            if pos < len(self._keys_sorted):
                return (lo + self._keys_sorted[pos][0]) / 2
            return lo + 1
        if hi is not None:
            pos = bisect.bisect_left(self._keys_sorted, (hi,))
            if pos > 0:
                return (self._keys_sorted[pos - 1][0] + hi) / 2
            return hi - 1
        return self._keys_sorted[-1][0] + 1 if self._keys_sorted else Fraction(0)

    def realize(self, req: FreshRequest) -> int:
        if req.anchor is not None:
            return self._realize_copy(req)
        return self._realize_general(req)

    def fresh(self, edges=(), above=(), below=(), unary=(), out_facts=None, in_facts=None, sym="E") -> int:
        """General-mode shortcut; ``edges`` are symmetric facts of symbol ``sym``."""
        out = {x: frozenset(s) for x, s in (out_facts or {}).items()}
        inn = {x: frozenset(s) for x, s in (in_facts or {}).items()}
        for x in edges:
            out[x] = out.get(x, EMPTY) | {sym}
            inn[x] = inn.get(x, EMPTY) | {sym}
        return self.realize(
            FreshRequest(
                out_facts=out,
                in_facts=inn,
                unary=frozenset(unary),
                above=frozenset(above),
                below=frozenset(below),
            )
        )

    def fresh_copy(self, anchor, fixed=(), avoid=()) -> int:
        return self.realize(FreshRequest(anchor=anchor, fixed=frozenset(fixed), avoid=frozenset(avoid)))

    def _realize_general(self, req: FreshRequest) -> int:
        named = set(req.out_facts) | set(req.in_facts) | set(req.above) | set(req.below)
        for x in named:
            self._check(x)
        for u in req.unary:
            if u not in self.vocabulary.unary:
                raise InvalidStructure(f"unknown unary symbol {u!r}")
        if self.kind == RADO_BIT:
            out = {x for x, s in req.out_facts.items() if s}
            inn = {x for x, s in req.in_facts.items() if s}
            if out != inn:
                raise InvalidStructure("rado-bit edges are symmetric")
            return self._bit_atom(out)
        if self.kind in (EQUALITY, DENSE_ORDER):
            if any(req.out_facts.values()) or any(req.in_facts.values()):
                raise InvalidStructure(f"{self.kind} worlds have no binary relations")
        key = self._place(req.above, req.below)
        atom = self._mint()
        self._insert(atom, key)
        if req.unary:
            self._unary[atom] = frozenset(req.unary)
        try:
            for x, syms in req.out_facts.items():
                for s in syms:
                    self._set_fact(s, atom, x)
            for x, syms in req.in_facts.items():
                for s in syms:
                    self._set_fact(s, x, atom)
        except InvalidStructure:
            self._remove(atom)
            raise
        hit = self._forbidden_through(atom)
        if hit is not None:
            self._remove(atom)
            raise ForbiddenSubstructure(*hit)
        return atom

    def _realize_copy(self, req: FreshRequest) -> int:
        z = req.anchor
        self._check(z)
        X, Y = set(req.fixed), set(req.avoid)
        if X & Y or z in X or z in Y:
            raise ValueError("fixed set, avoid set and anchor must be pairwise disjoint")
        for x in X | Y:
            self._check(x)
        if self.kind == RADO_BIT:
            return self._bit_atom({x for x in X if _bit_edge(z, x)})
        key = None
        if self.ordered:
            key = self._place([z], [])
        atom = self._mint()
        self._insert(atom, key)
        if z in self._unary:
            self._unary[atom] = self._unary[z]
        for x in X:
            for s in self._out[z].get(x, EMPTY):
                self._set_fact(s, atom, x)
            for s in self._in[z].get(x, EMPTY):
                self._set_fact(s, x, atom)
        hit = self._forbidden_through(atom)
        if hit is not None:
            self._remove(atom)
            raise AssertionError(f"free amalgamation violated by copy of {z}: {hit}")
        return atom

    def _bit_atom(self, neighbours) -> int:
        # the top bit must exceed every known atom, so edges to them are read off the low bits
        high = max(max(self._known, default=0).bit_length(), max(neighbours, default=-1) + 1)
        while high in self._known:
            high += 1
        atom = sum(1 << n for n in neighbours) + (1 << high)
        self._atoms.append(atom)
        self._known.add(atom)
        return atom

    # ---------------------------------------------------- forbidden structures
    def _forbidden_through(self, atom):
        """Search for an embedding of a forbidden structure whose image contains ``atom``."""
        if self.kind != ORDERED_FORB or not len(self.forbidden):
            return None
        cands = [atom] + sorted(self._related[atom])
        for i, F in enumerate(self.forbidden):
            for first in F.elements:
                emb = self._embed(F, cands, {first: atom})
                if emb is not None:
                    return i, emb
        return None

    def find_forbidden(self):
        """Exhaustive check of the whole presentation; returns (index, embedding) or None."""
        if self.kind != ORDERED_FORB:
            return None
        for a in self._atoms:
            hit = self._forbidden_through(a)
            if hit is not None:
                return hit
        return None

    def _embed(self, F: FiniteStructure, cands, partial):
        els = list(F.elements)
        todo = [x for x in els if x not in partial]

        def ok(x, img, assign):
            if F.unary_of(x) != self._unary.get(img, EMPTY):
                return False
            for y, jmg in assign.items():
                if y == x:
                    continue
                if jmg == img:
                    return False
                fwd, bwd = F.binary_between(x, y)
                if fwd != self._out[img].get(jmg, EMPTY) or bwd != self._in[img].get(jmg, EMPTY):
                    return False
            return True

        for x, img in partial.items():
            if not ok(x, img, partial):
                return None

        def go(k, assign):
            if k == len(todo):
                return dict(assign)
            x = todo[k]
            for c in cands:
                if c in assign.values():
                    continue
                if ok(x, c, assign):
                    assign[x] = c
                    r = go(k + 1, assign)
                    if r is not None:
                        return r
                    del assign[x]
            return None

        return go(0, dict(partial))

    # ------------------------------------------------------------- structures
    def load_structure(self, S: FiniteStructure) -> dict:
        """Register the elements and facts of ``S``; returns element -> atom.

        Integer elements are used as atom ids when possible.  In ordered
        worlds the structure's order (or its element order) fixes the keys,
        placed above every registered atom.
        """
        order = list(S.order) if S.order is not None else list(S.elements)
        names = {}
        base = self._keys_sorted[-1][0] + 1 if self._keys_sorted else Fraction(1)
        for idx, x in enumerate(order):
            want = x if isinstance(x, int) and x not in self._known else None
            key = base + idx if self.ordered else None
            if self.kind == RADO_BIT:
                if not isinstance(x, int):
                    raise InvalidStructure("rado-bit elements must be naturals")
                names[x] = self.register(x)
            else:
                names[x] = self.register(want, key=key, unary=S.unary_of(x))
        if self.kind == RADO_BIT:
            for s, a, b in S.binary_facts:
                if not _bit_edge(a, b):
                    raise InvalidStructure(f"({a}, {b}) is not an edge of the bit graph")
            for a, b in itertools.combinations(S.elements, 2):
                if _bit_edge(a, b) and not S.related(a, b):
                    raise InvalidStructure(f"({a}, {b}) is an edge of the bit graph")
            return names
        for s, a, b in S.binary_facts:
            self._set_fact(s, names[a], names[b])
        hit = self.find_forbidden()
        if hit is not None:
            raise ForbiddenSubstructure(*hit)
        return names

    def snapshot(self, atoms=None) -> FiniteStructure:
        """The induced finite structure on ``atoms`` (default: all registered)."""
        atoms = list(self._atoms if atoms is None else atoms)
        aset = set(atoms)
        uf = frozenset((u, a) for a in atoms for u in self._unary.get(a, EMPTY))
        bf = set()
        for a in atoms:
            for b in atoms:
                if a != b:
                    for s in self.binary(a, b)[0]:
                        bf.add((s, a, b))
        order = tuple(self.sorted_atoms(atoms)) if self.ordered else None
        assert aset == set(atoms)
        return FiniteStructure(tuple(atoms), uf, frozenset(bf), order)


def _bit_edge(a: int, b: int) -> bool:
    if a == b:
        return False
    lo, hi = (a, b) if a < b else (b, a)
    return (hi >> lo) & 1 == 1


# ------------------------------------------------------------------- presets
PRESETS = ("equality", "order", "rado-bit", "ordered-rado", "ordered-henson-k3", "ordered-digraph")


def preset(name: str, constants: Iterable[int] = ()) -> World:
    """Build one of the shipped worlds by name."""
    graph = Vocabulary(binary=("E",))
    if name == "equality":
        return World(EQUALITY, name=name, constants=constants)
    if name == "order":
        return World(DENSE_ORDER, name=name, constants=constants)
    if name == "rado-bit":
        return World(RADO_BIT, name=name, constants=constants)
    if name == "ordered-rado":
        return World(ORDERED_FORB, graph, ForbiddenFamily([_one_way()]), name, constants)
    if name == "ordered-henson-k3":
        return World(ORDERED_FORB, graph, ForbiddenFamily([_one_way(), _triangle()]), name, constants)
    if name == "ordered-digraph":
        return World(ORDERED_FORB, graph, ForbiddenFamily([_two_way()]), name, constants)
    raise ValueError(f"unknown world {name!r}; choose from {', '.join(PRESETS)}")


def relate(world: World, a, b) -> RelationProfile:
    return world.relate(a, b)


def realize(world: World, req: FreshRequest) -> int:
    return world.realize(req)


def apply_renaming(world: World, mapping: Mapping, check_support: Iterable = ()) -> PartialAutomorphism:
    """Validate that ``mapping`` (identity on ``check_support``) preserves all relation profiles."""
    support = frozenset(check_support)
    images = list(mapping.values())
    if len(set(images)) != len(images):
        raise NotTypePreserving(("not injective", tuple(images)))
    for s in support:
        if mapping.get(s, s) != s:
            raise NotTypePreserving((s, s))
    dom = list(mapping) + sorted(support - set(mapping))
    phi = dict(mapping)
    for s in support:
        phi.setdefault(s, s)
    if set(images) & (support - set(mapping)):
        bad = next(iter(set(images) & (support - set(mapping))))
        raise NotTypePreserving((bad, bad))
    for x, y in itertools.combinations_with_replacement(dom, 2):
        if world.relate(x, y) != world.relate(phi[x], phi[y]):
            raise NotTypePreserving((x, y))
    return PartialAutomorphism(dict(mapping), support)
