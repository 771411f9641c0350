"""Weighted automata whose states are finitely supported vectors.

A state vector is a finite map from basis elements ``(tag, tuple)`` to
coefficients, where each tag stands for one copy of A^k.  Transitions are
given per orbit: for a basis element and a letter, the type of the
concatenated tuple selects a template whose entries refer to positions of
that tuple (or to named support atoms), which makes the extension to all
letters equivariant by construction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping, Sequence

from .eqspace import EqSubspace, member_values, tagged_restriction_values
from .errors import LetterNotInAlphabet, UnsupportedWorld, WindowTooSmall
from .fields import QQ
from .linalg import rank
from .orbits import EQUAL, OrbitDescriptor, TypeDescriptor, ambient_orbits, default_index, enumerate_orbit_reps, qf_type
from .world import RADO_BIT, World


def _forget_order(code: tuple) -> tuple:
    cmp, fwd, bwd = code
    return (0 if cmp == 0 else 2, fwd, bwd)


def type_key(world: World, tup: Sequence, support: Iterable = (), ordered: bool = True) -> TypeDescriptor:
    """Type of ``tup`` over ``support``; with ``ordered=False`` the order relation is forgotten."""
    t = qf_type(world, tup, support)
    if ordered:
        return t
    return TypeDescriptor(
        t.dim,
        t.unary,
        tuple(_forget_order(c) for c in t.pairs),
        t.support,
        tuple(tuple(_forget_order(c) for c in row) for row in t.towards),
    )


def _ref(r) -> str:
    return "c" if isinstance(r, tuple) else "p"


@dataclass
class WeightedAutomaton:
    """Deterministic automaton over Lin of a tagged orbit-finite set.

    ``states`` maps each tag to the arity of its tuples.  ``delta`` maps
    ``(tag, type of x ++ letter)`` to a template ``{(tag', refs): coefficient}``
    where each ref is a position in ``x ++ letter`` or ``("const", atom)``.
    ``output`` maps ``(tag, type of x)`` to a scalar; missing keys mean zero.
    """

    world: World
    letter_dim: int
    states: dict
    initial: dict
    delta: dict = dc_field(default_factory=dict)
    output: dict = dc_field(default_factory=dict)
    field: object = QQ
    support: frozenset = frozenset()
    ordered_keys: bool = True
    name: str = "automaton"

    def __post_init__(self):
        self.support = frozenset(self.support) | self.world.named_constants
        self.initial = {k: self.field(c) for k, c in self.initial.items() if c}
        for (tag, tup) in self.initial:
            if set(tup) - self.support:
                raise ValueError("the initial vector must be supported by the automaton support")

    # -- building
    def key(self, tup: Sequence, within: World | None = None) -> TypeDescriptor:
        return type_key(within or self.world, tup, self.support, self.ordered_keys)

    def set_transition(self, tag, state_tuple: Sequence, letter: Sequence, result: Mapping, within: World | None = None):
        """Define delta on the orbit of ``(tag, state_tuple)`` read with ``letter``.

        ``result`` maps ``(tag', tuple)`` to coefficients; its atoms must come
        from the state tuple, the letter or the support.  The representative
        may live in a scratch copy ``within`` of the world (see World.scratch).
        """
        full = tuple(state_tuple) + tuple(letter)
        tmpl = {}
        for (tag2, tup), c in result.items():
            refs = []
            for a in tup:
                if a in full:
                    refs.append(full.index(a))
                elif a in self.support:
                    refs.append(("const", a))
                else:
                    raise ValueError(f"atom {a} is neither in the state, the letter nor the support")
            if len(refs) != self.states[tag2]:
                raise ValueError(f"tag {tag2!r} expects {self.states[tag2]} atoms")
            tmpl[(tag2, tuple(refs))] = self.field(c)
        self.delta[(tag, self.key(full, within))] = {k: c for k, c in tmpl.items() if c != self.field.zero}

    def set_output(self, tag, state_tuple: Sequence, value, within: World | None = None):
        self.output[(tag, self.key(tuple(state_tuple), within))] = self.field(value)

    # -- running
    def check_letter(self, letter):
        letter = tuple(letter)
        if len(letter) != self.letter_dim:
            raise LetterNotInAlphabet(f"letters have {self.letter_dim} atoms, got {letter}")
        for a in letter:
            if a not in self.world:
                raise LetterNotInAlphabet(f"atom {a!r} is not registered")
        return letter

    def step(self, state: Mapping, letter) -> dict:
        f = self.field
        letter = tuple(letter)
        out: dict = {}
        for (tag, x), c in state.items():
            full = x + letter
            tmpl = self.delta.get((tag, self.key(full)))
            if not tmpl:
                continue
            for (tag2, refs), d in tmpl.items():
                tup = tuple(r[1] if isinstance(r, tuple) else full[r] for r in refs)
                k = (tag2, tup)
                s = f.add(out.get(k, f.zero), f.mul(c, d))
                if s == f.zero:
                    out.pop(k, None)
                else:
                    out[k] = s
        return out

    def read(self, word: Iterable, state: Mapping | None = None) -> dict:
        state = dict(self.initial) if state is None else dict(state)
        for letter in word:
            state = self.step(state, self.check_letter(letter))
        return state

    def evaluate(self, state: Mapping):
        f = self.field
        total = f.zero
        for (tag, x), c in state.items():
            w = self.output.get((tag, self.key(x)))
            if w is not None:
                total = f.add(total, f.mul(c, w))
        return total

    def run(self, word: Iterable):
        return self.evaluate(self.read(word))

    def scaled(self, initial_factor=1, output_factor=1) -> "WeightedAutomaton":
        f = self.field
        a, b = f(initial_factor), f(output_factor)
        return WeightedAutomaton(
            self.world,
            self.letter_dim,
            dict(self.states),
            {k: f.mul(a, c) for k, c in self.initial.items()},
            dict(self.delta),
            {k: f.mul(b, c) for k, c in self.output.items()},
            f,
            self.support,
            self.ordered_keys,
            self.name,
        )

    # -- serialization
    def as_data(self):
        f = self.field
        return {
            "name": self.name,
            "letter_dim": self.letter_dim,
            "ordered_keys": self.ordered_keys,
            "support": sorted(self.support),
            "states": dict(self.states),
            "initial": [[tag, list(t), f.fmt(c)] for (tag, t), c in sorted(self.initial.items())],
            "delta": [
                {
                    "tag": tag,
                    "key": key.as_data(),
                    "result": [[t2, [list(r) if isinstance(r, tuple) else r for r in refs], f.fmt(c)] for (t2, refs), c in sorted(tmpl.items(), key=repr)],
                }
                for (tag, key), tmpl in sorted(self.delta.items(), key=repr)
            ],
            "output": [{"tag": tag, "key": key.as_data(), "value": f.fmt(c)} for (tag, key), c in sorted(self.output.items(), key=repr)],
        }

    @classmethod
    def from_data(cls, world: World, data, field=QQ) -> "WeightedAutomaton":
        aut = cls(
            world,
            data["letter_dim"],
            dict(data["states"]),
            {(tag, tuple(t)): field.parse(c) for tag, t, c in data["initial"]},
            field=field,
            support=frozenset(data.get("support", ())),
            ordered_keys=data.get("ordered_keys", True),
            name=data.get("name", "automaton"),
        )
        for d in data["delta"]:
            key = TypeDescriptor.from_data(d["key"])
            aut.delta[(d["tag"], key)] = {
                (t2, tuple(tuple(r) if isinstance(r, list) else r for r in refs)): field.parse(c)
                for t2, refs, c in d["result"]
            }
        for o in data["output"]:
            aut.output[(o["tag"], TypeDescriptor.from_data(o["key"]))] = field.parse(o["value"])
        return aut


# ------------------------------------------------------------------ the example function
def first_letter_adjacent(world: World, word: Sequence) -> int:
    """1 if the first letter is adjacent to every later letter, 0 otherwise (and on the empty word)."""
    if not word:
        return 0
    a = word[0][0]
    return int(all(world.relate(a, b[0]).related and a != b[0] for b in word[1:]))


def _adjacency_reps(world: World):
    """A scratch world holding x, a neighbour of x and a non-neighbour of x."""
    rep = world.scratch()
    x = rep.fresh()
    adj = rep.fresh(edges=[x])
    non = rep.fresh()
    return rep, x, adj, non


def first_letter_automaton(world: World, field=QQ) -> WeightedAutomaton:
    """States: the start vector and one tracking state per atom (the first letter)."""
    aut = WeightedAutomaton(world, 1, {"start": 0, "first": 1}, {("start", ()): 1}, field=field, ordered_keys=False, name="first-adjacent-all")
    rep, x, adj, non = _adjacency_reps(world)
    aut.set_transition("start", (), (x,), {("first", (x,)): 1}, rep)
    aut.set_transition("first", (x,), (adj,), {("first", (x,)): 1}, rep)
    aut.set_transition("first", (x,), (non,), {}, rep)
    aut.set_transition("first", (x,), (x,), {}, rep)
    aut.set_output("first", (x,), 1, rep)
    return aut


def second_letter_automaton(world: World, field=QQ) -> WeightedAutomaton:
    """Accepts when the first letter is adjacent to the second one (or the word has one letter)."""
    aut = WeightedAutomaton(
        world, 1, {"start": 0, "first": 1, "yes": 0}, {("start", ()): 1}, field=field, ordered_keys=False, name="first-adjacent-second"
    )
    rep, x, adj, non = _adjacency_reps(world)
    aut.set_transition("start", (), (x,), {("first", (x,)): 1}, rep)
    aut.set_transition("first", (x,), (adj,), {("yes", ()): 1}, rep)
    aut.set_transition("first", (x,), (non,), {}, rep)
    aut.set_transition("first", (x,), (x,), {}, rep)
    aut.set_transition("yes", (), (x,), {("yes", ()): 1}, rep)
    aut.set_output("first", (x,), 1, rep)
    aut.set_output("yes", (), 1, rep)
    return aut


# ------------------------------------------------------------------ derivatives
@dataclass
class Residual:
    """The left derivative u -> f(wu), held as the state reached after w."""

    automaton: WeightedAutomaton
    state: dict

    def __call__(self, word: Iterable):
        return self.automaton.evaluate(self.automaton.read(word, self.state))

    def is_zero(self) -> bool:
        return not self.state


def left_derivative(aut: WeightedAutomaton, word: Iterable) -> Residual:
    return Residual(aut, aut.read(word))


def canonical_state(aut: WeightedAutomaton, state: Mapping):
    """A form of a state vector invariant under automorphisms fixing the support."""
    atoms = sorted({a for (_, x) in state for a in x} - aut.support)
    world = aut.world
    best = None
    for perm in itertools.permutations(atoms):
        pos = {a: i for i, a in enumerate(perm)}
        entries = tuple(
            sorted(
                (tag, tuple(("p", pos[a]) if a in pos else ("c", a) for a in x), aut.field.fmt(c))
                for (tag, x), c in state.items()
            )
        )
        shape = (entries, aut.key(perm) if perm else None)
        enc = repr(shape)
        if best is None or enc < best[0]:
            best = (enc, shape)
    return best[1] if best else ((), None)


def derivative_orbit_census(aut: WeightedAutomaton, window: Sequence, max_len: int = 3) -> int:
    """Number of left derivatives up to automorphism, over words from ``window``.

    Two words give the same derivative class when their reached states agree
    up to renaming atoms; distinct reached states give distinct residuals in
    the automata used here, since their outputs differ on some continuation.
    """
    seen = set()
    for n in range(max_len + 1):
        for word in itertools.product([(a,) for a in window], repeat=n):
            seen.add(canonical_state(aut, aut.read(word)))
    return len(seen)


def witness_atom(subset: Iterable[int], high: int) -> int:
    """A rado-bit atom adjacent to exactly ``subset`` among the naturals below ``high``."""
    return sum(1 << n for n in subset) + (1 << high)


def right_derivative_rank(world: World, k: int, base: Sequence[int] | None = None, window: Sequence[int] | None = None, widen: bool = True) -> list:
    """Ranks of the families {f_S : 1 <= |S| <= s} restricted to a window, for s = 0..k.

    f_S(x) = f(x w) for any word w listing S, the right derivative of the
    first-letter function evaluated on one-letter words.  The window defaults
    to the closed-form witnesses adjacent to exactly T among the base atoms,
    one for every subset T; s = 0 gives the empty family.
    """
    if world.kind != RADO_BIT:
        raise UnsupportedWorld("right_derivative_rank builds its witnesses in the rado-bit world")
    base = list(range(k)) if base is None else list(base)
    if len(base) < k:
        raise ValueError("need at least k base atoms")
    for a in base:
        world.register(a)
    high = max(base, default=-1) + 1
    needed = [witness_atom(T, high) for r in range(len(base) + 1) for T in itertools.combinations(base, r)]
    if window is None:
        window = needed
    else:
        window = list(window)
        missing = [w for w in needed if w not in set(window)]
        if missing:
            if not widen:
                raise WindowTooSmall(f"window lacks {len(missing)} witness atoms, e.g. {missing[0]}")
            window = window + missing
    for a in window:
        world.register(a)
    aut = first_letter_automaton(world)
    ranks = [0]
    for s in range(1, k + 1):
        rows = []
        for r in range(1, s + 1):
            for S in itertools.combinations(base, r):
                word = [(a,) for a in S]
                rows.append([aut.run([(x,)] + word) for x in window])
        ranks.append(rank(QQ, rows))
    return ranks


# ------------------------------------------------------------------ equivalence
@dataclass
class EquivalenceResult:
    equivalent: bool
    witness: tuple | None
    generators: int
    bound: int
    difference: object = None

    def __bool__(self):
        return self.equivalent


def _sum_automaton(a1: WeightedAutomaton, a2: WeightedAutomaton):
    if a1.world is not a2.world:
        raise ValueError("automata over different worlds")
    if a1.field != a2.field or a1.letter_dim != a2.letter_dim:
        raise ValueError("automata over different fields or alphabets")
    return a1.support | a2.support


def realize_pattern(world: World, pattern, t: TypeDescriptor, support) -> tuple:
    """A tuple in the ambient orbit ``(pattern, t)`` returned by ambient_orbits."""
    atoms = enumerate_orbit_reps(world, OrbitDescriptor(support, default_index(t.dim), t))[0]
    return tuple(atoms[int(p[1]) - 1] if p[0] == "pos" else p[1] for p in pattern)


def _letter_reps(world: World, k: int, support: frozenset) -> list:
    """One letter from every orbit of k-tuples over ``support``."""
    return [realize_pattern(world, pattern, t, support) for pattern, t in ambient_orbits(world, k, support)]


def _class_bound(world: World, states: dict, support) -> int:
    return sum(2 ** t.dim for k in states.values() for _, t in ambient_orbits(world, k, support))


def equivalent(a1: WeightedAutomaton, a2: WeightedAutomaton) -> EquivalenceResult:
    """Decide whether two automata compute the same function.

    The reachable part of the disjoint sum is saturated: every new reached
    vector that is not already in the equivariant span of earlier ones is
    kept, and each kept vector is stepped with one letter per letter orbit
    over its support.  The automata agree iff the output difference vanishes
    on all kept vectors.
    """
    world = a1.world
    if not world.free_amalgamation_ordered:
        raise UnsupportedWorld(f"{world.name}: use equivalent_bounded for worlds without a generic order")
    S0 = _sum_automaton(a1, a2)
    f = a1.field
    bound = _class_bound(world, {(1, t): k for t, k in a1.states.items()} | {(2, t): k for t, k in a2.states.items()}, S0)
    W = EqSubspace(f, S0)
    gens: list = []  # (state1, state2, parent index, letter)
    queue: list = []

    def consider(s1, s2, parent, letter):
        items = [((1, tag), x, c) for (tag, x), c in s1.items()] + [((2, tag), x, c) for (tag, x), c in s2.items()]
        vals = tagged_restriction_values(world, items, S0, f)
        if member_values(world, vals, W)[0]:
            return None
        gens.append((s1, s2, parent, letter))
        if len(gens) > bound:
            raise AssertionError(f"saturation exceeded the class-dimension bound {bound}")
        W.add_values(vals)
        diff = f.sub(a1.evaluate(s1), a2.evaluate(s2))
        if diff != f.zero:
            return diff
        queue.append(len(gens) - 1)
        return None

    def word_of(i):
        letters = []
        while gens[i][2] is not None:
            letters.append(gens[i][3])
            i = gens[i][2]
        return tuple(reversed(letters))

    diff = consider(dict(a1.initial), dict(a2.initial), None, None)
    while diff is None and queue:
        i = queue.pop(0)
        s1, s2 = gens[i][0], gens[i][1]
        atoms = {a for (_, x) in list(s1) + list(s2) for a in x}
        for letter in _letter_reps(world, a1.letter_dim, frozenset(atoms) | S0):
            diff = consider(a1.step(s1, letter), a2.step(s2, letter), i, letter)
            if diff is not None:
                break
    if diff is None:
        return EquivalenceResult(True, None, len(gens), bound)
    w = word_of(len(gens) - 1)
    assert f.sub(a1.run(w), a2.run(w)) == diff
    return EquivalenceResult(False, w, len(gens), bound, diff)


def equivalent_bounded(a1: WeightedAutomaton, a2: WeightedAutomaton, window: Sequence, max_len: int = 4) -> EquivalenceResult:
    """Compare two automata on every word of length <= max_len with letters over ``window``."""
    _sum_automaton(a1, a2)
    letters = list(itertools.product(window, repeat=a1.letter_dim))
    f = a1.field
    count = 0
    for n in range(max_len + 1):
        for word in itertools.product(letters, repeat=n):
            count += 1
            d = f.sub(a1.run(word), a2.run(word))
            if d != f.zero:
                return EquivalenceResult(False, word, count, -1, d)
    return EquivalenceResult(True, None, count, -1)


# ------------------------------------------------------------------ random instances
def random_automaton(world: World, rng, coefficients=(-1, 0, 1, 2), name="random") -> WeightedAutomaton:
    """A random automaton with a 0-dim tag ``s`` and a 1-dim tag ``p`` reading single atoms.

    Transition templates are drawn per ordered type of (state tuple, letter),
    with representatives realized in a scratch world.
    """
    pick = lambda: rng.choice(coefficients)  # noqa: E731
    aut = WeightedAutomaton(world, 1, {"s": 0, "p": 1}, {("s", ()): 1}, name=name)
    rep = world.scratch()
    x = rep.fresh()
    aut.set_transition("s", (), (x,), {("s", ()): pick(), ("p", (x,)): pick()}, rep)
    S = rep.named_constants
    for pattern, t in ambient_orbits(rep, 2, S):
        state, letter = realize_pattern(rep, pattern, t, S)
        aut.set_transition(
            "p", (state,), (letter,), {("s", ()): pick(), ("p", (state,)): pick(), ("p", (letter,)): pick()}, rep
        )
        aut.set_transition("s", (), (letter,), {("s", ()): pick(), ("p", (letter,)): pick()}, rep)
    aut.set_output("s", (), pick(), rep)
    for pattern, t in ambient_orbits(rep, 1, S):
        aut.set_output("p", realize_pattern(rep, pattern, t, S), pick(), rep)
    return aut
