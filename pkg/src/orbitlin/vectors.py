"""Finitely supported vectors over ordered orbits, duos, cogs, and cog decomposition.

A vector is a finite map from atom tuples to coefficients.  Coefficients are
field elements, or tuples of field elements when the vector lives in
``Lin_E O`` for a coefficient space ``E`` inside ``F^n``.

The decomposition follows the conflict-removal induction: equational
conflicts are removed first, then relational ones, and a conflict-free
balanced vector is merged group by group into cogs through one fresh atom.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import BadIndexSet, CoefficientOutsideSpace, NotBalanced, UnsupportedWorld, ZeroVector
from .fields import QQ
from .linalg import Echelon
from .orbits import OrbitDescriptor, default_index, orbit_of, qf_type
from .world import World


class Coeffs:
    """Arithmetic on coefficients: scalars (width None) or tuples of length ``width``."""

    def __init__(self, field=QQ, width: int | None = None):
        self.field = field
        self.width = width
        self.zero = field.zero if width is None else (field.zero,) * width

    def coerce(self, c):
        f = self.field
        if self.width is None:
            return c if _native(f, c) else f(c)
        c = tuple(c)
        if len(c) != self.width:
            raise ValueError(f"coefficient {c} should have length {self.width}")
        return tuple(x if _native(f, x) else f(x) for x in c)

    def is_zero(self, c) -> bool:
        if self.width is None:
            return c == self.field.zero
        return all(x == self.field.zero for x in c)

    def add(self, a, b):
        f = self.field
        if self.width is None:
            return f.add(a, b)
        return tuple(f.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        f = self.field
        if self.width is None:
            return f.sub(a, b)
        return tuple(f.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        f = self.field
        if self.width is None:
            return f.neg(a)
        return tuple(f.neg(x) for x in a)

    def scale(self, k, a):
        """Scalar ``k`` times coefficient ``a``."""
        f = self.field
        if self.width is None:
            return f.mul(k, a)
        return tuple(f.mul(k, x) for x in a)

    def fmt(self, c) -> str:
        if self.width is None:
            return self.field.fmt(c)
        return "(" + ",".join(self.field.fmt(x) for x in c) + ")"

    def parse(self, text):
        text = str(text).strip()
        if self.width is None:
            return self.field.parse(text)
        parts = text.strip("()").split(",")
        return self.coerce([self.field.parse(p) for p in parts])

    def __eq__(self, other):
        return isinstance(other, Coeffs) and other.field == self.field and other.width == self.width

    def __hash__(self):
        return hash((self.field, self.width))


def _native(field, c) -> bool:
    if field.characteristic == 0:
        return isinstance(c, Fraction)
    return isinstance(c, int) and 0 <= c < (field.order or 0)


class VectorFS:
    """A finitely supported vector: tuple -> nonzero coefficient.

    ``orbit`` is the ordered orbit all tuples belong to, or None for a vector
    in the full power ``Lin A^d`` (tuples of one fixed length).
    """

    __slots__ = ("entries", "orbit", "coeffs")

    def __init__(self, entries: Mapping | Iterable = (), orbit: OrbitDescriptor | None = None, field=QQ, width=None, coeffs: Coeffs | None = None):
        self.coeffs = coeffs or Coeffs(field, width)
        self.orbit = orbit
        items = entries.items() if isinstance(entries, Mapping) else entries
        ent: dict = {}
        for t, c in items:
            t = tuple(t)
            c = self.coeffs.coerce(c)
            if t in ent:
                c = self.coeffs.add(ent[t], c)
            ent[t] = c
        self.entries = {t: c for t, c in ent.items() if not self.coeffs.is_zero(c)}

    @classmethod
    def _raw(cls, entries: dict, orbit, coeffs) -> "VectorFS":
        v = cls.__new__(cls)
        v.entries = entries
        v.orbit = orbit
        v.coeffs = coeffs
        return v

    @property
    def field(self):
        return self.coeffs.field

    @property
    def index(self) -> tuple:
        if self.orbit is not None:
            return self.orbit.index
        d = len(next(iter(self.entries))) if self.entries else 0
        return default_index(d)

    def __getitem__(self, t):
        return self.entries.get(tuple(t), self.coeffs.zero)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __bool__(self):
        return bool(self.entries)

    def items(self):
        return self.entries.items()

    def atoms(self) -> set:
        return {a for t in self.entries for a in t}

    def _combine(self, other: "VectorFS", sign: int) -> "VectorFS":
        ops = self.coeffs
        out = dict(self.entries)
        for t, c in other.entries.items():
            if sign < 0:
                c = ops.neg(c)
            s = ops.add(out[t], c) if t in out else c
            if ops.is_zero(s):
                out.pop(t, None)
            else:
                out[t] = s
        return VectorFS._raw(out, self.orbit or other.orbit, ops)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return VectorFS._raw({t: self.coeffs.neg(c) for t, c in self.entries.items()}, self.orbit, self.coeffs)

    def scale(self, k) -> "VectorFS":
        k = self.field(k) if not _native(self.field, k) else k
        ops = self.coeffs
        out = {t: ops.scale(k, c) for t, c in self.entries.items()}
        return VectorFS._raw({t: c for t, c in out.items() if not ops.is_zero(c)}, self.orbit, ops)

    def rename(self, mapping: Mapping) -> "VectorFS":
        """Apply an atom renaming to every tuple (the caller vouches for it)."""
        ops = self.coeffs
        out: dict = {}
        for t, c in self.entries.items():
            u = tuple(mapping.get(a, a) for a in t)
            out[u] = ops.add(out[u], c) if u in out else c
        return VectorFS._raw({t: c for t, c in out.items() if not ops.is_zero(c)}, self.orbit, ops)

    def __eq__(self, other):
        if not isinstance(other, VectorFS):
            return NotImplemented
        return self.entries == other.entries and self.coeffs == other.coeffs

    def __repr__(self):
        body = " + ".join(f"{self.coeffs.fmt(c)}*{t}" for t, c in sorted(self.entries.items(), key=lambda kv: repr(kv[0])))
        return f"VectorFS({body or '0'})"


# ------------------------------------------------------------------ projection
def _slots(v: VectorFS, J) -> list:
    idx = v.index
    out = []
    for p in J:
        p = Fraction(p)
        if p not in idx:
            raise BadIndexSet(f"position {p} is not in the index set {tuple(map(str, idx))}")
        out.append(idx.index(p))
    return sorted(set(out))


def project(v: VectorFS, J: Iterable) -> VectorFS:
    """Sum the entries of ``v`` along the fibres of forgetting positions outside ``J``."""
    slots = _slots(v, J)
    ops = v.coeffs
    out: dict = {}
    for t, c in v.entries.items():
        u = tuple(t[s] for s in slots)
        out[u] = ops.add(out[u], c) if u in out else c
    orbit = v.orbit.project([v.index[s] for s in slots]) if v.orbit is not None else None
    return VectorFS._raw({t: c for t, c in out.items() if not ops.is_zero(c)}, orbit, ops)


def forget(v: VectorFS, position) -> VectorFS:
    """Projection dropping a single position."""
    return project(v, [p for p in v.index if p != Fraction(position)])


def is_balanced(v: VectorFS):
    """(True, None) if every single-position projection vanishes, else (False, first failing position)."""
    for p in v.index:
        if forget(v, p):
            return False, p
    return True, None


# ------------------------------------------------------------------ duos, cogs
@dataclass(frozen=True)
class Duo:
    plus: tuple
    minus: tuple
    orbit: OrbitDescriptor

    def problems(self, world: World) -> list:
        """Human-readable list of violated duo conditions (empty when valid)."""
        a, b, O = self.plus, self.minus, self.orbit
        bad = []
        if not O.contains(world, a):
            bad.append("first tuple is not in the orbit")
        if not O.contains(world, b):
            bad.append("second tuple is not in the orbit")
        d = len(a)
        if len(b) != d:
            return bad + ["length mismatch"]
        for i in range(d):
            if not world.less(a[i], b[i]):
                bad.append(f"order: a[{i}] < b[{i}] fails")
            for j in range(i + 1, d):
                if not world.less(b[i], a[j]):
                    bad.append(f"order: b[{i}] < a[{j}] fails")
        for i in range(d):
            for j in range(d):
                ref = world.binary(a[i], a[j]) if i != j else (frozenset(), frozenset())
                for x, y in ((a[i], b[j]), (b[i], b[j]), (b[i], a[j])):
                    got = world.binary(x, y) if x != y else (frozenset(), frozenset())
                    if got != ref:
                        bad.append(f"relations of ({x},{y}) differ from positions ({i},{j})")
        return bad

    def is_valid(self, world: World) -> bool:
        return not self.problems(world)

    def mix(self, J_slots) -> tuple:
        J = set(J_slots)
        return tuple(self.minus[i] if i in J else self.plus[i] for i in range(len(self.plus)))


def _cog_terms(plus: tuple, minus: tuple):
    d = len(plus)
    for mask in range(1 << d):
        t = tuple(minus[i] if (mask >> i) & 1 else plus[i] for i in range(d))
        yield t, bin(mask).count("1") % 2


def cog(duo: Duo, field=QQ) -> VectorFS:
    """The alternating sum over all mixtures of the two tuples of the duo."""
    one = field.one
    return VectorFS._raw(
        {t: (field.neg(one) if odd else one) for t, odd in _cog_terms(duo.plus, duo.minus)},
        duo.orbit,
        Coeffs(field),
    )


def expand(terms: Iterable, coeffs: Coeffs, orbit=None) -> VectorFS:
    """Sum of coefficient * cog over (coefficient, Duo) pairs."""
    acc: dict = {}
    for lam, duo in terms:
        _sub_cog(acc, coeffs, coeffs.neg(lam), duo.plus, duo.minus)
    return VectorFS._raw(acc, orbit, coeffs)


def _sub_cog(acc: dict, ops: Coeffs, lam, plus, minus):
    """acc -= lam * (plus ≬ minus), in place."""
    neg = ops.neg(lam)
    for t, odd in _cog_terms(plus, minus):
        delta = lam if odd else neg
        c = acc.get(t)
        upd = delta if c is None else ops.add(c, delta)
        if ops.is_zero(upd):
            acc.pop(t, None)
        else:
            acc[t] = upd


def _require_ordered_world(world: World):
    if not world.free_amalgamation_ordered:
        raise UnsupportedWorld(
            f"{world.name}: duos need a generically ordered free amalgamation world; "
            "use the ordered expansion (e.g. 'order' for the equality atoms)"
        )


def make_duo(world: World, a: Sequence, orbit: OrbitDescriptor) -> Duo:
    """Extend ``a`` to a duo by copying its entries one at a time onto fresh atoms."""
    _require_ordered_world(world)
    a = tuple(a)
    if not orbit.contains(world, a):
        raise ValueError(f"{a} is not in the given orbit")
    b: list = []
    for k in range(len(a)):
        fixed = set(orbit.support) | {x for i, x in enumerate(a) if i != k} | set(b)
        b.append(world.fresh_copy(a[k], fixed=fixed))
    duo = Duo(a, tuple(b), orbit)
    bad = duo.problems(world)
    assert not bad, bad
    return duo


def extract_cog(world: World, v: VectorFS):
    """Produce a cog inside the equivariant span of a nonzero vector.

    Returns ``(vector, duo)`` where the vector equals ``cog(duo)``.
    """
    _require_ordered_world(world)
    if not v:
        raise ZeroVector("the zero vector contains no cog")
    if v.coeffs.width is not None:
        raise ValueError("cog extraction needs scalar coefficients")
    orbit = v.orbit if v.orbit is not None else orbit_of(world, next(iter(v)))
    a = min(v.entries, key=lambda t: [world.key(x) for x in t])
    star = (set(orbit.support) | v.atoms()) - set(a)
    duo_star = make_duo(world, a, orbit_of(world, a, star, orbit.index))
    w = v
    for i in range(len(a)):
        w = w - w.rename({a[i]: duo_star.minus[i]})
    field = v.field
    w = w.scale(field.inv(v[a]))
    duo = Duo(a, duo_star.minus, orbit)
    assert w.entries == cog(duo, field).entries, "extracted vector is not the expected cog"
    return VectorFS._raw(w.entries, orbit, v.coeffs), duo


# ------------------------------------------------------------------- conflicts
@dataclass(frozen=True)
class ConflictReport:
    """Conflicting location pairs ((position, atom), (position, atom), kind)."""

    pairs: tuple

    @property
    def equational(self) -> list:
        return [(p, q) for p, q, k in self.pairs if k == "equational"]

    @property
    def relational(self) -> list:
        # equational conflicts are a special case of relational ones
        return [(p, q) for p, q, _ in self.pairs]

    def __bool__(self):
        return bool(self.pairs)

    def __len__(self):
        return len(self.pairs)


def _pattern(orbit: OrbitDescriptor) -> dict:
    """Binary-relation pattern between positions of tuples in the orbit."""
    pat = {}
    for p, P in enumerate(orbit.index):
        for q, Q in enumerate(orbit.index):
            if p != q:
                _, fwd, bwd = orbit.type.pair(p, q)
                pat[(P, Q)] = (frozenset(fwd), frozenset(bwd))
    return pat


def _locations(tuples: Iterable, pos: tuple) -> set:
    return {(P, a) for t in tuples for P, a in zip(pos, t)}


def _conflicts(world: World, pat: dict, locs: set, relational: bool = True) -> list:
    """Sorted list of (loc, loc, kind) with loc < loc."""
    by_atom: dict = {}
    for P, a in locs:
        by_atom.setdefault(a, []).append(P)
    out = []
    for a, ps in by_atom.items():
        ps.sort()
        for P, Q in itertools.combinations(ps, 2):
            out.append(((P, a), (Q, a), "equational"))
    if relational and world.kind != "dense-order":
        present = set(by_atom)
        for a, ps in by_atom.items():
            for b in world.related_atoms(a) & present:
                if not (a < b):
                    continue
                rel = world.binary(a, b)
                for P in ps:
                    for Q in by_atom[b]:
                        if P == Q or rel != pat[(P, Q)]:
                            l1, l2 = sorted([(P, a), (Q, b)])
                            out.append((l1, l2, "relational"))
    out.sort(key=lambda c: (c[0], c[1]))
    return out


def find_conflicts(world: World, v, orbit: OrbitDescriptor | None = None) -> ConflictReport:
    """All conflicts among the locations of a vector or of a set of tuples."""
    if isinstance(v, VectorFS):
        orbit = orbit or v.orbit
        tuples = list(v.entries)
    else:
        tuples = [tuple(t) for t in v]
    if orbit is None:
        if not tuples:
            return ConflictReport(())
        orbit = orbit_of(world, tuples[0])
    pat = _pattern(orbit)
    return ConflictReport(tuple(_conflicts(world, pat, _locations(tuples, orbit.index))))


# --------------------------------------------------------------- decomposition
class CoeffSpace:
    """A subspace E of F^n, kept in reduced echelon form."""

    def __init__(self, field, n: int, generators: Iterable = ()):
        self.field = field
        self.n = n
        self._ech = Echelon(field)
        for g in generators:
            self._ech.add(self._sparse(g))

    def _sparse(self, vec) -> dict:
        vec = tuple(vec)
        if len(vec) != self.n:
            raise ValueError("wrong length")
        return {i: self.field(c) if not _native(self.field, c) else c for i, c in enumerate(vec) if c != 0}

    def __contains__(self, vec) -> bool:
        return self._sparse(vec) in self._ech

    @property
    def dim(self) -> int:
        return self._ech.dim

    def basis(self) -> list:
        return [tuple(r.get(i, self.field.zero) for i in range(self.n)) for r in self._ech.basis()]


class Decomposition(list):
    """List of (coefficient, Duo) with bookkeeping about the run."""

    fresh_atoms: list
    conflict_free_checks: int


def _ins(t: tuple, i: int, a) -> tuple:
    return t[:i] + (a,) + t[i:]


def _drop(t: tuple, i: int) -> tuple:
    return t[:i] + t[i + 1 :]


class _Decomposer:
    def __init__(self, world: World, ops: Coeffs, pat: dict, check: bool = True):
        self.world = world
        self.ops = ops
        self.pat = pat
        self.check = check
        self.fresh: list = []
        self.cf_checks = 0

    # helpers
    def _atoms(self, tuples) -> set:
        return {a for t in tuples for a in t}

    def _duo_tuples(self, K) -> list:
        return [t for _, p, m in K for t in (p, m)]

    def _copy(self, a, fixed, avoid=()):
        a2 = self.world.fresh_copy(a, fixed=set(fixed) - {a} - set(avoid), avoid=set(avoid))
        self.fresh.append(a2)
        return a2

    def _base(self, v: dict) -> list:
        c = v.get(())
        return [] if c is None or self.ops.is_zero(c) else [(c, (), ())]

    def _subtract(self, v: dict, K) -> dict:
        v = dict(v)
        for lam, p, m in K:
            _sub_cog(v, self.ops, lam, p, m)
        return v

    def _sub_at(self, v: dict, i: int, a) -> dict:
        return {_drop(t, i): c for t, c in v.items() if t[i] == a}

    # the three stages
    def general(self, S: frozenset, pos: tuple, v: dict) -> list:
        if not pos:
            return self._base(v)
        out = []
        while v:
            eq = _conflicts(self.world, self.pat, _locations(v, pos), relational=False)
            if not eq:
                break
            P, a = min(l for c in eq for l in c[:2])
            i = pos.index(P)
            A = self.general(S | {a}, _drop(pos, i), self._sub_at(v, i, a))
            fixed = set(S) | self._atoms(v) | self._atoms(self._duo_tuples(A))
            a2 = self._copy(a, fixed)
            new = [(lam, _ins(p, i, a), _ins(m, i, a2)) for lam, p, m in A]
            out += new
            v = self._subtract(v, new)
        return out + self.eqfree(S, pos, v)

    def eqfree(self, S: frozenset, pos: tuple, v: dict) -> list:
        if not pos:
            return self._base(v)
        if not v:
            return []
        rel = _conflicts(self.world, self.pat, _locations(v, pos))
        if not rel:
            return self.conflict_free(S, pos, v)
        P, a = min(l for c in rel for l in c[:2])
        i = pos.index(P)
        A = self.eqfree(S | {a}, _drop(pos, i), self._sub_at(v, i, a))
        K = [(lam, _ins(p, i, a), _ins(m, i, a)) for lam, p, m in A]
        V0 = [t for t in v if t[i] == a]
        K = self.resolve(S, pos, K, V0, list(v), relational=False)
        Y = {l[1] for c in rel for l in c[:2] if (P, a) in c[:2] and l != (P, a)}
        fixed = (set(S) | self._atoms(v) | self._atoms(self._duo_tuples(K))) - Y
        a2 = self._copy(a, fixed, Y)
        new = [(lam, p, m[:i] + (a2,) + m[i + 1 :]) for lam, p, m in K]
        v2 = self._subtract(v, new)
        B = self.eqfree(S, pos, v2)
        V = list(v) + self._duo_tuples(new)
        B = self.resolve(S, pos, B, list(v2), V, relational=False)
        return new + B

    def conflict_free(self, S: frozenset, pos: tuple, v: dict) -> list:
        if not pos:
            return self._base(v)
        if not v:
            return []
        j = len(pos) - 1
        groups: dict = {}
        for t, c in v.items():
            groups.setdefault(t[j], {})[t] = c
        order = self.world.sorted_atoms(groups)
        if len(order) == 1:
            raise AssertionError("a balanced nonzero vector cannot have a single greatest atom")
        g0, top = order[0], order[-1]
        V = list(v)
        per_group = {}

        def group_duos(g):
            A = self.conflict_free(S | {g}, pos[:j], {t[:j]: c for t, c in groups[g].items()})
            K = [(lam, p + (g,), m + (g,)) for lam, p, m in A]
            return self.resolve(S, pos, K, list(groups[g]), V, relational=True)

        for g in order[:-1]:
            per_group[g] = group_duos(g)
            V = V + self._duo_tuples(per_group[g])
        want = {s: self.world.binary(g0, s) for s in S}
        for K in per_group.values():
            for t in self._duo_tuples(K):
                for k in range(j):
                    want[t[k]] = self.pat[(pos[j], pos[k])]
        if all(self.world.binary(top, x) == rel for x, rel in want.items()):
            # the greatest group atom already relates to every duo atom as required
            z = top
        else:
            per_group[top] = group_duos(top)
            for t in self._duo_tuples(per_group[top]):
                for k in range(j):
                    want[t[k]] = self.pat[(pos[j], pos[k])]
            z = self.world.fresh(
                out_facts={x: r[0] for x, r in want.items()},
                in_facts={x: r[1] for x, r in want.items()},
                above=[top],
                unary=self.world.unary_of(g0),
            )
            self.fresh.append(z)
        new = [(lam, p, m[:j] + (z,)) for K in per_group.values() for lam, p, m in K]
        rest = self._subtract(v, new)
        assert not rest, "merging every group into one fresh atom must exhaust the vector"
        if self.check:
            self.cf_checks += 1
            bad = _conflicts(self.world, self.pat, _locations(list(v) + self._duo_tuples(new), pos))
            assert not bad, f"conflict-free stage produced conflicts: {bad[:3]}"
        return new

    def resolve(self, S, pos, K, V0, V, relational: bool) -> list:
        """Rename atoms of the duos K (fixing S and the atoms of V0) until V ∪ K has no conflicts."""
        locV = _locations(V, pos)
        atomsV0 = self._atoms(V0)
        while K:
            KT = self._duo_tuples(K)
            locK = _locations(KT, pos)
            allloc = locV | locK
            found = _conflicts(self.world, self.pat, allloc, relational=False)
            mode_rel = False
            if not found and relational:
                found = _conflicts(self.world, self.pat, allloc)
                mode_rel = True
            if not found:
                return K
            target = None
            for l1, l2, _ in found:
                for l in (l1, l2):
                    if l in locK and l not in locV:
                        target = l
                        break
                if target is not None:
                    break
            assert target is not None, "conflict not attributable to the renamed duos"
            a = target[1]
            assert a not in atomsV0 and a not in S, "renaming would move a fixed atom"
            everything = set(S) | self._atoms(V) | self._atoms(KT)
            Y = set()
            if mode_rel:
                Y = {l[1] for l1, l2, _ in found for l in (l1, l2) if target in (l1, l2) and l != target}
            a2 = self._copy(a, everything - Y, Y)
            ren = lambda t: tuple(a2 if x == a else x for x in t)
            K = [(lam, ren(p), ren(m)) for lam, p, m in K]
        return K


def decompose(world: World, v: VectorFS, coeffs: CoeffSpace | None = None, check: bool = True) -> Decomposition:
    """Write a balanced vector as a combination of cogs.

    Fresh atoms created on the way are registered in ``world``; the result
    records them in ``fresh_atoms``.  The expansion is verified before
    returning.
    """
    _require_ordered_world(world)
    if v.orbit is None:
        if not v:
            out = Decomposition()
            out.fresh_atoms, out.conflict_free_checks = [], 0
            return out
        raise ValueError("decompose needs a vector on a single ordered orbit")
    orbit = v.orbit
    if not orbit.is_ordered():
        raise ValueError("the orbit must be S-ordered")
    if coeffs is not None:
        if v.coeffs.width != coeffs.n:
            raise CoefficientOutsideSpace("coefficient width does not match the coefficient space")
        for t, c in v.items():
            if c not in coeffs:
                raise CoefficientOutsideSpace(f"coefficient {c} of {t} is outside the space")
    ok, bad = is_balanced(v)
    if not ok:
        raise NotBalanced(bad)
    dec = _Decomposer(world, v.coeffs, _pattern(orbit), check)
    raw = dec.general(frozenset(orbit.support), orbit.index, dict(v.entries))
    out = Decomposition((c, Duo(p, m, orbit)) for c, p, m in raw)
    out.fresh_atoms = dec.fresh
    out.conflict_free_checks = dec.cf_checks
    if check:
        total = expand(out, v.coeffs, orbit)
        assert total.entries == v.entries, "decomposition does not expand to the input"
        for _, duo in out:
            assert duo.is_valid(world), duo.problems(world)
        if coeffs is not None:
            for c, _ in out:
                assert c in coeffs
    return out


def vector_on_orbit(world: World, entries, support: Iterable = (), field=QQ, width=None) -> VectorFS:
    """Build a vector whose tuples all share one S-ordered orbit (checked)."""
    v = VectorFS(entries, field=field, width=width)
    if not v:
        raise ValueError("cannot infer the orbit of the zero vector")
    first = next(iter(v))
    orbit = orbit_of(world, first, support)
    for t in v:
        if qf_type(world, t, orbit.support) != orbit.type:
            raise ValueError(f"{t} is not in the orbit of {first}")
    v.orbit = orbit
    return v
