"""Finite structures that approximate the atoms: automorphisms, orbit counts,
equivariant endomorphisms, and symplectic spaces over small finite fields.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotInjective, NotIsometric, NotLinear, NotSubbasis, TooLarge
from .fields import QQ, finite_field
from .linalg import Echelon, rank
from .world import FiniteStructure

AUT_BOUND = 16
TUPLE_BOUND = 200_000


# ------------------------------------------------------------------ groups
@dataclass(frozen=True)
class PermGroup:
    """An explicit list of permutations of ``points``; each is a tuple of images."""

    points: tuple
    elements: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def as_maps(self) -> list:
        return [dict(zip(self.points, g)) for g in self.elements]

    def is_closed(self) -> bool:
        """Closure under composition and inverses (and containing the identity)."""
        idx = {p: i for i, p in enumerate(self.points)}
        elems = set(self.elements)
        if tuple(self.points) not in elems:
            return False
        for g in self.elements:
            inv = [None] * len(g)
            for i, x in enumerate(g):
                inv[idx[x]] = self.points[i]
            if tuple(inv) not in elems:
                return False
            for h in self.elements:
                if tuple(g[idx[h[i]]] for i in range(len(h))) not in elems:
                    return False
        return True


def aut_group(B: FiniteStructure, bound: int = AUT_BOUND) -> PermGroup:
    """All automorphisms of a finite structure, by backtracking over partial maps."""
    n = len(B)
    if n > bound:
        raise TooLarge(f"{n} elements exceed the automorphism search bound {bound}")
    els = list(B.elements)
    unary = {x: B.unary_of(x) for x in els}
    rel = {(x, y): B.binary_between(x, y)[0] for x in els for y in els if x != y}
    rank_of = {x: i for i, x in enumerate(B.order)} if B.order is not None else None

    def sig(x):
        outs = sorted(tuple(sorted(rel[x, y])) for y in els if y != x)
        ins = sorted(tuple(sorted(rel[y, x])) for y in els if y != x)
        return (tuple(sorted(unary[x])), tuple(outs), tuple(ins))

    sigs = {x: sig(x) for x in els}
    found = []

    def go(k, image, used):
        if k == n:
            found.append(tuple(image[x] for x in els))
            return
        x = els[k]
        for y in els:
            if y in used or sigs[y] != sigs[x]:
                continue
            if rank_of is not None and rank_of[x] != rank_of[y]:
                continue
            if all(rel[x, z] == rel[y, image[z]] and rel[z, x] == rel[image[z], y] for z in els[:k]):
                image[x] = y
                used.add(y)
                go(k + 1, image, used)
                used.discard(y)
                del image[x]

    go(0, {}, set())
    return PermGroup(tuple(els), tuple(found))


def tuple_orbits(B: FiniteStructure, d: int, group: PermGroup | None = None) -> list:
    """Orbits of B^d under the automorphism group, as sorted lists of tuples."""
    n = len(B)
    if n ** d > TUPLE_BOUND:
        raise TooLarge(f"{n}^{d} tuples exceed the enumeration bound {TUPLE_BOUND}")
    group = group or aut_group(B)
    maps = group.as_maps()
    seen: set = set()
    out = []
    for t in itertools.product(B.elements, repeat=d):
        if t in seen:
            continue
        orb = {tuple(g[x] for x in t) for g in maps}
        seen |= orb
        out.append(sorted(orb, key=repr))
    return out


def orbit_count(B: FiniteStructure, d: int, group: PermGroup | None = None) -> int:
    return len(tuple_orbits(B, d, group))


def endo_dim(B: FiniteStructure, d: int, field=QQ, group: PermGroup | None = None) -> int:
    """Dimension of the linear maps on Lin(B^d) that commute with every automorphism.

    A map is a matrix indexed by pairs of d-tuples; commuting with g means the
    entry at (gx, gy) equals the entry at (x, y).  The answer is the number of
    unknowns minus the rank of these constraints.
    """
    n = len(B)
    if n ** (2 * d) > TUPLE_BOUND:
        raise TooLarge(f"{n}^{2 * d} matrix entries exceed the bound {TUPLE_BOUND}")
    group = group or aut_group(B)
    tuples = list(itertools.product(B.elements, repeat=d))
    pos = {t: i for i, t in enumerate(tuples)}
    N = len(tuples)
    one = field.one
    rows = []
    for g in group.as_maps():
        for x in tuples:
            gx = pos[tuple(g[a] for a in x)]
            for y in tuples:
                gy = pos[tuple(g[a] for a in y)]
                i, j = pos[x] * N + pos[y], gx * N + gy
                if i != j:
                    rows.append({i: one, j: field.neg(one)})
    return N * N - rank(field, rows)


def pure_set(n: int) -> FiniteStructure:
    return FiniteStructure(tuple(range(n)))


def path(n: int) -> FiniteStructure:
    return FiniteStructure.graph(range(n), [(i, i + 1) for i in range(n - 1)])


def bell(n: int) -> int:
    """Bell numbers via the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


# ------------------------------------------------------------------ symplectic spaces
class SymplecticSpace:
    """F_q^{2n} with basis e_1..e_n, f_1..f_n and the standard alternating form.

    Vectors are tuples of length 2n: slots 0..n-1 hold the e-coordinates and
    slots n..2n-1 the f-coordinates.
    """

    def __init__(self, n: int, q: int = 2):
        if n < 0:
            raise ValueError("dimension parameter must be non-negative")
        self.n = n
        self.q = q
        self.field = finite_field(q)
        self.zero = (self.field.zero,) * (2 * n)

    def __repr__(self):
        return f"SymplecticSpace(n={self.n}, q={self.q})"

    def e(self, i: int) -> tuple:
        """Basis vector e_i, 1-based."""
        return self._unit(i - 1)

    def f(self, i: int) -> tuple:
        return self._unit(self.n + i - 1)

    def _unit(self, k: int) -> tuple:
        v = list(self.zero)
        v[k] = self.field.one
        return tuple(v)

    def vec(self, coords: Sequence) -> tuple:
        if len(coords) != 2 * self.n:
            raise ValueError(f"vectors of W_{self.n} have {2 * self.n} coordinates")
        return tuple(self.field(c) for c in coords)

    def add(self, u, v):
        return tuple(self.field.add(a, b) for a, b in zip(u, v))

    def sub(self, u, v):
        return tuple(self.field.sub(a, b) for a, b in zip(u, v))

    def scale(self, c, v):
        return tuple(self.field.mul(c, a) for a in v)

    def combo(self, coeffs: Iterable, vectors: Iterable) -> tuple:
        out = self.zero
        for c, v in zip(coeffs, vectors):
            out = self.add(out, self.scale(c, v))
        return out

    def omega(self, u, v):
        f, n = self.field, self.n
        s = f.zero
        for i in range(n):
            s = f.add(s, f.sub(f.mul(u[i], v[n + i]), f.mul(u[n + i], v[i])))
        return s

    def vectors(self) -> list:
        return [tuple(c) for c in itertools.product(self.field.elements(), repeat=2 * self.n)]

    def graph(self) -> FiniteStructure:
        """The symplectic graph: all vectors, u ~ v iff omega(u, v) = 1 (q = 2 only)."""
        if self.q != 2:
            raise ValueError("the symplectic graph is defined over F_2")
        vs = self.vectors()
        edges = [(u, v) for u, v in itertools.combinations(vs, 2) if self.omega(u, v) == 1]
        return FiniteStructure.graph(vs, edges)

    # -- linear algebra helpers
    def _sparse(self, v) -> dict:
        return {i: c for i, c in enumerate(v) if c != self.field.zero}

    def rank(self, vectors) -> int:
        return rank(self.field, [self._sparse(v) for v in vectors])

    def coordinates(self, basis: Sequence, v) -> list | None:
        """Coefficients of ``v`` in the (independent) list ``basis``, or None."""
        e = Echelon(self.field, track=True)
        for k, b in enumerate(basis):
            e.add(self._sparse(b), label=k)
        rem, combo = e.reduce(self._sparse(v))
        if rem:
            return None
        return [combo.get(k, self.field.zero) for k in range(len(basis))]


def check_subbasis(space: SymplecticSpace, es: Sequence, fs: Sequence):
    """Raise NotSubbasis unless the pairing conditions hold and the vectors are independent.

    ``es`` may be longer than ``fs``; the extra e-vectors are unpaired.
    """
    if len(fs) > len(es):
        raise NotSubbasis("more f-vectors than e-vectors")
    w, one, zero = space.omega, space.field.one, space.field.zero
    for i, j in itertools.combinations(range(len(es)), 2):
        if w(es[i], es[j]) != zero:
            raise NotSubbasis(f"omega(e{i + 1}, e{j + 1}) != 0", ("e", i, "e", j))
    for i, j in itertools.combinations(range(len(fs)), 2):
        if w(fs[i], fs[j]) != zero:
            raise NotSubbasis(f"omega(f{i + 1}, f{j + 1}) != 0", ("f", i, "f", j))
    for i in range(len(es)):
        for j in range(len(fs)):
            want = one if i == j else zero
            if w(es[i], fs[j]) != want:
                raise NotSubbasis(f"omega(e{i + 1}, f{j + 1}) should be {want}", ("e", i, "f", j))
    if space.rank(list(es) + list(fs)) != len(es) + len(fs):
        raise NotSubbasis("vectors are linearly dependent")


def _orthogonalize(space: SymplecticSpace, x, es, fs):
    """Project x into the orthogonal complement of the span of the pairs (es[i], fs[i])."""
    w = space.omega
    for e, f in zip(es, fs):
        x = space.add(x, space.scale(space.field.neg(w(x, f)), e))
        x = space.add(x, space.scale(w(x, e), f))
    return x


def _partner(space: SymplecticSpace, target, constraints):
    """Some y with omega(target, y) = 1 and omega(c, y) = 0 for every c in ``constraints``."""
    F = space.field
    n2 = 2 * space.n
    # omega(u, y) is linear in y with coefficient vector J u
    def functional(u):
        n = space.n
        return tuple(F.neg(u[n + i]) for i in range(n)) + tuple(u[i] for i in range(n))

    rows = [functional(c) for c in constraints] + [functional(target)]
    rhs = [F.zero] * len(constraints) + [F.one]
    # solve rows . y = rhs by elimination on the augmented system
    e = Echelon(F, track=True)
    for k, r in enumerate(rows):
        e.add({i: c for i, c in enumerate(r) if c != F.zero}, label=k)
    y = [F.zero] * n2
    # back-substitute: each echelon row is a combination of the original rows
    for p, row in e.rows.items():
        val = F.zero
        for k, c in e.combos[p].items():
            val = F.add(val, F.mul(c, rhs[k]))
        y[p] = val
    y = tuple(y)
    assert all(space.omega(c, y) == F.zero for c in constraints) and space.omega(target, y) == F.one
    return y


def complete_subbasis(space: SymplecticSpace, es: Sequence = (), fs: Sequence = ()):
    """Extend a symplectic subbasis (extra unpaired e-vectors allowed) to a full basis.

    Returns ``(E, F)``, two lists of n vectors each, starting with the input.
    """
    es, fs = [tuple(x) for x in es], [tuple(x) for x in fs]
    check_subbasis(space, es, fs)
    E, Fv = list(es[: len(fs)]), list(fs)
    extra = list(es[len(fs):])
    # pair every extra e-vector with a partner orthogonal to everything else
    while extra:
        x = extra.pop(0)
        y = _partner(space, x, E + Fv + extra)
        E.append(x)
        Fv.append(y)
    # then keep adding hyperbolic pairs from the orthogonal complement
    while len(E) < space.n:
        x = next(
            x for x in (_orthogonalize(space, space._unit(k), E, Fv) for k in range(2 * space.n))
            if x != space.zero
        )
        y = next(
            y
            for y in (_orthogonalize(space, space._unit(k), E, Fv) for k in range(2 * space.n))
            if space.omega(x, y) != space.field.zero
        )
        E.append(x)
        Fv.append(space.scale(space.field.inv(space.omega(x, y)), y))
    check_subbasis(space, E, Fv)
    return E, Fv


@dataclass(frozen=True)
class LinearMap:
    """A linear self-map of a symplectic space, given by the images of the 2n unit vectors."""

    space: SymplecticSpace
    columns: tuple

    def __call__(self, v) -> tuple:
        return self.space.combo(v, self.columns)

    def is_isometry(self) -> bool:
        w = self.space.omega
        cols = self.columns
        return all(w(cols[i], cols[j]) == w(self.space._unit(i), self.space._unit(j)) for i in range(len(cols)) for j in range(len(cols)))

    def is_bijective(self) -> bool:
        return self.space.rank(self.columns) == 2 * self.space.n


def _validate_partial(space: SymplecticSpace, pairs: Sequence):
    F = space.field
    dom = [tuple(u) for u, _ in pairs]
    img = [tuple(v) for _, v in pairs]
    both = [u + v for u, v in zip(dom, img)]
    r_dom = space.rank(dom)
    if rank(F, [{i: c for i, c in enumerate(x) if c != F.zero} for x in both]) != r_dom:
        raise NotLinear("the assignment does not extend to a linear map", _dependency_witness(space, dom, img))
    if space.rank(img) != r_dom:
        raise NotInjective("the linear extension has a kernel", _kernel_witness(space, dom, img))
    for i, j in itertools.combinations_with_replacement(range(len(dom)), 2):
        if space.omega(dom[i], dom[j]) != space.omega(img[i], img[j]):
            raise NotIsometric(f"omega changes on pair ({i}, {j})", (dom[i], dom[j]))
    return dom, img


def _dependency_witness(space, dom, img):
    for k in range(len(dom)):
        co = space.coordinates(dom[:k], dom[k])
        if co is not None and space.combo(co, img[:k]) != img[k]:
            return dom[k]
    return None


def _kernel_witness(space, dom, img):
    # a nonzero domain combination that maps to zero
    F = space.field
    for coeffs in itertools.product(F.elements(), repeat=len(dom)):
        u = space.combo(coeffs, dom)
        if u != space.zero and space.combo(coeffs, img) == space.zero:
            return u
    return None


def _independent(space: SymplecticSpace, vectors) -> list:
    """Indices of a maximal independent prefix-greedy subfamily."""
    e = Echelon(space.field)
    return [k for k, v in enumerate(vectors) if e.add(space._sparse(v))]


def witt_extend(space: SymplecticSpace, pairs: Sequence) -> LinearMap:
    """Extend a linear isometric injection, given on generators, to an automorphism.

    The domain X splits as its radical X0 plus a complement X1; X1 is
    non-degenerate, so it has a symplectic basis, and the radical vectors join
    it as unpaired e-vectors.  Completing this subbasis, and its image, to
    full symplectic bases gives the extension.
    """
    dom, img = _validate_partial(space, pairs)
    keep = _independent(space, dom)
    dom = [dom[k] for k in keep]
    img = [img[k] for k in keep]
    F, w = space.field, space.omega
    # radical X0 = X ∩ X^perp, as coordinate combinations of dom
    m = len(dom)
    gram = [[w(dom[i], dom[j]) for j in range(m)] for i in range(m)]
    kernel = _kernel_rows(F, gram)
    rad = [space.combo(c, dom) for c in kernel]
    rad_img = [space.combo(c, img) for c in kernel]
    # complement of the radical inside X, greedily from the domain generators
    e = Echelon(F)
    for r in rad:
        e.add(space._sparse(r))
    comp, comp_img = [], []
    for u, v in zip(dom, img):
        if e.add(space._sparse(u)):
            comp.append(u)
            comp_img.append(v)
    P, Q, P_img, Q_img = _symplectic_basis(space, comp, comp_img)
    E1, F1 = complete_subbasis(space, P + rad, Q)
    E2, F2 = complete_subbasis(space, P_img + rad_img, Q_img)
    src, dst = E1 + F1, E2 + F2
    cols = []
    for k in range(2 * space.n):
        co = space.coordinates(src, space._unit(k))
        cols.append(space.combo(co, dst))
    g = LinearMap(space, tuple(cols))
    assert g.is_isometry() and g.is_bijective()
    for u, v in pairs:
        assert g(tuple(u)) == tuple(v)
    return g


def _kernel_rows(F, matrix) -> list:
    """Basis of {c : c . matrix = 0} for a square matrix (left kernel)."""
    m = len(matrix)
    if m == 0:
        return []
    e = Echelon(F, track=True)
    kernel = []
    for i, row in enumerate(matrix):
        if not e.add({j: c for j, c in enumerate(row) if c != F.zero}, label=i):
            rem, combo = e.reduce({j: c for j, c in enumerate(row) if c != F.zero})
            c = {i: F.one}
            for k, x in combo.items():
                c[k] = F.sub(c.get(k, F.zero), x)
            kernel.append([c.get(k, F.zero) for k in range(m)])
    return kernel


def _symplectic_basis(space: SymplecticSpace, xs: list, ys: list):
    """Symplectic Gram-Schmidt on a non-degenerate family, carrying images along."""
    F, w = space.field, space.omega
    xs, ys = list(xs), list(ys)
    P, Q, Pi, Qi = [], [], [], []
    while xs:
        x, xi = xs.pop(0), ys.pop(0)
        k = next(k for k in range(len(xs)) if w(x, xs[k]) != F.zero)
        y, yi = xs.pop(k), ys.pop(k)
        c = F.inv(w(x, y))
        y, yi = space.scale(c, y), space.scale(c, yi)
        P.append(x)
        Q.append(y)
        Pi.append(xi)
        Qi.append(yi)
        rest = []
        for z, zi in zip(xs, ys):
            a, b = F.neg(w(z, y)), w(z, x)
            rest.append(
                (
                    space.add(space.add(z, space.scale(a, x)), space.scale(b, y)),
                    space.add(space.add(zi, space.scale(a, xi)), space.scale(b, yi)),
                )
            )
        xs = [r[0] for r in rest]
        ys = [r[1] for r in rest]
    return P, Q, Pi, Qi


# ------------------------------------------------------------------ graph embedding
def embed_graph(G: FiniteStructure, n: int | None = None, symbol: str = "E") -> dict:
    """Embed an undirected graph as an induced subgraph of the symplectic graph on W_n over F_2.

    Peels off an edge st, embeds the rest with the twisted relation
    E(x,y) + E(x,s)E(y,t) + E(x,t)E(y,s) one dimension lower, and sends s, t
    to e_n, f_n.  Choices of edge, orientation and which vertex of an
    edgeless remainder gets the zero vector are retried until the map is
    injective.  When the peeling finds nothing, a backtracking search over
    all vectors of small spaces settles the question (C4 fits in W_2 only
    this way).  Without ``n`` the smallest n >= |G|/2 that works is used;
    ceil(|G|/2) alone is not always enough (the star K_{1,3} needs W_3).
    """
    verts = list(G.elements)
    adj = G.adjacency(symbol)
    E = {(x, y): int(y in adj[x]) for x in verts for y in verts if x != y}
    for (x, y), e in E.items():
        if e != E[y, x]:
            raise ValueError("embed_graph needs an undirected graph")
    sizes = [n] if n is not None else itertools.count((len(verts) + 1) // 2)
    for m in sizes:
        space = SymplecticSpace(m, 2)
        for emb in itertools.chain(_embeddings(verts, E, m), _searched_embeddings(space, verts, E)):
            out = {x: tuple(v) for x, v in emb.items()}
            _verify_embedding(space, verts, E, out)
            return out
    raise NotInjective(f"no injective embedding of this {len(verts)}-vertex graph into W_{n} was found")


def _embeddings(verts, E, n):
    edges = [(s, t) for s, t in itertools.combinations(verts, 2) if E[s, t]]
    if not edges:
        nonzero = [list(c) for c in itertools.product((0, 1), repeat=n) if any(c)]
        if len(verts) <= len(nonzero):
            yield {x: nonzero[k] + [0] * n for k, x in enumerate(verts)}
        if verts and len(verts) <= len(nonzero) + 1:
            # one vertex may take the zero vector; which one matters upstream
            for z in verts:
                others = [x for x in verts if x != z]
                emb = {x: nonzero[k] + [0] * n for k, x in enumerate(others)}
                emb[z] = [0] * (2 * n)
                yield emb
        return
    if n == 0:
        return
    for u, v in edges:
        for s, t in ((u, v), (v, u)):
            rest = [x for x in verts if x not in (s, t)]
            Est = {
                (x, y): (E[x, y] + E[x, s] * E[y, t] + E[x, t] * E[y, s]) % 2
                for x in rest
                for y in rest
                if x != y
            }
            for sub in _embeddings(rest, Est, n - 1):
                out = {}
                for x in rest:
                    es, fs = sub[x][: n - 1], sub[x][n - 1:]
                    out[x] = es + [E[x, t]] + fs + [E[x, s]]
                out[s] = [0] * (n - 1) + [1] + [0] * n
                out[t] = [0] * (2 * n - 1) + [1]
                if len({tuple(v) for v in out.values()}) == len(out):
                    yield out


SEARCH_BOUND = 256


def _searched_embeddings(space: SymplecticSpace, verts, E):
    """Injective assignments found by backtracking over every vector, for spaces of at most SEARCH_BOUND vectors."""
    if space.q ** (2 * space.n) > SEARCH_BOUND:
        return
    vs = space.vectors()
    w = space.omega

    def go(k, img):
        if k == len(verts):
            yield dict(zip(verts, img))
            return
        for v in vs:
            if v not in img and all(int(w(img[j], v)) == E[verts[j], verts[k]] for j in range(k)):
                yield from go(k + 1, img + [v])

    yield from go(0, [])


def _verify_embedding(space: SymplecticSpace, verts, E, emb: dict):
    if len(set(emb.values())) != len(verts):
        raise AssertionError("embedding is not injective")
    for x, y in itertools.combinations(verts, 2):
        if int(space.omega(emb[x], emb[y])) != E[x, y]:
            raise AssertionError(f"embedding wrong on ({x}, {y})")


# ------------------------------------------------------------------ orbit counts
def gaussian_binomial(d: int, m: int, q: int) -> int:
    if m < 0 or m > d:
        return 0
    num = den = 1
    for i in range(m):
        num *= q ** (d - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def vector_orbit_count(d: int, q: int) -> int:
    """Orbits of d-tuples in an infinite-dimensional vector space over F_q: sum_m [d m]_q."""
    return sum(gaussian_binomial(d, m, q) for m in range(d + 1))


def symplectic_orbit_count(d: int, q: int) -> int:
    """Orbits of d-tuples in W_n for n >= d: sum_m [d m]_q * q^(m choose 2)."""
    return sum(gaussian_binomial(d, m, q) * q ** (m * (m - 1) // 2) for m in range(d + 1))


@dataclass(frozen=True)
class TupleClassification:
    """Pivot positions, span coefficients of the other positions, and form values on pivots.

    Positions are 1-based.  ``span[j]`` maps pivot positions before j to
    coefficients; ``form[(i, k)]`` for pivots i > k is omega(v_i, v_k).
    """

    dim: int
    pivots: tuple
    span: tuple  # ((j, ((i, c), ...)), ...)
    form: tuple  # (((i, k), value), ...)


def classify_tuple(space: SymplecticSpace, tup: Sequence) -> TupleClassification:
    F = space.field
    tup = [tuple(v) for v in tup]
    pivots, span = [], []
    for j, v in enumerate(tup, start=1):
        co = space.coordinates([tup[i - 1] for i in pivots], v)
        if co is None:
            pivots.append(j)
        else:
            span.append((j, tuple((i, c) for i, c in zip(pivots, co) if c != F.zero)))
    form = tuple(
        ((i, k), space.omega(tup[i - 1], tup[k - 1]))
        for a, i in enumerate(pivots)
        for k in pivots[:a]
    )
    return TupleClassification(len(tup), tuple(pivots), tuple(span), form)


def reconstruct(space: SymplecticSpace, cls: TupleClassification) -> list:
    """A tuple with the given classification: pivot number k becomes sum mu e_l + f_k."""
    if len(cls.pivots) > space.n:
        raise ValueError(f"W_{space.n} is too small for {len(cls.pivots)} independent vectors")
    form = dict(cls.form)
    span = dict(cls.span)
    out: dict = {}
    for k, i in enumerate(cls.pivots):
        v = space.f(k + 1)
        for l, i2 in enumerate(cls.pivots[:k]):
            v = space.add(v, space.scale(form[i, i2], space.e(l + 1)))
        out[i] = v
    for j in range(1, cls.dim + 1):
        if j not in out:
            v = space.zero
            for i, c in span[j]:
                v = space.add(v, space.scale(c, out[i]))
            out[j] = v
    return [out[j] for j in range(1, cls.dim + 1)]
