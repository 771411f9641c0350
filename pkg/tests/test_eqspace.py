import random

import pytest
from hypothesis import given, settings, strategies as st

from orbitlin.eqspace import (
    ColumnFamily,
    build_chain,
    check_certificate,
    class_dimensions,
    full_space,
    length_upper_bound,
    member,
    restrict,
    solve,
    subspace_from_generators,
)
from orbitlin.errors import ClassMismatch, UnsupportedWorld
from orbitlin.fields import QQ
from orbitlin.orbits import OrbitDescriptor, default_index, orbit_of, ordered_types, projected_classes
from orbitlin.vectors import VectorFS, vector_on_orbit
from orbitlin.world import preset

from oracles import certificate_holds, oracle_member


def atoms(n, name="order"):
    w = preset(name)
    return w, [w.register() for _ in range(n)]


def vec(pairs):
    return VectorFS({(t if isinstance(t, tuple) else (t,)): c for t, c in pairs})


def test_zero_sum_space_from_a_difference():
    w, (a, b, c) = atoms(3)
    W = subspace_from_generators(w, [vec([(a, 1), (b, -1)])])
    dims = {k.dim: d for k, d in W.dims().items()}
    assert dims == {1: 1}
    ok, _ = member(w, vec([(a, 1), (b, 1), (c, -2)]), W)
    assert ok
    ok, cert = member(w, vec([(a, 1)]), W)
    assert not ok and cert.cls.dim == 0 and check_certificate(W, cert)


def test_no_generators_give_zero():
    w, (a,) = atoms(1)
    W = subspace_from_generators(w, [])
    assert W.total_dim == 0
    assert member(w, VectorFS(), W)[0]
    assert not member(w, vec([(a, 1)]), W)[0]


def test_single_atom_generates_everything():
    w, (a, b) = atoms(2)
    W = subspace_from_generators(w, [vec([(a, 1)])])
    assert W == full_space(w, 1)
    assert member(w, vec([(a, 5), (b, -1)]), W)[0]


def test_restriction_to_a_class():
    w, (a, b) = atoms(2)
    v = vector_on_orbit(w, [((a,), 2), ((b,), -1)])
    classes = projected_classes(v.orbit)
    empty = classes[-1]
    assert restrict(w, v, empty) == {(): (1,)}
    other = projected_classes(orbit_of(w, (a, b)))[0]
    with pytest.raises(ClassMismatch):
        restrict(w, v, other)


def test_unordered_worlds_are_refused():
    w = preset("rado-bit")
    w.register(1)
    with pytest.raises(UnsupportedWorld):
        subspace_from_generators(w, [vec([(1, 1)])])


def test_solver_examples():
    w, (c, d, x, y) = atoms(4)
    fam = [ColumnFamily((x, y), vec([(x, 1), (y, -1)]))]
    assert solve(w, fam, vec([(c, 1), (d, -1)]))[0]
    ok, cert = solve(w, fam, vec([(c, 1)]))
    assert not ok and cert.cls.dim == 0
    assert solve(w, fam, VectorFS())[0]


def test_column_template_must_be_supported_by_its_index():
    w, (x, y, z) = atoms(3)
    with pytest.raises(ValueError):
        solve(w, [ColumnFamily((x,), vec([(x, 1), (z, -1)]))], VectorFS())


def test_length_bounds():
    w = preset("order")
    assert length_upper_bound(w, 2) == 10
    assert length_upper_bound(w, 1) == 2
    for d in range(4):
        t = ordered_types(w, d)[0]
        assert length_upper_bound(w, OrbitDescriptor(frozenset(), default_index(d), t)) == 2**d
    dims = class_dimensions(w, 2)
    assert sorted(dims.values()) == [2, 3, 5]


@pytest.mark.parametrize("name", ["order", "ordered-rado"])
@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_chains_have_length_two_to_the_d(name, d):
    w = preset(name)
    t = ordered_types(w, d)[-1]
    chain = build_chain(w, OrbitDescriptor(frozenset(), default_index(d), t))
    assert chain.length == 2**d and chain.is_strict()


def test_chain_in_dimension_one_is_zero_sum_then_full():
    w = preset("order")
    t = ordered_types(w, 1)[0]
    chain = build_chain(w, OrbitDescriptor(frozenset(), default_index(1), t))
    zero, mid, top = chain.subspaces
    a = w.register()
    b = w.register()
    assert member(w, vec([(a, 1), (b, -1)]), mid)[0]
    assert not member(w, vec([(a, 1)]), mid)[0]
    assert member(w, vec([(a, 1)]), top)[0]


def random_vector(w, pool, rng, d=1):
    return VectorFS({tuple(rng.choice(pool) for _ in range(d)): rng.choice([-2, -1, 1, 2]) for _ in range(rng.randint(1, 3))})


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["order", "ordered-rado", "ordered-henson-k3"]), st.integers(1, 2))
def test_member_agrees_with_rank_oracle(seed, name, d):
    rng = random.Random(seed)
    w = preset(name)
    pool = [w.fresh() for _ in range(5)]
    S = pool[:1] if rng.random() < 0.3 else []
    gens = [random_vector(w, pool, rng, d) for _ in range(rng.randint(1, 2))]
    probe = random_vector(w, pool, rng, d)
    W = subspace_from_generators(w, gens, S)
    ok, cert = member(w, probe, W)
    assert ok == oracle_member(w, gens, probe, S)
    if not ok:
        assert certificate_holds(w, gens, probe, S, cert)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_generation_is_monotone_and_idempotent(seed):
    rng = random.Random(seed)
    w = preset("ordered-rado")
    pool = [w.fresh(edges=[]) for _ in range(5)]
    gens = [random_vector(w, pool, rng, 2) for _ in range(2)]
    W = subspace_from_generators(w, gens)
    assert subspace_from_generators(w, gens[:1]).le(W)
    extra = gens[0] + gens[1].scale(3)
    assert member(w, extra, W)[0]
    assert subspace_from_generators(w, gens + [extra]) == W


def test_constants_refine_the_classes():
    w = preset("order", constants=[0])
    a, b = w.register(1), w.register(2)
    # with 0 named, a - b is no longer enough to reach atoms on the other side of 0
    below = w.fresh(below=[0])
    W = subspace_from_generators(w, [vec([(a, 1), (b, -1)])])
    assert not member(w, vec([(a, 1), (below, -1)]), W)[0]
    assert member(w, vec([(a, 1), (w.fresh(above=[b]), -1)]), W)[0]


def test_subspace_serializes():
    w, (a, b) = atoms(2)
    W = subspace_from_generators(w, [vec([(a, 1), (b, -1)])])
    data = W.as_data()
    assert data["classes"] and data["support"] == []
