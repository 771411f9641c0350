import itertools
import random

from hypothesis import given, settings, strategies as st

from orbitlin.orbits import (
    OrbitDescriptor,
    ambient_orbits,
    default_index,
    enumerate_orbit_reps,
    normalize,
    orbit_of,
    ordered_types,
    projected_classes,
    qf_type,
)
from orbitlin.world import apply_renaming, preset

from oracles import equality_patterns, type_census


def window(world, n):
    return [world.register() for _ in range(n)]


def test_pair_types_in_the_three_basic_worlds():
    eq = preset("equality")
    assert type_census(eq, window(eq, 4), 2) == 2
    order = preset("order")
    assert type_census(order, window(order, 4), 2) == 3
    bit = preset("rado-bit")
    assert type_census(bit, [bit.register(a) for a in range(8)], 2) == 3


def test_equality_types_are_bell_numbers():
    for d, bell in zip(range(1, 5), (1, 2, 5, 15)):
        w = preset("equality")
        assert type_census(w, window(w, d), d) == bell == equality_patterns(d)


def test_ambient_orbit_counts():
    assert len(ambient_orbits(preset("order"), 2)) == 3
    assert len(ambient_orbits(preset("equality"), 2)) == 2
    assert len(ambient_orbits(preset("rado-bit"), 2)) == 3
    assert [len(ambient_orbits(preset("equality"), d)) for d in range(1, 5)] == [1, 2, 5, 15]


def test_ordered_type_counts_per_dimension():
    # distinct-atom increasing tuples; counted by hand for k <= 2 and cross-checked by a window below
    assert [len(ordered_types(preset("ordered-rado"), k)) for k in range(4)] == [1, 1, 2, 8]
    assert [len(ordered_types(preset("ordered-henson-k3"), k)) for k in range(4)] == [1, 1, 2, 7]
    assert [len(ordered_types(preset("ordered-digraph"), k)) for k in range(4)] == [1, 1, 3, 27]


def test_ordered_types_match_a_window_census():
    w = preset("ordered-henson-k3")
    rng = random.Random(3)
    atoms = []
    for _ in range(9):
        edges = [a for a in atoms if rng.random() < 0.4]
        try:
            atoms.append(w.fresh(edges=edges, above=atoms[-1:]))
        except Exception:
            atoms.append(w.fresh(above=atoms[-1:]))
    seen = {qf_type(w, t) for t in itertools.combinations(w.sorted_atoms(atoms), 3)}
    assert seen <= set(ordered_types(w, 3))


def test_normalize_collapses_repeats_and_constants():
    eq = preset("equality")
    a = eq.register()
    orbit, nt, pmap = normalize(eq, (a, a))
    assert orbit.dim == 1 and nt == (a,)
    assert pmap[0] == pmap[1] == ("pos", 1)

    w = preset("order")
    a, s, b = w.register(), w.register(), w.register()
    orbit, nt, pmap = normalize(w, (b, a))
    assert nt == (a, b) and [p[1] for p in pmap] == [2, 1]
    orbit, nt, pmap = normalize(w, (a, s, b), support=[s])
    assert orbit.dim == 2 and pmap[1] == ("const", s)


def test_projected_classes_of_an_ordered_pair():
    w = preset("order")
    a, b = w.register(), w.register()
    classes = projected_classes(orbit_of(w, (a, b)))
    assert [len(c.multiplicity_sets) for c in classes] == [1, 2, 1]
    assert classes[0].multiplicity_sets == ((1, 2),) and classes[-1].multiplicity_sets == ((),)


def test_zero_dimensional_orbit():
    w = preset("order")
    orbit = OrbitDescriptor(frozenset(), (), qf_type(w, ()))
    assert [c.multiplicity_sets for c in projected_classes(orbit)] == [((),)]
    assert enumerate_orbit_reps(w, orbit) == [()]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["order", "ordered-rado", "ordered-henson-k3", "ordered-digraph"]), st.integers(0, 3), st.data())
def test_multiplicities_add_up_and_reps_round_trip(name, d, data):
    w = preset(name)
    types = ordered_types(w, d)
    t = data.draw(st.sampled_from(types))
    orbit = OrbitDescriptor(frozenset(), default_index(d), t)
    assert sum(len(c.multiplicity_sets) for c in projected_classes(orbit)) == 2**d
    reps = enumerate_orbit_reps(w, orbit, 3)
    for r in reps:
        assert normalize(w, r)[0] == orbit
    assert len({a for r in reps for a in r}) == 3 * d


def test_triangle_free_adjacent_pairs_are_disjoint_edges():
    w = preset("ordered-henson-k3")
    a, b = w.register(), w.register()
    w.add_edge(a, b)
    orbit = orbit_of(w, (a, b))
    reps = enumerate_orbit_reps(w, orbit, 3)
    for x, y in reps:
        assert w.is_related(x, y)
    for (x1, y1), (x2, y2) in itertools.combinations(reps, 2):
        for u in (x1, y1):
            for v in (x2, y2):
                assert not w.is_related(u, v)


def test_types_are_invariant_under_validated_renamings():
    w = preset("ordered-rado")
    s = w.register()
    a = w.fresh(edges=[s], above=[s])
    b = w.fresh(above=[a])
    orbit = orbit_of(w, (a, b), [s])
    (a2, b2), = enumerate_orbit_reps(w, orbit)
    apply_renaming(w, {a: a2, b: b2}, check_support=[s])
    assert qf_type(w, (a2, b2), [s]) == qf_type(w, (a, b), [s])
