import pytest
from hypothesis import given, settings, strategies as st

from orbitlin.demos import manual_witness, triangle_free_configuration
from orbitlin.errors import BadIndexSet, CoefficientOutsideSpace, NotBalanced, ZeroVector
from orbitlin.fields import QQ, PrimeField
from orbitlin.orbits import orbit_of
from orbitlin.vectors import (
    CoeffSpace,
    Duo,
    VectorFS,
    cog,
    decompose,
    expand,
    extract_cog,
    find_conflicts,
    forget,
    is_balanced,
    make_duo,
    project,
    vector_on_orbit,
)
from orbitlin.vectors import Coeffs
from orbitlin.world import preset

from oracles import random_cog_combination


def ordered_atoms(n, name="order"):
    w = preset(name)
    return w, [w.register() for _ in range(n)]


def test_projection_of_zero_and_bad_index():
    w, (a, b) = ordered_atoms(2)
    O = orbit_of(w, (a, b))
    assert not project(VectorFS(orbit=O), [1])
    v = vector_on_orbit(w, [((a, b), 1)])
    with pytest.raises(BadIndexSet):
        project(v, [3])


def test_cog_in_dimension_one_is_a_difference():
    w, (a, b) = ordered_atoms(2)
    duo = Duo((a,), (b,), orbit_of(w, (a,)))
    assert cog(duo).entries == {(a,): 1, (b,): -1}


def test_cog_signs_on_pairs():
    w, (a, g, h, z) = ordered_atoms(4)
    c = cog(Duo((a, h), (g, z), orbit_of(w, (a, h))))
    assert c.entries == {(a, h): 1, (g, h): -1, (a, z): -1, (g, z): 1}


def test_balanced_examples():
    w, (a, b) = ordered_atoms(2)
    assert is_balanced(vector_on_orbit(w, [((a,), 1), ((b,), -1)]))[0]
    ok, i = is_balanced(vector_on_orbit(w, [((a,), 1)]))
    assert not ok and i is not None


def test_triangle_free_vector_is_balanced_in_both_positions():
    v = triangle_free_configuration().vector
    assert is_balanced(v)[0]
    for i in v.orbit.index:
        assert not forget(v, i)


def test_make_duo_on_empty_and_interleaving():
    w, (a, b) = ordered_atoms(2)
    O0 = orbit_of(w, ())
    assert make_duo(w, (), O0).minus == ()
    duo = make_duo(w, (a, b), orbit_of(w, (a, b)))
    b1, b2 = duo.minus
    assert w.less(a, b1) and w.less(b1, b) and w.less(b, b2)


def test_manual_helpers_form_duos():
    conf = triangle_free_configuration()
    terms, extra = manual_witness(conf)
    at = conf.atoms
    gh = Duo((at["g"], at["h"]), (extra["g2"], at["i"]), conf.vector.orbit)
    assert gh.is_valid(conf.world)
    assert all(d.is_valid(conf.world) for _, d in terms)


def test_extract_cog_from_a_minus_two_b():
    w, (a, b) = ordered_atoms(2)
    v = vector_on_orbit(w, [((a,), 1), ((b,), -2)])
    c, duo = extract_cog(w, v)
    assert duo.plus == (a,) and duo.is_valid(w)
    assert c == cog(duo)


def test_extract_cog_over_f2():
    w, (a, b) = ordered_atoms(2)
    F2 = PrimeField(2)
    v = vector_on_orbit(w, [((a,), 1), ((b,), 1)], field=F2)
    c, duo = extract_cog(w, v)
    assert c == cog(duo, F2) and duo.plus == (a,)


def test_extract_cog_of_zero():
    w, (a,) = ordered_atoms(1)
    with pytest.raises(ZeroVector):
        extract_cog(w, VectorFS(orbit=orbit_of(w, (a,))))


def test_conflicts_of_the_triangle_free_vector():
    conf = triangle_free_configuration()
    rep = find_conflicts(conf.world, conf.vector)
    at = conf.atoms
    assert ((1, at["g"]), (2, at["g"])) in rep.equational
    assert ((1, at["a"]), (1, at["b"])) in rep.relational
    assert set(rep.equational) <= set(rep.relational)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["order", "ordered-rado", "ordered-henson-k3"]), st.integers(1, 3))
def test_a_single_cog_has_no_conflicts(seed, name, d):
    w, v, duos = random_cog_combination(name, d, 1, seed)
    assert not find_conflicts(w, cog(duos[0]))


def test_decompose_zero_and_unbalanced():
    w, (a, b) = ordered_atoms(2)
    assert decompose(w, VectorFS()) == []
    with pytest.raises(NotBalanced):
        decompose(w, vector_on_orbit(w, [((a,), 1), ((b,), 1)]))


def test_decompose_a_plus_b_minus_two_c():
    w, (a, b, c) = ordered_atoms(3)
    v = vector_on_orbit(w, [((a,), 1), ((b,), 1), ((c,), -2)])
    dec = decompose(w, v)
    assert expand(dec, v.coeffs, v.orbit) == v


def test_decompose_triangle_free_vector():
    conf = triangle_free_configuration()
    dec = decompose(conf.world, conf.vector)
    assert expand(dec, conf.vector.coeffs, conf.vector.orbit) == conf.vector
    assert len(dec.fresh_atoms) <= 12
    assert conf.world.find_forbidden() is None


def test_coefficients_in_a_subspace():
    w, (a, b, c) = ordered_atoms(3)
    E = CoeffSpace(QQ, 2, [(1, -1)])
    v = vector_on_orbit(w, [((a,), (2, -2)), ((b,), (-3, 3)), ((c,), (1, -1))], width=2)
    dec = decompose(w, v, E)
    assert all(k in E for k, _ in dec)
    assert expand(dec, v.coeffs, v.orbit) == v
    bad = vector_on_orbit(w, [((a,), (1, 0)), ((b,), (-1, 0))], width=2)
    with pytest.raises(CoefficientOutsideSpace):
        decompose(w, bad, E)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(0, 10**6),
    st.sampled_from(["order", "ordered-rado", "ordered-henson-k3", "ordered-digraph"]),
    st.integers(1, 3),
    st.integers(1, 6),
)
def test_decompose_round_trip(seed, name, d, k):
    w, v, _ = random_cog_combination(name, d, k, seed)
    assert is_balanced(v)[0]
    dec = decompose(w, v)
    assert expand(dec, v.coeffs, v.orbit) == v


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3))
def test_projected_subvectors_of_balanced_vectors_are_balanced(seed, d):
    w, v, _ = random_cog_combination("ordered-rado", d, 3, seed)
    for i, P in enumerate(v.orbit.index):
        for a in {t[i] for t in v}:
            sub = VectorFS({t: c for t, c in v.items() if t[i] == a})
            rest = [Q for Q in v.orbit.index if Q != P]
            if not rest:
                continue
            proj = VectorFS(
                {tuple(x for j, x in enumerate(t) if j != i): c for t, c in sub.items()}
            )
            if proj:
                orbit = v.orbit.project(rest)
                proj = VectorFS(proj.entries, orbit=orbit)
                assert is_balanced(proj)[0]


def test_prime_field_coefficients_round_trip():
    w, (a, b, c, d) = ordered_atoms(4)
    F = PrimeField(5)
    v = vector_on_orbit(w, [((a,), 1), ((b,), 2), ((c,), 3), ((d,), 4)], field=F)
    assert is_balanced(v)[0]
    dec = decompose(w, v)
    assert expand(dec, Coeffs(F), v.orbit) == v
