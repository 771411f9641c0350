import itertools

import pytest
from hypothesis import given, settings, strategies as st

from orbitlin.errors import ForbiddenSubstructure, InvalidStructure, NotTypePreserving, UnknownAtom
from orbitlin.world import FiniteStructure, ForbiddenFamily, FreshRequest, Vocabulary, apply_renaming, preset, realize, relate


def bit_edge(a, b):
    lo, hi = min(a, b), max(a, b)
    return a != b and (hi >> lo) & 1 == 1


def test_equality_atoms_are_just_distinct():
    w = preset("equality")
    a, b = w.register(1), w.register(2)
    p = relate(w, a, b)
    assert not p.equal and not p.related and p.cmp is None


def test_rado_bit_edges_follow_binary_digits():
    w = preset("rado-bit")
    for a in (0, 1, 2):
        w.register(a)
    assert relate(w, 1, 2).related
    assert not relate(w, 0, 2).related


@given(st.integers(0, 300), st.integers(0, 300))
def test_rado_bit_relation_is_symmetric_and_stable(a, b):
    w = preset("rado-bit")
    w.register(a)
    w.register(b)
    first = w.is_related(a, b)
    assert first == w.is_related(b, a) == w.is_related(a, b)
    assert first == (a == b or bit_edge(a, b))


def test_unknown_atom():
    w = preset("order")
    w.register()
    with pytest.raises(UnknownAtom):
        relate(w, 0, 99)


def test_triangle_is_refused():
    w = preset("ordered-henson-k3")
    a, b = w.register(), w.register()
    w.add_edge(a, b)
    with pytest.raises(ForbiddenSubstructure):
        w.fresh(edges=[a, b])
    assert w.find_forbidden() is None
    assert len(w) == 2


def test_fresh_in_equality_world_is_new():
    w = preset("equality")
    named = [w.register() for _ in range(4)]
    z = w.fresh()
    assert z not in named and z in w


def test_copy_mode_copies_fixed_and_avoids_the_rest():
    w = preset("ordered-rado")
    x, y, z = w.register(), w.register(), w.register()
    w.add_edge(z, x)
    w.add_edge(z, y)
    above = w.register()
    z2 = realize(w, FreshRequest(anchor=z, fixed=frozenset([x]), avoid=frozenset([y])))
    assert w.is_related(z2, x)
    assert not w.is_related(z2, y)
    assert not w.is_related(z2, z)
    assert w.less(z, z2) and w.less(z2, above)


def test_order_requests_are_respected():
    w = preset("order")
    a, b = w.register(), w.register()
    c = w.fresh(above=[a], below=[b])
    assert w.less(a, c) and w.less(c, b)


def test_forbidden_members_must_have_related_pairs():
    loose = FiniteStructure.build((0, 1, 2), binary={"E": [(0, 1), (1, 2)]})
    with pytest.raises(InvalidStructure):
        ForbiddenFamily([loose])


def test_vocabulary_rejects_builtin_order():
    with pytest.raises(InvalidStructure):
        Vocabulary(binary=("<",))


def test_structures_are_irreflexive():
    with pytest.raises(InvalidStructure):
        FiniteStructure.build((0,), binary={"E": [(0, 0)]})


def test_renaming_identity_and_order_reversal():
    w = preset("order")
    a, s, b = w.register(), w.register(), w.register()
    apply_renaming(w, {a: a, b: b})
    with pytest.raises(NotTypePreserving) as err:
        apply_renaming(w, {a: b}, check_support=[s])
    assert err.value.witness == (a, s)


def test_renaming_to_a_realized_copy_in_rado_bit():
    w = preset("rado-bit")
    S = [0, 2, 5]
    for x in S + [1]:
        w.register(x)
    v = w.fresh(edges=[s for s in S if w.is_related(1, s)])
    apply_renaming(w, {1: v}, check_support=S)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from(["ordered-rado", "ordered-henson-k3", "ordered-digraph"]))
def test_random_realizations_keep_the_world_clean(seed, name):
    import random

    rng = random.Random(seed)
    w = preset(name)
    atoms = []
    for _ in range(10):
        edges = [a for a in atoms if rng.random() < 0.5]
        try:
            atoms.append(w.fresh(edges=edges, above=rng.sample(atoms, min(1, len(atoms)))))
        except ForbiddenSubstructure:
            pass
        if atoms and rng.random() < 0.5:
            z = rng.choice(atoms)
            rest = [a for a in atoms if a != z]
            X = [a for a in rest if rng.random() < 0.5]
            atoms.append(w.fresh_copy(z, fixed=X, avoid=[a for a in rest if a not in X]))
    assert w.find_forbidden() is None
    for a, b in itertools.combinations(atoms, 2):
        assert w.less(a, b) != w.less(b, a)


def test_load_structure_and_snapshot_round_trip():
    w = preset("ordered-henson-k3")
    S = FiniteStructure.graph((10, 11, 12), [(10, 11), (11, 12)])
    names = w.load_structure(S)
    snap = w.snapshot([names[x] for x in (10, 11, 12)])
    assert snap.related(names[10], names[11]) and not snap.related(names[10], names[12])
    with pytest.raises(ForbiddenSubstructure):
        preset("ordered-henson-k3").load_structure(FiniteStructure.graph((0, 1, 2), [(0, 1), (1, 2), (0, 2)]))
