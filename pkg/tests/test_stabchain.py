"""Stabilizer chains against brute-force enumeration."""

import pytest

from closurelab.errors import DegreeLimitError
from closurelab.perm import Permutation, parse_cycles
from closurelab.stabchain import PermGroup, build_chain, tuple_transporter

from oracles import (
    brute_elements,
    brute_orbits,
    brute_pointwise_stabilizer,
    brute_transporter,
)


def group(degree, *cycle_texts, name=None):
    return PermGroup(degree, [parse_cycles(t, degree) for t in cycle_texts], name=name)


def S4():
    return group(4, "(1 2)", "(1 2 3 4)", name="S4")


def A5():
    return group(5, "(1 2 3)", "(1 2 3 4 5)", name="A5")


def test_order_of_small_groups():
    cases = [
        (group(6, "(1 2 3 4 5 6)"), 6),
        (S4(), 24),
        (group(4, "(1 2 3)", "(2 3 4)"), 12),
        (group(4, "(1 2 3 4)", "(1 3)"), 8),
        (A5(), 60),
        (group(5, "(1 2)", "(1 2 3 4 5)"), 120),
        (group(4, "(1 2)(3 4)", "(1 3)(2 4)"), 4),
        (group(5, "(1 2)", "(3 4 5)"), 6),
    ]
    for G, expected in cases:
        assert G.order() == expected
        gens = [g.images for g in G.generators]
        assert len(brute_elements(gens, G.degree)) == expected


def test_membership_agrees_with_enumeration():
    from itertools import permutations

    for G in (S4(), group(4, "(1 2 3)", "(2 3 4)"), group(4, "(1 2 3 4)", "(1 3)")):
        elems = brute_elements([g.images for g in G.generators], G.degree)
        for images in permutations(range(G.degree)):
            assert G.contains(Permutation(images)) == (images in elems)


def test_trivial_group():
    G = PermGroup.trivial(5)
    assert G.order() == 1
    assert G.is_trivial()
    assert G.contains(Permutation.identity(5))
    assert not G.contains(parse_cycles("(1 2)", 5))


def test_identity_generators_are_kept_but_ignored():
    e = Permutation.identity(4)
    G = PermGroup(4, [e, parse_cycles("(1 2)", 4), e])
    assert len(G.generators) == 3
    assert G.order() == 2


def test_orbits_match_brute():
    G = group(7, "(1 2)", "(3 4 5)", "(6 7)")
    gens = [g.images for g in G.generators]
    assert G.orbits() == brute_orbits(gens, 7)
    assert G.orbits() == [[0, 1], [2, 3, 4], [5, 6]]
    assert not G.is_transitive()
    assert A5().is_transitive()


def test_elements_enumeration():
    G = S4()
    got = {p.images for p in G.elements()}
    assert got == brute_elements([g.images for g in G.generators], 4)
    with pytest.raises(DegreeLimitError):
        A5().elements(limit=10)


def test_chain_base_prefix_is_respected():
    G = A5()
    chain = G.chain(preferred_base=[2, 0])
    assert chain.base[:2] == (2, 0)
    assert chain.order() == 60
    # duplicate points collapse
    chain2 = G.chain(preferred_base=[2, 2, 0])
    assert chain2.base[:2] == (2, 0)


def test_chain_with_known_order_hint():
    G = A5()
    hinted = build_chain(PermGroup(5, G.generators), known_order=60)
    assert hinted.order() == 60
    assert hinted.contains_images(parse_cycles("(1 2 3)", 5).images)
    assert not hinted.contains_images(parse_cycles("(1 2)", 5).images)


def test_degree_guard():
    with pytest.raises(DegreeLimitError):
        build_chain(PermGroup.trivial(10), max_degree=9)


def test_chain_is_deterministic():
    G1, G2 = A5(), A5()
    c1, c2 = G1.chain(), G2.chain()
    assert c1.base == c2.base
    assert [sorted(level.transversal) for level in c1.levels] == [
        sorted(level.transversal) for level in c2.levels
    ]
    assert [level.gens for level in c1.levels] == [level.gens for level in c2.levels]


def test_pointwise_stabilizer_matches_brute():
    for G in (S4(), A5(), group(6, "(1 2 3 4 5 6)", "(2 6)(3 5)")):
        elems = brute_elements([g.images for g in G.generators], G.degree)
        for pts in ([0], [1], [0, 1], [2, 0], [0, 1, 2]):
            H = G.pointwise_stabilizer(pts)
            want = brute_pointwise_stabilizer(elems, pts)
            assert H.order() == len(want)
            assert {p.images for p in H.elements()} == want


def test_pointwise_stabilizer_of_nothing_is_whole_group():
    G = S4()
    assert G.pointwise_stabilizer([]).order() == 24


def test_transporter_agrees_with_brute_search():
    from itertools import permutations, product

    for G in (A5(), group(6, "(1 2 3 4 5 6)", "(2 6)(3 5)")):
        elems = brute_elements([g.images for g in G.generators], G.degree)
        pts = range(G.degree)
        for k in (1, 2):
            for src in permutations(pts, k):
                for dst in product(pts, repeat=k):
                    got = tuple_transporter(G, src, dst)
                    want = brute_transporter(elems, src, dst)
                    if want is None:
                        assert got is None
                    else:
                        assert got is not None
                        assert got.images in elems
                        assert all(got(s) == d for s, d in zip(src, dst))


def test_transporter_on_longer_tuples():
    G = A5()
    elems = brute_elements([g.images for g in G.generators], 5)
    src = (0, 1, 2)
    for dst in ((2, 3, 4), (1, 0, 3), (4, 2, 0), (3, 1, 4)):
        got = tuple_transporter(G, src, dst)
        want = brute_transporter(elems, src, dst)
        assert (got is None) == (want is None)
        if got is not None:
            assert all(got(s) == d for s, d in zip(src, dst))


def test_transporter_identity_shortcut():
    G = A5()
    got = tuple_transporter(G, (3, 1), (3, 1))
    assert got is not None and got.is_identity()


def test_transporter_requires_injective_source():
    G = S4()
    with pytest.raises(ValueError):
        tuple_transporter(G, (1, 1), (2, 3))
    assert tuple_transporter(G, (0, 1), (2, 2)) is None


def test_transporter_is_canonical():
    G = A5()
    a = tuple_transporter(G, (0, 1), (2, 3))
    b = tuple_transporter(G, (0, 1), (2, 3))
    assert a == b


def test_same_group_and_subgroup_checks():
    S = S4()
    other = group(4, "(1 2 3 4)", "(1 2)")
    assert S.same_group(other)
    A = group(4, "(1 2 3)", "(2 3 4)")
    assert A.is_subgroup_of(S)
    assert not S.is_subgroup_of(A)
    assert not A.same_group(S)
