"""Exact and greedy base sizes, pair bases, and partition-action checks."""

import pytest

from closurelab.actions import (
    ksubsets_action,
    minimal_block_system,
    natural_action,
    quotient_action,
)
from closurelab.basesize import (
    BaseRecord,
    exact_base_size,
    greedy_base,
    halasi_base,
    partition_base_check,
)
from closurelab.budget import Budget
from closurelab.catalog import alternating, dihedral, mathieu, symmetric
from closurelab.errors import NotFaithfulError
from closurelab.perm import parse_cycles
from closurelab.stabchain import PermGroup

from oracles import brute_elements, brute_min_base


def group(degree, *texts):
    return PermGroup(degree, tuple(parse_cycles(t, degree) for t in texts))


def test_exact_base_size_matches_brute_force():
    cases = [
        natural_action(alternating(5)),
        natural_action(symmetric(4)),
        natural_action(dihedral(4)),
        natural_action(group(4, "(1 2)(3 4)", "(1 3)(2 4)")),
        natural_action(group(6, "(1 2 3 4 5 6)")),
        natural_action(group(5, "(1 2)", "(3 4 5)")),
        ksubsets_action(alternating(5), 2),
        ksubsets_action(symmetric(5), 2),
    ]
    for A in cases:
        rec = exact_base_size(A)
        elems = brute_elements([g.images for g in A.group.generators], A.degree)
        want_size, _ = brute_min_base(elems, A.degree)
        assert rec.size == want_size
        assert rec.exhaustive
        assert A.group.pointwise_stabilizer(rec.witness).order() == 1
        assert len(rec.witness) == rec.size


def test_exact_base_size_is_deterministic():
    A = ksubsets_action(symmetric(6), 2)
    assert exact_base_size(A) == exact_base_size(A)


def test_ksubsets_base_sizes():
    assert exact_base_size(ksubsets_action(symmetric(5), 2)).size == 3
    assert exact_base_size(ksubsets_action(alternating(5), 2)).size == 2
    assert exact_base_size(ksubsets_action(symmetric(6), 2)).size == 4
    assert exact_base_size(ksubsets_action(alternating(6), 2)).size == 3
    assert exact_base_size(ksubsets_action(symmetric(6), 3)).size == 3


def test_greedy_base_is_a_base_and_flags_tightness():
    A5 = natural_action(alternating(5))
    rec = greedy_base(A5)
    assert rec.size == 3
    assert rec.witness == (0, 1, 2)
    assert rec.exhaustive  # 5^2 < 60, so 3 meets the lower bound

    S6 = natural_action(symmetric(6))
    rec6 = greedy_base(S6)
    assert rec6.size == 5
    assert not rec6.exhaustive  # bound is 4, greedy cannot prove 5 minimal
    exact6 = exact_base_size(S6)
    assert exact6.size == 5 and exact6.exhaustive


def test_regular_actions_have_base_size_one():
    for G in (group(6, "(1 2 3 4 5 6)"), group(4, "(1 2)(3 4)", "(1 3)(2 4)")):
        rec = exact_base_size(natural_action(G))
        assert rec.size == 1
        assert rec.exhaustive


def test_trivial_group_has_empty_base():
    rec = exact_base_size(natural_action(PermGroup.trivial(3)))
    assert rec == BaseRecord(size=0, witness=(), exhaustive=True)


def test_unfaithful_action_is_rejected():
    D4 = dihedral(4)
    S = minimal_block_system(natural_action(D4), (0, 2))
    Q = quotient_action(natural_action(D4), S)
    assert not Q.faithful
    with pytest.raises(NotFaithfulError):
        exact_base_size(Q)
    with pytest.raises(NotFaithfulError):
        greedy_base(Q)


def test_budget_exhaustion_falls_back_to_greedy_quality():
    A = ksubsets_action(symmetric(6), 2)
    rec = exact_base_size(A, budget=Budget(2))
    assert not rec.exhaustive
    assert rec.size >= exact_base_size(A).size
    assert A.group.pointwise_stabilizer(rec.witness).order() == 1


def test_mathieu23_greedy_and_exact():
    A = mathieu("M23")
    greedy = greedy_base(A)
    assert greedy.size <= 7
    rec = exact_base_size(A)
    assert rec.size == 6
    assert rec.exhaustive
    assert A.group.pointwise_stabilizer(rec.witness).order() == 1


def test_halasi_base_small_cases():
    assert halasi_base(6) == ((1, 2), (2, 3), (4, 5), (5, 6))
    assert halasi_base(5) == ((1, 2), (2, 3), (1, 5))


def test_halasi_base_sizes_and_validity():
    from itertools import combinations

    sizes = {5: 3, 6: 4, 7: 4, 8: 5, 9: 6}
    for n, size in sizes.items():
        pairs = halasi_base(n)
        assert len(pairs) == size
        m, r = divmod(n, 3)
        assert len(pairs) == 2 * m + (1 if r == 2 else 0)
        A = ksubsets_action(symmetric(n), 2)
        combos = list(combinations(range(n), 2))
        idx = [combos.index((p - 1, q - 1)) for p, q in pairs]
        assert A.group.pointwise_stabilizer(idx).order() == 1
    with pytest.raises(ValueError):
        halasi_base(4)


def test_partition_base_check_six_points():
    rec = partition_base_check(6, 2, 3)
    assert rec.sym.size == 4 and rec.alt.size == 3
    assert rec.sym_equality_expected and rec.sym_equality_observed
    assert rec.consistent
    rec2 = partition_base_check(6, 3, 2)
    assert rec2.sym.size == 4 and rec2.alt.size == 3
    assert rec2.consistent


def test_partition_base_check_eight_points():
    rec = partition_base_check(8, 2, 4)
    assert rec.sym.size == 3
    assert not rec.sym_equality_observed and not rec.sym_equality_expected
    assert rec.consistent


def test_partition_base_check_validates_shape():
    with pytest.raises(ValueError):
        partition_base_check(6, 2, 2)
    with pytest.raises(ValueError):
        partition_base_check(9, 3, 3)
    with pytest.raises(NotFaithfulError):
        partition_base_check(4, 2, 2)
