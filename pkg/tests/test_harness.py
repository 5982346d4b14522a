"""Tests for the verification suites and their report plumbing."""

import pytest

from closurelab.actions import natural_action
from closurelab.catalog import catalog_group
from closurelab.harness import (
    Claim,
    SuiteResult,
    filtration_closure_orders,
    run_suite,
    suite_names,
)


def test_suite_names_cover_the_registry():
    names = suite_names()
    assert "an-closure" in names
    assert "halasi-bases" in names
    assert "mathieu-complete" in names
    assert "eq1-monotone" in names
    assert "m24-base" in names
    assert len(names) == len(set(names)) == 14


def test_unknown_suite_raises():
    with pytest.raises(ValueError):
        run_suite("no-such-suite")


def test_long_suite_needs_opt_in():
    with pytest.raises(ValueError):
        run_suite("m24-base")


def test_partition_suite_passes():
    result = run_suite("partition-bases")
    assert result.passed
    assert result.suite == "partition-bases"
    assert all(c.passed for c in result.claims)
    assert all(c.citation for c in result.claims)


def test_psl_suite_passes():
    result = run_suite("psl-bases")
    assert result.passed
    assert len(result.claims) == 8


def test_symmetric_collapse_suite_passes():
    result = run_suite("symmetric-collapse")
    assert result.passed


def test_block_suite_passes():
    result = run_suite("block-lemma")
    assert result.passed


def test_report_round_trip():
    result = run_suite("partition-bases")
    again = SuiteResult.from_dict(result.to_dict())
    assert again == result
    assert again.passed == result.passed


def test_report_dict_shape():
    result = run_suite("psl-bases")
    data = result.to_dict()
    assert data["suite"] == "psl-bases"
    assert data["passed"] is True
    for row in data["claims"]:
        assert set(row) == {"id", "citation", "expected", "computed", "passed", "elapsed_ms"}


def test_failed_claim_fails_the_suite():
    good = Claim("a", "c", "1", "1", True, 0)
    bad = Claim("b", "c", "1", "2", False, 0)
    assert SuiteResult("s", (good,)).passed
    assert not SuiteResult("s", (good, bad)).passed


def test_suites_are_deterministic():
    first = run_suite("eq1-monotone")
    second = run_suite("eq1-monotone")
    strip = lambda r: [(c.claim_id, c.expected, c.computed, c.passed) for c in r.claims]
    assert strip(first) == strip(second)
    assert first.passed


def test_filtration_route_matches_known_closures():
    assert filtration_closure_orders(catalog_group("A4"), [1, 2, 3]) == [24, 24, 12]
    assert filtration_closure_orders(catalog_group("D4"), [1, 2, 3]) == [24, 8, 8]
    assert filtration_closure_orders(catalog_group("A5"), [4]) == [60]


def test_filtration_route_matches_engine_on_a_nontrivial_case():
    from closurelab.closure import k_closure

    A = catalog_group("C6")
    for k in (1, 2, 3):
        assert filtration_closure_orders(A, [k]) == [k_closure(A, k).order()]
