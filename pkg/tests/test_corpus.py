"""Tests for the seeded verification suites."""

import pytest

from blobkl.alcove import w_of
from blobkl.blob_comb import BlobParams, OneColMultipartition
from blobkl.corpus import (
    BLOB_PAIRS,
    SUITES,
    Outcome,
    SuiteResult,
    generate_instances,
    run_suite,
)
from blobkl.errors import InputError


def _length(instance):
    params = BlobParams(instance["e"], instance["l"], tuple(instance["kappa"]))
    return w_of(OneColMultipartition(tuple(instance["lambda"])), params).length()


def test_suite_names_and_versions():
    assert set(SUITES) == {
        "theorem-graded-dim",
        "blob-vs-soergel",
        "fast-degree",
        "bott-samelson-oracle",
        "degree-zero-catalan",
    }
    assert all(suite.version == 2 for suite in SUITES.values())


def test_generation_is_determined_by_seed():
    first = generate_instances("blob-vs-soergel", seed=7, instances=5)
    second = generate_instances("blob-vs-soergel", seed=7, instances=5)
    assert first == second
    assert all(instance["l"] == 2 and instance["p"] in (2, 3, 5, 7) for instance in first)
    assert generate_instances("blob-vs-soergel", seed=8, instances=5) != first


def test_blob_vs_soergel_covers_every_prime_and_length():
    instances = generate_instances("blob-vs-soergel", seed=42, instances=len(BLOB_PAIRS))
    pairs = {(instance["p"], _length(instance)) for instance in instances}
    assert pairs == set(BLOB_PAIRS)
    assert {k for _, k in pairs} == set(range(1, 11))


def test_graded_dim_lengths_are_spread():
    instances = generate_instances("theorem-graded-dim", seed=42, instances=22)
    lengths = [_length(instance) for instance in instances]
    assert lengths.count(0) == 2
    assert max(lengths) >= 5
    assert all(sum(instance["lambda"]) <= 30 for instance in instances)


def test_degree_zero_instances_have_length_at_least_two():
    instances = generate_instances("degree-zero-catalan", seed=42, instances=9)
    assert [_length(instance) for instance in instances] == list(range(2, 11))


def test_unknown_suite():
    with pytest.raises(InputError, match="unknown"):
        run_suite("no-such-suite", instances=1)


@pytest.mark.parametrize("name", ["bott-samelson-oracle", "fast-degree", "theorem-graded-dim"])
def test_small_runs_are_all_equal(name):
    result = run_suite(name, seed=1, instances=4)
    assert result.ok
    assert result.equal_count == 4
    assert result.summary() == "4/4 equal"
    assert [outcome.index for outcome in result.outcomes] == [0, 1, 2, 3]


def test_degree_zero_catalan_run():
    result = run_suite("degree-zero-catalan", seed=3, instances=3)
    assert result.ok
    assert result.version == SUITES["degree-zero-catalan"].version


def test_workers_keep_instance_order():
    serial = run_suite("bott-samelson-oracle", seed=5, instances=6)
    pooled = run_suite("bott-samelson-oracle", seed=5, instances=6, workers=2)
    assert pooled.outcomes == serial.outcomes


def test_findings_are_not_failures():
    result = SuiteResult(suite="blob-vs-soergel", version=1, seed=0)
    result.outcomes = [
        Outcome(0, {"p": 3}, True),
        Outcome(1, {"p": 2}, False, "mu=(1,3)", finding=True),
    ]
    assert result.ok
    assert result.findings == [result.outcomes[1]]
    assert result.summary() == "1/2 equal, 1 finding(s) at p = 2"
    result.outcomes.append(Outcome(2, {"p": 3}, False, "mu=(0,4)"))
    assert not result.ok
    assert result.failures == [result.outcomes[2]]
