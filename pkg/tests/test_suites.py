"""Suite mechanics: record shapes, hypothesis skipping, disagreement
accounting, and spot checks of suite verdicts."""

import pytest

from modlab.catalog import GenerationPolicy, enumerate_modules
from modlab.config import Limits
from modlab.rings import builtin_ring
from modlab.suites import SUITES, _values_record, verify_theorem


@pytest.fixture(scope="module")
def z8_catalog():
    return enumerate_modules(builtin_ring("Z8"), GenerationPolicy(2, 256), ring_id="Z8")


@pytest.fixture(scope="module")
def f2xz4_catalog():
    return enumerate_modules(builtin_ring("F2xZ4"), GenerationPolicy(2, 256),
                             ring_id="F2xZ4")


def test_registry_covers_all_suites():
    expected = {"P2.2", "L2.5", "P2.6", "C2.7", "C2.8", "T2.11", "P2.13",
                "T3.2", "C3.3", "C3.4", "P3.5", "T3.6", "P3.8", "T3.9",
                "C3.10", "T3.12"}
    assert set(SUITES) == expected


def test_values_record_detects_disagreement():
    rec = _values_record("x", {"a": True, "b": False}, witness={"w": 1})
    assert rec["agree"] is False
    assert rec["witness"] == {"w": 1}
    rec2 = _values_record("x", {"a": True, "b": True})
    assert rec2["agree"] is True


@pytest.mark.parametrize("suite_id", sorted(SUITES))
def test_all_suites_zero_disagreements_on_z8(z8_catalog, suite_id):
    rep = verify_theorem(suite_id, z8_catalog)
    assert rep.summary["disagreements"] == 0
    assert rep.summary["instances"] >= 1
    assert rep.ring_id == "Z8"
    data = rep.to_json()
    assert "runtime_seconds" not in data
    assert data["suite"] == suite_id


def test_t211_vector_shape(f2xz4_catalog):
    rep = verify_theorem("T2.11", f2xz4_catalog)
    for record in rep.instances:
        assert len(record["values"]) == 7
        assert record["agree"] is True


def test_t39_vector_shape(f2xz4_catalog):
    rep = verify_theorem("T3.9", f2xz4_catalog)
    for record in rep.instances:
        assert set(record["values"]) == {
            "t_lifting",
            "t_dual_baer_and_t_k",
            "t_dual_baer_and_trace_recovers",
            "t_dual_baer_and_trivial_t_set_forces_zero",
        }


def test_t312_statement_names(f2xz4_catalog):
    rep = verify_theorem("T3.12", f2xz4_catalog)
    values = rep.instances[0]["values"]
    assert len(values) == 7
    assert all(values.values())
    assert "bounded" in rep.scope


def test_suites_skip_when_end_ring_over_limit(z8_catalog):
    tight = Limits(max_end=16)
    rep = verify_theorem("T3.2", z8_catalog, limits=tight)
    assert rep.summary["skipped"] > 0
    assert rep.summary["disagreements"] == 0


def test_suite_reports_are_json_stable(z8_catalog):
    from modlab.serialize import stable_dumps

    rep1 = verify_theorem("P2.6", z8_catalog)
    rep2 = verify_theorem("P2.6", z8_catalog)
    assert stable_dumps(rep1.to_json()) == stable_dumps(rep2.to_json())


def test_witnesses_present_on_planted_disagreement():
    """Feed a record with differing values through the accounting used by
    run_all and make sure it is counted and carries its witness."""
    from modlab.reports import TheoremReport

    rec = _values_record("planted", {"a": True, "b": False},
                         witness={"elements": [0, 1]})
    rep = TheoremReport(
        suite="P2.2", ring_id="Z8", scope="test", instances=[rec],
        summary={"instances": 1,
                 "disagreements": 0 if rec["agree"] else 1,
                 "skipped": 0},
    )
    assert rep.summary["disagreements"] == 1
    assert rep.instances[0]["witness"] == {"elements": [0, 1]}
