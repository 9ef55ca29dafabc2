"""Tests for the containment-chain report: evidence, assembly, rendering."""

from __future__ import annotations

import json

import pytest

from effecttopo.errors import MissingCheckError
from effecttopo.relations import (
    AMBIENTS,
    CheckResult,
    RelationEdge,
    RelationReport,
    TopologyId,
    build_relation_report,
    collect_evidence,
    render,
    report_to_dict,
)

ALL_CHECK_IDS = {
    "finite.discreteness",
    "finite.interval_subset_order",
    "example3.norm_rate",
    "example3.obstruction_grid",
    "example4.sot_gap",
    "example4.wot_vanish",
    "example4.norm_gap",
    "example5.norm_rate",
    "example5.floor_grid",
    "example5.floor_boundary",
    "example5.wot_limit_nonzero",
    "projections.sot_wot_identity",
    "wot.dominated_by_sot",
    "vigier.monotone_limits",
    "squeeze.sot_pipeline",
}


@pytest.fixture(scope="module")
def evidence():
    # small scale: every range drops to its floor of 10, still all-pass
    return collect_evidence(scale=0.02, carrier_cap=8)


# -- identifiers and edge plumbing -----------------------------------------


def test_topology_id_validation():
    tid = TopologyId("WOT", "E(H)")
    assert tid.key == "WOT@E(H)"
    with pytest.raises(ValueError):
        TopologyId("weak-star", "E(H)")
    with pytest.raises(ValueError):
        TopologyId("WOT", "B(H)")


def test_relation_edge_validation():
    a = TopologyId("interval", "E(H)")
    b = TopologyId("WOT", "E(H)")
    c = TopologyId("WOT", "P(H)")
    RelationEdge(a, b, "subset", "verified-on-instances", (), "")
    with pytest.raises(ValueError):
        RelationEdge(a, c, "subset", "verified-on-instances", (), "")
    with pytest.raises(ValueError):
        RelationEdge(a, b, "superset", "verified-on-instances", (), "")


def test_check_result_json_projection():
    r = CheckResult("x.y", True, {"n": 3})
    assert r.to_json_dict() == {"id": "x.y", "passed": True, "details": {"n": 3}}


# -- the evidence battery --------------------------------------------------


def test_evidence_covers_every_cited_id(evidence):
    assert set(evidence) == ALL_CHECK_IDS


def test_evidence_all_passes_at_small_scale(evidence):
    failed = [cid for cid, r in evidence.items() if not r.passed]
    assert failed == []


def test_evidence_entries_are_self_describing(evidence):
    for cid, r in evidence.items():
        assert r.check_id == cid
        assert isinstance(r.details, dict)


# -- report assembly -------------------------------------------------------

EXPECTED_SHAPES = {
    "E(H)": [
        ("interval", "WOT", "strict-subset"),
        ("WOT", "SOT", "strict-subset"),
        ("SOT", "order", "strict-subset"),
    ],
    "P(H)": [
        ("interval", "WOT", "strict-subset"),
        ("WOT", "SOT", "equal"),
        ("SOT", "order", "strict-subset"),
    ],
}


@pytest.mark.parametrize("ambient", AMBIENTS)
def test_report_shape_per_ambient(ambient, evidence):
    report = build_relation_report(ambient, evidence)
    assert report.summary == "PASS"
    got = [(e.source.name, e.target.name, e.kind) for e in report.edges]
    assert got == EXPECTED_SHAPES[ambient]
    for e in report.edges:
        assert e.status == "verified-on-instances"
        assert len(e.evidence) >= 1
        assert e.claim
    assert set(report.checks) == ALL_CHECK_IDS


def test_report_notes_flag_what_is_not_verified(evidence):
    report = build_relation_report("E(H)", evidence)
    assert any("unverified-here" in note for note in report.notes)


def test_unknown_ambient_is_rejected(evidence):
    with pytest.raises(ValueError):
        build_relation_report("C(H)", evidence)


def test_missing_cited_check_raises(evidence):
    partial = dict(evidence)
    del partial["example4.wot_vanish"]
    with pytest.raises(MissingCheckError, match="example4.wot_vanish"):
        build_relation_report("E(H)", partial)


def test_failed_check_falsifies_only_the_edges_citing_it(evidence):
    doctored = dict(evidence)
    doctored["example4.wot_vanish"] = CheckResult(
        "example4.wot_vanish", False, {"forced": "inverted outcome for testing"}
    )
    report = build_relation_report("E(H)", doctored)
    assert report.summary == "FAIL"
    statuses = {(e.source.name, e.target.name): e.status for e in report.edges}
    assert statuses[("WOT", "SOT")] == "falsified"
    assert statuses[("interval", "WOT")] == "verified-on-instances"
    assert statuses[("SOT", "order")] == "verified-on-instances"


# -- rendering -------------------------------------------------------------


def test_json_rendering_round_trips(evidence):
    report = build_relation_report("P(H)", evidence)
    doc = json.loads(render(report, "json"))
    assert doc == report_to_dict(report)
    assert doc["summary"] == "PASS"
    assert [e["kind"] for e in doc["edges"]] == ["strict-subset", "equal", "strict-subset"]
    for e in doc["edges"]:
        assert set(e) == {"from", "to", "kind", "status", "evidence", "paper_ref"}


def test_dot_rendering_shape(evidence):
    report = build_relation_report("E(H)", evidence)
    dot = render(report, "dot")
    assert dot.startswith('digraph "E(H)"')
    assert dot.count("->") == 3
    assert '"interval" [shape=box];' in dot
    assert "style=solid" in dot and "style=dashed" not in dot
    assert 'label="PASS"' in dot


def test_dot_rendering_dashes_falsified_edges(evidence):
    doctored = dict(evidence)
    doctored["wot.dominated_by_sot"] = CheckResult("wot.dominated_by_sot", False, {})
    report = build_relation_report("P(H)", doctored)
    assert "style=dashed" in render(report, "dot")


def test_text_rendering_lists_evidence_verdicts(evidence):
    report = build_relation_report("E(H)", evidence)
    text = render(report, "text")
    assert text.splitlines()[0] == "ambient: E(H)"
    assert "summary: PASS" in text
    assert "interval < WOT" in text
    assert "evidence: example5.floor_grid (pass)" in text
    assert "notes:" in text


def test_render_rejects_unknown_format(evidence):
    report = build_relation_report("E(H)", evidence)
    with pytest.raises(ValueError):
        render(report, "yaml")


def test_rendering_is_deterministic_across_fresh_runs(evidence):
    fresh = collect_evidence(scale=0.02, carrier_cap=8)
    for ambient in AMBIENTS:
        first = build_relation_report(ambient, evidence)
        second = build_relation_report(ambient, fresh)
        for fmt in ("text", "json", "dot"):
            assert render(first, fmt) == render(second, fmt)


def test_report_is_a_frozen_record(evidence):
    report = build_relation_report("E(H)", evidence)
    assert isinstance(report, RelationReport)
    with pytest.raises(AttributeError):
        report.summary = "FAIL"
