"""Tests for the ``.ea`` table format: parsing, diagnostics, round trips.

Golden files sit next to their inputs in tests/fixtures/valid; the malformed
corpus freezes the position and wording of the *first* diagnostic so parser
changes cannot silently move error reporting around.
"""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from effecttopo.algebra import boolean_algebra, chain, diamond, standard_corpus
from effecttopo.eaformat import (
    Diagnostic,
    EaDocument,
    SumClause,
    format_algebra,
    format_document,
    lower,
    parse_ea,
)
from effecttopo.errors import LoweringError

GOLDEN_NAMES = ["two", "three_chain", "four_boolean", "diamond", "five_chain", "glued"]

# (fixture stem, line, col, message) of the first error each file must produce
MALFORMED_TABLE = [
    ("missing_header", 1, 1, "expected 'algebra <name>' header first"),
    ("unknown_directive", 3, 1, "unknown directive 'summ'"),
    ("bad_arity", 3, 1, "sum clause must read 'sum <a> <b> = <c>'"),
    ("missing_equals", 3, 9, "expected '=' as third token of a sum clause"),
    ("unknown_label", 3, 7, "unknown element label 'b'"),
    ("contradiction", 4, 5, "contradictory clause a + a = 0; a + a = 1 at 3:5"),
    ("duplicate_element", 3, 10, "duplicate element label 'a'"),
    ("missing_bounds", 2, 1, "the element label '1' is required"),
]


# -- golden round trips ----------------------------------------------------


@pytest.mark.parametrize("stem", GOLDEN_NAMES)
def test_golden_round_trip(stem, fixtures_dir):
    source = (fixtures_dir / "valid" / f"{stem}.ea").read_text()
    golden = (fixtures_dir / "valid" / f"{stem}.golden").read_text()

    outcome = parse_ea(source)
    assert outcome.ok, outcome.diagnostics
    assert format_document(outcome.document) == golden

    # the canonical form is a fixpoint
    again = parse_ea(golden)
    assert again.ok
    assert again.document == outcome.document
    assert format_document(again.document) == golden


@pytest.mark.parametrize("stem", GOLDEN_NAMES)
def test_golden_files_lower_to_valid_algebras(stem, fixtures_dir):
    outcome = parse_ea((fixtures_dir / "valid" / f"{stem}.ea").read_text())
    alg = lower(outcome.document)
    assert alg.validate().ok, alg.validate().witnesses


# -- frozen diagnostics ----------------------------------------------------


@pytest.mark.parametrize("stem,line,col,message", MALFORMED_TABLE)
def test_malformed_fixture_first_diagnostic(stem, line, col, message, fixtures_dir):
    outcome = parse_ea((fixtures_dir / "malformed" / f"{stem}.ea").read_text())
    assert not outcome.ok
    assert outcome.document is None
    first = outcome.errors[0]
    assert (first.line, first.col) == (line, col)
    assert first.message == message


def test_diagnostic_renders_position_first():
    d = Diagnostic("error", "boom", 4, 7)
    assert str(d) == "4:7: error: boom"


# -- parser behaviour beyond the fixtures ----------------------------------


def test_comments_and_blank_lines_are_invisible():
    text = "# leading\nalgebra t  # trailing\n\nelements 0 1  # more\n# done\n"
    outcome = parse_ea(text)
    assert outcome.ok
    assert outcome.document.name == "t"
    assert outcome.document.labels == ("0", "1")


def test_elements_lines_accumulate():
    outcome = parse_ea("algebra t\nelements 0 a\nelements b 1\nsum a b = 1\n")
    assert outcome.ok
    assert outcome.document.labels == ("0", "a", "b", "1")


def test_clause_may_cite_labels_declared_later():
    outcome = parse_ea("algebra t\nelements 0 a\nsum a b = 1\nelements b 1\n")
    assert outcome.ok
    assert outcome.document.clauses[0].triple == ("a", "b", "1")


def test_duplicate_header_is_an_error():
    outcome = parse_ea("algebra t\nalgebra s\nelements 0 1\n")
    assert not outcome.ok
    assert "duplicate" in outcome.errors[0].message


def test_exactly_duplicated_clause_warns_and_dedups():
    outcome = parse_ea("algebra t\nelements 0 a 1\nsum a a = 1\nsum a a = 1\n")
    assert outcome.ok
    assert len(outcome.warnings) == 1
    assert "duplicate" in outcome.warnings[0].message
    assert len(outcome.document.clauses) == 1


def test_labels_may_not_contain_reserved_characters():
    outcome = parse_ea("algebra t\nelements 0 a=b 1\n")
    assert not outcome.ok


def test_empty_input_reports_missing_header_at_origin():
    outcome = parse_ea("")
    assert not outcome.ok
    assert (outcome.errors[0].line, outcome.errors[0].col) == (1, 1)


def test_document_equality_ignores_source_positions():
    a = EaDocument("t", ("0", "1"), (SumClause("1", "0", "1", line=3, left_col=5),))
    b = EaDocument("t", ("0", "1"), (SumClause("1", "0", "1"),))
    c = EaDocument("t", ("0", "1"), (SumClause("0", "1", "1"),))
    assert a == b
    assert hash(a) == hash(b)
    assert a != c


# -- lowering --------------------------------------------------------------


def test_lowering_injects_zero_identities():
    outcome = parse_ea("algebra t\nelements 0 a 1\nsum a a = 1\n")
    alg = lower(outcome.document)
    assert alg.sum_of(0, 1) == 1  # implicit 0 + a = a
    assert alg.validate().ok


def test_lowering_rejects_contradicted_zero_identity():
    doc = EaDocument("t", ("0", "a", "1"), (SumClause("0", "a", "1", line=9),))
    with pytest.raises(LoweringError, match="line 9"):
        lower(doc)


def test_explicit_zero_identity_is_accepted():
    doc = EaDocument("t", ("0", "a", "1"), (SumClause("0", "a", "a"), SumClause("a", "a", "1")))
    assert lower(doc).validate().ok


# -- rendering algebras ----------------------------------------------------


def test_format_algebra_renames_bounds_to_required_labels():
    text = format_algebra(chain(3))
    # chain labels its bottom "0" and top "1" already; parse back and compare
    outcome = parse_ea(text)
    assert outcome.ok
    assert lower(outcome.document) == chain(3)


def test_format_algebra_rename_collision_is_an_error():
    from effecttopo.algebra import EffectAlgebra

    # bottom called "bot" while another element already owns the label "0"
    alg = EffectAlgebra(("bot", "0", "1"), 0, 2, {(0, 2): 2, (1, 1): 2}, name="clash")
    with pytest.raises(ValueError, match="already in use"):
        format_algebra(alg)


@pytest.mark.parametrize(
    "alg", [chain(2), chain(5), boolean_algebra(2), boolean_algebra(3), diamond()],
    ids=lambda a: a.name,
)
def test_algebra_survives_text_round_trip(alg):
    outcome = parse_ea(format_algebra(alg))
    assert outcome.ok, outcome.diagnostics
    assert lower(outcome.document) == alg


@settings(max_examples=20, deadline=None)
@given(pick=st.integers(min_value=0, max_value=10_000))
def test_corpus_round_trip_property(pick):
    corpus = standard_corpus(max_chain=12, max_boolean=3)
    alg = corpus[pick % len(corpus)]
    outcome = parse_ea(format_algebra(alg))
    assert outcome.ok
    assert not outcome.warnings
    assert lower(outcome.document) == alg
