"""Partial-sum tables: construction, validation, and the derived order."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from effecttopo import algebra
from effecttopo.algebra import (
    EffectAlgebra,
    boolean_algebra,
    chain,
    diamond,
    horizontal_sum,
    standard_corpus,
)
from effecttopo.errors import (
    CarrierCapError,
    InvalidAlgebraError,
    MalformedTableError,
)


def small_corpus():
    return standard_corpus(max_chain=8, max_boolean=3)


# -- table construction ----------------------------------------------------


def test_mirror_orientation_is_implied():
    alg = EffectAlgebra(["0", "a", "b", "1"], 0, 3, {(0, i): i for i in range(4)} | {(1, 2): 3})
    assert alg.sum_of(2, 1) == 3
    assert alg.sum_of(1, 2) == 3


def test_conflicting_mirror_is_rejected():
    sums = {(0, i): i for i in range(4)} | {(1, 2): 3, (2, 1): 0}
    with pytest.raises(MalformedTableError):
        EffectAlgebra(["0", "a", "b", "1"], 0, 3, sums)


def test_bad_indices_rejected():
    with pytest.raises(MalformedTableError):
        EffectAlgebra(["0", "1"], 0, 1, {(0, 5): 1})
    with pytest.raises(MalformedTableError):
        EffectAlgebra(["0", "1"], 0, 9, {})
    with pytest.raises(MalformedTableError):
        EffectAlgebra(["0", "0"], 0, 1, {})


def test_carrier_cap_enforced():
    with pytest.raises(CarrierCapError):
        chain(12, carrier_cap=10)
    with pytest.raises(CarrierCapError):
        EffectAlgebra(["0", "a", "1"], 0, 2, {}, carrier_cap=2)


def test_table_is_write_locked():
    alg = chain(3)
    with pytest.raises(ValueError):
        alg.table[0, 0] = 5


def test_equality_ignores_name_but_not_content():
    assert chain(3) == chain(3)
    a = EffectAlgebra(["0", "1"], 0, 1, {(0, 0): 0, (0, 1): 1}, name="x")
    b = EffectAlgebra(["0", "1"], 0, 1, {(0, 0): 0, (0, 1): 1}, name="y")
    assert a == b and hash(a) == hash(b)
    assert chain(3) != chain(4)


# -- validation against the plain-loop reference ---------------------------


def test_corpus_validates():
    for alg in small_corpus():
        report = alg.validate()
        assert report.ok, (alg.name, report.violations)
        assert not oracles.any_law_broken(alg)


def test_validation_report_is_cached():
    alg = chain(5)
    assert alg.validate() is alg.validate()


def _drop_clause(alg: EffectAlgebra, pair) -> EffectAlgebra:
    sums = alg.to_sum_dict()
    del sums[pair]
    return EffectAlgebra(alg.labels, alg.zero, alg.one, sums, name=alg.name + "-dropped")


def _redirect_clause(alg: EffectAlgebra, pair, target: int) -> EffectAlgebra:
    sums = alg.to_sum_dict()
    sums[pair] = target
    return EffectAlgebra(alg.labels, alg.zero, alg.one, sums, name=alg.name + "-redirected")


def test_dropped_orthosupplement_is_caught():
    # chain(3): removing 1/3 + 2/3 = 1 leaves 1/3 without a partner
    broken = _drop_clause(chain(3), (1, 2))
    report = broken.validate()
    assert not report.ok
    assert report.by_axiom("orthosupplement")
    for v in report.violations:
        assert oracles.violates(broken, v.axiom, v.witness)


def test_redirected_sum_is_caught():
    # boolean(2): p + q = p instead of 1
    broken = _redirect_clause(boolean_algebra(2), (1, 2), 1)
    report = broken.validate()
    assert not report.ok
    for v in report.violations:
        assert oracles.violates(broken, v.axiom, v.witness)


def test_sum_with_one_caught_by_zero_one_law():
    sums = {(0, i): i for i in range(3)} | {(1, 1): 2, (1, 2): 2}
    broken = EffectAlgebra(["0", "a", "1"], 0, 2, sums)
    report = broken.validate()
    assert report.by_axiom("zero-one")
    (v,) = report.by_axiom("zero-one")
    assert oracles.violates(broken, v.axiom, v.witness)


def test_double_orthosupplement_caught():
    # a + b = 1 and a + c = 1 gives a two partners
    sums = {(0, i): i for i in range(5)} | {(1, 2): 4, (1, 3): 4}
    broken = EffectAlgebra(["0", "a", "b", "c", "1"], 0, 4, sums)
    report = broken.validate()
    assert report.by_axiom("orthosupplement")
    for v in report.violations:
        assert oracles.violates(broken, v.axiom, v.witness)


def test_require_valid_raises_with_witness_message():
    broken = _drop_clause(chain(2), (1, 1))
    with pytest.raises(InvalidAlgebraError):
        broken.order


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.data())
def test_dropping_a_partner_clause_never_validates(n, data):
    """Removing a completion-to-one clause always orphans the partner law.

    Dropping an arbitrary clause can leave a smaller but still valid
    algebra (chain(3) minus its middle sum is the two-atom boolean one),
    so the property is stated only for clauses that sum to the top.
    """
    base = chain(n)
    candidates = [
        p for p in base.to_sum_dict().items() if base.zero not in p[0] and p[1] == base.one
    ]
    pair, _ = data.draw(st.sampled_from(candidates))
    broken = _drop_clause(base, pair)
    report = broken.validate()
    assert not report.ok
    assert report.by_axiom("orthosupplement")
    assert oracles.any_law_broken(broken)


# -- derived order ---------------------------------------------------------


def test_order_matches_definitional_pairs():
    for alg in small_corpus():
        pairs = oracles.definitional_leq_pairs(alg)
        for a in range(alg.n):
            for b in range(alg.n):
                assert alg.leq(a, b) == ((a, b) in pairs), (alg.name, a, b)


def test_order_bounds_and_orthosupplement():
    for alg in small_corpus():
        for a in range(alg.n):
            assert alg.leq(alg.zero, a)
            assert alg.leq(a, alg.one)
            assert alg.sum_of(a, alg.ortho(a)) == alg.one


def test_chain_order_is_linear():
    alg = chain(6)
    for a in range(alg.n):
        for b in range(alg.n):
            assert alg.leq(a, b) == (a <= b)


def test_boolean_order_is_subset_order():
    alg = boolean_algebra(3)
    # element index doubles as the subset bitmask by construction
    for a in range(alg.n):
        for b in range(alg.n):
            assert alg.leq(a, b) == (a & b == a)


def test_order_antitone_under_orthosupplement():
    for alg in small_corpus():
        for a in range(alg.n):
            for b in range(alg.n):
                if alg.leq(a, b):
                    assert alg.leq(alg.ortho(b), alg.ortho(a))


# -- sharpness -------------------------------------------------------------


def test_sharp_elements_match_reference():
    for alg in small_corpus():
        for a in range(alg.n):
            assert alg.is_sharp(a) == oracles.sharp_by_definition(alg, a)


def test_chain_sharpness():
    alg = chain(4)
    sharp = [a for a in range(alg.n) if alg.is_sharp(a)]
    assert sharp == [alg.zero, alg.one]


def test_boolean_everything_sharp():
    alg = boolean_algebra(3)
    assert all(alg.is_sharp(a) for a in range(alg.n))


def test_diamond_middles_are_unsharp():
    # each middle is its own partner, so it lies below both itself and its
    # complement -- the defining failure of sharpness
    alg = diamond()
    sharp = [a for a in range(alg.n) if alg.is_sharp(a)]
    assert sharp == [alg.zero, alg.one]


# -- Hasse diagram ---------------------------------------------------------


def test_chain_hasse_is_a_path():
    alg = chain(5)
    assert sorted(alg.hasse_edges()) == [(i, i + 1) for i in range(5)]


def test_hasse_edges_are_covers():
    for alg in small_corpus():
        for a, b in alg.hasse_edges():
            assert alg.leq(a, b) and a != b
            between = [
                c
                for c in range(alg.n)
                if c not in (a, b) and alg.leq(a, c) and alg.leq(c, b)
            ]
            assert between == []


# -- constructors ----------------------------------------------------------


def test_chain_sums():
    alg = chain(4)
    assert alg.sum_of(1, 2) == 3
    assert alg.sum_of(2, 3) is None
    assert alg.labels == ("0", "1/4", "2/4", "3/4", "1")


def test_boolean_disjoint_union_only():
    alg = boolean_algebra(2)
    p, q = alg.index("p"), alg.index("q")
    assert alg.sum_of(p, q) == alg.one
    assert alg.sum_of(p, p) is None


def test_horizontal_sum_keeps_components_apart():
    alg = horizontal_sum([chain(2), chain(2)])
    a, b = alg.index("a:1/2"), alg.index("b:1/2")
    assert alg.sum_of(a, a) == alg.one
    assert alg.sum_of(a, b) is None
    assert alg.validate().ok


def test_horizontal_sum_rejects_invalid_part():
    broken = _drop_clause(chain(2), (1, 1))
    with pytest.raises(InvalidAlgebraError):
        horizontal_sum([broken, chain(2)])


def test_diamond_is_two_glued_chains():
    alg = diamond()
    assert alg.n == 4
    assert alg.validate().ok
    assert not alg.defined(alg.index("a:1/2"), alg.index("b:1/2"))


def test_standard_corpus_shape():
    corpus = standard_corpus(max_chain=5, max_boolean=2)
    names = [alg.name for alg in corpus]
    assert "chain1" in names and "chain5" in names
    assert "boolean1" in names and "boolean2" in names
    assert "diamond" in names
    assert len(names) == len(set(names))
    assert all(alg.validate().ok for alg in corpus)


def test_labels_round_trip_through_index():
    for alg in small_corpus():
        for a in range(alg.n):
            assert alg.index(alg.label(a)) == a
    with pytest.raises(KeyError):
        chain(2).index("nope")
