"""Charge values, window residuals and the two audits on known optima."""

import pytest

from roman_petersen import (
    HalfWeight,
    InvalidAssignmentError,
    RomanAssignment,
    construct_rdf,
    g_value,
    inner,
    is_normalized,
    lemma_audit,
    lower_bound_audit,
    normalize,
    outer,
    r_window,
    solve_dp,
    total_g,
)
from roman_petersen.discharging import CSV_HEADER, FLAG_NA, LEMMA_FLAGS
from _util import graph


def test_window_columns_wrap_and_repeat():
    from roman_petersen import Window

    assert Window(5, 4).columns(7) == (5, 6, 0, 1)
    assert Window(0, 7).columns(5) == (0, 1, 2, 3, 4, 0, 1)  # multiset revisit
    assert Window(-1, 2).columns(7) == (6, 0)


def test_halfweight_arithmetic_and_text():
    assert HalfWeight.whole(3).doubled == 6
    assert HalfWeight(3) + HalfWeight(1) == HalfWeight(4)
    assert HalfWeight(4) - HalfWeight(1) == HalfWeight(3)
    assert HalfWeight(1) < HalfWeight(2)
    assert str(HalfWeight(3)) == "1.5"
    assert str(HalfWeight(4)) == "2"
    assert float(HalfWeight(1)) == 0.5


def test_charge_examples_on_the_n5_optimum():
    g = graph(5)
    f = construct_rdf(5)
    assert g_value(g, f, inner(0)) == HalfWeight(3)  # 1.5: three 2-labeled neighbors
    assert g_value(g, f, outer(2)) == HalfWeight(1)  # 0.5: one 2-labeled neighbor
    for w in f.vertices_with_label(2):
        assert g_value(g, f, w) == HalfWeight(1)
    assert total_g(g, f) == HalfWeight.whole(6)


def test_charge_floor_pointwise():
    g = graph(7)
    f = construct_rdf(7)
    for w in g.vertices:
        assert g_value(g, f, w) >= HalfWeight(1)
    assert total_g(g, f) == HalfWeight.whole(8)


def test_charge_total_equals_weight_for_normalized_optima():
    for n in (5, 8, 11, 13):
        g = graph(n)
        f = normalize(g, solve_dp(n).witness)
        assert total_g(g, f) == HalfWeight.whole(f.weight())


def test_charge_total_equals_weight_for_any_normalized_fixpoint():
    # the identity needs only that every 2-labeled vertex sees three 0s,
    # which every normalization fixpoint has, optimal or not
    import random

    from _util import random_valid_rdf

    rng = random.Random(3621)
    for _ in range(40):
        n = rng.randint(5, 16)
        g = graph(n)
        f = normalize(g, random_valid_rdf(g, rng))
        assert total_g(g, f) == HalfWeight.whole(f.weight())


def test_charges_reject_non_normalized_and_invalid_inputs():
    g = graph(5)
    with pytest.raises(InvalidAssignmentError):
        total_g(g, RomanAssignment.constant(5, 2))  # adjacent 2s
    with pytest.raises(InvalidAssignmentError):
        g_value(g, RomanAssignment.constant(5, 0), outer(0))  # not even valid


def test_full_window_residual_identity():
    for n in (5, 7, 10):
        g = graph(n)
        f = normalize(g, solve_dp(n).witness)
        assert r_window(g, f, 0, n) == total_g(g, f) - HalfWeight.whole(n)


def test_offset_windows_count_every_vertex_seven_times():
    for n in (7, 9, 14, 15, 21):  # includes gcd(7, n) = 7 cases
        g = graph(n)
        f = normalize(g, solve_dp(n).witness)
        total = sum(r_window(g, f, (7 * i) % n, 7).doubled for i in range(n))
        assert total == 7 * r_window(g, f, 0, n).doubled


def test_windows_wider_than_n_use_multiset_counting():
    g = graph(5)
    f = normalize(g, solve_dp(5).witness)
    base = r_window(g, f, 0, 5).doubled
    wide = r_window(g, f, 0, 10).doubled
    assert wide == 2 * base


def test_lemma_audit_passes_on_solver_optima():
    for n in (7, 14, 20):
        g = graph(n)
        f = normalize(g, solve_dp(n).witness)
        report = lemma_audit(g, f)
        assert report.passed, report.violations
        assert len(report.windows) == n


def test_n7_windows_all_carry_residual_one():
    # at n = 7 every width-7 window covers the whole graph, so each residual
    # equals the total 8 - 7 = 1; the minimum-residual hypotheses never fire
    g = graph(7)
    f = normalize(g, solve_dp(7).witness)
    report = lemma_audit(g, f)
    assert [rec.r.doubled for rec in report.windows] == [2] * 7


def test_lemma_audit_degenerate_below_window_width():
    g = graph(5)
    f = normalize(g, solve_dp(5).witness)
    report = lemma_audit(g, f)
    assert report.passed
    assert report.notes
    for rec in report.windows:
        assert set(rec.flags.values()) == {FLAG_NA}


def test_audits_reject_non_optimal_normalized_input():
    # valid, normalized, weight 10 > 8: three spread outer 2s plus patched 1s
    f = RomanAssignment.from_sets(
        7,
        two=(outer(0), outer(2), outer(4)),
        one=(inner(1), inner(3), inner(5), inner(6)),
    )
    g = graph(7)
    assert is_normalized(g, f)
    assert f.weight() == 10
    with pytest.raises(InvalidAssignmentError):
        lemma_audit(g, f)
    with pytest.raises(InvalidAssignmentError):
        lower_bound_audit(g, f)


def test_audits_reject_non_normalized_input():
    g = graph(5)
    with pytest.raises(InvalidAssignmentError):
        lemma_audit(g, RomanAssignment.constant(5, 2))


def test_lower_bound_audit_chain_values():
    g7 = graph(7)
    f7 = normalize(g7, solve_dp(7).witness)
    report = lower_bound_audit(g7, f7)
    assert report.passed
    assert report.chain["seven_times_weight"] == 56
    assert report.chain["eight_n"] == 56
    assert report.chain["holds"]

    g9 = graph(9)
    f9 = normalize(g9, solve_dp(9).witness)
    report9 = lower_bound_audit(g9, f9)
    assert report9.chain["seven_times_weight"] == 77
    assert report9.chain["eight_n"] == 72


def test_lower_bound_audit_class_partition_and_inequality():
    g = graph(14)
    f = normalize(g, solve_dp(14).witness)
    report = lower_bound_audit(g, f)
    assert report.passed
    counts = report.class_counts
    assert sum(counts.values()) == 14
    assert counts["S1"] <= counts["S31"] + 2 * counts["S32"]


def test_report_serialization_shapes():
    g = graph(9)
    f = normalize(g, solve_dp(9).witness)
    report = lower_bound_audit(g, f)
    doc = report.to_json_dict()
    assert doc["kind"] == "lower_bound"
    assert len(doc["windows"]) == 9
    assert doc["aggregate"]["passed"] is True
    rows = report.csv_rows()
    assert len(rows) == 9
    assert CSV_HEADER.split(",")[:3] == ["window_start", "r_doubled", "s_class"]
    assert all(len(row.split(",")) == 3 + len(LEMMA_FLAGS) for row in rows)
