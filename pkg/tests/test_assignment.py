"""Assignment semantics: weight, validity, domination, normalization, JSON."""

import random

import pytest

from roman_petersen import (
    InvalidAssignmentError,
    ParameterError,
    RomanAssignment,
    SchemaError,
    construct_rdf,
    inner,
    is_dominating_set,
    is_normalized,
    is_valid_rdf,
    normalize,
    outer,
)
from _util import graph, random_valid_rdf


def test_weight_examples():
    assert RomanAssignment.constant(5, 0).weight() == 0
    assert RomanAssignment.constant(5, 2).weight() == 20
    optimal_n5 = RomanAssignment.from_sets(5, two=(outer(0), inner(2), inner(3)))
    assert optimal_n5.weight() == 6
    assert optimal_n5.counts() == (7, 0, 3)


def test_validity_examples():
    g = graph(5)
    assert is_valid_rdf(g, RomanAssignment.constant(5, 2)).valid
    report = is_valid_rdf(g, RomanAssignment.constant(5, 0))
    assert not report.valid
    assert len(report.violations) == 10

    n6 = RomanAssignment.from_sets(6, two=(outer(0), inner(3), inner(4)), one=(outer(2),))
    assert is_valid_rdf(graph(6), n6).valid


def test_validity_reports_all_violations_in_order():
    # only v_0 is 2-labeled: the far side of both rings stays undominated
    f = RomanAssignment.from_sets(7, two=(outer(0),))
    report = is_valid_rdf(graph(7), f)
    assert not report.valid
    assert report.violations == tuple(sorted(report.violations))
    assert outer(3) in report.violations
    assert inner(3) in report.violations


def test_dimension_mismatch_rejected():
    with pytest.raises(ParameterError):
        is_valid_rdf(graph(6), RomanAssignment.constant(5, 2))


def test_dominating_set_examples():
    g = graph(5)
    assert is_dominating_set(g, g.vertices)
    assert not is_dominating_set(g, ())
    claimed = (outer(0), inner(2), inner(3))
    # independent expansion of the closed neighborhoods
    union = set()
    for w in claimed:
        union |= g.closed_neighborhood(w)
    assert union == set(g.vertices)
    assert is_dominating_set(g, claimed)
    assert not is_dominating_set(g, (outer(0), inner(2)))


def test_valid_rdf_weight_never_beats_the_domination_number():
    # every valid RDF weighs at least the solver-confirmed optimum, which in
    # turn is at least the closed-form domination number
    from roman_petersen import gamma_formula, solve_dp

    rng = random.Random(612)
    for n in range(5, 13):
        optimum = solve_dp(n).optimum
        assert optimum >= gamma_formula(n)
        for _ in range(10):
            f = random_valid_rdf(graph(n), rng)
            assert f.weight() >= optimum >= gamma_formula(n)


def test_validity_monotone_under_raising_labels():
    rng = random.Random(404)
    for _ in range(50):
        n = rng.randint(5, 15)
        g = graph(n)
        f = random_valid_rdf(g, rng)
        raised = list(f.flat)
        for p in range(2 * n):
            if rng.random() < 0.3:
                raised[p] = min(2, raised[p] + rng.choice((1, 2)))
        g2 = RomanAssignment(tuple(int(x) for x in raised[:n]), tuple(int(x) for x in raised[n:]))
        assert is_valid_rdf(g, g2).valid


def test_normalize_keeps_already_normalized_input():
    g = graph(7)
    f = construct_rdf(7)
    # the stated reason it is already a fixpoint: 2-labeled vertices are
    # pairwise non-adjacent and see no 1-labeled vertex
    twos = f.vertices_with_label(2)
    for w in twos:
        assert not (g.neighbors(w) & twos)
        assert all(f.label(q) != 1 for q in g.neighbors(w))
    assert normalize(g, f) == f


def test_normalize_drops_a_redundant_one_next_to_a_two():
    g = graph(5)
    base = construct_rdf(5)
    raised = base.with_label(outer(1), 1)
    assert raised.weight() == 7
    result = normalize(g, raised)
    assert result == base
    assert result.weight() == 6


def test_normalize_breaks_up_adjacent_twos():
    g = graph(5)
    result = normalize(g, RomanAssignment.constant(5, 2))
    assert result.weight() < 20
    assert is_valid_rdf(g, result).valid
    assert is_normalized(g, result)


def test_normalize_rejects_invalid_input():
    with pytest.raises(InvalidAssignmentError):
        normalize(graph(5), RomanAssignment.constant(5, 0))


def test_normalize_fixpoint_properties_random():
    rng = random.Random(77)
    for _ in range(200):
        n = rng.randint(5, 14)
        g = graph(n)
        f = random_valid_rdf(g, rng)
        h = normalize(g, f)
        assert h.weight() <= f.weight()
        assert is_valid_rdf(g, h).valid
        assert is_normalized(g, h)
        assert normalize(g, h) == h  # idempotent
        twos = h.vertices_with_label(2)
        for w in twos:
            assert all(h.label(q) == 0 for q in g.neighbors(w))


def test_with_label_and_partition():
    f = RomanAssignment.from_sets(5, two=(outer(0),), one=(inner(1),))
    v0, v1, v2 = f.partition()
    assert v2 == {outer(0)}
    assert v1 == {inner(1)}
    assert len(v0) == 8
    assert f.with_label(outer(0), 0).weight() == f.weight() - 2
    assert f.label(outer(5)) == 2  # unreduced index


def test_json_round_trip():
    f = construct_rdf(12)
    again = RomanAssignment.from_json(f.to_json())
    assert again == f
    doc = f.to_json_dict()
    assert doc["n"] == 12 and doc["k"] == 2


@pytest.mark.parametrize(
    "mutate, path_fragment",
    [
        (lambda d: d.__setitem__("k", 3), "k"),
        (lambda d: d.pop("inner"), "inner"),
        (lambda d: d["outer"].__setitem__(3, 3), "outer[3]"),
        (lambda d: d["outer"].append(0), "outer"),
        (lambda d: d.__setitem__("n", -1), "n"),
        (lambda d: d.__setitem__("extra", 1), "extra"),
        (lambda d: d["inner"].__setitem__(0, True), "inner[0]"),
    ],
)
def test_schema_violations_point_at_the_field(mutate, path_fragment):
    doc = construct_rdf(7).to_json_dict()
    mutate(doc)
    with pytest.raises(SchemaError) as excinfo:
        RomanAssignment.from_json_dict(doc)
    assert excinfo.value.path == path_fragment


def test_bad_labels_rejected_at_construction():
    with pytest.raises(ParameterError):
        RomanAssignment((0, 1, 3, 0, 0), (0,) * 5)
    with pytest.raises(ParameterError):
        RomanAssignment((0,) * 5, (0,) * 4)
