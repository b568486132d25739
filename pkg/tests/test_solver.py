"""Solver checks: oracle agreement, frozen optima, witness soundness."""

import pytest

from roman_petersen import (
    BudgetError,
    ParameterError,
    construct_rdf,
    is_valid_rdf,
    solve_brute,
    solve_dp,
)
from _util import graph


def test_brute_frozen_optima():
    assert solve_brute(5).optimum == 6
    assert solve_brute(6).optimum == 7


def test_brute_budget():
    with pytest.raises(BudgetError):
        solve_brute(9)
    with pytest.raises(BudgetError):
        solve_brute(4)


def test_dp_rejects_small_n():
    with pytest.raises(ParameterError):
        solve_dp(4)


@pytest.mark.parametrize("n, expected", [(9, 11), (14, 16), (30, 35)])
def test_dp_frozen_optima(n, expected):
    assert solve_dp(n).optimum == expected


def test_dp_matches_brute_on_small_cases():
    for n in (5, 6, 7):
        assert solve_dp(n).optimum == solve_brute(n).optimum


def test_witnesses_are_sound():
    for result in (solve_brute(5), solve_dp(5), solve_dp(13), solve_dp(20)):
        g = graph(result.n)
        assert is_valid_rdf(g, result.witness).valid
        assert result.witness.weight() == result.optimum


def test_dp_never_beats_the_construction_and_matches_it():
    for n in range(5, 20):
        construction_weight = construct_rdf(n).weight()
        optimum = solve_dp(n).optimum
        assert optimum <= construction_weight
        assert optimum == construction_weight  # tight for every n


def test_shift_by_seven_adds_eight():
    for n in (5, 9, 12, 16):
        assert solve_dp(n + 7).optimum - solve_dp(n).optimum == 8


def test_dp_witness_is_deterministic():
    first = solve_dp.__wrapped__(11)
    second = solve_dp.__wrapped__(11)
    assert first.witness == second.witness
    assert first.optimum == second.optimum


def test_result_serialization():
    doc = solve_dp(9).to_json_dict()
    assert doc["n"] == 9
    assert doc["method"] == "dp"
    assert doc["optimum"] == 11
    assert sum(doc["witness"]["outer"]) + sum(doc["witness"]["inner"]) == 11
