"""Closed-form optima and the explicit minimum-weight assignments for P(n, 2).

``construct_rdf`` emits, for every n >= 5, a Roman dominating function of
weight exactly ceil(8n/7). The labeling repeats a weight-8 pattern on blocks
of seven consecutive spoke pairs and patches the remaining n mod 7 columns
with a residue-specific tail.
"""

from __future__ import annotations

from dataclasses import dataclass

from .assignment import RomanAssignment, is_valid_rdf
from .errors import InternalCheckError, ParameterError
from .petersen import build_graph


def ceil_8n_over_7(n: int) -> int:
    """Exact ceil(8n/7) in integer arithmetic."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    return -((-8 * n) // 7)


def gamma_formula(n: int) -> int:
    """Domination number of P(n, 2): n - floor(n/5) - floor((n+2)/5)."""
    if n < 3:
        raise ParameterError(f"n must be >= 3, got {n}")
    return n - n // 5 - (n + 2) // 5


@dataclass(frozen=True)
class ConstructionCase:
    """Block decomposition n = 7m + t used by the explicit labeling."""

    m: int
    t: int

    @classmethod
    def for_n(cls, n: int) -> "ConstructionCase":
        return cls(m=n // 7, t=n % 7)


def _case_sets(n: int) -> tuple[list[int], list[int], set[int], set[int]]:
    """Index sets (outer 2s, inner 2s, outer 1s, inner 1s) for n >= 7."""
    case = ConstructionCase.for_n(n)
    m, t = case.m, case.t
    outer_two = [7 * i for i in range(m)]
    inner_two = [7 * i + 3 for i in range(m)] + [7 * i + 4 for i in range(m)]
    outer_one = {7 * i + 2 for i in range(m)} | {7 * i + 5 for i in range(m)}
    inner_one: set[int] = set()
    if t == 1:
        outer_one.add(7 * m - 1)
        inner_one.add(7 * m)
    elif t == 2:
        outer_two.append(7 * m)
        inner_one.add(7 * m + 1)
    elif t == 3:
        outer_two.append(7 * m)
        inner_one.update((7 * m + 1, 7 * m + 2))
    elif t == 4:
        outer_two.append(7 * m - 1)
        inner_two.extend((7 * m + 1, 7 * m + 2))
        if 7 * m - 2 not in outer_one:
            raise InternalCheckError(f"tail removal target missing at n={n}")
        outer_one.discard(7 * m - 2)
    elif t == 5:
        outer_two.append(7 * m)
        inner_two.extend((7 * m + 2, 7 * m + 3))
    elif t == 6:
        outer_two.append(7 * m)
        inner_two.extend((7 * m + 3, 7 * m + 4))
        outer_one.add(7 * m + 2)
    return outer_two, inner_two, outer_one, inner_one


def construct_rdf(n: int) -> RomanAssignment:
    """The explicit optimal RDF of P(n, 2), weight exactly ceil(8n/7).

    The emitted assignment is re-checked through ``is_valid_rdf`` and its
    weight compared to the formula before being returned; any mismatch is a
    fatal internal error reporting the failing n, never silently repaired.
    """
    if n < 5:
        raise ParameterError(f"construction defined for n >= 5, got {n}")
    outer = [0] * n
    inner = [0] * n
    if n == 5:
        two = ([0], [2, 3])
        one: tuple[set[int], set[int]] = (set(), set())
    elif n == 6:
        two = ([0], [3, 4])
        one = ({2}, set())
    else:
        outer_two, inner_two, outer_one, inner_one = _case_sets(n)
        two = (outer_two, inner_two)
        one = (outer_one, inner_one)
    for labels, idxs in zip((outer, inner), two):
        for i in idxs:
            labels[i % n] = 2
    for labels, idxs in zip((outer, inner), one):
        for i in idxs:
            i %= n
            if labels[i] != 0:
                raise InternalCheckError(f"label collision at index {i} for n={n}")
            labels[i] = 1
    f = RomanAssignment(tuple(outer), tuple(inner))
    report = is_valid_rdf(build_graph(n, 2), f)
    if not report.valid:
        raise InternalCheckError(
            f"constructed assignment for n={n} is not a valid RDF; "
            f"undominated: {[str(w) for w in report.violations]}"
        )
    expected = ceil_8n_over_7(n)
    if f.weight() != expected:
        raise InternalCheckError(
            f"constructed weight {f.weight()} != ceil(8*{n}/7) = {expected}"
        )
    return f
