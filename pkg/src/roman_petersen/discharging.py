"""Charge-redistribution audits for optimal assignments on P(n, 2).

Every vertex of a normalized assignment receives an exact half-integer
charge: 0.5 if it is 2-labeled, 1 if 1-labeled, and half its count of
2-labeled neighbors if 0-labeled. For a normalized valid assignment the
charges sum to the assignment weight and sit at or above the 0.5 floor
everywhere. The residual of a vertex is its charge minus 0.5.

Windows collect the residuals of seven consecutive spoke pairs. On an
optimal normalized assignment these window sums obey sharp local rules
(a window at the 0.5 minimum has a forced label pattern, and its two
offset-7 neighbor windows carry surplus), and summing the n windows at
offsets 7i, which count every vertex exactly seven times, certifies
7 * weight >= 8n. The two audits check those rules on concrete solver
optima and report any counterexample window.

All arithmetic stores half-integers doubled; no floating point is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .assignment import RomanAssignment, is_valid_rdf, normalize
from .errors import InternalCheckError, InvalidAssignmentError, ParameterError
from .petersen import PetersenGraph, VertexId, inner, outer

WINDOW_WIDTH = 7

LEMMA_FLAGS = (
    "outer_center_not_two",
    "outer_flanks_not_two",
    "inner_center_not_two",
    "tight_window_structure",
    "tight_window_neighbors",
    "between_tight_windows",
)

FLAG_PASS = "pass"
FLAG_FAIL = "fail"
FLAG_NA = "na"

S_CLASSES = ("S1", "S2", "S31", "S32")


@dataclass(frozen=True, order=True)
class HalfWeight:
    """An exact half-integer stored as twice its value."""

    doubled: int

    @classmethod
    def whole(cls, value: int) -> "HalfWeight":
        return cls(2 * value)

    def __add__(self, other: "HalfWeight") -> "HalfWeight":
        if not isinstance(other, HalfWeight):
            return NotImplemented
        return HalfWeight(self.doubled + other.doubled)

    def __sub__(self, other: "HalfWeight") -> "HalfWeight":
        if not isinstance(other, HalfWeight):
            return NotImplemented
        return HalfWeight(self.doubled - other.doubled)

    def __float__(self) -> float:
        return self.doubled / 2

    def __str__(self) -> str:
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled / 2:.1f}"


@dataclass(frozen=True)
class Window:
    """The 2t vertices {v_j, u_j} for j in the circular range [start, start+t)."""

    start: int
    width: int

    def columns(self, n: int) -> tuple[int, ...]:
        return tuple((self.start + d) % n for d in range(self.width))


def _require_k2(g: PetersenGraph) -> None:
    if g.k != 2:
        raise ParameterError(f"charge audits are defined on P(n, 2), got k={g.k}")


def _require_normalized(g: PetersenGraph, f: RomanAssignment) -> None:
    report = is_valid_rdf(g, f)
    if not report.valid:
        raise InvalidAssignmentError(
            f"assignment is not a valid RDF; undominated: {[str(w) for w in report.violations]}"
        )
    flat = f.flat
    adj = g.adjacency_table
    twos = np.flatnonzero(flat == 2)
    touched = np.flatnonzero((flat[adj[twos]] != 0).any(axis=1))
    if touched.size:
        offender = g.vertex_at(int(twos[touched[0]]))
        raise InvalidAssignmentError(
            f"assignment is not normalized: 2-labeled {offender} has a nonzero neighbor"
        )


def _charges_doubled(g: PetersenGraph, f: RomanAssignment) -> np.ndarray:
    """Doubled charge per position; precondition: normalized valid RDF."""
    flat = f.flat
    two_neighbor_count = (flat[g.adjacency_table] == 2).sum(axis=1)
    charges = np.where(flat == 2, 1, np.where(flat == 1, 2, two_neighbor_count)).astype(np.int64)
    if (charges < 1).any():
        raise InternalCheckError("charge below the 0.5 floor on a normalized valid RDF")
    return charges


def g_value(g: PetersenGraph, f: RomanAssignment, w: VertexId) -> HalfWeight:
    """Charge of one vertex; f must be a normalized valid RDF."""
    _require_k2(g)
    _require_normalized(g, f)
    return HalfWeight(int(_charges_doubled(g, f)[g.position(w)]))


def total_g(g: PetersenGraph, f: RomanAssignment) -> HalfWeight:
    """Charge total over all vertices; equals the weight for normalized f."""
    _require_k2(g)
    _require_normalized(g, f)
    return HalfWeight(int(_charges_doubled(g, f).sum()))


def _column_residuals_doubled(g: PetersenGraph, f: RomanAssignment) -> np.ndarray:
    """Per column j, the doubled residual of {v_j, u_j}: charges minus 0.5 each."""
    charges = _charges_doubled(g, f)
    n = g.n
    return charges[:n] + charges[n:] - 2


def r_window(g: PetersenGraph, f: RomanAssignment, start: int, width: int) -> HalfWeight:
    """Residual sum over a window of ``width`` consecutive spoke pairs.

    Windows wider than n revisit columns; each visit counts (multiset
    semantics), which keeps the covering identity exact for every n.
    """
    _require_k2(g)
    if width < 1:
        raise ParameterError(f"window width must be >= 1, got {width}")
    _require_normalized(g, f)
    residuals = _column_residuals_doubled(g, f)
    total = sum(int(residuals[c]) for c in Window(start, width).columns(g.n))
    return HalfWeight(total)


@dataclass(frozen=True)
class Violation:
    window_start: int
    predicate: str
    detail: str


@dataclass(frozen=True)
class WindowRecord:
    start: int
    r: HalfWeight
    s_class: str | None
    flags: Mapping[str, str]


@dataclass(frozen=True)
class WindowReport:
    """Audit outcome: one record per window plus aggregate verdicts."""

    n: int
    kind: str  # "window_predicates" | "lower_bound"
    weight: int
    windows: tuple[WindowRecord, ...]
    violations: tuple[Violation, ...]
    class_counts: Mapping[str, int] | None = None
    chain: Mapping[str, int] | None = None
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind,
            "weight": self.weight,
            "windows": [
                {
                    "start": rec.start,
                    "r_doubled": rec.r.doubled,
                    "s_class": rec.s_class,
                    "flags": dict(rec.flags),
                }
                for rec in self.windows
            ],
            "aggregate": {
                "class_counts": dict(self.class_counts) if self.class_counts is not None else None,
                "chain": dict(self.chain) if self.chain is not None else None,
                "violations": [
                    {"window_start": v.window_start, "predicate": v.predicate, "detail": v.detail}
                    for v in self.violations
                ],
                "notes": list(self.notes),
                "passed": self.passed,
            },
        }

    def csv_rows(self) -> list[str]:
        """Data rows matching CSV_HEADER; aggregates live in the JSON form."""
        rows = []
        for rec in self.windows:
            flags = ",".join(rec.flags.get(name, FLAG_NA) for name in LEMMA_FLAGS)
            rows.append(f"{rec.start},{rec.r.doubled},{rec.s_class or ''},{flags}")
        return rows


CSV_HEADER = "window_start,r_doubled,s_class," + ",".join(LEMMA_FLAGS)


def _require_audit_hypotheses(g: PetersenGraph, f: RomanAssignment) -> None:
    """Audits only make sense on normalized optimal assignments; verify both.

    Optimality is checked against the solver, not trusted from the caller,
    and the fixpoint property is checked by running the normalizer.
    """
    from .solver import solve_dp

    _require_k2(g)
    _require_normalized(g, f)
    if normalize(g, f) != f:
        raise InvalidAssignmentError("assignment is not a normalization fixpoint")
    optimum = solve_dp(g.n).optimum
    if f.weight() != optimum:
        raise InvalidAssignmentError(
            f"assignment weight {f.weight()} is not the optimum {optimum} for n={g.n}"
        )


def _window_label_sets(
    f: RomanAssignment, n: int, start: int
) -> tuple[frozenset[VertexId], frozenset[VertexId]]:
    """(V_1, V_2) members inside the width-7 window starting at ``start``."""
    ones = []
    twos = []
    for d in range(WINDOW_WIDTH):
        j = (start + d) % n
        for w, lab in ((outer(j), f.outer[j]), (inner(j), f.inner[j])):
            if lab == 1:
                ones.append(w)
            elif lab == 2:
                twos.append(w)
    return frozenset(ones), frozenset(twos)


def lemma_audit(g: PetersenGraph, f: RomanAssignment) -> WindowReport:
    """Check the local window rules on every rotation of the width-7 window.

    Hypotheses (normalized, optimal) are verified, not assumed. For n < 7
    the window wraps onto itself, so the predicates are reported as not
    applicable and only the residuals are tabulated.
    """
    _require_audit_hypotheses(g, f)
    n = g.n
    residuals = _column_residuals_doubled(g, f)
    window_r = [
        sum(int(residuals[(i + d) % n]) for d in range(WINDOW_WIDTH)) for i in range(n)
    ]
    notes: list[str] = []
    records: list[WindowRecord] = []
    violations: list[Violation] = []
    degenerate = n < WINDOW_WIDTH
    if degenerate:
        notes.append(
            "window width exceeds n: every window covers the whole graph with "
            "multiplicity; predicates reported as not applicable"
        )
    for i in range(n):
        rd = window_r[i]
        flags = dict.fromkeys(LEMMA_FLAGS, FLAG_NA)
        if not degenerate:
            sparse = rd <= 1  # residual at most 0.5
            if sparse:
                checks = {
                    "outer_center_not_two": f.outer[(i + 3) % n] != 2,
                    "outer_flanks_not_two": f.outer[(i + 2) % n] != 2
                    and f.outer[(i + 4) % n] != 2,
                    "inner_center_not_two": f.inner[(i + 3) % n] != 2,
                }
                ones, twos = _window_label_sets(f, n, i)
                triple_a = frozenset(
                    (inner((i + 1) % n), inner((i + 2) % n), outer((i + 5) % n))
                )
                triple_b = frozenset(
                    (inner((i + 4) % n), inner((i + 5) % n), outer((i + 1) % n))
                )
                checks["tight_window_structure"] = (
                    rd == 1
                    and ones == frozenset((outer((i + 3) % n),))
                    and twos in (triple_a, triple_b)
                )
                for name, ok in checks.items():
                    flags[name] = FLAG_PASS if ok else FLAG_FAIL
                    if not ok:
                        violations.append(
                            Violation(i, name, f"window {i} has r_doubled={rd}")
                        )
            if rd == 1:
                rm = window_r[(i - WINDOW_WIDTH) % n]
                rp = window_r[(i + WINDOW_WIDTH) % n]
                ok = (rm >= 2 and rp >= 3) or (rm >= 3 and rp >= 2)
                flags["tight_window_neighbors"] = FLAG_PASS if ok else FLAG_FAIL
                if not ok:
                    violations.append(
                        Violation(
                            i,
                            "tight_window_neighbors",
                            f"neighbors carry r_doubled {rm} and {rp}",
                        )
                    )
            if (
                window_r[(i - WINDOW_WIDTH) % n] == 1
                and window_r[(i + WINDOW_WIDTH) % n] == 1
            ):
                ok = rd >= 4
                flags["between_tight_windows"] = FLAG_PASS if ok else FLAG_FAIL
                if not ok:
                    violations.append(
                        Violation(
                            i,
                            "between_tight_windows",
                            f"window {i} has r_doubled={rd} between two tight windows",
                        )
                    )
        records.append(WindowRecord(start=i, r=HalfWeight(rd), s_class=None, flags=flags))
    return WindowReport(
        n=n,
        kind="window_predicates",
        weight=f.weight(),
        windows=tuple(records),
        violations=tuple(violations),
        notes=tuple(notes),
    )


def lower_bound_audit(g: PetersenGraph, f: RomanAssignment) -> WindowReport:
    """Classify the n windows at offsets 7i and recompute the counting chain.

    Window index i is classed by its residual: S1 at exactly 0.5, S2 at
    exactly 1, and S31/S32 at 1.5 or more according to how many of the
    neighboring window indices i-1, i+1 fall in S1. The audit verifies
    |S1| <= |S31| + 2|S32|, that every S32 window reaches residual 2, and
    that the resulting chain yields 7 * weight >= 8n.
    """
    _require_audit_hypotheses(g, f)
    n = g.n
    if n < WINDOW_WIDTH:
        raise ParameterError(f"lower-bound audit needs n >= {WINDOW_WIDTH}, got {n}")
    residuals = _column_residuals_doubled(g, f)
    starts = [(WINDOW_WIDTH * i) % n for i in range(n)]
    window_r = [
        sum(int(residuals[(s + d) % n]) for d in range(WINDOW_WIDTH)) for s in starts
    ]
    violations: list[Violation] = []
    in_s1 = [rd == 1 for rd in window_r]
    classes: list[str | None] = []
    for i, rd in enumerate(window_r):
        if rd == 1:
            classes.append("S1")
        elif rd == 2:
            classes.append("S2")
        elif rd >= 3:
            s1_neighbors = int(in_s1[(i - 1) % n]) + int(in_s1[(i + 1) % n])
            classes.append("S32" if s1_neighbors == 2 else "S31")
        else:
            classes.append(None)
            violations.append(
                Violation(starts[i], "class_partition", f"window residual r_doubled={rd} below 0.5")
            )
    counts = {name: classes.count(name) for name in S_CLASSES}
    for i, (cls, rd) in enumerate(zip(classes, window_r)):
        if cls == "S32" and rd < 4:
            violations.append(
                Violation(starts[i], "surrounded_window_floor", f"S32 window has r_doubled={rd} < 4")
            )
    if counts["S1"] > counts["S31"] + 2 * counts["S32"]:
        violations.append(
            Violation(
                -1,
                "class_inequality",
                f"|S1|={counts['S1']} exceeds |S31| + 2|S32| = "
                f"{counts['S31'] + 2 * counts['S32']}",
            )
        )
    total_rd = sum(window_r)
    weight = f.weight()
    # Covering identity: the n offset-7i windows count every vertex 7 times.
    if total_rd != 7 * (2 * weight - 2 * n):
        raise InternalCheckError(
            f"window covering identity failed at n={n}: {total_rd} != {7 * (2 * weight - 2 * n)}"
        )
    class_floor = counts["S1"] + 2 * counts["S2"] + 3 * counts["S31"] + 4 * counts["S32"]
    if total_rd < class_floor:
        raise InternalCheckError("window residuals fell below their class floors")
    chain_holds = 7 * weight >= 8 * n
    if not chain_holds:
        violations.append(
            Violation(-1, "counting_chain", f"7*{weight} < 8*{n}")
        )
    chain = {
        "seven_times_weight": 7 * weight,
        "eight_n": 8 * n,
        "window_residual_total_doubled": total_rd,
        "class_floor_total_doubled": class_floor,
        "holds": chain_holds,
    }
    records = tuple(
        WindowRecord(
            start=starts[i],
            r=HalfWeight(window_r[i]),
            s_class=classes[i],
            flags=dict.fromkeys(LEMMA_FLAGS, FLAG_NA),
        )
        for i in range(n)
    )
    return WindowReport(
        n=n,
        kind="lower_bound",
        weight=weight,
        windows=records,
        violations=tuple(violations),
        class_counts=counts,
        chain=chain,
    )
