"""Roman domination functions on P(n, k): weight, validity, normalization.

A Roman dominating function (RDF) labels every vertex 0, 1 or 2 so that each
0-labeled vertex has at least one 2-labeled neighbor. Its weight is the sum
of all labels. ``normalize`` applies weight-reducing relabeling moves until
no 2-labeled vertex has a 1- or 2-labeled neighbor.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

from .errors import (
    InternalCheckError,
    InvalidAssignmentError,
    ParameterError,
    SchemaError,
)
from .petersen import PetersenGraph, Ring, VertexId

_VALID_LABELS = frozenset((0, 1, 2))


@dataclass(frozen=True)
class RomanAssignment:
    """A total labeling f : V(P(n, k)) -> {0, 1, 2}.

    ``outer[i]`` is the label of v_i and ``inner[i]`` the label of u_i.
    Instances are immutable; all mutating-style operations return new values.
    """

    outer: tuple[int, ...]
    inner: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "outer", tuple(self.outer))
        object.__setattr__(self, "inner", tuple(self.inner))
        if len(self.outer) != len(self.inner):
            raise ParameterError(
                f"outer and inner lengths differ: {len(self.outer)} != {len(self.inner)}"
            )
        if not self.outer:
            raise ParameterError("assignment must cover at least one index")
        for name, labels in (("outer", self.outer), ("inner", self.inner)):
            if not _VALID_LABELS.issuperset(labels):
                bad = next(i for i, lab in enumerate(labels) if lab not in _VALID_LABELS)
                raise ParameterError(f"{name}[{bad}] = {labels[bad]!r} is not a label in {{0, 1, 2}}")

    @property
    def n(self) -> int:
        return len(self.outer)

    @cached_property
    def flat(self) -> np.ndarray:
        """Labels as a read-only (2n,) array in position order (outer, inner)."""
        arr = np.array(self.outer + self.inner, dtype=np.int8)
        arr.setflags(write=False)
        return arr

    def label(self, w: VertexId) -> int:
        labels = self.outer if w.ring == Ring.OUTER else self.inner
        return labels[w.index % self.n]

    def weight(self) -> int:
        """Total label mass, n_1 + 2 * n_2."""
        return sum(self.outer) + sum(self.inner)

    def counts(self) -> tuple[int, int, int]:
        """(n_0, n_1, n_2): how many vertices carry each label."""
        flat = self.flat
        return (int((flat == 0).sum()), int((flat == 1).sum()), int((flat == 2).sum()))

    def vertices_with_label(self, value: int) -> frozenset[VertexId]:
        if value not in _VALID_LABELS:
            raise ParameterError(f"no such label {value!r}")
        n = self.n
        found = []
        for i, lab in enumerate(self.outer):
            if lab == value:
                found.append(VertexId(Ring.OUTER, i))
        for i, lab in enumerate(self.inner):
            if lab == value:
                found.append(VertexId(Ring.INNER, i))
        return frozenset(found)

    def partition(self) -> tuple[frozenset[VertexId], frozenset[VertexId], frozenset[VertexId]]:
        """The induced partition (V_0, V_1, V_2)."""
        return tuple(self.vertices_with_label(v) for v in (0, 1, 2))

    def with_label(self, w: VertexId, value: int) -> "RomanAssignment":
        """Copy of this assignment with one vertex relabeled."""
        if value not in _VALID_LABELS:
            raise ParameterError(f"no such label {value!r}")
        i = w.index % self.n
        if w.ring == Ring.OUTER:
            return RomanAssignment(
                self.outer[:i] + (value,) + self.outer[i + 1:], self.inner
            )
        return RomanAssignment(self.outer, self.inner[:i] + (value,) + self.inner[i + 1:])

    def serialized(self) -> tuple[int, ...]:
        """Flat label sequence (outer then inner); the tie-breaking order."""
        return self.outer + self.inner

    @classmethod
    def constant(cls, n: int, value: int) -> "RomanAssignment":
        return cls((value,) * n, (value,) * n)

    @classmethod
    def from_sets(
        cls,
        n: int,
        two: Iterable[VertexId] = (),
        one: Iterable[VertexId] = (),
    ) -> "RomanAssignment":
        """Build from the 2-labeled and 1-labeled vertex sets; the rest is 0."""
        labels = [0] * (2 * n)
        for value, group in ((2, two), (1, one)):
            for w in group:
                p = int(w.ring) * n + w.index % n
                if labels[p] != 0:
                    raise ParameterError(f"vertex {w} listed with two labels")
                labels[p] = value
        return cls(tuple(labels[:n]), tuple(labels[n:]))

    # -- JSON document format ------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"n": self.n, "k": 2, "outer": list(self.outer), "inner": list(self.inner)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json_dict(cls, doc) -> "RomanAssignment":
        """Parse the {"n", "k", "outer", "inner"} document, checking the schema.

        Raises SchemaError pointing at the offending field.
        """
        if not isinstance(doc, Mapping):
            raise SchemaError("$", "expected a JSON object")
        for key in doc:
            if key not in ("n", "k", "outer", "inner"):
                raise SchemaError(str(key), "unexpected field")
        for key in ("n", "k", "outer", "inner"):
            if key not in doc:
                raise SchemaError(key, "missing required field")
        n = doc["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise SchemaError("n", f"expected a positive integer, got {n!r}")
        if doc["k"] != 2 or isinstance(doc["k"], bool):
            raise SchemaError("k", f"expected 2, got {doc['k']!r}")
        rows = {}
        for key in ("outer", "inner"):
            value = doc[key]
            if not isinstance(value, list):
                raise SchemaError(key, f"expected an array, got {type(value).__name__}")
            if len(value) != n:
                raise SchemaError(key, f"expected {n} entries, got {len(value)}")
            for i, lab in enumerate(value):
                if not isinstance(lab, int) or isinstance(lab, bool) or lab not in _VALID_LABELS:
                    raise SchemaError(f"{key}[{i}]", f"expected a label 0, 1 or 2, got {lab!r}")
            rows[key] = tuple(value)
        return cls(rows["outer"], rows["inner"])

    @classmethod
    def from_json(cls, text: str) -> "RomanAssignment":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError("$", f"not valid JSON: {exc}") from exc
        return cls.from_json_dict(doc)


@dataclass(frozen=True)
class ValidityReport:
    """Outcome of the RDF validity check.

    ``violations`` lists every 0-labeled vertex without a 2-labeled neighbor,
    in canonical vertex order; ``valid`` holds exactly when it is empty.
    """

    valid: bool
    violations: tuple[VertexId, ...]


def _check_dimensions(g: PetersenGraph, f: RomanAssignment) -> None:
    if f.n != g.n:
        raise ParameterError(f"assignment covers n={f.n} but graph has n={g.n}")


def _flat_is_valid(adj: np.ndarray, flat: np.ndarray) -> bool:
    dominated = (flat[adj] == 2).any(axis=1)
    return bool(((flat != 0) | dominated).all())


def is_valid_rdf(g: PetersenGraph, f: RomanAssignment) -> ValidityReport:
    """Check the Roman domination condition: V_0 inside N[V_2]."""
    _check_dimensions(g, f)
    flat = f.flat
    dominated = (flat[g.adjacency_table] == 2).any(axis=1)
    bad = np.flatnonzero((flat == 0) & ~dominated)
    violations = tuple(g.vertex_at(int(p)) for p in bad)
    return ValidityReport(valid=not violations, violations=violations)


def is_dominating_set(g: PetersenGraph, vertex_set: Iterable[VertexId]) -> bool:
    """True iff the closed neighborhood of the set covers every vertex."""
    covered = np.zeros(2 * g.n, dtype=bool)
    adj = g.adjacency_table
    for w in vertex_set:
        p = g.position(w)
        covered[p] = True
        covered[adj[p]] = True
    return bool(covered.all())


def is_normalized(g: PetersenGraph, f: RomanAssignment) -> bool:
    """True iff f is a valid RDF and no 2-labeled vertex has a nonzero neighbor."""
    _check_dimensions(g, f)
    flat = f.flat
    if not _flat_is_valid(g.adjacency_table, flat):
        return False
    twos = np.flatnonzero(flat == 2)
    return bool((flat[g.adjacency_table[twos]] == 0).all())


def _apply_one_move(adj: np.ndarray, labels: list[int]) -> bool:
    """Apply the first applicable relabeling move in position order.

    Moves, for the scanned vertex w:
      (a) w labeled 1 with a 2-labeled neighbor: relabel w to 0 (weight -1).
      (b) w labeled 2 adjacent to another 2, both remaining neighbors nonzero:
          relabel w to 0 (weight -2).
      (c) w labeled 2 adjacent to another 2, some remaining neighbor 0-labeled:
          relabel w to 0 and each such 0-neighbor to 1 (weight -1, or equal
          weight with one fewer 2-label when both remaining neighbors were 0).

    Every move keeps the assignment a valid RDF: the relabeled w stays next
    to a 2, and the only 0-vertices that could have relied on w are its
    remaining neighbors, which move (c) raises to 1.
    """
    for p, lab in enumerate(labels):
        if lab == 1:
            if any(labels[int(q)] == 2 for q in adj[p]):
                labels[p] = 0
                return True
        elif lab == 2:
            partners = [int(q) for q in adj[p] if labels[int(q)] == 2]
            if not partners:
                continue
            keep = min(partners)
            rest = [int(q) for q in adj[p] if int(q) != keep]
            zeros = [q for q in rest if labels[q] == 0]
            labels[p] = 0
            for q in zeros:
                labels[q] = 1
            return True
    return False


def normalize(g: PetersenGraph, f: RomanAssignment) -> RomanAssignment:
    """Drive a valid RDF to a fixpoint of the weight-reducing moves.

    At the fixpoint no 1-labeled vertex has a 2-labeled neighbor and no two
    2-labeled vertices are adjacent, so every 2-labeled vertex sees only
    0-labeled neighbors. The result is a valid RDF of weight at most the
    input's; validity and weight monotonicity are asserted after every move.
    """
    report = is_valid_rdf(g, f)
    if not report.valid:
        raise InvalidAssignmentError(
            f"input is not a valid RDF; undominated: {[str(w) for w in report.violations]}"
        )
    adj = g.adjacency_table
    labels = [int(x) for x in f.flat]
    weight_before = f.weight()
    max_moves = 5 * g.n + 10  # lexicographic (weight, |V_2|) descent ends in O(n) moves
    for _ in range(max_moves):
        if not _apply_one_move(adj, labels):
            break
        weight_now = sum(labels)
        if weight_now > weight_before:
            raise InternalCheckError("normalization move increased the weight")
        flat = np.array(labels, dtype=np.int8)
        if not _flat_is_valid(adj, flat):
            raise InternalCheckError("normalization move broke validity")
        weight_before = weight_now
    else:
        raise InternalCheckError("normalization failed to reach a fixpoint")
    n = g.n
    return RomanAssignment(tuple(labels[:n]), tuple(labels[n:]))
