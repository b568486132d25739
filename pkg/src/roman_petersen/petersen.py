"""The generalized Petersen graph P(n, k) with exact modular-index adjacency.

P(n, k) has 2n vertices: an outer cycle v_0 .. v_{n-1}, inner vertices
u_0 .. u_{n-1} chained by chords u_i -- u_{i+k}, and spokes v_i -- u_i,
all indices taken modulo n. With n >= 2k + 1 the graph is simple and
3-regular.
"""

from __future__ import annotations

from enum import IntEnum
from functools import cached_property
from typing import Iterator, NamedTuple

import numpy as np

from .errors import ParameterError


class Ring(IntEnum):
    """Which of the two index families a vertex belongs to."""

    OUTER = 0  # v_i
    INNER = 1  # u_i


class VertexId(NamedTuple):
    """A vertex as (ring, index); index arithmetic is modulo n everywhere."""

    ring: Ring
    index: int

    def __str__(self) -> str:
        return f"{'vu'[self.ring]}{self.index}"


def outer(i: int) -> VertexId:
    """The outer-cycle vertex v_i."""
    return VertexId(Ring.OUTER, i)


def inner(i: int) -> VertexId:
    """The inner vertex u_i."""
    return VertexId(Ring.INNER, i)


class PetersenGraph:
    """Immutable model of P(n, k).

    Adjacency is precomputed at construction as a read-only integer table so
    that solver inner loops are plain array lookups. Internally a vertex is
    addressed by its position ``ring * n + (index mod n)``; positions
    0 .. n-1 are v_0 .. v_{n-1} and n .. 2n-1 are u_0 .. u_{n-1}.

    All public operations accept unreduced vertex indices and reduce them
    modulo n.
    """

    def __init__(self, n: int, k: int):
        if k < 1:
            raise ParameterError(f"k must be >= 1, got k={k}")
        if n < 2 * k + 1:
            raise ParameterError(
                f"n must be >= 2k+1 = {2 * k + 1} to keep P(n, k) simple, got n={n}"
            )
        self.n = int(n)
        self.k = int(k)
        i = np.arange(n)
        adj = np.empty((2 * n, 3), dtype=np.int64)
        adj[:n, 0] = (i + 1) % n      # v_i -- v_{i+1}
        adj[:n, 1] = (i - 1) % n      # v_i -- v_{i-1}
        adj[:n, 2] = n + i            # v_i -- u_i
        adj[n:, 0] = n + (i + k) % n  # u_i -- u_{i+k}
        adj[n:, 1] = n + (i - k) % n  # u_i -- u_{i-k}
        adj[n:, 2] = i                # u_i -- v_i
        adj.setflags(write=False)
        self._adj = adj

    def __repr__(self) -> str:
        return f"PetersenGraph(n={self.n}, k={self.k})"

    @property
    def order(self) -> int:
        """Number of vertices, 2n."""
        return 2 * self.n

    @property
    def size(self) -> int:
        """Number of edges, 3n."""
        return 3 * self.n

    @property
    def adjacency_table(self) -> np.ndarray:
        """Read-only (2n, 3) array; row p lists the neighbor positions of p."""
        return self._adj

    def position(self, w: VertexId) -> int:
        """Internal position of a vertex; reduces the index modulo n."""
        ring = int(w.ring)
        if ring not in (0, 1):
            raise ParameterError(f"invalid ring {w.ring!r}")
        return ring * self.n + w.index % self.n

    def vertex_at(self, position: int) -> VertexId:
        """Canonical VertexId for an internal position."""
        n = self.n
        if not 0 <= position < 2 * n:
            raise ParameterError(f"position {position} outside [0, {2 * n})")
        if position < n:
            return VertexId(Ring.OUTER, position)
        return VertexId(Ring.INNER, position - n)

    def canon(self, w: VertexId) -> VertexId:
        """The same vertex with its index reduced modulo n."""
        return self.vertex_at(self.position(w))

    @cached_property
    def vertices(self) -> tuple[VertexId, ...]:
        """All vertices in canonical order: v_0 .. v_{n-1}, u_0 .. u_{n-1}."""
        return tuple(self.vertex_at(p) for p in range(2 * self.n))

    def neighbors(self, w: VertexId) -> frozenset[VertexId]:
        """Open neighborhood: the three adjacent vertices."""
        row = self._adj[self.position(w)]
        return frozenset(self.vertex_at(int(p)) for p in row)

    def closed_neighborhood(self, w: VertexId) -> frozenset[VertexId]:
        """Open neighborhood plus the vertex itself; always 4 vertices."""
        return self.neighbors(w) | {self.canon(w)}

    def iter_edges(self) -> Iterator[tuple[VertexId, VertexId]]:
        """All 3n edges, each exactly once, in a fixed deterministic order."""
        n, k = self.n, self.k
        for i in range(n):
            yield outer(i), outer((i + 1) % n)
            yield outer(i), inner(i)
            yield inner(i), inner((i + k) % n)

    @cached_property
    def adjacency(self) -> dict[VertexId, frozenset[VertexId]]:
        """Adjacency as a plain map from each vertex to its neighbor set."""
        return {w: self.neighbors(w) for w in self.vertices}


def build_graph(n: int, k: int) -> PetersenGraph:
    """Construct P(n, k); rejects n < 2k + 1 which would not be simple."""
    return PetersenGraph(n, k)
