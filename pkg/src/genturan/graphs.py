"""Immutable simple-graph type and exact clique counting.

Vertices are labeled 0..n-1.  Adjacency is stored as one Python integer
bitmask per vertex, so adjacency tests are single bit probes and
neighborhood intersections are bitwise ANDs regardless of n (Python ints
are arbitrary precision, so the same code path serves n > 64).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .errors import ParameterError


class Graph:
    """Finite simple undirected graph on vertices 0..n-1.

    Immutable after construction; all operations in this package treat
    graphs as values, so instances are safe to share between threads.
    """

    __slots__ = ("n", "_adj", "_num_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ParameterError(f"n must be >= 0, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"loop at vertex {u} is not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self._num_edges = sum(m.bit_count() for m in adj) // 2

    @classmethod
    def from_adjacency_masks(cls, masks: Iterable[int]) -> "Graph":
        """Build from per-vertex neighbor bitmasks (validated for symmetry)."""
        masks = list(masks)
        g = cls.__new__(cls)
        n = len(masks)
        for v, m in enumerate(masks):
            if m >> n:
                raise ParameterError(f"adjacency mask of vertex {v} exceeds n={n}")
            if (m >> v) & 1:
                raise ParameterError(f"loop at vertex {v} is not allowed")
        for v in range(n):
            for u in _iter_bits(masks[v]):
                if not (masks[u] >> v) & 1:
                    raise ParameterError(f"asymmetric adjacency between {u} and {v}")
        g.n = n
        g._adj = tuple(masks)
        g._num_edges = sum(m.bit_count() for m in masks) // 2
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls.from_adjacency_masks([full ^ (1 << v) for v in range(n)])

    @property
    def num_edges(self) -> int:
        return self._num_edges

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return _iter_bits(self._adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in _iter_bits(self._adj[u] >> (u + 1)):
                yield (u, v + u + 1)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        """New graph with the given edges added."""
        return Graph(self.n, list(self.edges()) + list(extra))

    def relabeled(self, perm: list[int]) -> "Graph":
        """New graph where old vertex v becomes perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ParameterError("perm must be a permutation of 0..n-1")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= self._adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def _iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def count_cliques(graph: Graph, r: int) -> int:
    """Number of r-vertex subsets of `graph` that induce a complete subgraph.

    N_1 = n and N_2 = the edge count; r larger than n gives 0.  Counting
    walks the vertices in increasing order so each clique is enumerated
    exactly once; the candidate set shrinks by neighborhood intersection.
    """
    if r < 1:
        raise ParameterError(f"r must be >= 1, got {r}")
    if r == 1:
        return graph.n
    if r == 2:
        return graph.num_edges
    adj = graph._adj

    def rec(cand: int, need: int) -> int:
        if need == 1:
            return cand.bit_count()
        total = 0
        while cand:
            if cand.bit_count() < need:
                break
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            total += rec(cand & adj[v], need - 1)
        return total

    return rec((1 << graph.n) - 1, r)


def count_cliques_in_mask(adj: tuple[int, ...] | list[int], cand: int, r: int) -> int:
    """r-cliques using only vertices of `cand` (helper for incremental counts)."""
    if r == 0:
        return 1
    if r == 1:
        return cand.bit_count()

    def rec(c: int, need: int) -> int:
        if need == 1:
            return c.bit_count()
        total = 0
        while c:
            if c.bit_count() < need:
                break
            low = c & -c
            c ^= low
            v = low.bit_length() - 1
            total += rec(c & adj[v], need - 1)
        return total

    return rec(cand, r)


def count_cliques_all_sizes(graph: Graph) -> list[int]:
    """[N_1, N_2, ..., N_n]; mostly a consistency oracle for count_cliques."""
    return [count_cliques(graph, r) for r in range(1, graph.n + 1)]


def count_cliques_by_enumeration(graph: Graph, r: int) -> int:
    """Independent oracle: test all C(n, r) vertex subsets directly."""
    if r < 1:
        raise ParameterError(f"r must be >= 1, got {r}")
    total = 0
    for subset in combinations(range(graph.n), r):
        if all(graph.has_edge(u, v) for u, v in combinations(subset, 2)):
            total += 1
    return total


def switch_vertex(graph: Graph, v: int, target: Iterable[int]) -> Graph:
    """Detach v from all its neighbors, then join v to every vertex in `target`.

    The degree of v in the result equals |target|; v must not be in target.
    """
    target = set(target)
    if v in target:
        raise ParameterError(f"vertex {v} must not belong to the target set")
    if not (0 <= v < graph.n):
        raise ParameterError(f"vertex {v} out of range")
    for u in target:
        if not (0 <= u < graph.n):
            raise ParameterError(f"target vertex {u} out of range")
    masks = list(graph._adj)
    for u in _iter_bits(masks[v]):
        masks[u] &= ~(1 << v)
    masks[v] = 0
    for u in target:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph.from_adjacency_masks(masks)
