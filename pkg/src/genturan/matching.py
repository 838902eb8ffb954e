"""Exact maximum matching and matching-bound certificates.

The primary matching routine is an augmenting-path algorithm with blossom
contraction (exact for general graphs).  A dynamic program over vertex
subsets serves as an independent oracle for n <= 12, and a bounded
branching search answers "is there a matching of size t" quickly on the
small graphs the exhaustive oracle explores.

A matching bound nu(G) <= s always has a short certificate: a vertex set
X with |X| + sum_i floor(|C_i|/2) <= s over the components C_i of G - X.
Such an X exists iff nu(G) <= s, and any valid X has |X| <= s, so the
certificate search only scans subsets of size at most s.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import ParameterError, SizeLimitError
from .graphs import Graph, _iter_bits

_ENUMERATION_LIMIT = 12
_CERTIFICATE_LIMIT = 20


def _greedy_matching(adj: tuple[int, ...], n: int) -> list[int]:
    match = [-1] * n
    for u in range(n):
        if match[u] == -1:
            for v in _iter_bits(adj[u]):
                if match[v] == -1:
                    match[u] = v
                    match[v] = u
                    break
    return match


def _augment_from(adj_lists: list[list[int]], match: list[int], root: int, n: int) -> bool:
    """Grow an alternating tree from `root`; augment and report success.

    Standard blossom handling: `base` maps each vertex to the base of the
    blossom currently containing it; odd cycles found during the BFS are
    contracted by re-basing every vertex on the two tree paths.
    """
    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n
    in_queue[root] = True
    queue = deque([root])

    def lowest_common_base(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj_lists[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # v-to closes an odd cycle through the tree: contract it.
                cur_base = lowest_common_base(v, to)
                in_blossom = [False] * n
                mark_path(v, cur_base, to, in_blossom)
                mark_path(to, cur_base, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur_base
                        if not in_queue[i]:
                            in_queue[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    while to != -1:
                        prev = parent[to]
                        nxt = match[prev]
                        match[to] = prev
                        match[prev] = to
                        to = nxt
                    return True
                in_queue[match[to]] = True
                queue.append(match[to])
    return False


def _maximum_matching_array(graph: Graph) -> list[int]:
    n = graph.n
    adj = graph.adjacency_masks
    match = _greedy_matching(adj, n)
    adj_lists = [list(_iter_bits(adj[v])) for v in range(n)]
    for root in range(n):
        if match[root] == -1:
            _augment_from(adj_lists, match, root, n)
    return match


def max_matching(graph: Graph) -> int:
    """nu(G), the size of a maximum matching."""
    match = _maximum_matching_array(graph)
    return sum(1 for v in match if v != -1) // 2


def maximum_matching_edges(graph: Graph) -> list[tuple[int, int]]:
    """One maximum matching, as (u, v) pairs with u < v."""
    match = _maximum_matching_array(graph)
    return [(u, match[u]) for u in range(graph.n) if match[u] > u]


def max_matching_by_enumeration(graph: Graph) -> int:
    """Independent oracle: exact nu(G) by dynamic programming over all
    vertex subsets.  Limited to n <= 12."""
    n = graph.n
    if n > _ENUMERATION_LIMIT:
        raise SizeLimitError(
            f"enumeration oracle handles n <= {_ENUMERATION_LIMIT}, got n={n}"
        )
    adj = graph.adjacency_masks
    size = 1 << n
    best_for = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        best = best_for[rest]
        m = adj[v] & rest
        while m:
            lu = m & -m
            m ^= lu
            cand = 1 + best_for[rest ^ lu]
            if cand > best:
                best = cand
        best_for[mask] = best
    return best_for[size - 1]


def has_matching_of_size(adj: tuple[int, ...] | list[int], active: int, t: int) -> bool:
    """True iff there are t pairwise-disjoint edges among the vertices of
    the bitmask `active`.  Branches on the lowest non-isolated vertex."""
    if t <= 0:
        return True

    def rec(mask: int, need: int) -> bool:
        if need == 0:
            return True
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            nbrs = adj[v] & mask & ~low
            if nbrs:
                break
            mask ^= low
        else:
            return False
        if mask.bit_count() < 2 * need:
            return False
        rest = mask ^ low
        m = nbrs
        while m:
            lu = m & -m
            m ^= lu
            if rec(rest ^ lu, need - 1):
                return True
        return rec(rest, need)

    return rec(active, t)


def _components_of_complement(graph: Graph, removed_mask: int) -> list[int]:
    """Vertex bitmasks of the components of G - X, X given as a bitmask."""
    adj = graph.adjacency_masks
    remaining = ((1 << graph.n) - 1) & ~removed_mask
    comps = []
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


@dataclass(frozen=True)
class BergeTutteCertificate:
    """Witness that nu(G) <= bound: deleting vertex_set leaves components
    whose floor-halved sizes, plus |vertex_set|, stay within the bound."""

    vertex_set: tuple[int, ...]
    component_sizes: tuple[int, ...]
    bound: int
    slack: int

    @property
    def isolated_count(self) -> int:
        """Number of 1-vertex components of G - X."""
        return sum(1 for c in self.component_sizes if c == 1)

    @property
    def large_component_sizes(self) -> tuple[int, ...]:
        """Sizes of the components of G - X with at least two vertices."""
        return tuple(c for c in self.component_sizes if c >= 2)

    @property
    def matching_upper_bound(self) -> int:
        return len(self.vertex_set) + sum(c // 2 for c in self.component_sizes)


def _validate_certificate(graph: Graph, cert: BergeTutteCertificate, s: int) -> None:
    mask = 0
    for v in cert.vertex_set:
        mask |= 1 << v
    comps = _components_of_complement(graph, mask)
    sizes = tuple(sorted(c.bit_count() for c in comps))
    if sizes != tuple(sorted(cert.component_sizes)):
        raise AssertionError("certificate component sizes do not match the graph")
    if sum(sizes) + len(cert.vertex_set) != graph.n:
        raise AssertionError("certificate components do not partition V - X")
    if cert.slack != s - cert.matching_upper_bound or cert.slack < 0:
        raise AssertionError("certificate slack is inconsistent")


def berge_tutte_certificate(graph: Graph, s: int) -> BergeTutteCertificate | None:
    """Smallest-first search for a set X certifying nu(G) <= s.

    Returns None iff nu(G) > s.  Subsets are scanned in increasing size
    and lexicographic order, so the returned certificate is deterministic
    and as small as possible.  Rejects n > 20 (subset search only).
    """
    n = graph.n
    if n > _CERTIFICATE_LIMIT:
        raise SizeLimitError(
            f"certificate search handles n <= {_CERTIFICATE_LIMIT}, got n={n}"
        )
    if s < 0:
        raise ParameterError(f"s must be >= 0, got {s}")
    if max_matching(graph) > s:
        return None
    for size in range(0, s + 1):
        for subset in combinations(range(n), size):
            mask = 0
            for v in subset:
                mask |= 1 << v
            comps = _components_of_complement(graph, mask)
            sizes = tuple(c.bit_count() for c in comps)
            value = size + sum(c // 2 for c in sizes)
            if value <= s:
                cert = BergeTutteCertificate(
                    vertex_set=subset,
                    component_sizes=sizes,
                    bound=s,
                    slack=s - value,
                )
                _validate_certificate(graph, cert, s)
                return cert
    raise AssertionError(
        "no certificate found although nu(G) <= s; this contradicts the "
        "matching-bound characterization"
    )
