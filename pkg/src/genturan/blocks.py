"""Block decomposition and the hub-gluing star transform.

A block is a maximal 2-connected subgraph or a bridge (an isolated vertex
counts as a trivial block).  Blocks pairwise intersect in at most one
vertex, every edge lies in exactly one block, and any clique of size >= 2
lies inside a single block.

Blocks are ordered so that each block after the first meets the union of
its predecessors in exactly one vertex, its representative.  The star
transform re-glues every later block at a single hub: within each block
the representative is renamed to the hub, which preserves the edge count,
all clique counts, and the multiset of block orders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DisconnectedGraphError, ParameterError
from .graphs import Graph


@dataclass(frozen=True)
class BlockDecomposition:
    """Ordered blocks of a connected graph.

    representatives[i] is the unique vertex block i shares with the union
    of blocks 0..i-1 (None for the first block).
    """

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]
    representatives: tuple[int | None, ...]

    def block_orders(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)


def _raw_blocks(graph: Graph) -> tuple[list[frozenset[int]], set[int]]:
    """Biconnected components and cut vertices of every component.

    Iterative lowpoint DFS with an edge stack; isolated vertices become
    single-vertex blocks.
    """
    n = graph.n
    adj = [sorted(graph.neighbors(v)) for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    timer = 0

    for root in range(n):
        if disc[root] != -1:
            continue
        if not adj[root]:
            blocks.append(frozenset((root,)))
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, iter(adj[root]))]
        edge_stack: list[tuple[int, int]] = []
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    parent[w] = v
                    if v == root:
                        root_children += 1
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
                if w != parent[v] and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                members: set[int] = set()
                while edge_stack:
                    a, b = edge_stack.pop()
                    members.add(a)
                    members.add(b)
                    if (a, b) == (u, v):
                        break
                blocks.append(frozenset(members))
                if u != root or root_children >= 2:
                    cuts.add(u)
    return blocks, cuts


def _order_blocks(
    blocks: list[frozenset[int]], first: int
) -> tuple[list[frozenset[int]], list[int | None]]:
    """Order blocks starting from `first` so each later block shares exactly
    one vertex with the union of earlier ones.  Deterministic: the next
    block minimizes (shared vertex, sorted vertex tuple)."""
    ordered = [blocks[first]]
    reps: list[int | None] = [None]
    covered = set(blocks[first])
    remaining = [b for i, b in enumerate(blocks) if i != first]
    while remaining:
        best_idx = -1
        best_key: tuple[int, tuple[int, ...]] | None = None
        for i, b in enumerate(remaining):
            shared = b & covered
            if len(shared) != 1:
                continue
            key = (min(shared), tuple(sorted(b)))
            if best_key is None or key < best_key:
                best_key = key
                best_idx = i
        if best_idx < 0:
            raise DisconnectedGraphError("block structure is not connected")
        block = remaining.pop(best_idx)
        ordered.append(block)
        reps.append(best_key[0])
        covered |= block
    return ordered, reps


def block_decomposition(graph: Graph) -> BlockDecomposition:
    """Blocks, cut vertices and representatives of a connected graph.

    The first block is the one with the lexicographically smallest vertex
    tuple; ties elsewhere break toward the smallest shared vertex.
    """
    if not graph.is_connected():
        raise DisconnectedGraphError("block_decomposition requires a connected graph")
    raw, cuts = _raw_blocks(graph)
    first = min(range(len(raw)), key=lambda i: tuple(sorted(raw[i])))
    ordered, reps = _order_blocks(raw, first)
    return BlockDecomposition(
        blocks=tuple(tuple(sorted(b)) for b in ordered),
        cut_vertices=tuple(sorted(cuts)),
        representatives=tuple(reps),
    )


def _induced_edges(graph: Graph, members: frozenset[int]) -> list[tuple[int, int]]:
    out = []
    for u in members:
        mask = graph.adjacency_mask(u)
        for v in members:
            if v > u and (mask >> v) & 1:
                out.append((u, v))
    return out


def star_transform(graph: Graph, b1_index: int, u1: int) -> Graph:
    """Re-glue every block at the hub u1 of the chosen first block.

    Later blocks are processed in decomposition order; within each, the
    representative vertex is renamed to u1.  The result has the same
    vertex set, the same number of edges, the same clique counts for
    every order, and all blocks share u1.
    """
    dec = block_decomposition(graph)
    if not 0 <= b1_index < len(dec.blocks):
        raise ParameterError(f"b1_index {b1_index} out of range")
    if u1 not in dec.blocks[b1_index]:
        raise ParameterError(f"u1={u1} is not a vertex of block {b1_index}")
    raw = [frozenset(b) for b in dec.blocks]
    ordered, reps = _order_blocks(raw, b1_index)
    edges = _induced_edges(graph, ordered[0])
    for block, rep in zip(ordered[1:], reps[1:]):
        assert rep is not None
        if rep == u1:
            edges.extend(_induced_edges(graph, block))
        else:
            for a, b in _induced_edges(graph, block):
                a2 = u1 if a == rep else a
                b2 = u1 if b == rep else b
                edges.append((a2, b2))
    return Graph(graph.n, edges)
