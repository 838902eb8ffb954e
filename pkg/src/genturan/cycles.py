"""Exact circumference and long-cycle detection.

Every cycle of a graph lies inside one block, so both searches decompose
the graph into blocks and run a path DFS per block.  Three devices keep
the search exact but fast on the structured graphs this package builds:

* start vertices are processed in decreasing-degree order and deleted
  once exhausted (all cycles through them have been seen);
* vertices with identical open neighborhoods among the still-alive
  vertices are interchangeable on any cycle, so only the least unused
  member of each such twin class is ever tried as an extension.  This
  collapses the many degree-a attachment vertices of the extremal graphs
  into a bounded search;
* a branch is cut when the path length plus the number of vertices still
  reachable from its endpoint cannot beat the best known cycle (or reach
  the requested length).

An optional node-expansion budget turns a runaway search into a
BudgetExceededError instead of an unbounded run.
"""

from __future__ import annotations

from .blocks import _raw_blocks
from .errors import BudgetExceededError, ParameterError
from .graphs import Graph, _iter_bits


def _reachable(adj: tuple[int, ...], allowed: int, seeds: int) -> int:
    reach = 0
    frontier = seeds & allowed
    while frontier:
        reach |= frontier
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~reach
    return reach


def _twin_class_masks(adj: tuple[int, ...], alive: int, n: int) -> list[int]:
    """class_mask[v] = bitmask of alive vertices with the same open
    neighborhood (within alive) as v.  Adjacent vertices never share an
    open neighborhood, so members of a class are pairwise non-adjacent
    and freely interchangeable along any cycle."""
    groups: dict[int, int] = {}
    for v in _iter_bits(alive):
        key = adj[v] & alive
        groups[key] = groups.get(key, 0) | (1 << v)
    class_mask = [0] * n
    for key, members in groups.items():
        for v in _iter_bits(members):
            class_mask[v] = members
    return class_mask


class _SearchState:
    __slots__ = ("expansions", "budget")

    def __init__(self, budget: int | None):
        self.expansions = 0
        self.budget = budget

    def tick(self) -> None:
        self.expansions += 1
        if self.budget is not None and self.expansions > self.budget:
            raise BudgetExceededError(
                f"cycle search exceeded budget of {self.budget} node expansions"
            )


def _longest_cycle_in_block(
    adj: tuple[int, ...],
    block_mask: int,
    n: int,
    target: int | None,
    state: _SearchState,
) -> tuple[int, list[int] | None]:
    """Longest cycle using only vertices of block_mask.

    With target set, stops at the first cycle of length >= target.
    """
    best_len = 0
    best_cycle: list[int] | None = None
    alive = block_mask
    order = sorted(
        _iter_bits(block_mask),
        key=lambda v: (-(adj[v] & block_mask).bit_count(), v),
    )
    for start in order:
        needed = target if target is not None else best_len + 1
        if alive.bit_count() < max(needed, 3):
            break
        class_mask = _twin_class_masks(adj, alive, n)
        path = [start]
        on_path = 1 << start

        def rec(v: int) -> bool:
            nonlocal best_len, best_cycle, on_path
            state.tick()
            if len(path) >= 3 and (adj[v] >> start) & 1:
                if len(path) > best_len:
                    best_len = len(path)
                    best_cycle = list(path)
                    if target is not None and best_len >= target:
                        return True
            free = alive & ~on_path
            threshold = best_len if target is None else target - 1
            if len(path) + free.bit_count() <= threshold:
                return False
            reach = _reachable(adj, free, adj[v] & free)
            if len(path) + reach.bit_count() <= threshold:
                return False
            m = adj[v] & free
            seen_classes = 0
            while m:
                low = m & -m
                m ^= low
                if low & seen_classes:
                    continue
                u = low.bit_length() - 1
                seen_classes |= class_mask[u]
                path.append(u)
                on_path |= low
                aborted = rec(u)
                path.pop()
                on_path ^= low
                if aborted:
                    return True
            return False

        if rec(start):
            return best_len, best_cycle
        alive ^= 1 << start
    return best_len, best_cycle


def _block_masks(graph: Graph) -> list[int]:
    """Bitmasks of the blocks that can contain a cycle (order >= 3)."""
    raw, _ = _raw_blocks(graph)
    masks = []
    for block in raw:
        if len(block) >= 3:
            m = 0
            for v in block:
                m |= 1 << v
            masks.append(m)
    return masks


def circumference(graph: Graph, budget: int | None = None) -> int:
    """Length of a longest cycle; 0 if the graph is acyclic.

    Exact.  With a budget, raises BudgetExceededError when the search
    expands more nodes than allowed.
    """
    state = _SearchState(budget)
    best = 0
    adj = graph.adjacency_masks
    for mask in sorted(_block_masks(graph), key=lambda m: -m.bit_count()):
        if mask.bit_count() <= best:
            continue
        length, _ = _longest_cycle_in_block(adj, mask, graph.n, None, state)
        best = max(best, length)
    return best


def find_cycle_geq(
    graph: Graph, k_c: int, budget: int | None = None
) -> list[int] | None:
    """A cycle of length >= k_c as a vertex list, or None.

    Early exit: the first qualifying cycle is returned.  Blocks are tried
    largest first since every cycle lives inside a single block.
    """
    if k_c < 3:
        raise ParameterError(f"cycle length threshold must be >= 3, got {k_c}")
    state = _SearchState(budget)
    adj = graph.adjacency_masks
    for mask in sorted(_block_masks(graph), key=lambda m: -m.bit_count()):
        if mask.bit_count() < k_c:
            continue
        length, cycle = _longest_cycle_in_block(adj, mask, graph.n, k_c, state)
        if cycle is not None and length >= k_c:
            return cycle
    return None


def has_cycle_geq(graph: Graph, k_c: int, budget: int | None = None) -> bool:
    """True iff some cycle has length >= k_c."""
    return find_cycle_geq(graph, k_c, budget=budget) is not None


def circumference_by_enumeration(graph: Graph) -> int:
    """Independent oracle: try every vertex subset and every cyclic order.

    Factorial; intended for n <= 7 test graphs only.
    """
    from itertools import combinations, permutations

    best = 0
    for size in range(graph.n, 2, -1):
        if size <= best:
            break
        for subset in combinations(range(graph.n), size):
            first = subset[0]
            for rest in permutations(subset[1:]):
                order = (first,) + rest
                if all(
                    graph.has_edge(order[i], order[(i + 1) % size])
                    for i in range(size)
                ):
                    best = max(best, size)
                    break
            if best == size:
                break
    return best
