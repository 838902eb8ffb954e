"""Exhaustive ground truth for small orders.

brute_force_ex maximizes the K_r count over every labeled family-free
graph on n vertices (n <= 8).  The search walks the edge-index space as
a branch-and-bound: edges are decided include-first in lexicographic
order, an include is attempted only while the graph stays family-free
(freeness is inherited by subgraphs, so pruned inclusions stay pruned),
and a branch is cut when the current count plus an upper bound on what
the still-addable edges can contribute falls strictly below the best
known value.  Verified library constructions seed that best value, so
the search mostly certifies optimality instead of discovering it.

The first few edge decisions are split into fixed chunks.  Chunks are
searched independently (serially or on a process pool) and merged in
chunk order, so maxima, witness sets and the examined counter are
identical regardless of parallelism.

Witnesses are reported in canonical form: the lexicographically minimal
adjacency bit encoding over all vertex permutations, which is also the
minimal graph6 body.  A branch-and-bound over partial vertex placements
computes it without touching all n! permutations.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .constructors import build_block_star, build_woodall_G0
from .errors import OracleSizeError, ParameterError
from .family import ForbiddenFamily, is_family_free
from .formulas import ex_even_edges, ex_odd
from .graphs import Graph, count_cliques, count_cliques_in_mask
from .graph_io import to_graph6
from .matching import has_matching_of_size

_ORACLE_LIMIT = 8
_WITNESS_CAP = 100
_CHUNK_EDGES = 6


# ---------------------------------------------------------------------------
# canonical forms


def canonical_encoding(graph: Graph) -> tuple[int, ...]:
    """Lexicographically minimal adjacency encoding over all relabelings.

    Entry j-1 holds the adjacency bits of position j toward positions
    0..j-1 (earlier positions in higher bits), matching graph6 bit order.
    """
    n = graph.n
    if n <= 1:
        return ()
    masks = graph.adjacency_masks
    best: list[tuple[int, ...] | None] = [None]
    used = [False] * n
    code = [0] * n
    enc = [0] * n

    def rec(j: int) -> None:
        if j == n:
            cand = tuple(enc[1:])
            if best[0] is None or cand < best[0]:
                best[0] = cand
            return
        b = best[0]
        order = sorted((c for c in range(n) if not used[c]), key=lambda c: code[c])
        for c in order:
            if b is not None and j >= 1:
                prefix = tuple(enc[1:j])
                cmp_prefix = b[: j - 1]
                if prefix > cmp_prefix:
                    return
                if prefix == cmp_prefix and code[c] > b[j - 1]:
                    break
            enc[j] = code[c]
            used[c] = True
            saved = code[:]
            mask_c = masks[c]
            for other in range(n):
                if not used[other]:
                    code[other] = (code[other] << 1) | ((mask_c >> other) & 1)
            rec(j + 1)
            code[:] = saved
            used[c] = False
            b = best[0]

    rec(0)
    assert best[0] is not None
    return best[0]


def graph_from_encoding(enc: tuple[int, ...], n: int) -> Graph:
    edges = []
    for j in range(1, n):
        bits = enc[j - 1]
        for i in range(j):
            if (bits >> (j - 1 - i)) & 1:
                edges.append((i, j))
    return Graph(n, edges)


def canonical_graph(graph: Graph) -> Graph:
    return graph_from_encoding(canonical_encoding(graph), graph.n)


def canonical_graph6(graph: Graph) -> str:
    return to_graph6(canonical_graph(graph))


# ---------------------------------------------------------------------------
# isomorphism-free enumeration


def enumerate_family_free(
    n: int, family: ForbiddenFamily, *, connected_only: bool = False
) -> Iterator[Graph]:
    """Every family-free graph on n vertices, once per isomorphism class.

    Grows graphs one vertex at a time (freeness and connectivity are both
    inherited by the right induced subgraphs) with canonical-form
    deduplication at each level.  Yields canonical graphs in encoding
    order.  Limited to n <= 8.
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if n > _ORACLE_LIMIT:
        raise OracleSizeError(
            f"family-free enumeration handles n <= {_ORACLE_LIMIT}, got n={n}"
        )
    level = [Graph(1)]
    for size in range(2, n + 1):
        seen: dict[tuple[int, ...], None] = {}
        low = 1 if connected_only else 0
        for g in level:
            base = g.adjacency_masks
            new_bit = 1 << (size - 1)
            for nbr in range(low, 1 << (size - 1)):
                masks = [
                    m | new_bit if (nbr >> v) & 1 else m for v, m in enumerate(base)
                ]
                masks.append(nbr)
                h = Graph.from_adjacency_masks(masks)
                if not is_family_free(h, family):
                    continue
                key = canonical_encoding(h)
                if key not in seen:
                    seen[key] = None
        level = [graph_from_encoding(key, size) for key in sorted(seen)]
    yield from level


# ---------------------------------------------------------------------------
# exhaustive maximization


@dataclass(frozen=True)
class OracleResult:
    """Exact maximum with deduplicated canonical witnesses.

    examined counts search-tree nodes and is independent of parallelism;
    elapsed_ms is wall clock and is the only volatile field.
    """

    n: int
    family: ForbiddenFamily
    max_count: int
    witnesses: tuple[str, ...]
    examined: int
    elapsed_ms: float

    def to_json(self, stable: bool = False) -> dict:
        data = {
            "n": self.n,
            "family": self.family.to_json(),
            "max": self.max_count,
            "witnesses": list(self.witnesses),
            "examined": self.examined,
        }
        if not stable:
            data["elapsed_ms"] = self.elapsed_ms
        return data


def _exists_long_path(
    masks: list[int], u: int, v: int, min_vertices: int, n: int
) -> bool:
    """Is there a simple u..v path on >= min_vertices vertices (v excluded
    from the interior)?  Used to detect a long cycle through a new edge."""
    vbit = 1 << v
    full = (1 << n) - 1

    def reach_with_target(allowed: int, seeds: int) -> int:
        reach = 0
        frontier = seeds & allowed
        while frontier:
            reach |= frontier
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                m ^= low
                nxt |= masks[low.bit_length() - 1]
            frontier = nxt & allowed & ~reach
        return reach

    def rec(cur: int, visited: int, length: int) -> bool:
        if (masks[cur] >> v) & 1 and length + 1 >= min_vertices:
            return True
        allowed = full & ~visited & ~vbit
        cand = masks[cur] & allowed
        if not cand:
            return False
        reach = reach_with_target(allowed, cand)
        if not (reach & masks[v]) and not ((masks[cur] >> v) & 1):
            return False
        if length + reach.bit_count() + 1 < min_vertices:
            return False
        m = cand
        while m:
            low = m & -m
            m ^= low
            w = low.bit_length() - 1
            if rec(w, visited | low, length + 1):
                return True
        return False

    return rec(u, 1 << u, 1)


def _edge_feasible(
    masks: list[int], u: int, v: int, k_c: int | None, s: int | None, n: int
) -> bool:
    """Does adding (u, v) keep the graph family-free?  masks is the graph
    without the edge."""
    if k_c is not None and _exists_long_path(masks, u, v, k_c, n):
        return False
    if s is not None:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        bad = has_matching_of_size(masks, (1 << n) - 1, s + 1)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        if bad:
            return False
    return True


def _search_chunk(
    n: int,
    family: ForbiddenFamily,
    edges: list[tuple[int, int]],
    chunk_id: int,
    chunk_edges: int,
    initial_best: int,
    witness_cap: int,
) -> tuple[int, list[str], int]:
    """Exhaust one chunk of the edge-decision space.

    Returns (local max, canonical witnesses in discovery order, nodes
    examined).  A chunk whose forced prefix is infeasible returns
    (-1, [], 0).
    """
    k_c = family.cycle_min_len
    s = family.matching_bound
    r = family.clique_order
    m = len(edges)
    masks = [0] * n
    nr = 0
    for i in range(chunk_edges):
        if (chunk_id >> i) & 1:
            u, v = edges[i]
            if not _edge_feasible(masks, u, v, k_c, s, n):
                return -1, [], 0
            nr += count_cliques_in_mask(masks, masks[u] & masks[v], r - 2)
            masks[u] |= 1 << v
            masks[v] |= 1 << u

    per_edge = comb(n - 2, r - 2) if n >= 2 else 0
    best = initial_best
    witnesses: dict[str, None] = {}
    examined = 0

    def dfs(idx: int, cur: int, addable: int) -> None:
        nonlocal best, examined
        examined += 1
        if idx == m:
            if cur < best:
                return
            check = count_cliques_in_mask(masks, (1 << n) - 1, r) if r >= 3 else cur
            assert check == cur, "incremental clique count diverged"
            if cur > best:
                best = cur
                witnesses.clear()
            if len(witnesses) < witness_cap:
                g6 = canonical_graph6(Graph.from_adjacency_masks(list(masks)))
                witnesses.setdefault(g6, None)
            return
        if cur + (addable >> idx).bit_count() * per_edge < best:
            return
        bit = 1 << idx
        if addable & bit:
            u, v = edges[idx]
            if _edge_feasible(masks, u, v, k_c, s, n):
                delta = count_cliques_in_mask(masks, masks[u] & masks[v], r - 2)
                masks[u] |= 1 << v
                masks[v] |= 1 << u
                dfs(idx + 1, cur + delta, addable)
                masks[u] &= ~(1 << v)
                masks[v] &= ~(1 << u)
            else:
                addable &= ~bit
        dfs(idx + 1, cur, addable)

    dfs(chunk_edges, nr, (1 << m) - 1)
    return best, list(witnesses), examined


def _seed_value(n: int, family: ForbiddenFamily) -> int:
    """Best K_r count among verified library constructions of order n.

    Every candidate is checked family-free before use, so the value is a
    true lower bound and the search will rediscover it as a leaf.
    """
    k_c = family.cycle_min_len
    s = family.matching_bound
    r = family.clique_order
    candidates: list[Graph] = []
    cap = n
    if k_c is not None:
        cap = min(cap, k_c - 1)
        if k_c >= 3:
            candidates.append(build_woodall_G0(n, k_c))
    if s is not None:
        cap = min(cap, 2 * s + 1)
    clique_part = Graph.complete(cap)
    candidates.append(
        Graph(n, list(clique_part.edges()))
    )
    if k_c is not None and s is not None:
        if k_c % 2 == 0 and k_c >= 4 and s >= k_c // 2 - 1:
            try:
                candidates.append(build_block_star(ex_even_edges(n, k_c // 2, s).witness))
            except ParameterError:
                pass
        if k_c % 2 == 1 and k_c >= 5:
            k = (k_c - 1) // 2
            if s >= 2 * k + 1 and r <= k + 1:
                try:
                    candidates.append(build_block_star(ex_odd(n, k, s, r).witness))
                except ParameterError:
                    pass
    best = 0
    for g in candidates:
        if g.n == n and is_family_free(g, family):
            best = max(best, count_cliques(g, r))
    return best


def brute_force_ex(
    n: int,
    family: ForbiddenFamily,
    *,
    jobs: int = 1,
    witness_cap: int = _WITNESS_CAP,
) -> OracleResult:
    """Exact max of the K_r count over all family-free graphs on n
    labeled vertices, with canonical witnesses (at most witness_cap).

    n <= 8 only; n = 8 relies on the branch-and-bound pruning.  Results
    (including the examined counter) are identical for any jobs value.
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if n > _ORACLE_LIMIT:
        raise OracleSizeError(
            f"brute_force_ex handles n <= {_ORACLE_LIMIT}, got n={n}; "
            "use the formula modules beyond that"
        )
    start = time.perf_counter()
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = len(edges)
    chunk_edges = min(_CHUNK_EDGES, m)
    seed = _seed_value(n, family)
    args = [
        (n, family, edges, chunk_id, chunk_edges, seed, witness_cap)
        for chunk_id in range(1 << chunk_edges)
    ]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_search_chunk_args, args, chunksize=4))
    else:
        results = [_search_chunk_args(a) for a in args]

    best = max(r[0] for r in results)
    best = max(best, seed)
    witnesses: dict[str, None] = {}
    for local_best, local_witnesses, _ in results:
        if local_best == best:
            for g6 in local_witnesses:
                witnesses.setdefault(g6, None)
    examined = sum(r[2] for r in results)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return OracleResult(
        n=n,
        family=family,
        max_count=best,
        witnesses=tuple(list(witnesses)[:witness_cap]),
        examined=examined,
        elapsed_ms=elapsed_ms,
    )


def _search_chunk_args(args: tuple) -> tuple[int, list[str], int]:
    return _search_chunk(*args)


# ---------------------------------------------------------------------------
# formula-region probe


@dataclass(frozen=True)
class RegionRow:
    n: int
    oracle_value: int
    formula_value: int | None
    agrees: bool
    below_threshold: bool


@dataclass(frozen=True)
class RegionReport:
    """Oracle-vs-formula comparison across a range of n.

    first_agreement_n is the smallest n such that oracle and formula
    agree there and at every larger probed n; None when the largest
    probed n still disagrees.
    """

    k: int
    s: int
    r: int
    parity: str
    rows: tuple[RegionRow, ...]
    first_agreement_n: int | None

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "s": self.s,
            "r": self.r,
            "parity": self.parity,
            "rows": [
                {
                    "n": row.n,
                    "oracle": row.oracle_value,
                    "formula": row.formula_value,
                    "agrees": row.agrees,
                    "below_threshold": row.below_threshold,
                }
                for row in self.rows
            ],
            "first_agreement_n": self.first_agreement_n,
        }


def verify_formula_region(
    k: int,
    s: int,
    r: int,
    parity: str,
    n_range: Iterator[int] | list[int],
    *,
    jobs: int = 1,
) -> RegionReport:
    """Probe where the asymptotic formula already matches the oracle.

    parity selects the forbidden threshold: "odd" forbids cycles of
    length >= 2k+1, "even" forbids length >= 2k (using the edge formula
    at r = 2).  Rows where the witness does not fit on n vertices carry
    formula None and count as disagreement.
    """
    from .formulas import ex_even

    if parity not in ("odd", "even"):
        raise ParameterError(f"parity must be 'odd' or 'even', got {parity!r}")
    k_c = 2 * k + 1 if parity == "odd" else 2 * k
    family = ForbiddenFamily(cycle_min_len=k_c, matching_bound=s, clique_order=r)
    rows = []
    for n in n_range:
        oracle = brute_force_ex(n, family, jobs=jobs)
        formula_value: int | None
        below = True
        try:
            if parity == "odd":
                ev = ex_odd(n, k, s, r)
            elif r == 2:
                ev = ex_even_edges(n, k, s)
            else:
                ev = ex_even(n, k, s, r)
            formula_value = ev.value
            below = ev.asymptotic_warning
        except ParameterError:
            formula_value = None
        rows.append(
            RegionRow(
                n=n,
                oracle_value=oracle.max_count,
                formula_value=formula_value,
                agrees=formula_value == oracle.max_count,
                below_threshold=below,
            )
        )
    rows.sort(key=lambda row: row.n)
    first: int | None = None
    for row in reversed(rows):
        if row.agrees:
            first = row.n
        else:
            break
    return RegionReport(
        k=k, s=s, r=r, parity=parity, rows=tuple(rows), first_agreement_n=first
    )
