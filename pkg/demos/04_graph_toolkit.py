#!/usr/bin/env python3
"""The exact graph primitives everything else rests on.

Clique counting, maximum matching with a verifiable bound certificate,
exact circumference, block decomposition, and the hub-gluing star
transform, including the corpus finding that the transform can increase
the matching number when the hub is badly chosen.
"""

from genturan import (
    Graph,
    berge_tutte_certificate,
    block_decomposition,
    build_H,
    circumference,
    count_cliques,
    find_cycle_geq,
    from_graph6,
    max_matching,
    maximum_matching_edges,
    star_transform,
    switch_vertex,
    to_graph6,
)

print("=" * 70)
print("1. Clique counting and matchings")
print("=" * 70)
print()
g = build_H(12, 7, 3)
print("dominated-clique graph, order 12:")
print("  clique counts N_r:", [count_cliques(g, r) for r in range(1, 6)])
print("  maximum matching:", maximum_matching_edges(g))
print()

print("=" * 70)
print("2. Matching-bound certificates")
print("=" * 70)
print()
cert = berge_tutte_certificate(build_H(12, 5, 2), 2)
print("deleting the dominators leaves only isolated vertices:")
print("  X =", cert.vertex_set, " component sizes:", cert.component_sizes)
print("  bound:", cert.matching_upper_bound, " slack:", cert.slack)
print()

print("=" * 70)
print("3. Exact circumference and long-cycle witnesses")
print("=" * 70)
print()
h = build_H(30, 5, 2)
print("order 30, no cycle of length >= 5: circumference =", circumference(h))
k6 = Graph.complete(6)
print("K_6 cycle of length >= 5:", find_cycle_geq(k6, 5))
print()

print("=" * 70)
print("4. Blocks and the hub-gluing star transform")
print("=" * 70)
print()
chain = Graph(7, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6)])
dec = block_decomposition(chain)
print("a chain of blocks:", to_graph6(chain))
print("  blocks:", dec.blocks)
print("  cut vertices:", dec.cut_vertices, " representatives:", dec.representatives)
st = star_transform(chain, 0, 0)
print("after gluing everything at vertex 0:", to_graph6(st))
print("  edges preserved:", st.num_edges == chain.num_edges,
      " blocks now:", block_decomposition(st).blocks)
print()

print("=" * 70)
print("5. The transform is not always matching-safe")
print("=" * 70)
print()
# smallest corpus counterexample: hub avoidable by a maximum matching
g = from_graph6("E?^o")
dec = block_decomposition(g)
print("graph:", to_graph6(g), " blocks:", dec.blocks)
print("  matching number before:", max_matching(g))
bad = star_transform(g, 1, 1)
print("  after gluing at vertex 1 (avoidable in its block):",
      max_matching(bad))
good = star_transform(g, 1, 4)
print("  after gluing at vertex 4 (covered by every maximum matching):",
      max_matching(good))
print()

print("=" * 70)
print("6. Switching a vertex to a new attachment set")
print("=" * 70)
print()
g = Graph(4, [(0, 1), (0, 2), (1, 2)])
print("triangle plus isolated vertex ->", to_graph6(g))
h = switch_vertex(g, 3, [0, 1, 2])
print("switch vertex 3 to the triangle ->", to_graph6(h),
      "(complete:", h.num_edges == 6, ")")
