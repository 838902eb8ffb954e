#!/usr/bin/env python3
"""Closed-form extremal values across both cycle-threshold parities.

The library computes the exact maximum number of K_r copies in an
n-vertex graph with no cycle of length >= 2k+1 (odd threshold) or >= 2k
(even threshold) and matching number at most s.  Both values are linear
in n with an n-free offset; this script shows the offsets, the case
selection, and the r = 2 specializations.
"""

from math import comb

from genturan import (
    ex_even,
    ex_even_edges,
    ex_matching_only,
    ex_odd,
    h_value,
    odd_case_params,
    tau,
    woodall_bound,
)

print("=" * 70)
print("1. The threshold tau(k, r) and the three odd-case regimes")
print("=" * 70)
print()
print("tau(k, r) = min { k0 : k0*C(k, r-1) < C(k0+1, r) } decides whether")
print("attaching a clique block of order 2k beats dominating its vertices.")
print()
print("  k  r   tau   case at s = 4k (q, t)")
for k in (2, 3, 4, 5):
    for r in range(2, k + 2):
        s = 4 * k
        p = odd_case_params(k, r, s)
        print(f"  {k}  {r}  {p.tau_kr:4d}   {p.case}  (q={p.q}, t={p.t})")
print()

print("=" * 70)
print("2. Odd threshold: value = C(k, r-1) n + h(r, k, s)")
print("=" * 70)
print()
for (k, r, s) in [(2, 2, 5), (3, 3, 7), (5, 5, 12)]:
    p = odd_case_params(k, r, s)
    print(
        f"  k={k} r={r} s={s}: h = {h_value(r, k, s):5d}  ({p.case}), "
        f"e.g. n=60 -> {ex_odd(60, k, s, r).value}"
    )
print()
print("At r = 2 the value collapses to C(k,2) + k(n-k):")
for k in (2, 3, 4):
    s = 2 * k + 1
    n = 40
    assert ex_odd(n, k, s, 2).value == comb(k, 2) + k * (n - k)
    print(f"  k={k}, s={s}, n={n}: {ex_odd(n, k, s, 2).value}")
print()

print("=" * 70)
print("3. Even threshold: finite profile optimization, and its r=2 form")
print("=" * 70)
print()
n = 60
for k in (3, 4, 5):
    for s in (k - 1, k, 2 * k, 3 * k + 1):
        general = ex_even(n, k, s, 2)
        edges = ex_even_edges(n, k, s)
        assert general.value == edges.value
        print(
            f"  k={k} s={s:2d}: value(n={n}) = {edges.value:4d}  "
            f"witness {edges.regime}, profile branch {general.regime}"
        )
print()

print("=" * 70)
print("4. Degenerate regimes: matching-only and cycle-only")
print("=" * 70)
print()
print("Matching bound alone (max{dominated-clique count, C(2s+1, 2)}):")
for s in (1, 2, 3):
    print(f"  s={s}: " + "  ".join(f"n={n}:{ex_matching_only(n, s)}" for n in range(2 * s + 1, 2 * s + 6)))
print()
print("Cycle bound alone (shared-vertex clique chain bound):")
for k in (4, 5, 6):
    print(f"  k={k}: " + "  ".join(f"n={n}:{woodall_bound(n, k)}" for n in range(4, 12)))
