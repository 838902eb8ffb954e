"""Finite maximization over feasible block profiles for the even case.

A profile (x, y, z) stands for x attached blocks of order 2k-1, y of
order 2k-2 and one of order z (z = 1 meaning no final block), around a
central block with a (k-1)-vertex attachment set.  Feasibility encodes
the matching budget: the central block contributes k (family T1, full
matching) or k-1 (family T2, reduced central block), each attached block
of order c contributes floor((c-1)/2), and the total must stay within s:

    T1: (k-1)x + (k-2)y + floor((z-1)/2) + k     <= s
    T2: (k-1)x + (k-2)y + floor((z-1)/2) + (k-1) <= s

T1 is nonempty iff s >= k; T2 iff s >= k-1.  Both sets are finite for
k >= 3 (at k = 2 the y coefficient vanishes and y would be unbounded, so
those inputs are rejected; the even edge formula covers k = 2 directly).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .constructors import BlockStarSpec, HGraphParams
from .errors import ParameterError
from .formulas import g_value

_FAMILIES = ("T1", "T2")


@dataclass(frozen=True)
class FeasibleTriple:
    """A feasible block profile with its offset value once evaluated."""

    x: int
    y: int
    z: int
    family: str
    g: int | None = None


def _central_cost(family: str, k: int) -> int:
    if family == "T1":
        return k
    if family == "T2":
        return k - 1
    raise ParameterError(f"family must be one of {_FAMILIES}, got {family!r}")


def _check_params(k: int, s: int) -> None:
    if k == 2:
        raise ParameterError(
            "k=2 is rejected: the order-(2k-2) block count y is unconstrained "
            "there; use the even edge formula instead"
        )
    if k < 3:
        raise ParameterError(f"k must be >= 3, got {k}")
    if s < k - 1:
        raise ParameterError(f"need s >= k-1, got s={s}, k={k}")


def enumerate_feasible(k: int, s: int, family: str) -> list[FeasibleTriple]:
    """All feasible (x, y, z) for the family, in lexicographic order.

    Bounds follow from the budget: x <= budget/(k-1), y <= budget/(k-2)
    and 1 <= z <= 2k-1 where budget = s - central cost.
    """
    _check_params(k, s)
    budget = s - _central_cost(family, k)
    out: list[FeasibleTriple] = []
    if budget < 0:
        return out
    for x in range(budget // (k - 1) + 1):
        rest_x = budget - (k - 1) * x
        for y in range(rest_x // (k - 2) + 1):
            rest = rest_x - (k - 2) * y
            for z in range(1, 2 * k):
                if (z - 1) // 2 <= rest:
                    out.append(FeasibleTriple(x=x, y=y, z=z, family=family))
    return out


def maximize_g(k: int, r: int, s: int, family: str) -> tuple[int, FeasibleTriple]:
    """Exact maximum of the block-profile offset over the family.

    Ties break to the lexicographically smallest (x, y, z).  An empty
    feasible set (family T1 with s = k-1) is rejected.
    """
    if r < 2:
        raise ParameterError(f"r must be >= 2, got {r}")
    triples = enumerate_feasible(k, s, family)
    if not triples:
        raise ParameterError(
            f"feasible set {family} is empty for k={k}, s={s}"
        )
    best: FeasibleTriple | None = None
    best_value = 0
    for t in triples:
        value = g_value(t.x, t.y, t.z, k, r)
        if best is None or value > best_value:
            best = FeasibleTriple(t.x, t.y, t.z, t.family, g=value)
            best_value = value
    assert best is not None
    return best_value, best


def extremal_even_witness(n: int, k: int, r: int, s: int) -> BlockStarSpec:
    """Block-star spec realizing the even-case maximum on n vertices.

    The winning profile (x, y, z) of the winning family becomes x blocks
    of order 2k-1, y of order 2k-2 and one of order z (omitted at z = 1)
    around a central block H_{m, 2k, k-1} (family T1) or H_{m, 2k-1, k-1}
    (family T2); ties between families resolve to T1.  Compositions whose
    central block would be too small to reach its designed matching
    number are rejected.
    """
    if r < 2:
        raise ParameterError(f"r must be >= 2, got {r}")
    if k < r:
        raise ParameterError(f"need k >= r, got k={k}, r={r}")
    _check_params(k, s)
    candidates: list[tuple[int, str, FeasibleTriple]] = []
    if s >= k:
        v1, t1 = maximize_g(k, r, s, "T1")
        candidates.append((v1, "T1", t1))
    v2, t2 = maximize_g(k, r, s, "T2")
    candidates.append((v2 - comb(k - 1, r - 2), "T2", t2))
    value, family, triple = max(
        candidates, key=lambda c: (c[0], c[1] == "T1")
    )
    central_k = 2 * k if family == "T1" else 2 * k - 1
    attached = (
        (2 * k - 1,) * triple.x
        + (2 * k - 2,) * triple.y
        + ((triple.z,) if triple.z >= 2 else ())
    )
    central_n = n - sum(c - 1 for c in attached)
    if central_n < central_k:
        raise ParameterError(
            f"n={n} is below the witness order "
            f"{central_k + sum(c - 1 for c in attached)} for the winning "
            f"profile (x={triple.x}, y={triple.y}, z={triple.z}, {family})"
        )
    return BlockStarSpec(
        central=HGraphParams(n=central_n, k=central_k, a=k - 1), attached=attached
    )
