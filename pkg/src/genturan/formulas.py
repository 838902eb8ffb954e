"""Closed-form extremal clique counts for graphs with no long cycles and
bounded matching number.

All quantities are exact integers (math.comb, arbitrary precision).  The
recurring building block is the graph obtained from a clique K_{k-a} by
attaching n-(k-a) extra vertices to a fixed a-subset of it; its K_b count
is

    f_b(n, k, a) = C(k-a, b) + (n-k+a) * C(a, b-1).

The threshold

    tau(k, r) = min { k0 : k0*C(k, r-1) < C(k0+1, r) }

decides whether attaching large clique blocks beats absorbing their
vertices into the attachment set; it always exceeds k, and the function
x -> C(x+1, r) - x*C(k, r-1) is nondecreasing for x >= tau(k, r).

The extremal value for forbidden cycles of length >= 2k+1 with matching
number <= s is C(k, r-1)*n + h(r, k, s) where h has three regimes driven
by comparing 2k and 2t+1 against tau(k, r) (s = k + q(k-1) + t with
0 <= t <= k-2).  For forbidden cycles of length >= 2k the value is
C(k-1, r-1)*n plus a finite maximization of g(x, y, z) over feasible
block profiles, which specializes at r = 2 to

    (k-1)n - C(k, 2) + (k-1)(q-1) + eps,   eps = [t >= 1],

with q = floor(s/(k-1)) and t = s - q(k-1).

Every value returned here is the exact extremal count only once n is
large enough; asymptotic_warning marks results below the documented
safety threshold (n < 6s), where the exhaustive oracle is the authority.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import TYPE_CHECKING

from .errors import ParameterError

if TYPE_CHECKING:
    from .constructors import BlockStarSpec

_TAU_SCAN_LIMIT = 10**6
_ASYMPTOTIC_SAFETY_FACTOR = 6


def f_value(n: int, k: int, a: int, b: int) -> int:
    """C(k-a, b) + (n-k+a)*C(a, b-1): the K_b count of the graph K_{k-a}
    plus n-(k-a) vertices each joined to the same a clique vertices."""
    if a < 1:
        raise ParameterError(f"a must be >= 1, got a={a}")
    if 2 * a > k:
        raise ParameterError(f"need 2a <= k, got a={a}, k={k}")
    if n < k - a:
        raise ParameterError(f"need n >= k-a, got n={n}, k-a={k - a}")
    if b < 1:
        raise ParameterError(f"b must be >= 1, got b={b}")
    return comb(k - a, b) + (n - k + a) * comb(a, b - 1)


def tau(k: int, r: int) -> int:
    """Smallest k0 with k0*C(k, r-1) < C(k0+1, r); upward scan.

    Always > k.  tau(k, 2) = 2k.  Aborts if no k0 <= 10^6 qualifies,
    which only happens for hypothesis-violating inputs.
    """
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    if r < 2:
        raise ParameterError(f"r must be >= 2, got {r}")
    base = comb(k, r - 1)
    for k0 in range(1, _TAU_SCAN_LIMIT + 1):
        if k0 * base < comb(k0 + 1, r):
            return k0
    raise ParameterError(f"tau scan exceeded {_TAU_SCAN_LIMIT} for k={k}, r={r}")


@dataclass(frozen=True)
class OddCaseParams:
    """Derived quantities for the odd-threshold value at (k, r, s).

    s = k + q(k-1) + t with 0 <= t <= k-2.  Exactly one case applies:
    Case1 when 2k <= tau(k, r); Case2 when 2t+1 < tau(k, r) <= 2k-1;
    Case3 when 2t+1 >= tau(k, r).
    """

    k: int
    r: int
    s: int
    q: int
    t: int
    A: int
    tau_kr: int
    case: str


def odd_case_params(k: int, r: int, s: int) -> OddCaseParams:
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    if r < 2:
        raise ParameterError(f"r must be >= 2, got {r}")
    if r > k + 1:
        raise ParameterError(f"need r <= k+1, got r={r}, k={k}")
    if s < 2 * k + 1:
        raise ParameterError(f"need s >= 2k+1, got s={s}, k={k}")
    q, t = divmod(s - k, k - 1)
    assert 0 <= t <= k - 2
    a_total = k + 1 + q * (2 * k - 1) + (2 * t + 1)
    t_kr = tau(k, r)
    if 2 * k <= t_kr:
        case = "Case1"
    elif 2 * t + 1 < t_kr:
        case = "Case2"
    else:
        case = "Case3"
    return OddCaseParams(k=k, r=r, s=s, q=q, t=t, A=a_total, tau_kr=t_kr, case=case)


def h_value(r: int, k: int, s: int) -> int:
    """The n-free offset of the odd-threshold extremal count (may be
    negative: it offsets the linear term C(k, r-1)*n)."""
    p = odd_case_params(k, r, s)
    if p.case == "Case1":
        return comb(k + 1, r) - (k + 1) * comb(k, r - 1)
    if p.case == "Case2":
        return (
            p.q * comb(2 * k, r)
            + comb(k + 1, r)
            - (k + 1 + p.q * (2 * k - 1)) * comb(k, r - 1)
        )
    return (
        p.q * comb(2 * k, r)
        + comb(2 * p.t + 2, r)
        + comb(k + 1, r)
        - p.A * comb(k, r - 1)
    )


def g_value(x: int, y: int, z: int, k: int, r: int) -> int:
    """Clique-count offset of a block profile against the even threshold:
    x blocks of order 2k-1, y of order 2k-2, one of order z, around a
    central block whose attachment set has k-1 vertices."""
    if x < 0 or y < 0:
        raise ParameterError(f"x and y must be >= 0, got x={x}, y={y}")
    if not 1 <= z <= 2 * k - 1:
        raise ParameterError(f"need 1 <= z <= 2k-1, got z={z}, k={k}")
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    if r < 2:
        raise ParameterError(f"r must be >= 2, got {r}")
    return (
        x * comb(2 * k - 1, r)
        + y * comb(2 * k - 2, r)
        + comb(z, r)
        + comb(k + 1, r)
        - (k + 1 + x * (2 * k - 2) + y * (2 * k - 3) + (z - 1)) * comb(k - 1, r - 1)
    )


@dataclass(frozen=True)
class EvenCaseParams:
    """Derived quantities for the even-threshold edge value at (k, s):
    q = floor(s/(k-1)), t = s - q(k-1), eps = 1 iff t >= 1."""

    k: int
    r: int
    s: int
    q: int
    t: int
    epsilon: int


def even_case_params(k: int, s: int, r: int = 2) -> EvenCaseParams:
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    if s < k - 1:
        raise ParameterError(f"need s >= k-1, got s={s}, k={k}")
    q, t = divmod(s, k - 1)
    if t == 0 and q == 0:
        raise ParameterError(f"need s >= k-1, got s={s}")
    epsilon = 1 if t >= 1 else 0
    return EvenCaseParams(k=k, r=r, s=s, q=q, t=t, epsilon=epsilon)


@dataclass(frozen=True)
class ExtremalValue:
    """A computed extremal count with its achieving construction.

    asymptotic_warning is set when n is below the documented safety
    threshold (n < 6s); there the formula still equals the clique count
    of the witness, but a denser family-free graph may exist and only the
    exhaustive oracle can decide.
    """

    value: int
    regime: str
    witness: "BlockStarSpec"
    asymptotic_warning: bool

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "case": self.regime,
            "witness": self.witness.to_json(),
            "asymptotic_warning": self.asymptotic_warning,
        }


def _warn(n: int, s: int) -> bool:
    return n < _ASYMPTOTIC_SAFETY_FACTOR * s


def ex_odd(n: int, k: int, s: int, r: int) -> ExtremalValue:
    """Extremal K_r count: no cycle of length >= 2k+1 and nu <= s.

    Value is C(k, r-1)*n + h(r, k, s); the witness is a block star with a
    dominated-clique central block and, outside Case1, q clique blocks of
    order 2k (plus one of order 2t+2 in Case3).  Requires n at least the
    witness order (central block large enough for full matching number).
    """
    from .constructors import BlockStarSpec, HGraphParams

    p = odd_case_params(k, r, s)
    if p.case == "Case1":
        attached: tuple[int, ...] = ()
    elif p.case == "Case2":
        attached = (2 * k,) * p.q
    else:
        attached = tuple(sorted((2 * k,) * p.q + (2 * p.t + 2,), reverse=True))
    central_n = n - sum(c - 1 for c in attached)
    min_central = 2 * k + 1
    if central_n < min_central:
        raise ParameterError(
            f"n={n} is below the witness order "
            f"{min_central + sum(c - 1 for c in attached)} for {p.case}"
        )
    spec = BlockStarSpec(
        central=HGraphParams(n=central_n, k=2 * k + 1, a=k), attached=attached
    )
    value = comb(k, r - 1) * n + h_value(r, k, s)
    return ExtremalValue(
        value=value, regime=p.case, witness=spec, asymptotic_warning=_warn(n, s)
    )


def ex_even(n: int, k: int, s: int, r: int) -> ExtremalValue:
    """Extremal K_r count: no cycle of length >= 2k and nu <= s (k >= 3).

    Value is C(k-1, r-1)*n + max of the block-profile offset g over the
    two feasible families (the second discounted by C(k-1, r-2)); the
    witness realizes the winning profile.  The first family is empty
    exactly when s = k-1, in which case only the second competes.
    """
    from .optimizer import extremal_even_witness, maximize_g

    if r < 2:
        raise ParameterError(f"r must be >= 2, got {r}")
    if k < 3:
        raise ParameterError(f"k must be >= 3, got {k}")
    if k < r:
        raise ParameterError(f"need k >= r, got k={k}, r={r}")
    if s < k - 1:
        raise ParameterError(f"need s >= k-1, got s={s}, k={k}")
    candidates = []
    if s >= k:
        best1, _ = maximize_g(k, r, s, "T1")
        candidates.append(best1)
    best2, _ = maximize_g(k, r, s, "T2")
    candidates.append(best2 - comb(k - 1, r - 2))
    offset = max(candidates)
    value = comb(k - 1, r - 1) * n + offset
    spec = extremal_even_witness(n, k, r, s)
    family = "T1" if spec.central.k == 2 * k else "T2"
    return ExtremalValue(
        value=value, regime=family, witness=spec, asymptotic_warning=_warn(n, s)
    )


def ex_even_edges(n: int, k: int, s: int) -> ExtremalValue:
    """Extremal edge count: no cycle of length >= 2k and nu <= s.

    (k-1)n - C(k, 2) + (k-1)(q-1) + eps, with witness St1(n, 2k, q) when
    eps = 0 and St2(n, 2k, q) when eps = 1.
    """
    from .constructors import st1_spec, st2_spec

    p = even_case_params(k, s)
    value = (k - 1) * n - comb(k, 2) + (k - 1) * (p.q - 1) + p.epsilon
    min_central = 2 * k - 1 if p.epsilon == 0 else 2 * k
    witness_order = (p.q - 1) * (2 * k - 2) + min_central
    if n < witness_order:
        raise ParameterError(
            f"n={n} is below the witness order {witness_order} for k={k}, s={s}"
        )
    if p.epsilon == 0:
        spec = st1_spec(n, k, p.q)
        regime = "St1"
    else:
        spec = st2_spec(n, k, p.q)
        regime = "St2"
    return ExtremalValue(
        value=value, regime=regime, witness=spec, asymptotic_warning=_warn(n, s)
    )


def ex_matching_only(n: int, s: int) -> int:
    """Extremal edge count under nu <= s alone:
    max{f_2(n, 2s+1, s), C(2s+1, 2)}.

    The first term is evaluated algebraically as C(s+1, 2) + (n-s-1)*s so
    the max is well-defined for every n >= 1; it describes the true
    extremal value once n >= 2s+1 (below that the complete graph K_n is
    feasible and denser).
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if s < 1:
        raise ParameterError(f"s must be >= 1, got {s}")
    dominated = comb(s + 1, 2) + (n - s - 1) * s
    return max(dominated, comb(2 * s + 1, 2))


def woodall_bound(n: int, k: int) -> int:
    """Maximum edges of an n-vertex graph with no cycle of length >= k:
    q*C(k-1, 2) + C(p+1, 2) where n = q(k-2) + p + 1, 0 <= p <= k-2."""
    if k < 3:
        raise ParameterError(f"k must be >= 3, got {k}")
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    q, p = divmod(n - 1, k - 2)
    return q * comb(k - 1, 2) + comb(p + 1, 2)
