"""Concrete extremal witness graphs.

The central object is the dominated-clique graph: a clique K_{k-a} whose
first a vertices dominate n-(k-a) additional attachment vertices.  It is
2-connected for a >= 2, has matching number floor(k/2) once n >= k, and
no cycle of length >= k when 2a < k.  Extremal witnesses are block stars:
one such central block with clique blocks glued to its first dominator.

Vertex labeling is deterministic everywhere (clique vertices first with
dominators 0..a-1, attachment vertices after; attached blocks follow the
central block in non-increasing size order), so identical specs always
serialize byte-for-byte identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphFormatError, ParameterError
from .formulas import ex_odd
from .graphs import Graph


@dataclass(frozen=True)
class HGraphParams:
    """Dominated-clique graph parameters: order n, clique+attachment
    profile k, dominating set size a (needs 2a <= k and n >= k-a)."""

    n: int
    k: int
    a: int

    def __post_init__(self) -> None:
        if self.a < 1:
            raise ParameterError(f"a must be >= 1, got a={self.a}")
        if 2 * self.a > self.k:
            raise ParameterError(f"need 2a <= k, got a={self.a}, k={self.k}")
        if self.n < self.k - self.a:
            raise ParameterError(
                f"need n >= k-a, got n={self.n}, k-a={self.k - self.a}"
            )

    def to_json(self) -> dict:
        return {"type": "H", "n": self.n, "k": self.k, "a": self.a}


@dataclass(frozen=True)
class BlockStarSpec:
    """Symbolic block star: a central block (dominated-clique graph or a
    single clique) with clique blocks attached at the hub.

    The hub is always vertex 0 of the central block (its first dominator),
    so it is covered by every maximum matching of the central block.
    Attached orders are kept in non-increasing order.
    """

    central: HGraphParams | int
    attached: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if isinstance(self.central, int) and self.central < 1:
            raise ParameterError(f"central clique order must be >= 1")
        att = tuple(sorted(self.attached, reverse=True))
        for c in att:
            if c < 2:
                raise ParameterError(f"attached clique orders must be >= 2, got {c}")
        object.__setattr__(self, "attached", att)

    @property
    def central_order(self) -> int:
        return self.central if isinstance(self.central, int) else self.central.n

    @property
    def total_order(self) -> int:
        return self.central_order + sum(c - 1 for c in self.attached)

    @property
    def num_blocks(self) -> int:
        return 1 + len(self.attached)

    def to_json(self) -> dict:
        central = (
            {"type": "K", "order": self.central}
            if isinstance(self.central, int)
            else self.central.to_json()
        )
        return {"central": central, "attached": list(self.attached), "hub": 0}


def build_H(n, k: int | None = None, a: int | None = None) -> Graph:
    """The dominated-clique graph: K_{k-a} on 0..k-a-1 (dominators are
    0..a-1) plus n-(k-a) attachment vertices joined to all dominators.

    Accepts either (n, k, a) or a single HGraphParams.
    """
    if isinstance(n, HGraphParams):
        params = n
    else:
        params = HGraphParams(n=n, k=k, a=a)
    n, k, a = params.n, params.k, params.a
    clique = k - a
    edges = [(u, v) for u in range(clique) for v in range(u + 1, clique)]
    for p in range(clique, n):
        for d in range(a):
            edges.append((d, p))
    return Graph(n, edges)


def build_block_star(spec: BlockStarSpec) -> Graph:
    """Render a block star: central block first, then each attached clique
    sharing exactly the hub (vertex 0)."""
    if isinstance(spec.central, int):
        base = Graph.complete(spec.central)
    else:
        base = build_H(spec.central)
    n = spec.total_order
    edges = list(base.edges())
    nxt = spec.central_order
    for order in spec.attached:
        members = [0] + list(range(nxt, nxt + order - 1))
        nxt += order - 1
        edges.extend(
            (members[i], members[j])
            for i in range(order)
            for j in range(i + 1, order)
        )
    return Graph(n, edges)


def build_extremal_odd(n: int, k: int, s: int, r: int) -> Graph:
    """The extremal witness for: no cycle of length >= 2k+1, nu <= s.

    Case selection (comparing 2k and 2t+1 against tau(k, r)) and the
    witness-order check are shared with ex_odd, so the built graph's K_r
    count equals the formula value exactly.
    """
    return build_block_star(ex_odd(n, k, s, r).witness)


def st1_spec(n: int, k: int, q: int) -> BlockStarSpec:
    """Block star with central H_{n-(q-1)(2k-2), 2k-1, k-1} and q-1
    attached cliques of order 2k-1."""
    if q < 1:
        raise ParameterError(f"q must be >= 1, got {q}")
    central_n = n - (q - 1) * (2 * k - 2)
    return BlockStarSpec(
        central=HGraphParams(n=central_n, k=2 * k - 1, a=k - 1),
        attached=(2 * k - 1,) * (q - 1),
    )


def st2_spec(n: int, k: int, q: int) -> BlockStarSpec:
    """Block star with central H_{n-(q-1)(2k-2), 2k, k-1} and q-1
    attached cliques of order 2k-1."""
    if q < 1:
        raise ParameterError(f"q must be >= 1, got {q}")
    central_n = n - (q - 1) * (2 * k - 2)
    return BlockStarSpec(
        central=HGraphParams(n=central_n, k=2 * k, a=k - 1),
        attached=(2 * k - 1,) * (q - 1),
    )


def build_St1(n: int, k: int, q: int) -> Graph:
    return build_block_star(st1_spec(n, k, q))


def build_St2(n: int, k: int, q: int) -> Graph:
    return build_block_star(st2_spec(n, k, q))


def build_woodall_G0(n: int, k: int) -> Graph:
    """q cliques K_{k-1} and one K_{p+1}, all sharing vertex 0, where
    n = q(k-2) + p + 1.  Edge count q*C(k-1, 2) + C(p+1, 2); no cycle of
    length >= k."""
    if k < 3:
        raise ParameterError(f"k must be >= 3, got {k}")
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    q, p = divmod(n - 1, k - 2)
    edges = []
    nxt = 1
    for sizes in [k - 1] * q + ([p + 1] if p >= 1 else []):
        members = [0] + list(range(nxt, nxt + sizes - 1))
        nxt += sizes - 1
        edges.extend(
            (members[i], members[j])
            for i in range(sizes)
            for j in range(i + 1, sizes)
        )
    return Graph(n, edges)


def build_multipartite_G(n: int, k: int, s: int) -> Graph:
    """Complete k-partite graph: one class of size n-s, then s vertices
    split into k-1 classes as equally as possible (larger classes first)."""
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    if s < k - 1:
        raise ParameterError(f"need s >= k-1, got s={s}, k={k}")
    if n <= s:
        raise ParameterError(f"need n > s, got n={n}, s={s}")
    base, rem = divmod(s, k - 1)
    sizes = [n - s] + [base + 1] * rem + [base] * (k - 1 - rem)
    classes = []
    nxt = 0
    for size in sizes:
        classes.append(list(range(nxt, nxt + size)))
        nxt += size
    edges = []
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            edges.extend((u, v) for u in classes[i] for v in classes[j])
    return Graph(n, edges)


def format_block_star_spec(spec: BlockStarSpec) -> str:
    """Line format: first line "H n k a" or "K c", then one attached
    clique order per line."""
    if isinstance(spec.central, int):
        lines = [f"K {spec.central}"]
    else:
        c = spec.central
        lines = [f"H {c.n} {c.k} {c.a}"]
    lines.extend(str(order) for order in spec.attached)
    return "\n".join(lines) + "\n"


def parse_block_star_spec(text: str) -> BlockStarSpec:
    """Inverse of format_block_star_spec; blank lines are ignored."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise GraphFormatError("empty block-star spec")
    head = lines[0].split()
    central: HGraphParams | int
    if head[0] == "H" and len(head) == 4:
        try:
            central = HGraphParams(n=int(head[1]), k=int(head[2]), a=int(head[3]))
        except ValueError as exc:
            raise GraphFormatError(f"bad central block line {lines[0]!r}: {exc}")
    elif head[0] == "K" and len(head) == 2:
        try:
            central = int(head[1])
        except ValueError:
            raise GraphFormatError(f"bad central block line {lines[0]!r}")
    else:
        raise GraphFormatError(
            f"first line must be 'H n k a' or 'K c', got {lines[0]!r}"
        )
    attached = []
    for line in lines[1:]:
        try:
            attached.append(int(line))
        except ValueError:
            raise GraphFormatError(f"bad attached clique order {line!r}")
    return BlockStarSpec(central=central, attached=tuple(attached))
