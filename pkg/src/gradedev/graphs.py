"""Simple graphs, their edge ideals and independence complexes."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import mpmath

from .exact_arith import IntPolynomial
from .monomial_ideals import MonomialIdeal, minimalize

F_VERTEX_CAP = 30


class TooManyVertices(ValueError):
    pass


class DegreeMismatch(ValueError):
    pass


class IndexOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..n; edges stored as sorted pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        clean = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"edge {a}-{b} outside 1..{self.n}")
            clean.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def of(cls, n: int, edges) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    def adjacency(self) -> list[set[int]]:
        """0-based neighbour sets."""
        adj = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a - 1].add(b - 1)
            adj[b - 1].add(a - 1)
        return adj

    def complement(self) -> "Graph":
        all_pairs = set(combinations(range(1, self.n + 1), 2))
        return Graph(self.n, frozenset(all_pairs - self.edges))

    def encoding(self) -> int:
        """Bitmask over the pairs (i, j), i < j, in lexicographic order."""
        code = 0
        for k, e in enumerate(combinations(range(1, self.n + 1), 2)):
            if e in self.edges:
                code |= 1 << k
        return code

    def __str__(self):
        from .formats import format_graph

        return format_graph(self)


def path(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, frozenset([(i, i + 1) for i in range(1, n)] + [(1, n)]))


def complete(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(1, n + 1), 2)))


def star(leaves: int) -> Graph:
    """K_{1,leaves}: centre 1 joined to 2..leaves+1 (star:3 is the claw)."""
    return Graph(leaves + 1, frozenset((1, j) for j in range(2, leaves + 2)))


def empty(n: int) -> Graph:
    return Graph(n, frozenset())


def disjoint_union(g: Graph, copies: int) -> Graph:
    edges = set()
    for c in range(copies):
        off = c * g.n
        edges |= {(a + off, b + off) for a, b in g.edges}
    return Graph(g.n * copies, frozenset(edges))


def all_graphs(n: int):
    """Every labelled graph on n vertices, in increasing encoding order."""
    pairs = list(combinations(range(1, n + 1), 2))
    for code in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for k, p in enumerate(pairs) if code >> k & 1))


def edge_ideal(G: Graph) -> MonomialIdeal:
    gens = []
    for a, b in G.edges:
        m = [0] * G.n
        m[a - 1] = m[b - 1] = 1
        gens.append(tuple(m))
    return minimalize(gens, G.n)


def is_claw_free(G: Graph) -> bool:
    """No vertex has three pairwise non-adjacent neighbours."""
    adj = G.adjacency()
    for v in range(G.n):
        for a, b, c in combinations(sorted(adj[v]), 3):
            if b not in adj[a] and c not in adj[a] and c not in adj[b]:
                return False
    return True


def is_chordal(G: Graph) -> bool:
    """Maximum-cardinality search, then verify the elimination ordering."""
    adj = G.adjacency()
    weight = [0] * G.n
    visited: list[int] = []
    seen = [False] * G.n
    for _ in range(G.n):
        v = max((u for u in range(G.n) if not seen[u]), key=lambda u: (weight[u], -u))
        seen[v] = True
        visited.append(v)
        for u in adj[v]:
            if not seen[u]:
                weight[u] += 1
    # reverse of visit order is a perfect elimination ordering iff chordal
    position = {v: k for k, v in enumerate(visited)}
    for v in visited:
        earlier = [u for u in adj[v] if position[u] < position[v]]
        for a, b in combinations(earlier, 2):
            if b not in adj[a]:
                return False
    return True


def complement_is_chordal(G: Graph) -> bool:
    return is_chordal(G.complement())


def independence_f_polynomial(G: Graph, cap: int = F_VERTEX_CAP) -> IntPolynomial:
    """f(z) = sum_k (#independent sets of size k) z^k, by backtracking."""
    if G.n > cap:
        raise TooManyVertices(f"{G.n} vertices exceeds the cap of {cap}")
    closed = [1 << v for v in range(G.n)]
    for a, b in G.edges:
        closed[a - 1] |= 1 << (b - 1)
        closed[b - 1] |= 1 << (a - 1)

    @lru_cache(maxsize=None)
    def count(mask: int) -> tuple[int, ...]:
        if not mask:
            return (1,)
        v = (mask & -mask).bit_length() - 1
        without = count(mask & ~(1 << v))
        with_v = count(mask & ~closed[v])
        n = max(len(without), len(with_v) + 1)
        out = [0] * n
        for k, c in enumerate(without):
            out[k] += c
        for k, c in enumerate(with_v):
            out[k + 1] += c
        return tuple(out)

    return IntPolynomial(count((1 << G.n) - 1))


def f_to_h(f: IntPolynomial, d: int) -> IntPolynomial:
    """h(z) = (1 - z)^d f(z / (1 - z)) = sum_i f_(i-1) z^i (1 - z)^(d - i)."""
    if d < f.degree:
        raise DegreeMismatch(f"d = {d} is below deg f = {f.degree}")
    one_minus_z = IntPolynomial((1, -1))
    h = IntPolynomial()
    for i, c in enumerate(f.coeffs):
        if c:
            h = h + IntPolynomial.monomial(i, c) * one_minus_z ** (d - i)
    return h


def h_polynomial(G: Graph) -> tuple[IntPolynomial, int]:
    """(h, dim) of S/I(G) through the independence complex."""
    f = independence_f_polynomial(G)
    return f_to_h(f, f.degree), f.degree


@dataclass(frozen=True)
class ClosedFormRoot:
    expression: str
    value: mpmath.mpf


ROOT_PRECISION_BITS = 160


def cycle_root(n: int, s: int) -> ClosedFormRoot:
    """Root c_s of the independence polynomial of C_n:
    -1 / (2 (1 + cos((2s - 1) pi / n))), 1 <= s <= n // 2."""
    if n < 3 or not 1 <= s <= n // 2:
        raise IndexOutOfRange(f"cycle root index s={s} outside 1..{n // 2}")
    with mpmath.workprec(ROOT_PRECISION_BITS):
        val = -1 / (2 * (1 + mpmath.cos(mpmath.mpf(2 * s - 1) * mpmath.pi / n)))
    return ClosedFormRoot(f"-1/(2*(1+cos({2 * s - 1}*pi/{n})))", val)


def path_root(n: int, s: int) -> ClosedFormRoot:
    """Root p_s of the independence polynomial of P_n:
    -1 / (2 (1 + cos(2 s pi / (n + 2)))), 1 <= s <= (n + 1) // 2."""
    if n < 1 or not 1 <= s <= (n + 1) // 2:
        raise IndexOutOfRange(f"path root index s={s} outside 1..{(n + 1) // 2}")
    with mpmath.workprec(ROOT_PRECISION_BITS):
        val = -1 / (2 * (1 + mpmath.cos(mpmath.mpf(2 * s) * mpmath.pi / (n + 2))))
    return ClosedFormRoot(f"-1/(2*(1+cos({2 * s}*pi/{n + 2})))", val)


def h_root_from_f_root(tau):
    """Roots of h are tau / (1 + tau) for roots tau != -1 of f."""
    return tau / (1 + tau)


@dataclass
class ProbeReport:
    n_max: int
    graphs_examined: int
    distinct_h: int
    flagged: list[dict]
    claw_free_graphs: int
    claw_free_not_real_rooted: list[dict]
    min_root_real_negative: int
    tie_tolerance: float

    def to_json(self) -> dict:
        return dict(self.__dict__)

    def format(self) -> str:
        lines = [
            f"graphs examined (n <= {self.n_max}): {self.graphs_examined}",
            f"distinct h-polynomials (the constant h = 1 included): {self.distinct_h}",
            f"h with a real negative root of strictly minimum modulus: {self.min_root_real_negative}",
            f"claw-free graphs: {self.claw_free_graphs}; "
            f"claw-free with non-real roots of h: {len(self.claw_free_not_real_rooted)}",
            f"possible ties for minimum modulus (relative tolerance {self.tie_tolerance:g}): "
            f"{len(self.flagged)}",
        ]
        for item in self.flagged:
            lines.append(f"  FLAG h = {item['h']}  example {item['example']}  moduli {item['moduli']}")
        for item in self.claw_free_not_real_rooted:
            lines.append(f"  NONREAL claw-free {item['example']}  h = {item['h']}")
        return "\n".join(lines)


def _min_modulus_summary(h: IntPolynomial, rel_tol: float):
    from .asymptotics import numeric_roots

    roots = numeric_roots(h)
    if not roots:
        return None
    mods = sorted(((abs(r), r) for r, _ in roots), key=lambda t: t[0])
    smallest = mods[0][0]
    tied = [r for m, r in mods if m - smallest <= rel_tol * smallest]
    best = mods[0][1]
    real_negative = len(tied) == 1 and abs(best.imag) <= rel_tol * max(1.0, abs(best)) and best.real < 0
    return tied, real_negative


def min_modulus_probe(n_max: int = 6, rel_tol: float = 1e-8) -> ProbeReport:
    """Sweep all graphs on <= n_max vertices and look for h-polynomials of
    S/I(G) whose minimum-modulus root is not unique.

    Roots come from Aberth iteration on the squarefree factors of h, so a
    repeated root is never mistaken for a tie.  Flags are evidence for exact
    re-examination, not claims.
    """
    from .asymptotics import is_real_rooted

    if n_max > 7:
        raise ValueError("the probe is limited to n_max <= 7")
    groups: dict[tuple[int, ...], dict] = {}
    examined = 0
    claw_free = 0
    for n in range(1, n_max + 1):
        for G in all_graphs(n):
            examined += 1
            h, _ = h_polynomial(G)
            g = groups.get(h.coeffs)
            if g is None:
                g = groups[h.coeffs] = {"h": h, "example": G, "claw_free_example": None}
            if g["claw_free_example"] is None and is_claw_free(G):
                g["claw_free_example"] = G
            if is_claw_free(G):
                claw_free += 1
    flagged, nonreal, real_negative = [], [], 0
    for key in sorted(groups):
        g = groups[key]
        h = g["h"]
        if h.degree < 1:
            continue
        summary = _min_modulus_summary(h, rel_tol)
        tied, is_neg = summary
        if is_neg:
            real_negative += 1
        if len(tied) > 1:
            flagged.append({
                "h": str(h),
                "example": str(g["example"]),
                "moduli": [abs(r) for r in tied],
                "roots": [[r.real, r.imag] for r in tied],
            })
        if g["claw_free_example"] is not None and not is_real_rooted(h):
            nonreal.append({"h": str(h), "example": str(g["claw_free_example"])})
    return ProbeReport(n_max, examined, len(groups), flagged, claw_free, nonreal, real_negative, rel_tol)
