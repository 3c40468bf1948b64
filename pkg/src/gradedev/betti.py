"""Graded Betti numbers of S/I for monomial ideals I.

beta_{i,a}(S/I) = dim H_i of the multidegree-a strand of the Koszul complex
K(T_1..T_n) tensor S/I.  The strand has basis e_F (F a subset of supp(a))
with x^(a - F) outside I; it is nonzero only for a in the lcm lattice.
Ranks are computed over Q with fraction-free (Bareiss) elimination.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Mapping

from .monomial_ideals import (
    Monomial,
    MonomialIdeal,
    is_stable,
    is_strongly_stable,
    lcm,
    max_index,
)

LATTICE_CAP = 100_000


class LatticeTooLarge(RuntimeError):
    pass


class NotStable(ValueError):
    pass


@dataclass(frozen=True)
class BettiTable:
    """Betti numbers of S/I; ``entries[(i, j)]`` is beta_{i,j}."""

    n: int
    entries: Mapping[tuple[int, int], int]
    multigraded: Mapping[tuple[int, Monomial], int] | None = field(default=None, compare=False)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    @property
    def length(self) -> int:
        return max((i for (i, _), v in self.entries.items() if v), default=0)

    def totals(self) -> list[int]:
        """[beta_0, beta_1, ..., beta_length]."""
        out = [0] * (self.length + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def betti_totals(self) -> list[int]:
        """beta_1..beta_n (padded with zeros), the input to the Golod bound."""
        t = self.totals()
        return [t[i] if i < len(t) else 0 for i in range(1, self.n + 1)]

    def euler_polynomial(self) -> dict[int, int]:
        """sum_{i,j} (-1)^i beta_{i,j} z^j, as a degree -> coefficient map."""
        out: dict[int, int] = defaultdict(int)
        for (i, j), v in self.entries.items():
            out[j] += (-1) ** i * v
        return {j: c for j, c in out.items() if c}

    def to_json(self) -> dict[str, int]:
        return {f"{i},{j}": v for (i, j), v in sorted(self.entries.items()) if v}

    @classmethod
    def from_json(cls, data: Mapping[str, int], n: int) -> "BettiTable":
        entries = {}
        for key, v in data.items():
            i, j = (int(x) for x in key.split(","))
            entries[(i, j)] = int(v)
        return cls(n, entries)

    def format(self) -> str:
        """Macaulay2-style layout: columns i, rows j - i."""
        cols = self.length + 1
        rows = max((j - i for (i, j), v in self.entries.items() if v), default=0) + 1
        tot = self.totals()
        cells = [[self[(i, i + r)] for i in range(cols)] for r in range(rows)]
        width = max(len(str(x)) for x in tot + [cols - 1])
        head = " " * 7 + " ".join(str(i).rjust(width) for i in range(cols))
        lines = [head, "total: " + " ".join(str(x).rjust(width) for x in tot)]
        for r, row in enumerate(cells):
            body = " ".join(("." if x == 0 else str(x)).rjust(width) for x in row)
            lines.append(f"{r:>5}: {body}")
        return "\n".join(lines)

    def __str__(self):
        return self.format()


def lcm_lattice(I: MonomialIdeal, cap: int = LATTICE_CAP) -> set[Monomial]:
    """All lcms of subsets of the generators (the empty subset gives 1)."""
    elements = {(0,) * I.n}
    for g in I.gens:
        elements |= {lcm(e, g) for e in elements}
        if len(elements) > cap:
            raise LatticeTooLarge(f"lcm lattice exceeds {cap} elements")
    return elements


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free elimination."""
    M = [list(r) for r in rows if any(r)]
    if not M:
        return 0
    m, ncols = len(M), len(M[0])
    rank, prev = 0, 1
    for col in range(ncols):
        piv = next((r for r in range(rank, m) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][col]
        for r in range(rank + 1, m):
            a = M[r][col]
            row_r, row_p = M[r], M[rank]
            for c in range(col, ncols):
                row_r[c] = (p * row_r[c] - a * row_p[c]) // prev
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def _strand_betti(I: MonomialIdeal, a: Monomial) -> dict[int, int]:
    """Homology dimensions of the multidegree-a Koszul strand."""
    vars_a = [v for v, e in enumerate(a) if e]
    k = len(vars_a)
    alive: dict[int, list[int]] = defaultdict(list)  # |F| -> bitmasks
    for mask in range(1 << k):
        m = list(a)
        for pos in range(k):
            if mask >> pos & 1:
                m[vars_a[pos]] -= 1
        if tuple(m) not in I:
            alive[bin(mask).count("1")].append(mask)
    if not alive:
        return {}
    index = {i: {mask: r for r, mask in enumerate(masks)} for i, masks in alive.items()}

    def boundary_rank(i: int) -> int:
        # d_i : C_i -> C_{i-1}
        if i not in alive or (i - 1) not in alive:
            return 0
        target = index[i - 1]
        rows = []
        for mask in alive[i]:
            row = [0] * len(target)
            sign = 1
            for pos in range(k):
                if mask >> pos & 1:
                    sub = mask ^ (1 << pos)
                    if sub in target:
                        row[target[sub]] = sign
                    sign = -sign
            rows.append(row)
        return bareiss_rank(rows)

    ranks = {i: boundary_rank(i) for i in range(k + 2)}
    out = {}
    for i, masks in alive.items():
        h = len(masks) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        if h:
            out[i] = h
    return out


@lru_cache(maxsize=50_000)
def _betti_cached(I: MonomialIdeal, cap: int) -> BettiTable:
    multi: dict[tuple[int, Monomial], int] = {}
    coarse: dict[tuple[int, int], int] = defaultdict(int)
    for a in sorted(lcm_lattice(I, cap)):
        for i, v in _strand_betti(I, a).items():
            multi[(i, a)] = v
            coarse[(i, sum(a))] += v
    return BettiTable(I.n, dict(coarse), multi)


def betti_table(I: MonomialIdeal, cap: int = LATTICE_CAP) -> BettiTable:
    """Exact multigraded and graded Betti numbers of S/I over Q."""
    return _betti_cached(I, cap)


def eliahou_kervaire(I: MonomialIdeal) -> BettiTable:
    """Betti table of S/I for a stable ideal I from the closed form
    beta_{i,i+deg u}(I) = sum_u binom(max(u) - 1, i)."""
    if not is_stable(I):
        raise NotStable("Eliahou-Kervaire needs a stable ideal")
    entries: dict[tuple[int, int], int] = defaultdict(int)
    entries[(0, 0)] = 1
    for u in I.gens:
        mu, d = max_index(u), sum(u)
        for i in range(mu):
            entries[(i + 1, i + d)] += comb(mu - 1, i)
    return BettiTable(I.n, dict(entries))


def taylor_bound(I: MonomialIdeal) -> list[int]:
    """Ranks of the Taylor resolution: binom(#gens, i)."""
    return [comb(len(I.gens), i) for i in range(len(I.gens) + 1)]


def has_linear_resolution(I: MonomialIdeal, table: BettiTable | None = None) -> bool:
    degs = {sum(g) for g in I.gens}
    if len(degs) != 1:
        return False
    (d,) = degs
    table = table or betti_table(I)
    return all(j == d + i - 1 for (i, j), v in table.entries.items() if v and i >= 1)


STRONGLY_STABLE = "StronglyStable"
LINEAR_RESOLUTION = "LinearResolution"
PRINCIPAL = "Principal"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class GolodCertificate:
    status: str

    @property
    def certified(self) -> bool:
        return self.status != UNKNOWN


def golod_certificate(I: MonomialIdeal) -> GolodCertificate:
    """One-sided Golod certificate; ``Unknown`` never means non-Golod."""
    if is_strongly_stable(I):
        return GolodCertificate(STRONGLY_STABLE)
    if has_linear_resolution(I):
        return GolodCertificate(LINEAR_RESOLUTION)
    if len(I.gens) == 1:
        return GolodCertificate(PRINCIPAL)
    return GolodCertificate(UNKNOWN)


def betti_totals(I: MonomialIdeal) -> list[int]:
    return betti_table(I).betti_totals()
