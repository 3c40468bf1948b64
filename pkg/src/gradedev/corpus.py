"""Test corpora of monomial ideals and graphs used by the verification suites."""
from __future__ import annotations

import random
from math import comb
from dataclasses import dataclass

from .exact_arith import IntPolynomial, RationalFunction
from .graphs import complete, cycle, edge_ideal, path
from .monomial_ideals import MonomialIdeal, minimalize, monomials_of_degree

DEFAULT_SEED = 20240601
DEFAULT_SAMPLE = 500
MAX_VARS = 6
MAX_GENS = 12
EXHAUSTIVE_CAP = 10  # degree-2 monomials, i.e. n <= 4


class CorpusTooLarge(RuntimeError):
    pass


def _ideal_from_mask(quads, mask: int, n: int) -> MonomialIdeal:
    return minimalize([q for k, q in enumerate(quads) if mask >> k & 1], n)


def quadratic_ideals(n: int, include_zero: bool = True) -> list[MonomialIdeal]:
    """Every quadratic monomial ideal in n variables (all subsets of the
    degree-2 monomials), ordered by subset bitmask."""
    quads = monomials_of_degree(n, 2)
    if len(quads) > EXHAUSTIVE_CAP:
        raise CorpusTooLarge(f"2^{len(quads)} subsets is too many for an exhaustive sweep")
    start = 0 if include_zero else 1
    return [_ideal_from_mask(quads, m, n) for m in range(start, 1 << len(quads))]


def random_quadratic_ideals(
    n: int, count: int = DEFAULT_SAMPLE, seed: int = DEFAULT_SEED, max_gens: int = MAX_GENS
) -> list[MonomialIdeal]:
    """``count`` distinct nonzero quadratic monomial ideals, reproducible from ``seed``."""
    if n > MAX_VARS:
        raise CorpusTooLarge(f"n = {n} exceeds the corpus cap of {MAX_VARS} variables")
    quads = monomials_of_degree(n, 2)
    rng = random.Random(seed)
    seen: set[int] = set()
    out = []
    limit = sum(comb(len(quads), k) for k in range(1, min(max_gens, len(quads)) + 1))
    if count > limit:
        raise CorpusTooLarge(f"only {limit} ideals satisfy the caps, {count} requested")
    while len(out) < count:
        k = rng.randint(1, min(max_gens, len(quads)))
        mask = sum(1 << j for j in rng.sample(range(len(quads)), k))
        if mask in seen:
            continue
        seen.add(mask)
        out.append(_ideal_from_mask(quads, mask, n))
    return out


def standard_ideals() -> list[MonomialIdeal]:
    """The default monomial corpus: all quadratic ideals in 3 variables plus
    a seeded sample of 500 in 4 variables."""
    return quadratic_ideals(3) + random_quadratic_ideals(4)


R6 = RationalFunction(
    IntPolynomial.one(),
    IntPolynomial((-1, 1)) * IntPolynomial((-1, 4, -5, 5, 1, -3, 1)),
)

R8_DEN = IntPolynomial(
    (-1, 10, -47, 140, -294, 479, -636, 710, -664, 505, -270, 31, 136, -192, 160, -93, 37, -9, 1)
)
R8 = RationalFunction(-(IntPolynomial((1, -1, 1)) ** 5), R8_DEN)


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: object


def cycles_and_paths(lo: int = 3, hi: int = 12) -> list[NamedGraph]:
    out = []
    for n in range(lo, hi + 1):
        out.append(NamedGraph(f"cycle:{n}", cycle(n)))
        out.append(NamedGraph(f"path:{n}", path(n)))
    return out


def complete_graphs(lo: int = 3, hi: int = 6) -> list[NamedGraph]:
    return [NamedGraph(f"complete:{n}", complete(n)) for n in range(lo, hi + 1)]


def graph_ideals() -> list[tuple[str, MonomialIdeal]]:
    return [(g.name, edge_ideal(g.graph)) for g in complete_graphs() + cycles_and_paths()]
