"""Monomial ideals of S = k[T_1..T_n] and the Hilbert series of S/I.

Monomials are tuples of exponents.  Variable order for lex is fixed as
T_1 > T_2 > ... > T_n.  All Hilbert functions exposed here are those of the
quotient S/I.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Sequence

from .exact_arith import IntPolynomial, series_from_rational, RationalFunction

Monomial = tuple[int, ...]


class GeneratorDegreeBelowTwo(UserWarning):
    """A generator of degree < 2 violates the standing assumption I in n^2."""


class PossiblyIncompleteBound(UserWarning):
    """Lex generators showed up near the degree bound and could not be certified."""


class MacaulayViolation(ValueError):
    """n * L_{d-1} is not inside L_d: the target is not a genuine Hilbert function."""


class GeneratorDegreeError(ValueError):
    pass


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def colon(g: Monomial, m: Monomial) -> Monomial:
    """Generator of (g) : (m)."""
    return tuple(x - y if x > y else 0 for x, y in zip(g, m))


def support(m: Monomial) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(m) if e)


def _minimal(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    # Sorting by degree means a divisor is always seen before its multiples.
    out: list[Monomial] = []
    for g in sorted(set(gens), key=lambda m: (sum(m), m)):
        if not any(divides(h, g) for h in out):
            out.append(g)
    return tuple(sorted(out, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators, sorted lex-descending."""

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.n:
                raise ValueError(f"monomial {g} does not have {self.n} exponents")

    def __contains__(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def __len__(self):
        return len(self.gens)

    @property
    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def is_zero(self) -> bool:
        return not self.gens

    def is_quadratic(self) -> bool:
        return all(sum(g) == 2 for g in self.gens)

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        return minimalize([tuple(g) for g in data["gens"]], int(data["n"]))

    def __str__(self):
        from .formats import format_ideal

        return format_ideal(self)


def minimalize(gens: Iterable[Sequence[int]], n: int, strict: bool = False) -> MonomialIdeal:
    """Divisibility-minimal generating set of the ideal generated by ``gens``.

    A generator of degree < 2 triggers a :class:`GeneratorDegreeBelowTwo`
    warning, or a :class:`GeneratorDegreeError` when ``strict`` is set.
    """
    gens = [tuple(int(e) for e in g) for g in gens]
    ideal = MonomialIdeal(n, _minimal(gens))
    low = [g for g in ideal.gens if sum(g) < 2]
    if low:
        msg = f"generators of degree < 2: {low}"
        if strict:
            raise GeneratorDegreeError(msg)
        warnings.warn(msg, GeneratorDegreeBelowTwo, stacklevel=2)
    return ideal


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


# --- Hilbert series ---

def _components(gens: tuple[Monomial, ...]) -> list[tuple[Monomial, ...]]:
    """Split generators into classes connected through shared variables."""
    parent = list(range(len(gens)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict[int, int] = {}
    for idx, g in enumerate(gens):
        for v, e in enumerate(g):
            if e:
                if v in owner:
                    parent[find(idx)] = find(owner[v])
                else:
                    owner[v] = idx
    groups: dict[int, list[Monomial]] = {}
    for idx, g in enumerate(gens):
        groups.setdefault(find(idx), []).append(g)
    return [tuple(v) for v in groups.values()]


@lru_cache(maxsize=200_000)
def _kpoly(gens: tuple[Monomial, ...]) -> IntPolynomial:
    if not gens:
        return IntPolynomial.one()
    if len(gens) == 1:
        return IntPolynomial.one() - IntPolynomial.monomial(sum(gens[0]))
    parts = _components(gens)
    if len(parts) > 1:
        out = IntPolynomial.one()
        for p in parts:
            out = out * _kpoly(tuple(sorted(p, reverse=True)))
        return out
    pivot = max(gens, key=lambda m: (sum(m), m))
    rest = tuple(g for g in gens if g != pivot)
    quotient = _minimal(colon(g, pivot) for g in rest)
    return _kpoly(rest) - IntPolynomial.monomial(sum(pivot)) * _kpoly(quotient)


def k_polynomial(I: MonomialIdeal) -> IntPolynomial:
    """Numerator K of HS_{S/I} = K(z) / (1 - z)^n.

    Pivots on the generator of highest degree (ties: lex-largest) using
    K(I' + (m)) = K(I') - z^deg(m) K(I' : m); support-disjoint blocks multiply.
    """
    return _kpoly(I.gens)


@dataclass(frozen=True)
class HilbertData:
    k_polynomial: IntPolynomial
    dimension: int
    h_polynomial: IntPolynomial

    def to_json(self) -> dict:
        return {
            "k_polynomial": self.k_polynomial.to_json(),
            "dimension": self.dimension,
            "h_polynomial": self.h_polynomial.to_json(),
        }


def hilbert_data(I: MonomialIdeal) -> HilbertData:
    K = k_polynomial(I)
    h = K
    k = 0
    one_minus_z = IntPolynomial((1, -1))
    while h(1) == 0:
        h = h.divexact(one_minus_z)
        k += 1
    return HilbertData(K, I.n - k, h)


def hilbert_series(I: MonomialIdeal, order: int) -> list[int]:
    """HF_{S/I}(0..order) read off the K-polynomial."""
    K = k_polynomial(I)
    den = IntPolynomial((1, -1)) ** I.n
    return series_from_rational(RationalFunction(K, den), order).as_ints()


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All degree-d monomials in n variables, lex-descending (T_1 > ... > T_n)."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        m = [0] * n
        for v in combo:
            m[v] += 1
        out.append(tuple(m))
    # combinations_with_replacement already yields lex-descending exponent vectors
    return out


def hilbert_function(I: MonomialIdeal, d: int) -> int:
    """dim_k (S/I)_d by direct enumeration of standard monomials."""
    if d < 0:
        return 0
    return sum(1 for m in monomials_of_degree(I.n, d) if m not in I)


# --- lex-segment ideals ---

def _lex_pieces(n: int, target_hf: Sequence[int], D: int):
    gens: list[Monomial] = []
    prev: set[Monomial] = set()
    new_degrees = []
    for d in range(D + 1):
        mons = monomials_of_degree(n, d)
        size = len(mons) - target_hf[d]
        if size < 0:
            raise MacaulayViolation(f"negative ideal dimension in degree {d}")
        piece = set(mons[:size])
        shifted = {m[:j] + (m[j] + 1,) + m[j + 1:] for m in prev for j in range(n)}
        if not shifted <= piece:
            raise MacaulayViolation(
                f"n * L_{d - 1} is not contained in L_{d}: growth exceeds Macaulay's bound"
            )
        fresh = [m for m in mons[:size] if m not in shifted]
        if fresh:
            new_degrees.append(d)
        gens.extend(fresh)
        prev = piece
    return gens, new_degrees


def default_lex_bound(I: MonomialIdeal) -> int:
    md = I.max_degree
    return max(2 * md, I.n + md)


def lex_segment(I: MonomialIdeal, max_degree: int | None = None) -> MonomialIdeal:
    """Lex-segment ideal with the same Hilbert function as S/I.

    Pieces L_d are built degreewise up to a bound D.  The result is certified
    by comparing K-polynomials, which fixes the Hilbert function in every
    degree.  With ``max_degree=None`` the bound starts at
    :func:`default_lex_bound` and doubles until certification succeeds; with
    an explicit bound, a failed certification with generators in degree D or
    D - 1 emits :class:`PossiblyIncompleteBound`.
    """
    if I.is_zero():
        return I
    if max_degree is not None and max_degree < I.max_degree:
        raise ValueError("degree bound below the maximal generator degree")
    target = k_polynomial(I)
    auto = max_degree is None
    D = default_lex_bound(I) if auto else max_degree
    while True:
        hf = hilbert_series(I, D)
        gens, new_degrees = _lex_pieces(I.n, hf, D)
        L = MonomialIdeal(I.n, _minimal(gens))
        if k_polynomial(L) == target:
            return L
        if not auto or D > 256:
            warnings.warn(
                f"lex generators found up to degree {max(new_degrees)} with bound {D}; the "
                f"Hilbert series of the result differs from the target, raise the bound",
                PossiblyIncompleteBound,
                stacklevel=2,
            )
            return L
        D *= 2


# --- predicates ---

def _borel_moves(I: MonomialIdeal, strong: bool):
    for u in I.gens:
        used = [j for j, e in enumerate(u) if e]
        js = used if strong else used[-1:]
        for j in js:
            for i in range(j):
                v = list(u)
                v[j] -= 1
                v[i] += 1
                yield tuple(v)


def is_strongly_stable(I: MonomialIdeal) -> bool:
    return all(v in I for v in _borel_moves(I, strong=True))


def is_stable(I: MonomialIdeal) -> bool:
    return all(v in I for v in _borel_moves(I, strong=False))


def is_lex(I: MonomialIdeal) -> bool:
    for d in range(I.max_degree + 1):
        seen_outside = False
        for m in monomials_of_degree(I.n, d):
            if m in I:
                if seen_outside:
                    return False
            else:
                seen_outside = True
    return True


def is_complete_intersection(I: MonomialIdeal) -> bool:
    """A monomial ideal is a complete intersection iff its minimal
    generators have pairwise disjoint supports."""
    seen: set[int] = set()
    for g in I.gens:
        s = support(g)
        if s & seen:
            return False
        seen |= s
    return True


def max_index(m: Monomial) -> int:
    """1-based index of the last variable dividing m (0 for m = 1)."""
    for j in range(len(m) - 1, -1, -1):
        if m[j]:
            return j + 1
    return 0


def binomial_ambient(n: int, d: int) -> int:
    return comb(n + d - 1, d)
