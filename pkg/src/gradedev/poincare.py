"""Closed-form Poincaré series of k over R = S/I and their deviations.

P_k^R(z) = prod_i (1 + z^(2i-1))^eps_(2i-1) / (1 - z^(2i))^eps_(2i)

Deviations are extracted two ways: from the logarithm of P(-z), and from the
power sums of the reciprocal roots of the denominator (Möbius inversion).
Both work in exact rational arithmetic and reject anything that is not a
nonnegative integer.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .betti import betti_table, golod_certificate
from .exact_arith import (
    DEFAULT_ORDER,
    IntPolynomial,
    RationalFunction,
    TruncatedSeries,
    series_from_rational,
    series_log,
)
from .monomial_ideals import (
    HilbertData,
    MonomialIdeal,
    hilbert_data,
    is_complete_intersection,
)

GOLOD = "Golod"
KOSZUL = "Koszul"
COMPLETE_INTERSECTION = "CompleteIntersection"
USER_SUPPLIED = "UserSupplied"


class DeviationError(ValueError):
    """The input is not the Poincaré series of a graded algebra."""


class NonIntegralDeviation(DeviationError):
    pass


class NegativeDeviation(DeviationError):
    pass


class RigidityViolation(DeviationError):
    pass


class OddSignPattern(ValueError):
    """A Koszul closed form produced a negative Betti number."""


class NoCertificate(ValueError):
    pass


ONE_PLUS_Z = IntPolynomial((1, 1))


@dataclass(frozen=True)
class PoincareSeries:
    closed_form: RationalFunction
    provenance: str
    note: str = ""

    def series(self, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        return series_from_rational(self.closed_form, order)

    def betti_numbers(self, order: int = DEFAULT_ORDER) -> list[int]:
        return self.series(order).as_ints()

    def check(self, order: int = DEFAULT_ORDER) -> "PoincareSeries":
        s = self.series(order)
        if s[0] != 1:
            raise DeviationError(f"P(0) = {s[0]}, expected 1")
        bad = [i for i, c in enumerate(s) if c.denominator != 1 or c < 0]
        if bad:
            raise OddSignPattern(
                f"coefficient {bad[0]} of {self.closed_form} is {s[bad[0]]}; not a Poincaré series"
            )
        return self

    def to_json(self) -> dict:
        return {"closed_form": self.closed_form.to_json(), "provenance": self.provenance, "note": self.note}


@dataclass(frozen=True)
class DeviationSequence:
    """eps_1..eps_N; ``values[0]`` is eps_1 and may be None when unknown."""

    values: tuple[int | None, ...]
    provenance: str = ""

    def __post_init__(self):
        for i, e in enumerate(self.values, start=1):
            if e is None:
                continue
            if e < 0:
                raise NegativeDeviation(f"eps_{i} = {e} < 0")
        tail = self.values[2:]
        first_zero = next((k for k, e in enumerate(tail) if e == 0), None)
        if first_zero is not None and any(tail[first_zero:]):
            i = first_zero + 3
            j = i + next(k for k, e in enumerate(tail[first_zero:]) if e)
            raise RigidityViolation(f"eps_{i} = 0 but eps_{j} = {self.values[j - 1]}")

    @property
    def order(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int | None:
        """1-based access: ``eps[i]`` is eps_i."""
        if i < 1:
            raise IndexError("deviations are indexed from 1")
        return self.values[i - 1]

    def __iter__(self):
        return iter(self.values)

    def truncate(self, order: int) -> "DeviationSequence":
        return DeviationSequence(self.values[:order], self.provenance)

    def to_json(self) -> dict:
        return {"order": self.order, "values": list(self.values), "provenance": self.provenance}


# --- closed forms ---

def poincare_golod(n: int, betti: Sequence[int]) -> PoincareSeries:
    """(1+z)^n / (1 - sum_i beta_i z^(i+1)), the Serre bound, attained by Golod rings."""
    if not betti or betti[0] < 1:
        raise ValueError("need beta_1 >= 1")
    den = [0] * (len(betti) + 2)
    den[0] = 1
    for i, b in enumerate(betti, start=1):
        den[i + 1] = -b
    return PoincareSeries(RationalFunction(ONE_PLUS_Z**n, IntPolynomial(tuple(den))), GOLOD)


def poincare_koszul(h: HilbertData, order: int = DEFAULT_ORDER) -> PoincareSeries:
    """(1+z)^dim / h(-z), from P(z) HS(-z) = 1."""
    P = PoincareSeries(RationalFunction(ONE_PLUS_Z**h.dimension, h.h_polynomial.compose_scale(-1)), KOSZUL)
    return P.check(order)


def poincare_ci(n: int, c: int) -> PoincareSeries:
    if not 0 <= c <= n:
        raise ValueError("codimension must lie in [0, n]")
    return PoincareSeries(RationalFunction(ONE_PLUS_Z**n, IntPolynomial((1, 0, -1)) ** c), COMPLETE_INTERSECTION)


def poincare_for_ideal(I: MonomialIdeal, force: bool = False) -> PoincareSeries:
    """Pick the closed form certified for S/I: complete intersection, then
    Koszul (quadratic monomial, Fröberg), then Golod (by certificate)."""
    if is_complete_intersection(I):
        return poincare_ci(I.n, len(I.gens))
    if I.is_quadratic():
        return poincare_koszul(hilbert_data(I))
    cert = golod_certificate(I)
    if cert.certified or force:
        P = poincare_golod(I.n, betti_table(I).betti_totals())
        note = cert.status if cert.certified else "CONDITIONAL"
        return PoincareSeries(P.closed_form, GOLOD, note)
    raise NoCertificate("no closed form certified for this ideal (not CI, quadratic or Golod-certified)")


# --- deviations ---

def _divisors(m: int) -> list[int]:
    small = [d for d in range(1, int(m**0.5) + 1) if m % d == 0]
    return sorted(set(small + [m // d for d in small]))


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("Möbius function is defined on positive integers")
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    return -out if n > 1 else out


def _as_integer_deviation(x: Fraction, i: int) -> int:
    if x.denominator != 1:
        raise NonIntegralDeviation(f"eps_{i} = {x} is not an integer")
    if x < 0:
        raise NegativeDeviation(f"eps_{i} = {x} < 0")
    return int(x)


def deviations_from_series(P, order: int = DEFAULT_ORDER) -> DeviationSequence:
    """eps_1..eps_order from P via -log P(-z).

    With c_M = M [z^M](-log P(-z)) = sum_{d | M} (-1)^(d+1) d eps_d, solve for
    eps_M divisor by divisor.
    """
    if isinstance(P, PoincareSeries):
        series, provenance = P.series(order), P.provenance
    elif isinstance(P, RationalFunction):
        series, provenance = series_from_rational(P, order), USER_SUPPLIED
    elif isinstance(P, TruncatedSeries):
        series, provenance = P.truncate(order), USER_SUPPLIED
    else:
        raise TypeError(f"cannot extract deviations from {type(P).__name__}")
    if series[0] != 1:
        raise DeviationError(f"P(0) = {series[0]}, expected 1")
    neg_log = -series_log(series.compose_scale(-1))
    eps: list[int] = []
    for M in range(1, order + 1):
        acc = M * neg_log[M]
        for d in _divisors(M)[:-1]:
            acc -= (-1) ** (d + 1) * d * eps[d - 1]
        eps.append(_as_integer_deviation((-1) ** (M + 1) * acc / M, M))
    return DeviationSequence(tuple(eps), provenance)


def power_sums(den: IntPolynomial, order: int) -> list[int]:
    """p_1..p_order with p_d = sum_j alpha_j^d, where den = prod (1 + alpha_j z).

    Newton's identities on e_k = den[k]:
    p_k = e_1 p_(k-1) - e_2 p_(k-2) + ... + (-1)^(k-1) k e_k.
    """
    if den[0] != 1:
        raise ValueError("denominator must satisfy den(0) = 1")
    e = [den[k] for k in range(order + 1)]
    p = [0] * (order + 1)
    for k in range(1, order + 1):
        acc = (-1) ** (k - 1) * k * e[k]
        for j in range(1, k):
            if e[j]:
                acc += (-1) ** (j - 1) * e[j] * p[k - j]
        p[k] = acc
    return p[1:]


def deviations_mobius(
    den: IntPolynomial, c: int = 0, order: int = DEFAULT_ORDER, edim: int | None = None
) -> DeviationSequence:
    """Deviations of P = (1+z)^c / den for i >= 2 by Möbius inversion:

    eps_i = ((-1)^i / i) sum_{d | i} mu(i/d) p_d.

    ``c`` drops out for i >= 2; eps_1 is taken from ``edim`` (None if absent).
    """
    if den[0] != 1:
        raise ValueError("denominator must satisfy den(0) = 1")
    p = power_sums(den, order)
    eps: list[int | None] = [edim]
    for i in range(2, order + 1):
        s = sum(mobius(i // d) * p[d - 1] for d in _divisors(i))
        eps.append(_as_integer_deviation(Fraction((-1) ** i * s, i), i))
    return DeviationSequence(tuple(eps), "Mobius")


def deviations_for_closed_form(
    P: PoincareSeries, order: int = DEFAULT_ORDER, edim: int | None = None
) -> DeviationSequence:
    """Möbius route for P = (1+z)^c / den with den(0) = 1; raises ValueError
    when the numerator is not a power of 1 + z."""
    num, den = P.closed_form.num, P.closed_form.den
    if den[0] < 0:
        num, den = -num, -den
    c = num.degree
    if den[0] != 1 or num != ONE_PLUS_Z**c:
        raise ValueError(f"{P.closed_form} is not of the form (1+z)^c / D(z) with D(0) = 1")
    return deviations_mobius(den, c, order, edim=edim)


def betti_k_from_deviations(eps: DeviationSequence, order: int | None = None) -> TruncatedSeries:
    """Expand prod (1 + z^(2i-1))^eps_(2i-1) / (1 - z^(2i))^eps_(2i) to ``order``."""
    order = eps.order if order is None else order
    out = [Fraction(0)] * (order + 1)
    out[0] = Fraction(1)
    for i in range(1, min(order, eps.order) + 1):
        e = eps[i]
        if e is None:
            raise ValueError(f"eps_{i} is missing")
        if e == 0:
            continue
        # factor as a series in w = z^i
        if i % 2:
            factor = [comb(e, k) for k in range(order // i + 1)]
        else:
            factor = [comb(e + k - 1, k) for k in range(order // i + 1)]
        new = [Fraction(0)] * (order + 1)
        for a, ca in enumerate(out):
            if ca:
                for k, fk in enumerate(factor):
                    if a + k * i > order:
                        break
                    if fk:
                        new[a + k * i] += ca * fk
        out = new
    return TruncatedSeries(order, tuple(out))


def dominance(a, b) -> bool:
    """True iff a <= b termwise (series coefficients or deviations)."""
    if isinstance(a, TruncatedSeries) and isinstance(b, TruncatedSeries):
        if a.order != b.order:
            raise ValueError("orders differ")
        return all(x <= y for x, y in zip(a, b))
    if isinstance(a, DeviationSequence) and isinstance(b, DeviationSequence):
        if a.order != b.order:
            raise ValueError("orders differ")
        return all(x <= y for x, y in zip(a, b) if x is not None and y is not None)
    a, b = list(a), list(b)
    if len(a) != len(b):
        raise ValueError("lengths differ")
    return all(x <= y for x, y in zip(a, b))


def first_violation(a, b) -> int | None:
    """1-based index of the first term with a > b, else None (deviations)."""
    for i, (x, y) in enumerate(zip(a, b), start=1):
        if x is not None and y is not None and x > y:
            return i
    return None
