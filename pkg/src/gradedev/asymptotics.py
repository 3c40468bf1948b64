"""Real-root isolation and the growth rate of deviations.

Real roots are isolated with Sturm sequences and refined by bisection on
exact rational endpoints; multiplicities come from the squarefree
decomposition.  Every PASS/FAIL decision here is made on rational brackets.
The numeric Aberth-Ehrlich solver is only used where a float answer is all
that is asked for (root-count cross-checks, the minimum-modulus probe).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact_arith import IntPolynomial, _qr, squarefree_decomposition

DEFAULT_WIDTH = Fraction(1, 2**64)


class HypothesisViolated(ValueError):
    pass


class MinModulusNotCertified(ValueError):
    pass


class NoGrowthProfile(ValueError):
    """Deviations do not grow (complete intersection) or rho <= 1."""


# --- Sturm sequences ---

def sturm_sequence(g: IntPolynomial) -> list[list[Fraction]]:
    p0 = [Fraction(c) for c in g.coeffs]
    p1 = [Fraction(c) for c in g.derivative().coeffs]
    seq = [p0]
    while p1:
        seq.append(p1)
        _, r = _qr(seq[-2], p1)
        p1 = [-c for c in r]
    return seq


def _eval(cs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_variations(seq: list[list[Fraction]], x: Fraction) -> int:
    signs = [s for s in (_sign(_eval(p, x)) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_bound(g: IntPolynomial) -> Fraction:
    lead = abs(g.leading())
    return 1 + max((Fraction(abs(c), lead) for c in g.coeffs[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RootBracket:
    """One distinct real root of ``poly`` inside [lo, hi]."""

    poly: IntPolynomial
    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def approx(self) -> float:
        return float((self.lo + self.hi) / 2)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def modulus_bounds(self) -> tuple[Fraction, Fraction]:
        if self.lo >= 0:
            return self.lo, self.hi
        if self.hi <= 0:
            return -self.hi, -self.lo
        return Fraction(0), max(-self.lo, self.hi)

    def to_json(self) -> dict:
        return {
            "lo": str(self.lo),
            "hi": str(self.hi),
            "multiplicity": self.multiplicity,
            "approx": self.approx,
        }


def _refine(g: list[Fraction], lo: Fraction, hi: Fraction, width: Fraction):
    """Bisect a bracket holding one simple root with g(lo), g(hi) != 0."""
    s_lo = _sign(_eval(g, lo))
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = _sign(_eval(g, mid))
        if s == 0:
            return mid, mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _split_point(g: list[Fraction], lo: Fraction, hi: Fraction) -> Fraction:
    for num, den in ((1, 2), (3, 7), (4, 7), (2, 5), (3, 5)):
        x = lo + (hi - lo) * num / den
        if _eval(g, x) != 0:
            return x
    raise AssertionError("polynomial vanishes at five distinct points of a bracket")


def _isolate_squarefree(g: IntPolynomial, width: Fraction) -> list[tuple[Fraction, Fraction]]:
    if g.degree <= 0:
        return []
    seq = sturm_sequence(g)
    gq = seq[0]
    B = cauchy_bound(g)
    out = []
    stack = [(-B, B, sign_variations(seq, -B) - sign_variations(seq, B))]
    while stack:
        lo, hi, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            out.append(_refine(gq, lo, hi, width))
            continue
        mid = _split_point(gq, lo, hi)
        v_mid = sign_variations(seq, mid)
        left = sign_variations(seq, lo) - v_mid
        stack.append((lo, mid, left))
        stack.append((mid, hi, count - left))
    return sorted(out)


def sturm_isolate(p: IntPolynomial, width: Fraction = DEFAULT_WIDTH) -> list[RootBracket]:
    """Disjoint rational brackets for the distinct real roots of ``p``,
    sorted increasingly, each with its exact multiplicity."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    out = []
    for g, mult in squarefree_decomposition(p):
        for lo, hi in _isolate_squarefree(g, width):
            out.append(RootBracket(p, lo, hi, mult))
    return sorted(out, key=lambda r: r.lo)


def real_root_count(p: IntPolynomial) -> int:
    """Number of real roots counted with multiplicity."""
    total = 0
    for g, mult in squarefree_decomposition(p):
        seq = sturm_sequence(g)
        B = cauchy_bound(g)
        total += mult * (sign_variations(seq, -B) - sign_variations(seq, B))
    return total


def is_real_rooted(p: IntPolynomial) -> bool:
    return real_root_count(p) == p.degree


def refine_bracket(r: RootBracket, width: Fraction) -> RootBracket:
    if r.width <= width:
        return r
    for g, mult in squarefree_decomposition(r.poly):
        if mult != r.multiplicity:
            continue
        gq = [Fraction(c) for c in g.coeffs]
        if r.lo == r.hi:
            return r
        if _sign(_eval(gq, r.lo)) * _sign(_eval(gq, r.hi)) < 0:
            lo, hi = _refine(gq, r.lo, r.hi, width)
            return RootBracket(r.poly, lo, hi, mult)
    raise AssertionError("bracket does not straddle a root of its squarefree factor")


# --- numeric roots ---

def aberth_roots(p: IntPolynomial, tol: float = 1e-14, max_iter: int = 500) -> list[complex]:
    """All complex roots of a squarefree-enough polynomial by Aberth-Ehrlich.

    Feed squarefree factors for reliable results; clustered roots converge
    slowly.
    """
    deg = p.degree
    if deg < 1:
        return []
    cs = [complex(c) for c in p.coeffs]
    dcs = [complex(c) for c in p.derivative().coeffs]
    lead = abs(cs[-1])
    radius = 1 + max(abs(c) / lead for c in cs[:-1])
    radius = min(radius, 1e6)
    # scale start circle to the geometric mean root modulus
    r0 = (abs(cs[0]) / lead) ** (1 / deg) if cs[0] else 1.0
    r0 = min(max(r0, 1e-3), radius)
    z = [r0 * cmath.exp(1j * (2 * math.pi * k / deg + 0.4)) for k in range(deg)]

    def horner(coeffs, x):
        acc = 0j
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    for _ in range(max_iter):
        worst = 0.0
        for k in range(deg):
            pk = horner(cs, z[k])
            if pk == 0:
                continue
            dk = horner(dcs, z[k])
            ratio = pk / dk if dk != 0 else pk
            s = sum(1 / (z[k] - z[j]) for j in range(deg) if j != k and z[k] != z[j])
            w = ratio / (1 - ratio * s)
            z[k] -= w
            worst = max(worst, abs(w) / max(1.0, abs(z[k])))
        if worst < tol:
            break
    return z


def residual_ok(p: IntPolynomial, root: complex, tol: float = 1e-9) -> bool:
    """|p(root)| small relative to sum |a_i| |root|^i."""
    scale = sum(abs(c) * abs(root) ** i for i, c in enumerate(p.coeffs))
    return abs(p(root)) <= tol * max(scale, 1.0)


def numeric_roots(p: IntPolynomial) -> list[tuple[complex, int]]:
    """Numeric roots with exact multiplicities (roots found per squarefree factor)."""
    out = []
    for g, mult in squarefree_decomposition(p):
        for r in aberth_roots(g):
            out.append((r, mult))
    return out


# --- growth profiles ---

@dataclass(frozen=True)
class GrowthProfile:
    """rho in [rho_lo, rho_hi] and the integer b in eps_i ~ b rho^i / i."""

    rho_lo: Fraction
    rho_hi: Fraction
    b: int
    root: RootBracket | None = None
    source: str = ""

    @property
    def rho(self) -> float:
        return float((self.rho_lo + self.rho_hi) / 2)

    def to_json(self) -> dict:
        out = {
            "rho": self.rho,
            "rho_bracket": [str(self.rho_lo), str(self.rho_hi)],
            "b": self.b,
            "source": self.source,
        }
        if self.root is not None:
            out["root_bracket"] = [str(self.root.lo), str(self.root.hi)]
        return out


def golod_rho(v: IntPolynomial, width: Fraction = DEFAULT_WIDTH) -> GrowthProfile:
    """Growth rate for a Golod denominator v(z) = 1 - sum beta_i z^(i+1).

    v is strictly decreasing on [0, 1] with v(0) = 1 and v(1) < 0, so its root
    r in (0, 1) is unique and simple; rho = 1/r and b = 1.
    """
    if v[0] != 1 or v[1] != 0 or any(c > 0 for c in v.coeffs[2:]):
        raise HypothesisViolated(f"{v} is not of the form 1 - sum beta_i z^(i+1)")
    if -v[2] < 1 or -v[3] < 1:
        raise HypothesisViolated("need beta_1 >= 1 and beta_2 >= 1 (non-principal ideal)")
    vq = [Fraction(c) for c in v.coeffs]
    lo, hi = _refine(vq, Fraction(0), Fraction(1), width)
    if lo == hi:
        # exact rational root; v is strictly decreasing, so any bracket around it changes sign
        lo, hi = lo - width / 2, hi + width / 2
    return GrowthProfile(1 / hi, 1 / lo, 1, RootBracket(v, lo, hi, 1), "golod")


def _min_modulus_root(brackets: list[RootBracket]) -> RootBracket:
    width = DEFAULT_WIDTH
    brackets = list(brackets)
    while True:
        bounds = [r.modulus_bounds() for r in brackets]
        best = min(range(len(brackets)), key=lambda k: bounds[k][1])
        if all(bounds[best][1] < bounds[k][0] for k in range(len(brackets)) if k != best):
            return brackets[best]
        width = width / 2**64
        if width < Fraction(1, 2**1024):
            raise MinModulusNotCertified("two real roots tie for minimum modulus")
        brackets = [refine_bracket(r, width) for r in brackets]


def koszul_growth(h: IntPolynomial) -> GrowthProfile:
    """Growth rate from an h-polynomial: -r is the real root of h of minimum
    modulus, b its multiplicity, rho = 1/r.

    Uniqueness among complex roots is only certified when every root of h is
    real; otherwise :class:`MinModulusNotCertified` is raised.
    """
    if h[0] != 1:
        raise HypothesisViolated("h(0) must be 1")
    if h.degree < 1:
        raise NoGrowthProfile("constant h-polynomial: the ring is a polynomial ring")
    brackets = sturm_isolate(h)
    if sum(r.multiplicity for r in brackets) != h.degree:
        raise MinModulusNotCertified("h has non-real roots; minimum modulus root not certified")
    best = _min_modulus_root(brackets)
    if best.hi > 0:
        raise MinModulusNotCertified("root of minimum modulus is not negative")
    if best.lo == best.hi:
        rho = 1 / -best.lo
        return GrowthProfile(rho, rho, best.multiplicity, best, "koszul")
    return GrowthProfile(1 / -best.lo, 1 / -best.hi, best.multiplicity, best, "koszul")


@dataclass(frozen=True)
class GrowthDiagnostic:
    window: tuple[int, int]
    tolerance: float
    ratios: list[tuple[int, Fraction, Fraction]] = field(repr=False)
    deviation: dict[int, Fraction] = field(repr=False)
    verdict: str
    monotone: bool

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"

    def ratio(self, i: int) -> float:
        for j, lo, hi in self.ratios:
            if j == i:
                return float((lo + hi) / 2)
        raise KeyError(i)

    def to_json(self) -> dict:
        return {
            "window": list(self.window),
            "tolerance": self.tolerance,
            "verdict": self.verdict,
            "monotone": self.monotone,
            "ratios": [
                {"i": i, "lo": str(lo), "hi": str(hi), "approx": float((lo + hi) / 2)}
                for i, lo, hi in self.ratios
            ],
        }


def growth_diagnostic(eps, profile: GrowthProfile, window: tuple[int, int], tol: float) -> GrowthDiagnostic:
    """Compare i * eps_i against b * rho^i over ``window`` = (i0, i1).

    PASS iff |ratio - 1| < tol at i1 and < 2 tol over the last five indices,
    evaluated on the rational rho bracket (upper bound of |ratio - 1|).
    ``monotone`` reports whether that bound is non-increasing over the last
    five indices.
    """
    i0, i1 = window
    if i0 < 1 or i1 < i0:
        raise ValueError(f"bad window {window}")
    if i1 > eps.order:
        raise ValueError(f"window end {i1} exceeds deviation order {eps.order}")
    if all(eps[i] == 0 for i in range(3, eps.order + 1)):
        raise NoGrowthProfile("deviations vanish from i = 3 on (complete intersection)")
    if profile.rho_hi <= 1:
        raise NoGrowthProfile("rho <= 1")
    tol_q = Fraction(tol)
    ratios = []
    dev = {}
    for i in range(i0, i1 + 1):
        e = eps[i]
        if e is None:
            raise ValueError(f"eps_{i} is missing")
        lo = Fraction(i * e) / (profile.b * profile.rho_hi**i)
        hi = Fraction(i * e) / (profile.b * profile.rho_lo**i)
        ratios.append((i, lo, hi))
        dev[i] = max(abs(lo - 1), abs(hi - 1))
    tail = list(range(max(i0, i1 - 4), i1 + 1))
    passed = dev[i1] < tol_q and max(dev[i] for i in tail) < 2 * tol_q
    monotone = all(dev[a] >= dev[b] for a, b in zip(tail, tail[1:]))
    return GrowthDiagnostic((i0, i1), tol, ratios, dev, "PASS" if passed else "FAIL", monotone)
