"""Exact univariate arithmetic: integer polynomials, rational functions and
truncated power series over the rationals.

Everything here is immutable and uses Python integers / ``Fraction``; no
floating point is involved anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]

DEFAULT_ORDER = 32


class ArithmeticError_(ArithmeticError):
    """Base class for errors raised by this module."""


class DenominatorVanishesAtZero(ArithmeticError_):
    pass


class ConstantTermNotOne(ArithmeticError_):
    pass


class InexactDivision(ArithmeticError_):
    pass


def _trim(coeffs: Sequence) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, ``coeffs[i]`` multiplies z**i."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        cs = _trim(self.coeffs)
        for c in cs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integral coefficient {c}")
            elif not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def z(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, deg: int, coeff: int = 1) -> "IntPolynomial":
        return cls((0,) * deg + (coeff,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self), len(other))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out, base = IntPolynomial.one(), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x):
        """Horner evaluation; works for int, Fraction, float, complex, mpf."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def compose_scale(self, scale: int = -1) -> "IntPolynomial":
        """Return f(scale * z); the default gives f(-z)."""
        return IntPolynomial(tuple(c * scale**i for i, c in enumerate(self.coeffs)))

    def divmod_exact(self, other: "IntPolynomial") -> tuple[list[Fraction], list[Fraction]]:
        """Quotient and remainder over the rationals."""
        return _qr([Fraction(c) for c in self.coeffs], [Fraction(c) for c in _as_poly(other).coeffs])

    def divexact(self, other) -> "IntPolynomial":
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        q, r = self.divmod_exact(other)
        if any(r) or any(c.denominator != 1 for c in q):
            raise InexactDivision(f"{self} is not divisible by {other}")
        return IntPolynomial(tuple(int(c) for c in q))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading() < 0:
            g = -g
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    def valuation_at_one(self) -> int:
        """Multiplicity of z = 1 as a root (0 if f(1) != 0)."""
        if self.is_zero():
            raise ValueError("zero polynomial vanishes to infinite order")
        k, f = 0, self
        one_minus_z = IntPolynomial((1, -1))
        while f(1) == 0:
            f = f.divexact(one_minus_z)
            k += 1
        return k

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "IntPolynomial":
        return cls(tuple(int(c) for c in data))

    def __str__(self):
        return format_poly(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({format_poly(self.coeffs)})"


def _as_poly(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1):
        return IntPolynomial((int(x),))
    raise TypeError(f"cannot coerce {x!r} to IntPolynomial")


def format_poly(coeffs: Sequence, var: str = "z") -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# --- rational-coefficient helpers (lists of Fraction, index = degree) ---

def _qr(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    num = list(_trim(num))
    den = list(_trim(den))
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if len(num) < len(den):
        return [], num
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = den[-1]
    r = num[:]
    for k in range(len(q) - 1, -1, -1):
        c = r[k + len(den) - 1] / lead
        q[k] = c
        if c:
            for j, d in enumerate(den):
                r[k + j] -= c * d
    return list(_trim(q)), list(_trim(r[: len(den) - 1]))


def _to_int_primitive(coeffs: Sequence[Fraction]) -> IntPolynomial:
    coeffs = _trim(coeffs)
    if not coeffs:
        return IntPolynomial()
    lcm = 1
    for c in coeffs:
        d = Fraction(c).denominator
        lcm = lcm * d // gcd(lcm, d)
    return IntPolynomial(tuple(int(Fraction(c) * lcm) for c in coeffs)).primitive()


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor over Q, normalised to a primitive integer
    polynomial with positive leading coefficient (the zero pair gives 0)."""
    x = [Fraction(c) for c in a.coeffs]
    y = [Fraction(c) for c in b.coeffs]
    while y:
        _, r = _qr(x, y)
        x, y = y, r
    return _to_int_primitive(x)


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: p = c * prod g_j**j with the g_j squarefree and
    pairwise coprime. Returns ``[(g_j, j), ...]`` for non-constant g_j."""
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree decomposition")
    if p.degree <= 0:
        return []
    f = [Fraction(c) for c in p.coeffs]
    df = _deriv(f)
    a = [Fraction(c) for c in poly_gcd(p, p.derivative()).coeffs]
    b = _qr(f, a)[0]
    d = _sub(_qr(df, a)[0], _deriv(b))
    out = []
    i = 1
    while len(b) > 1:
        g = poly_gcd(_to_int_primitive(b), _to_int_primitive(d))
        if g.degree > 0:
            out.append((g, i))
        gq = [Fraction(c) for c in g.coeffs]
        b = _qr(b, gq)[0]
        d = _sub(_qr(d, gq)[0], _deriv(b))
        i += 1
    return out


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    out = IntPolynomial.one()
    for g, _ in squarefree_decomposition(p):
        out = out * g
    return out


def _deriv(cs: list[Fraction]) -> list[Fraction]:
    return [i * c for i, c in enumerate(cs)][1:]


def _sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return list(_trim([x - y for x, y in zip(a, b)]))


@dataclass(frozen=True, eq=False)
class RationalFunction:
    """num/den with den(0) != 0. Not auto-reduced; equality reduces lazily."""

    num: IntPolynomial
    den: IntPolynomial

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if self.den[0] == 0:
            raise DenominatorVanishesAtZero(f"denominator {self.den} vanishes at z = 0")

    @classmethod
    def of(cls, num, den=1) -> "RationalFunction":
        return cls(_as_poly(num), _as_poly(den))

    def reduced(self) -> "RationalFunction":
        g = poly_gcd(self.num, self.den)
        if g.degree <= 0:
            num, den = self.num, self.den
        else:
            num, den = self.num.divexact(g), self.den.divexact(g)
        if den[0] < 0:
            num, den = -num, -den
        return RationalFunction(num, den)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        r = self.reduced()
        c = r.den[0]
        g = gcd(r.num.content(), r.den.content())
        return hash((r.num.coeffs, r.den.coeffs, c, g))

    def __add__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_rf(other))

    def __mul__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(self.num(x)) / self.den(x)
        return self.num(x) / self.den(x)

    def compose_scale(self, scale: int = -1) -> "RationalFunction":
        return RationalFunction(self.num.compose_scale(scale), self.den.compose_scale(scale))

    def series(self, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return series_from_rational(self, order)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RationalFunction":
        return cls(IntPolynomial.from_json(data["num"]), IntPolynomial.from_json(data["den"]))

    def __str__(self):
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(_as_poly(x), IntPolynomial.one())


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series c_0 + c_1 z + ... + c_N z^N with rational coefficients."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        cs = tuple(Fraction(c) for c in self.coeffs)
        if len(cs) > self.order + 1:
            cs = cs[: self.order + 1]
        cs = cs + (Fraction(0),) * (self.order + 1 - len(cs))
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def of(cls, coeffs: Iterable[Number], order: int | None = None) -> "TruncatedSeries":
        cs = tuple(coeffs)
        return cls(len(cs) - 1 if order is None else order, cs)

    @classmethod
    def from_polynomial(cls, p: IntPolynomial, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls(order, tuple(p[i] for i in range(order + 1)))

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot raise the order of a truncated series")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return TruncatedSeries(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(self.order, tuple(a * other for a in self.coeffs))
        self._check(other)
        N = self.order
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (N + 1)
        for i in range(N + 1):
            if a[i]:
                ai = a[i]
                for j in range(N + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return TruncatedSeries(N, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise DenominatorVanishesAtZero("series with zero constant term is not invertible")
        N = self.order
        out = [Fraction(0)] * (N + 1)
        out[0] = 1 / c0
        for k in range(1, N + 1):
            s = sum((self.coeffs[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
            out[k] = -s / c0
        return TruncatedSeries(N, tuple(out))

    def compose_scale(self, scale: int = -1) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(c * scale**i for i, c in enumerate(self.coeffs)))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def as_ints(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("series has non-integral coefficients")
        return [int(c) for c in self.coeffs]

    def to_json(self) -> list[dict]:
        return [{"num": str(c.numerator), "den": str(c.denominator)} for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list[dict]) -> "TruncatedSeries":
        return cls.of(Fraction(int(d["num"]), int(d["den"])) for d in data)

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={[str(c) for c in self.coeffs]})"


def series_from_rational(f: RationalFunction, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Maclaurin coefficients of ``f`` up to z**order by formal long division."""
    den = f.den
    d0 = den[0]
    if d0 == 0:
        raise DenominatorVanishesAtZero(f"denominator {den} vanishes at z = 0")
    out: list[Fraction] = []
    dc = den.coeffs
    for k in range(order + 1):
        s = Fraction(f.num[k])
        for j in range(1, min(k, len(dc) - 1) + 1):
            s -= dc[j] * out[k - j]
        out.append(s / d0)
    return TruncatedSeries(order, tuple(out))


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    """Formal logarithm of a series with constant term 1.

    Solves ``s * L' = s'`` coefficient by coefficient:
    k L_k = k s_k - sum_{j=1}^{k-1} j L_j s_{k-j}.
    """
    if s.coeffs[0] != 1:
        raise ConstantTermNotOne(f"constant term is {s.coeffs[0]}, expected 1")
    N = s.order
    c = s.coeffs
    L = [Fraction(0)] * (N + 1)
    for k in range(1, N + 1):
        acc = k * c[k]
        for j in range(1, k):
            if L[j] and c[k - j]:
                acc -= j * L[j] * c[k - j]
        L[k] = acc / k
    return TruncatedSeries(N, tuple(L))


def series_exp(L: TruncatedSeries) -> TruncatedSeries:
    """Inverse of :func:`series_log`; requires zero constant term."""
    if L.coeffs[0] != 0:
        raise ValueError("exp needs a series with zero constant term")
    N = L.order
    out = [Fraction(0)] * (N + 1)
    out[0] = Fraction(1)
    for k in range(1, N + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if L.coeffs[j]:
                acc += j * L.coeffs[j] * out[k - j]
        out[k] = acc / k
    return TruncatedSeries(N, tuple(out))
