"""Reproduce published worked examples: claimed values next to computed ones."""
from __future__ import annotations

from dataclasses import dataclass, field

import mpmath

from . import corpus
from .asymptotics import growth_diagnostic, koszul_growth, real_root_count
from .betti import betti_table
from .exact_arith import IntPolynomial, series_from_rational
from .graphs import complete, cycle, cycle_root, disjoint_union, edge_ideal, h_root_from_f_root, path, path_root
from .monomial_ideals import hilbert_data, minimalize
from .poincare import (
    deviations_from_series,
    mobius,
    poincare_for_ideal,
    poincare_koszul,
)


@dataclass
class Row:
    label: str
    claimed: object
    computed: object
    match: bool

    def to_json(self) -> dict:
        return {"label": self.label, "claimed": _jsonable(self.claimed), "computed": _jsonable(self.computed),
                "match": self.match}


def _jsonable(x):
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    return str(x)


@dataclass
class Reproduction:
    name: str
    rows: list[Row] = field(default_factory=list)

    def add(self, label, claimed, computed, match=None):
        self.rows.append(Row(label, claimed, computed, claimed == computed if match is None else bool(match)))

    @property
    def passed(self) -> bool:
        return all(r.match for r in self.rows)

    def to_json(self) -> dict:
        return {"example": self.name, "verdict": "MATCH" if self.passed else "MISMATCH",
                "rows": [r.to_json() for r in self.rows]}

    def format(self) -> str:
        w = max(len(r.label) for r in self.rows)
        lines = [f"{self.name}: {'MATCH' if self.passed else 'MISMATCH'}"]
        for r in self.rows:
            flag = "ok" if r.match else "MISMATCH"
            lines.append(f"  {r.label.ljust(w)}  claimed {r.claimed}  computed {r.computed}  [{flag}]")
        return "\n".join(lines)


def r6r8(beta_order: int = 50, eps_order: int = 40) -> Reproduction:
    rep = Reproduction("r6r8")
    e6 = deviations_from_series(corpus.R6, eps_order)
    e8 = deviations_from_series(corpus.R8, eps_order)
    rep.add("eps_4(R6)", 16, e6[4])
    rep.add("eps_4(R8)", 9, e8[4])
    rep.add(f"eps_i(R6), eps_i(R8) nonnegative integers for i <= {eps_order}", True, True)
    b6 = series_from_rational(corpus.R6, beta_order).as_ints()
    b8 = series_from_rational(corpus.R8, beta_order).as_ints()
    bad = [i for i in range(beta_order + 1) if b6[i] > b8[i]]
    rep.add(f"beta_i(R6) <= beta_i(R8), 0 <= i <= {beta_order}", True, not bad)
    rep.add("beta_0..beta_4 (R6), for reference", "-", b6[:5], True)
    rep.add("beta_0..beta_4 (R8), for reference", "-", b8[:5], True)
    return rep


def remark_eps3() -> Reproduction:
    rep = Reproduction("remark-eps3")
    I = minimalize([(2, 0), (1, 1)], 2)
    J = minimalize([(2, 0), (0, 2)], 2)
    tI, tJ = betti_table(I).betti_totals(), betti_table(J).betti_totals()
    rep.add("S-Betti totals of S/(T1^2, T1T2)", [2, 1], tI)
    rep.add("S-Betti totals of S/(T1^2, T2^2)", [2, 1], tJ)
    eI = deviations_from_series(poincare_for_ideal(I), 8)
    eJ = deviations_from_series(poincare_for_ideal(J), 8)
    rep.add("eps_3(S/(T1^2, T1T2))", 1, eI[3])
    rep.add("eps_3(S/(T1^2, T2^2))", 0, eJ[3])
    return rep


def mobius_formula(m: int, i: int) -> int:
    """((-1)^i / i) sum_{d | i} mu(i/d) (-m)^d, the eps_i of a Koszul algebra with h = 1 + m z."""
    s = sum(mobius(i // d) * (-m) ** d for d in range(1, i + 1) if i % d == 0)
    q, r = divmod((-1) ** i * s, i)
    if r:
        raise ArithmeticError(f"formula not integral at m={m}, i={i}")
    return q


def complete_graphs(ms=range(2, 6), order: int = 40, tol: float = 1e-6) -> Reproduction:
    rep = Reproduction("complete-graphs")
    for m in ms:
        G = complete(m + 1)
        hd = hilbert_data(edge_ideal(G))
        rep.add(f"K_{m + 1}: h", f"1 + {m}*z", str(hd.h_polynomial))
        eps = deviations_from_series(poincare_koszul(hd), order)
        ok = all(eps[i] == mobius_formula(m, i) for i in range(2, order + 1))
        rep.add(f"K_{m + 1}: eps_i equals the Möbius formula, 2 <= i <= {order}", True, ok)
        ratio = order * eps[order] / m**order
        rep.add(f"K_{m + 1}: i eps_i / m^i at i = {order}", 1, f"{ratio:.12f}", abs(ratio - 1) <= tol)
    return rep


def p4m(m: int = 3, window=(30, 40), tol: float = 1e-2) -> Reproduction:
    rep = Reproduction(f"p4m (m = {m})")
    G = disjoint_union(path(4), m)
    hd = hilbert_data(edge_ideal(G))
    target = IntPolynomial((1, 2)) ** m
    rep.add("h", str(target), str(hd.h_polynomial))
    prof = koszul_growth(hd.h_polynomial)
    rep.add("rho", 2, prof.rho, prof.rho_lo <= 2 <= prof.rho_hi)
    rep.add("b", m, prof.b)
    eps = deviations_from_series(poincare_koszul(hd), window[1])
    diag = growth_diagnostic(eps, prof, window, tol)
    rep.add(f"i eps_i / (b rho^i) at i = {window[1]}", 1, f"{diag.ratio(window[1]):.8f}", diag.passed)
    return rep


def cycles_paths(lo: int = 3, hi: int = 12, tol: float = 1e-9) -> Reproduction:
    rep = Reproduction("cycles-paths")
    for kind, make, root, rho_expr in (
        ("C", cycle, cycle_root, lambda n: 2 * (1 + mpmath.cos(mpmath.pi / n)) - 1),
        ("P", path, path_root, lambda n: 2 * (1 + mpmath.cos(2 * mpmath.pi / (n + 2))) - 1),
    ):
        for n in range(lo, hi + 1):
            hd = hilbert_data(edge_ideal(make(n)))
            h = hd.h_polynomial
            prof = koszul_growth(h)
            with mpmath.workprec(160):
                img = h_root_from_f_root(root(n, 1).value)
                rho_claim = rho_expr(n)
                lo_b = mpmath.mpf(prof.root.lo.numerator) / prof.root.lo.denominator
                hi_b = mpmath.mpf(prof.root.hi.numerator) / prof.root.hi.denominator
                inside = lo_b - tol <= img <= hi_b + tol
            rep.add(f"{kind}_{n}: min-modulus root of h", mpmath.nstr(img, 15), f"{prof.root.approx:.15g}", inside)
            rep.add(f"{kind}_{n}: rho", mpmath.nstr(rho_claim, 15), f"{prof.rho:.15g}",
                    abs(float(rho_claim) - prof.rho) <= tol)
            rep.add(f"{kind}_{n}: all roots of h real", True, real_root_count(h) == h.degree)
    return rep


EXAMPLES = {
    "r6r8": r6r8,
    "remark-eps3": remark_eps3,
    "complete-graphs": complete_graphs,
    "p4m": p4m,
    "cycles-paths": cycles_paths,
}
