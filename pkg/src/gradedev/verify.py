"""Property-verification suites over finite corpora.

Each suite returns a :class:`SuiteReport`; a failing report carries the first
counterexample as a JSON-ready dict.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import mpmath

from . import corpus
from .asymptotics import (
    NoGrowthProfile,
    golod_rho,
    growth_diagnostic,
    is_real_rooted,
    koszul_growth,
    real_root_count,
    sturm_isolate,
)
from .betti import betti_table, has_linear_resolution
from .graphs import (
    all_graphs,
    complement_is_chordal,
    cycle,
    cycle_root,
    edge_ideal,
    h_polynomial,
    h_root_from_f_root,
    independence_f_polynomial,
    is_claw_free,
    path,
    path_root,
)
from .monomial_ideals import (
    MonomialIdeal,
    hilbert_data,
    is_complete_intersection,
    is_strongly_stable,
    lex_segment,
)
from .poincare import (
    COMPLETE_INTERSECTION,
    DeviationError,
    DeviationSequence,
    PoincareSeries,
    deviations_for_closed_form,
    deviations_from_series,
    first_violation,
    poincare_ci,
    poincare_for_ideal,
    poincare_golod,
    poincare_koszul,
)

ROOT_TOL = 1e-9


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    skipped: int = 0
    counterexample: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def fail(self, **info) -> "SuiteReport":
        if self.counterexample is None:
            self.counterexample = info
        return self

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "verdict": "PASS" if self.passed else "FAIL",
            "checked": self.checked,
            "skipped": self.skipped,
            "counterexample": self.counterexample,
            "notes": self.notes,
        }

    def format(self) -> str:
        lines = [f"{self.name}: {'PASS' if self.passed else 'FAIL'} ({self.checked} checked, {self.skipped} skipped)"]
        lines += [f"  {note}" for note in self.notes]
        if self.counterexample:
            lines.append("  first counterexample:")
            lines += [f"    {k}: {v}" for k, v in self.counterexample.items()]
        return "\n".join(lines)


# --- shared helpers ---

def lex_poincare(I: MonomialIdeal) -> tuple[MonomialIdeal, PoincareSeries]:
    """Lex ideal of I and its Golod closed form (lex ideals are strongly stable)."""
    L = lex_segment(I)
    if L.is_zero():
        return L, poincare_ci(I.n, 0)
    return L, poincare_golod(L.n, betti_table(L).betti_totals())


def _padded(xs: list[int], k: int) -> list[int]:
    return list(xs) + [0] * (k - len(xs))


def _ideal_dump(I: MonomialIdeal) -> str:
    return f"{I} in {I.n} variables"


# --- suites ---

def verify_lex(ideals, order: int = 12) -> SuiteReport:
    """eps_i(S/I) <= eps_i(S/L) for i <= order and beta_i(S/I) <= beta_i(S/L)."""
    rep = SuiteReport("lex")
    for I in ideals:
        try:
            P_I = poincare_koszul(hilbert_data(I)) if I.is_quadratic() else poincare_for_ideal(I)
        except ValueError:
            rep.skipped += 1
            continue
        L, P_L = lex_poincare(I)
        eps_I = deviations_from_series(P_I, order)
        eps_L = deviations_from_series(P_L, order)
        bad = first_violation(eps_I, eps_L)
        if bad is not None:
            return rep.fail(kind="deviation", ideal=_ideal_dump(I), lex=str(L), index=bad,
                            eps_I=list(eps_I), eps_L=list(eps_L))
        tI, tL = betti_table(I).totals(), betti_table(L).totals()
        k = max(len(tI), len(tL))
        tI, tL = _padded(tI, k), _padded(tL, k)
        if any(a > b for a, b in zip(tI, tL)):
            return rep.fail(kind="betti", ideal=_ideal_dump(I), lex=str(L), betti_I=tI, betti_L=tL)
        rep.checked += 1
    return rep


def verify_serre(ideals, order: int = 32) -> SuiteReport:
    """Koszul closed form is coefficientwise below the Serre bound."""
    rep = SuiteReport("serre")
    for I in ideals:
        if I.is_zero() or not I.is_quadratic():
            rep.skipped += 1
            continue
        koszul = poincare_koszul(hilbert_data(I)).betti_numbers(order)
        bound = poincare_golod(I.n, betti_table(I).betti_totals()).betti_numbers(order)
        bad = next((i for i, (a, b) in enumerate(zip(koszul, bound)) if a > b), None)
        if bad is not None:
            return rep.fail(ideal=_ideal_dump(I), index=bad, koszul=koszul[: bad + 1], serre=bound[: bad + 1])
        rep.checked += 1
    return rep


def closed_form_corpus(ideals) -> list[tuple[str, PoincareSeries, int]]:
    """(label, closed form, edim) for every closed form the corpus produces
    that has the shape (1+z)^c / D(z)."""
    out = [("R6", PoincareSeries(corpus.R6, "UserSupplied"), 5)]
    for I in ideals:
        if I.is_quadratic():
            out.append((f"Koszul {I} n={I.n}", poincare_koszul(hilbert_data(I)), I.n))
        if not I.is_zero():
            L, P_L = lex_poincare(I)
            out.append((f"Golod {L} n={L.n}", P_L, L.n))
        if is_complete_intersection(I):
            out.append((f"CI n={I.n} c={len(I.gens)}", poincare_ci(I.n, len(I.gens)), I.n))
    for label, J in corpus.graph_ideals():
        out.append((f"Koszul {label}", poincare_koszul(hilbert_data(J)), J.n))
    seen, unique = set(), []
    for label, P, n in out:
        key = (P.closed_form.num.coeffs, P.closed_form.den.coeffs)
        if key not in seen:
            seen.add(key)
            unique.append((label, P, n))
    return unique


def verify_methods(ideals, order: int = 40) -> SuiteReport:
    """Logarithm extraction agrees with the Möbius/Newton formula on eps_2..eps_order."""
    rep = SuiteReport("methods")
    for label, P, n in closed_form_corpus(ideals):
        a = deviations_from_series(P, order)
        b = deviations_for_closed_form(P, order, edim=n)
        bad = next((i for i in range(2, order + 1) if a[i] != b[i]), None)
        if bad is not None:
            return rep.fail(closed_form=str(P.closed_form), label=label, index=bad, log=a[bad], mobius=b[bad])
        rep.checked += 1
    rep.notes.append(f"closed forms compared on eps_2..eps_{order}")
    return rep


def verify_base(ideals, order: int = 32) -> SuiteReport:
    """eps_1 = n, eps_2 = number of generators, rigidity, CI => eps_{>=3} = 0."""
    rep = SuiteReport("base")
    for I in ideals:
        cases = []
        try:
            cases.append((I, poincare_for_ideal(I)))
        except ValueError:
            rep.skipped += 1
        if not I.is_zero():
            cases.append(lex_poincare(I))
        for J, P in cases:
            try:
                eps = deviations_from_series(P, order)
            except DeviationError as exc:
                return rep.fail(ideal=_ideal_dump(J), error=f"{type(exc).__name__}: {exc}")
            if eps[1] != J.n or eps[2] != len(J.gens):
                return rep.fail(ideal=_ideal_dump(J), eps=[eps[1], eps[2]], expected=[J.n, len(J.gens)])
            if is_complete_intersection(J) and any(eps[i] for i in range(3, order + 1)):
                return rep.fail(ideal=_ideal_dump(J), kind="complete intersection", eps=list(eps))
            rep.checked += 1
    return rep


def _ideal_growth(I: MonomialIdeal, order: int, force: bool = False):
    P = poincare_for_ideal(I, force=force)
    if P.provenance == COMPLETE_INTERSECTION:
        raise NoGrowthProfile("complete intersection: deviations vanish from i = 3 on")
    eps = deviations_from_series(P, order)
    if P.provenance == "Koszul":
        profile = koszul_growth(hilbert_data(I).h_polynomial)
    else:
        profile = golod_rho(P.closed_form.den)
    return eps, profile


def verify_growth_single(
    label: str, eps: DeviationSequence, profile, window, tol: float, require_monotone: bool = False
) -> SuiteReport:
    rep = SuiteReport("growth")
    diag = growth_diagnostic(eps, profile, window, tol)
    rep.checked = 1
    rep.notes.append(
        f"{label}: rho = {profile.rho:.12g}, b = {profile.b}, ratio at {window[1]} = "
        f"{diag.ratio(window[1]):.12g}, verdict {diag.verdict}, monotone tail {diag.monotone}"
    )
    if not diag.passed or (require_monotone and not diag.monotone):
        rep.fail(input=label, diagnostic=diag.to_json())
    return rep


def verify_golod_growth(
    ideals, window=(40, 60), tol: float = 0.1, require_monotone: bool = True
) -> SuiteReport:
    """Golod growth on strongly stable non-principal ideals."""
    rep = SuiteReport("golod-growth")
    order = window[1]
    non_monotone = 0
    for I in ideals:
        if len(I.gens) < 2 or not is_strongly_stable(I):
            continue
        P = poincare_golod(I.n, betti_table(I).betti_totals())
        profile = golod_rho(P.closed_form.den)
        v = P.closed_form.den
        if not (profile.rho_lo > 1 and v(profile.root.lo) > 0 > v(profile.root.hi)):
            return rep.fail(ideal=_ideal_dump(I), kind="rho bracket", profile=profile.to_json())
        diag = growth_diagnostic(deviations_from_series(P, order), profile, window, tol)
        if not diag.passed:
            return rep.fail(ideal=_ideal_dump(I), kind="verdict", diagnostic=diag.to_json())
        if not diag.monotone:
            non_monotone += 1
            if require_monotone:
                tail = range(window[1] - 4, window[1] + 1)
                rep.fail(ideal=_ideal_dump(I), kind="monotone trend",
                         tail_deviation={i: float(diag.deviation[i]) for i in tail})
        rep.checked += 1
    rep.notes.append(f"{non_monotone} of {rep.checked} PASS verdicts have a non-monotone |ratio - 1| tail")
    return rep


def verify_graph_growth(lo: int = 3, hi: int = 12, window=(30, 40), tol: float = 1e-2) -> SuiteReport:
    """Cycles and paths: min-modulus root of h against the closed form, real
    roots, closed-form roots of f, and the growth diagnostic."""
    rep = SuiteReport("graphgrowth")
    for kind, make, root in (("cycle", cycle, cycle_root), ("path", path, path_root)):
        for n in range(lo, hi + 1):
            G = make(n)
            label = f"{kind}:{n}"
            h, _ = h_polynomial(G)
            f = independence_f_polynomial(G)
            if real_root_count(h) != h.degree or real_root_count(f) != f.degree:
                return rep.fail(graph=label, kind="non-real roots", h=str(h))
            # closed-form roots of f
            count = n // 2 if kind == "cycle" else (n + 1) // 2
            closed = sorted(float(root(n, s).value) for s in range(1, count + 1))
            isolated = sorted(b.approx for b in sturm_isolate(f))
            if len(closed) != len(isolated) or any(abs(a - b) > ROOT_TOL for a, b in zip(closed, isolated)):
                return rep.fail(graph=label, kind="f roots", closed_form=closed, isolated=isolated)
            profile = koszul_growth(h)
            with mpmath.workprec(160):
                target = h_root_from_f_root(root(n, 1).value)
                lo_b, hi_b = (mpmath.mpf(x.numerator) / x.denominator for x in (profile.root.lo, profile.root.hi))
                inside = lo_b - ROOT_TOL <= target <= hi_b + ROOT_TOL
            if not inside:
                return rep.fail(graph=label, kind="min-modulus root", bracket=profile.root.to_json(),
                                closed_form=mpmath.nstr(target, 20))
            eps = deviations_from_series(poincare_koszul(hilbert_data(edge_ideal(G))), window[1])
            diag = growth_diagnostic(eps, profile, window, tol)
            if not diag.passed:
                return rep.fail(graph=label, kind="growth", diagnostic=diag.to_json())
            rep.checked += 1
    return rep


def verify_stanley_reisner(n_max: int = 6) -> SuiteReport:
    """All graphs on <= n_max vertices: f-route h equals K-polynomial h,
    claw-free => real-rooted h, chordal complement => linear resolution."""
    rep = SuiteReport("stanley-reisner")
    real_cache: dict[tuple[int, ...], bool] = {}
    for n in range(1, n_max + 1):
        for G in all_graphs(n):
            I = edge_ideal(G)
            hd = hilbert_data(I)
            h, dim = h_polynomial(G)
            if (h, dim) != (hd.h_polynomial, hd.dimension):
                return rep.fail(graph=str(G), kind="h routes differ", f_route=str(h), k_route=str(hd.h_polynomial))
            if is_claw_free(G):
                ok = real_cache.get(h.coeffs)
                if ok is None:
                    ok = real_cache[h.coeffs] = is_real_rooted(h)
                if not ok:
                    return rep.fail(graph=str(G), kind="claw-free with non-real roots", h=str(h))
            if not I.is_zero() and complement_is_chordal(G) and not has_linear_resolution(I):
                return rep.fail(graph=str(G), kind="chordal complement without linear resolution")
            rep.checked += 1
    return rep


SUITES = ("lex", "serre", "methods", "growth", "graphgrowth", "base", "golodgrowth", "stanleyreisner")
