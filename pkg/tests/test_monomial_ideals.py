import warnings
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedev.corpus import quadratic_ideals, random_quadratic_ideals
from gradedev.exact_arith import IntPolynomial
from gradedev.monomial_ideals import (
    GeneratorDegreeBelowTwo,
    GeneratorDegreeError,
    MacaulayViolation,
    MonomialIdeal,
    PossiblyIncompleteBound,
    _lex_pieces,
    hilbert_data,
    hilbert_function,
    hilbert_series,
    is_complete_intersection,
    is_lex,
    is_stable,
    is_strongly_stable,
    k_polynomial,
    lex_segment,
    minimalize,
    zero_ideal,
)

X2, XY, Y2 = (2, 0), (1, 1), (0, 2)


def ideal(*gens, n=2):
    return minimalize(gens, n)


def brute_hf(I, d):
    """Count standard monomials of degree d by scanning all exponent vectors."""
    return sum(
        1 for m in product(range(d + 1), repeat=I.n)
        if sum(m) == d and not any(all(g[i] <= m[i] for i in range(I.n)) for g in I.gens)
    )


def brute_lex(I, D):
    """Degreewise lex construction written independently of the library."""
    gens = []
    for d in range(D + 1):
        mons = sorted((m for m in product(range(d + 1), repeat=I.n) if sum(m) == d), reverse=True)
        need = len(mons) - brute_hf(I, d)
        for m in mons[:need]:
            if not any(all(g[i] <= m[i] for i in range(I.n)) for g in gens):
                gens.append(m)
    return MonomialIdeal(I.n, tuple(sorted(gens, reverse=True)))


# --- minimalize ---

def test_minimalize_examples():
    assert ideal((2, 0), (2, 1)).gens == ((2, 0),)
    assert ideal(X2, XY, (2, 2)).gens == (X2, XY)
    tri = ideal((1, 1, 0), (0, 1, 1), (1, 0, 1), n=3)
    assert set(tri.gens) == {(1, 1, 0), (0, 1, 1), (1, 0, 1)}


def test_low_degree_generator_warns_or_raises():
    with pytest.warns(GeneratorDegreeBelowTwo):
        minimalize([(1, 0)], 2)
    with pytest.raises(GeneratorDegreeError):
        minimalize([(1, 0)], 2, strict=True)


# --- Hilbert series ---

def test_k_polynomial_examples():
    assert k_polynomial(ideal(X2, XY)) == IntPolynomial((1, 0, -2, 1))
    assert k_polynomial(zero_ideal(4)) == IntPolynomial.one()
    assert k_polynomial(ideal(X2, Y2)) == IntPolynomial((1, 0, -2, 0, 1))


def test_k_polynomial_matches_counts():
    assert hilbert_series(ideal(X2, XY), 6) == [1, 2, 1, 1, 1, 1, 1]


def test_hilbert_data_examples():
    k3 = ideal((1, 1, 0), (1, 0, 1), (0, 1, 1), n=3)
    hd = hilbert_data(k3)
    assert (hd.h_polynomial, hd.dimension) == (IntPolynomial((1, 2)), 1)
    p4 = ideal((1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), n=4)
    hd = hilbert_data(p4)
    assert (hd.h_polynomial, hd.dimension) == (IntPolynomial((1, 2)), 2)
    hd = hilbert_data(zero_ideal(3))
    assert (hd.h_polynomial, hd.dimension) == (IntPolynomial.one(), 3)


def test_hilbert_function_examples():
    assert hilbert_function(ideal(X2, Y2), 2) == 1
    assert hilbert_function(ideal(X2, XY), 3) == 1
    assert hilbert_function(ideal(X2, XY, Y2), 0) == 1


# --- lex segments ---

def test_lex_of_regular_sequence():
    assert lex_segment(ideal(X2, Y2)).gens == (X2, XY, (0, 3))


def test_lex_of_lex_ideal_is_itself():
    I = ideal(X2, XY)
    assert lex_segment(I) == I


def test_lex_of_single_product():
    # S/(xy) and S/(x^2) share the Hilbert function 1, 2, 2, 2, ...
    I = ideal(XY)
    assert [hilbert_function(I, d) for d in range(5)] == [1, 2, 2, 2, 2]
    L = lex_segment(I)
    assert L == brute_lex(I, 6)
    assert L.gens == (X2,)


def test_lex_matches_brute_force_oracle():
    for I in quadratic_ideals(3)[1:40]:
        assert lex_segment(I) == brute_lex(I, 6)


def test_macaulay_violation_detected():
    # quotient HF 1, 1, 3 grows faster than Macaulay allows
    with pytest.raises(MacaulayViolation):
        _lex_pieces(2, [1, 1, 3], 2)


def test_explicit_bound_too_small_warns():
    I = ideal(X2, Y2)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        L = lex_segment(I, max_degree=2)
    assert any(issubclass(w.category, PossiblyIncompleteBound) for w in caught)
    assert L.gens == (X2, XY)


# --- predicates ---

def test_predicate_examples():
    assert is_strongly_stable(ideal(X2, XY))
    I = ideal(X2, Y2)
    assert not is_strongly_stable(I)
    assert is_complete_intersection(I)
    assert is_lex(ideal(X2, XY, (0, 3)))


def test_stable_not_strongly_stable():
    # x2x3: moving T2 -> T1 gives x1x3, which is missing; stability only moves T3
    I = ideal((2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 1, 1), n=3)
    assert is_stable(I) and not is_strongly_stable(I)


# --- corpus-wide invariants ---

CORPUS = quadratic_ideals(3) + random_quadratic_ideals(4, 60, seed=7)


def test_k_polynomial_agrees_with_enumeration():
    for I in CORPUS[:80]:
        hf = hilbert_series(I, 20)
        assert hf == [hilbert_function(I, d) for d in range(21)]
    for I in CORPUS[::20]:
        assert hilbert_series(I, 8) == [brute_hf(I, d) for d in range(9)]


def test_lex_preserves_hf_and_is_idempotent():
    for I in CORPUS:
        L = lex_segment(I)
        assert hilbert_series(L, 20) == hilbert_series(I, 20)
        assert lex_segment(L) == L
        assert is_lex(L)


def test_predicate_chain():
    for I in CORPUS:
        L = lex_segment(I)
        for J in (I, L):
            if is_lex(J):
                assert is_strongly_stable(J)
            if is_strongly_stable(J):
                assert is_stable(J)


monomials = st.tuples(*[st.integers(0, 3)] * 3).filter(lambda m: sum(m) >= 2)


@given(st.lists(monomials, min_size=1, max_size=5))
@settings(max_examples=80, deadline=None)
def test_disjoint_supports_give_product(gens):
    I = minimalize(gens, 3)
    if is_complete_intersection(I):
        expected = IntPolynomial.one()
        for g in I.gens:
            expected = expected * (IntPolynomial.one() - IntPolynomial.monomial(sum(g)))
        assert k_polynomial(I) == expected


@given(st.lists(monomials, min_size=0, max_size=5))
@settings(max_examples=80, deadline=None)
def test_random_ideals_hf_and_lex(gens):
    I = minimalize(gens, 3)
    assert hilbert_series(I, 10) == [hilbert_function(I, d) for d in range(11)]
    L = lex_segment(I)
    assert hilbert_series(L, 12) == hilbert_series(I, 12)
