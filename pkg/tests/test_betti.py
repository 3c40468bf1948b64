from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedev.betti import (
    LINEAR_RESOLUTION,
    STRONGLY_STABLE,
    UNKNOWN,
    BettiTable,
    LatticeTooLarge,
    NotStable,
    bareiss_rank,
    betti_table,
    eliahou_kervaire,
    golod_certificate,
    has_linear_resolution,
    lcm_lattice,
    taylor_bound,
)
from gradedev.corpus import quadratic_ideals, random_quadratic_ideals
from gradedev.graphs import complete, cycle, edge_ideal
from gradedev.monomial_ideals import is_stable, k_polynomial, lcm, lex_segment, minimalize

X2, XY, Y2, Y3 = (2, 0), (1, 1), (0, 2), (0, 3)


def ideal(*gens, n=2):
    return minimalize(gens, n)


def taylor_multigraded(I):
    """Ranks of the Taylor complex grouped by (i, degree of the lcm)."""
    out = {}
    for i in range(1, len(I.gens) + 1):
        for sub in combinations(I.gens, i):
            m = sub[0]
            for g in sub[1:]:
                m = lcm(m, g)
            out[(i, sum(m))] = out.get((i, sum(m)), 0) + 1
    return out


# --- lcm lattice ---

def test_lcm_lattice_examples():
    assert lcm_lattice(ideal(X2, XY)) == {(0, 0), X2, XY, (2, 1)}
    assert lcm_lattice(ideal(X2, Y2)) == {(0, 0), X2, Y2, (2, 2)}
    assert lcm_lattice(ideal(X2)) == {(0, 0), X2}


def test_lattice_cap():
    with pytest.raises(LatticeTooLarge):
        lcm_lattice(edge_ideal(complete(6)), cap=10)


# --- betti tables ---

def test_betti_x2_xy_matches_taylor():
    I = ideal(X2, XY)
    t = betti_table(I)
    assert t.totals() == [1, 2, 1]
    # the Taylor complex is minimal here
    assert {k: v for k, v in t.entries.items() if k[0] > 0} == taylor_multigraded(I)


def test_betti_regular_sequence():
    t = betti_table(ideal(X2, Y2))
    assert t.totals() == [1, 2, 1]
    assert t[(2, 4)] == 1


def test_betti_x2_xy_y3_matches_eliahou_kervaire():
    I = ideal(X2, XY, Y3)
    assert betti_table(I).totals() == [1, 3, 2]
    assert betti_table(I).entries == eliahou_kervaire(I).entries


def test_eliahou_kervaire_examples():
    assert eliahou_kervaire(ideal(X2, XY)).totals() == [1, 2, 1]
    assert eliahou_kervaire(ideal(X2, XY, Y3)).totals() == [1, 3, 2]
    assert eliahou_kervaire(ideal(X2, XY, Y2)).totals() == [1, 3, 2]
    with pytest.raises(NotStable):
        eliahou_kervaire(ideal(X2, Y2))


def test_linear_resolution_examples():
    assert has_linear_resolution(edge_ideal(complete(3)))
    assert not has_linear_resolution(ideal(X2, Y2))
    assert not has_linear_resolution(edge_ideal(cycle(5)))


def test_golod_certificate_examples():
    assert golod_certificate(ideal(X2, XY)).status == STRONGLY_STABLE
    assert golod_certificate(edge_ideal(complete(4))).status == LINEAR_RESOLUTION
    cert = golod_certificate(edge_ideal(cycle(5)))
    assert cert.status == UNKNOWN and not cert.certified


def test_table_format_and_json():
    t = betti_table(ideal(X2, XY, Y3))
    assert BettiTable.from_json(t.to_json(), 2).entries == {k: v for k, v in t.entries.items() if v}
    text = t.format()
    assert "total: 1 3 2" in text
    assert t.betti_totals() == [3, 2]


def test_bareiss_rank():
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[0, 1, 1], [1, 0, 1], [1, 1, 0]]) == 3
    assert bareiss_rank([]) == 0


# --- corpus invariants ---

CORPUS = quadratic_ideals(3) + random_quadratic_ideals(4, 80, seed=11)


def euler(table):
    out = {}
    for (i, j), v in table.entries.items():
        out[j] = out.get(j, 0) + (-1) ** i * v
    return out


def test_structural_invariants_on_corpus():
    for I in CORPUS:
        t = betti_table(I)
        assert t[(0, 0)] == 1 and all(j == 0 for (i, j), v in t.entries.items() if i == 0 and v)
        assert t.length <= I.n
        K = k_polynomial(I)
        assert {j: c for j, c in euler(t).items() if c} == {j: c for j, c in enumerate(K.coeffs) if c}
        bound = taylor_bound(I)
        assert all(b <= (bound[i] if i < len(bound) else 0) for i, b in enumerate(t.totals()))
        if is_stable(I):
            assert t.entries == {k: v for k, v in eliahou_kervaire(I).entries.items() if v}


def test_bhp_dominance_on_corpus():
    for I in CORPUS:
        L = lex_segment(I)
        tI, tL = betti_table(I).totals(), betti_table(L).totals()
        assert len(tI) <= len(tL)
        assert all(a <= b for a, b in zip(tI, tL))
        assert is_stable(L) and betti_table(L).entries == eliahou_kervaire(L).entries


monomials = st.tuples(*[st.integers(0, 3)] * 3).filter(lambda m: sum(m) >= 2)


@given(st.lists(monomials, min_size=1, max_size=5))
@settings(max_examples=60, deadline=None)
def test_random_ideals_euler_and_taylor(gens):
    I = minimalize(gens, 3)
    t = betti_table(I)
    K = k_polynomial(I)
    assert {j: c for j, c in euler(t).items() if c} == {j: c for j, c in enumerate(K.coeffs) if c}
    assert all(v <= comb(len(I.gens), i) for i, v in enumerate(t.totals()))
