from itertools import combinations

import mpmath
import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedev.asymptotics import numeric_roots, sturm_isolate
from gradedev.exact_arith import IntPolynomial
from gradedev.graphs import (
    DegreeMismatch,
    Graph,
    IndexOutOfRange,
    TooManyVertices,
    all_graphs,
    complement_is_chordal,
    complete,
    cycle,
    disjoint_union,
    edge_ideal,
    empty,
    f_to_h,
    h_polynomial,
    h_root_from_f_root,
    independence_f_polynomial,
    is_chordal,
    is_claw_free,
    min_modulus_probe,
    path,
    path_root,
    cycle_root,
    star,
)
from gradedev.monomial_ideals import hilbert_data

P = IntPolynomial


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(1, G.n + 1))
    H.add_edges_from(G.edges)
    return H


def brute_f(G):
    counts = [0] * (G.n + 1)
    for k in range(G.n + 1):
        for S in combinations(range(1, G.n + 1), k):
            if not any((a, b) in G.edges for a, b in combinations(S, 2)):
                counts[k] += 1
    return P(tuple(counts))


def brute_claw_free(G):
    adj = G.adjacency()
    for c in range(G.n):
        for a, b, d in combinations(sorted(adj[c]), 3):
            if b not in adj[a] and d not in adj[a] and d not in adj[b]:
                return False
    return True


graphs = st.integers(1, 7).flatmap(
    lambda n: st.sets(st.sampled_from(list(combinations(range(1, n + 1), 2)) or [(1, 1)]), max_size=21).map(
        lambda es: Graph.of(n, [e for e in es if e[0] != e[1]])
    )
)


# --- families ---

def test_family_constructors():
    assert len(path(4).edges) == 3
    assert len(cycle(5).edges) == 5
    assert len(complete(4).edges) == 6
    assert star(3).n == 4 and len(star(3).edges) == 3
    assert empty(3).edges == frozenset()
    assert disjoint_union(complete(2), 3).n == 6


def test_graph_counts():
    # labelled graphs on n vertices
    assert [sum(1 for _ in all_graphs(n)) for n in range(1, 5)] == [1, 2, 8, 64]


def test_edge_ideal_shape():
    I = edge_ideal(complete(3))
    assert set(I.gens) == {(1, 1, 0), (1, 0, 1), (0, 1, 1)}


# --- independence polynomials ---

def test_f_polynomial_examples():
    for n in range(1, 7):
        assert independence_f_polynomial(complete(n)) == P((1, n))
    assert independence_f_polynomial(path(4)) == P((1, 4, 3))
    assert independence_f_polynomial(cycle(4)) == P((1, 4, 2))
    assert independence_f_polynomial(cycle(5)) == P((1, 5, 5))


def test_f_polynomial_cap():
    with pytest.raises(TooManyVertices):
        independence_f_polynomial(empty(5), cap=4)


def test_f_to_h_examples():
    assert f_to_h(P((1, 4, 3)), 2) == P((1, 2))
    assert f_to_h(P((1, 3)), 1) == P((1, 2))
    assert f_to_h(P.one(), 0) == P.one()
    with pytest.raises(DegreeMismatch):
        f_to_h(P((1, 4, 3)), 1)


def test_h_polynomial_agrees_with_hilbert_series():
    for G in [path(4), cycle(5), complete(4), star(3), cycle(6)]:
        h, d = h_polynomial(G)
        hd = hilbert_data(edge_ideal(G))
        assert (h, d) == (hd.h_polynomial, hd.dimension)


@given(graphs)
@settings(max_examples=80, deadline=None)
def test_f_polynomial_brute_force(G):
    assert independence_f_polynomial(G) == brute_f(G)


# --- predicates ---

@given(graphs)
@settings(max_examples=80, deadline=None)
def test_chordality_matches_networkx(G):
    assert is_chordal(G) == nx.is_chordal(to_nx(G))
    assert complement_is_chordal(G) == nx.is_chordal(to_nx(G.complement()))


@given(graphs)
@settings(max_examples=80, deadline=None)
def test_claw_free_matches_brute_force(G):
    assert is_claw_free(G) == brute_claw_free(G)


def test_predicate_examples():
    assert not is_claw_free(star(3))
    assert is_claw_free(cycle(6))
    assert not is_chordal(cycle(4))
    assert is_chordal(complete(5))
    assert complement_is_chordal(complete(5))
    assert not complement_is_chordal(cycle(5))


# --- closed-form roots ---

def test_cycle_root_c5():
    c = cycle_root(5, 1)
    assert abs(float(c.value) + 0.2763932) < 1e-7
    roots = [complex(r) for r, _ in numeric_roots(independence_f_polynomial(cycle(5)))]
    assert any(abs(r - float(c.value)) < 1e-12 for r in roots)


def test_path_root_p4():
    with mpmath.workprec(160):
        assert mpmath.almosteq(path_root(4, 1).value, mpmath.mpf(-1) / 3, 1e-40)


def test_closed_form_roots_are_roots():
    for n in range(3, 12):
        f = independence_f_polynomial(cycle(n))
        for s in range(1, n // 2 + 1):
            with mpmath.workprec(160):
                assert abs(mpmath.polyval(list(reversed(f.coeffs)), cycle_root(n, s).value)) < mpmath.mpf(10) ** -30
        f = independence_f_polynomial(path(n))
        for s in range(1, (n + 1) // 2 + 1):
            with mpmath.workprec(160):
                assert abs(mpmath.polyval(list(reversed(f.coeffs)), path_root(n, s).value)) < mpmath.mpf(10) ** -30


def test_h_roots_are_images_of_f_roots():
    h, _ = h_polynomial(cycle(5))
    brackets = sturm_isolate(h)
    images = sorted(float(h_root_from_f_root(cycle_root(5, s).value)) for s in (1, 2))
    assert [b.approx for b in brackets] == pytest.approx(images, abs=1e-15)


def test_root_index_range():
    with pytest.raises(IndexOutOfRange):
        cycle_root(5, 3)
    with pytest.raises(IndexOutOfRange):
        path_root(4, 0)


# --- probe ---

def test_probe_small():
    report = min_modulus_probe(3)
    assert report.graphs_examined == 1 + 2 + 8
    assert report.flagged == []
    assert report.claw_free_not_real_rooted == []
    assert "graphs examined" in report.format()


def test_probe_k4_root():
    h, _ = h_polynomial(complete(4))
    assert h == P((1, 3))
    (b,) = sturm_isolate(h)
    assert b.lo <= -0.3333333 and b.hi >= -0.3333334
    assert b.multiplicity == 1
