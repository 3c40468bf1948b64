from gradedev import corpus, reproduce, verify
from gradedev.graphs import complete, edge_ideal
from gradedev.monomial_ideals import hilbert_data, is_strongly_stable, minimalize
from gradedev.poincare import deviations_from_series, poincare_koszul


# --- corpus ---

def test_quadratic_corpus_sizes():
    assert len(corpus.quadratic_ideals(2)) == 8
    assert len(corpus.quadratic_ideals(3)) == 64
    assert corpus.quadratic_ideals(3)[0].is_zero()
    assert len(corpus.quadratic_ideals(3, include_zero=False)) == 63


def test_random_sample_is_deterministic_and_distinct():
    a = corpus.random_quadratic_ideals(4, 50, seed=3)
    b = corpus.random_quadratic_ideals(4, 50, seed=3)
    assert a == b
    assert len({I.gens for I in a}) == 50
    assert all(I.is_quadratic() for I in a)


def test_exhaustive_cap():
    try:
        corpus.quadratic_ideals(5)
    except corpus.CorpusTooLarge:
        pass
    else:
        raise AssertionError("expected CorpusTooLarge")


def test_golod_growth_corpus():
    ss = [I for I in corpus.quadratic_ideals(3) if len(I.gens) >= 2 and is_strongly_stable(I)]
    assert len(ss) == 6


def test_r6_r8_leading_terms():
    assert corpus.R6.series(3).as_ints()[:2] == [1, 5]
    assert deviations_from_series(corpus.R8, 2)[1] == 5


# --- verification suites ---

SMALL = corpus.quadratic_ideals(3)


def test_small_suites_pass():
    for rep in (
        verify.verify_lex(SMALL),
        verify.verify_serre(SMALL),
        verify.verify_methods(SMALL, 20),
        verify.verify_base(SMALL, 20),
    ):
        assert rep.passed, rep.format()
        assert rep.checked > 0


def test_graph_growth_small_range():
    rep = verify.verify_graph_growth(3, 6)
    assert rep.passed and rep.checked == 8


def test_stanley_reisner_small():
    rep = verify.verify_stanley_reisner(4)
    assert rep.passed and rep.checked == 1 + 2 + 8 + 64


def test_golod_growth_verdicts_without_monotone():
    rep = verify.verify_golod_growth(SMALL, require_monotone=False)
    assert rep.passed and rep.checked == 6


def test_report_records_first_counterexample():
    rep = verify.SuiteReport("x")
    rep.fail(a=1)
    rep.fail(a=2)
    assert rep.counterexample == {"a": 1}
    assert rep.to_json()["verdict"] == "FAIL"


def test_lex_poincare_of_regular_sequence():
    L, P = verify.lex_poincare(minimalize([(2, 0), (0, 2)], 2))
    assert L.gens == ((2, 0), (1, 1), (0, 3))
    assert P.provenance == "Golod"


# --- reproductions ---

def test_reproductions_match():
    for name in ("r6r8", "remark-eps3", "complete-graphs", "cycles-paths"):
        rep = reproduce.EXAMPLES[name]()
        assert rep.passed, rep.format()
    assert reproduce.p4m(2).passed


def test_mobius_formula_matches_log_extraction():
    # K_3 has h = 1 + 2z; eps_1 = 3 is the embedding dimension, outside the formula
    eps = deviations_from_series(poincare_koszul(hilbert_data(edge_ideal(complete(3)))), 12)
    assert list(eps)[:6] == [3, 3, 2, 3, 6, 11]
    assert [reproduce.mobius_formula(2, i) for i in range(2, 13)] == list(eps)[1:]
