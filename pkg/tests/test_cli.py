import json

import pytest

from gradedev.cli import EXIT_CAP, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def eps_column(out):
    rows = [line.split() for line in out.splitlines() if line[:2].strip().isdigit()]
    return [int(r[1]) for r in rows]


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "--ideal", "x1^2,x1*x2", "--vars", "2", "--trunc", "5", "--no-header")
    assert code == EXIT_OK
    assert "HF(0..5): 1, 2, 1, 1, 1, 1" in out


def test_betti_json(capsys):
    code, out, _ = run(capsys, "betti", "--ideal", "x1^2,x1*x2", "--vars", "2", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["totals"] == [1, 2, 1]
    assert data["golod_certificate"] == "StronglyStable"
    assert data["header"].startswith("# gradedev")


def test_lex(capsys):
    code, out, _ = run(capsys, "lex", "--ideal", "x1^2,x2^2", "--vars", "2", "--no-header")
    assert code == EXIT_OK and "lex:   (x1^2, x1*x2, x2^3)" in out


def test_deviations_user_series(capsys):
    code, out, _ = run(capsys, "deviations", "--poincare", "1/((z-1)*(z^6-3*z^5+z^4+5*z^3-5*z^2+4*z-1))",
                       "--trunc", "10", "--no-header")
    assert code == EXIT_OK
    assert eps_column(out)[3] == 16


def test_deviations_ci_and_koszul(capsys):
    _, out, _ = run(capsys, "deviations", "--ci", "--vars", "2", "--codim", "2", "--trunc", "4", "--no-header")
    assert eps_column(out) == [2, 2, 0, 0]
    _, out, _ = run(capsys, "deviations", "--koszul", "--graph", "complete:3", "--trunc", "6", "--no-header")
    assert eps_column(out) == [3, 3, 2, 3, 6, 11]


def test_deviations_golod_needs_certificate(capsys):
    code, _, err = run(capsys, "deviations", "--golod", "--graph", "cycle:5", "--trunc", "6")
    assert code == EXIT_INPUT and "NoCertificate" in err
    code, out, err = run(capsys, "deviations", "--golod", "--graph", "cycle:5", "--trunc", "6", "--force", "--no-header")
    assert code == EXIT_OK
    assert "CONDITIONAL" in out and "CONDITIONAL" in err


def test_koszul_refuses_non_quadratic(capsys):
    code, _, err = run(capsys, "deviations", "--koszul", "--ideal", "x1^3", "--vars", "1")
    assert code == EXIT_INPUT


def test_input_errors(capsys):
    assert run(capsys, "hilbert", "--ideal", "x1^2", "--vars", "2", "--trunc", "3")[0] == EXIT_INPUT
    assert run(capsys, "hilbert", "--ideal", "x9", "--vars", "2")[0] == EXIT_INPUT
    assert run(capsys, "hilbert")[0] == EXIT_INPUT
    assert run(capsys, "deviations", "--ci", "--vars", "2")[0] == EXIT_INPUT


def test_verify_suites(capsys):
    assert run(capsys, "verify", "lex", "--vars", "3", "--exhaustive", "--no-header")[0] == EXIT_OK
    assert run(capsys, "verify", "base", "--vars", "2", "--no-header")[0] == EXIT_OK
    code, out, _ = run(capsys, "verify", "growth", "--graph", "complete:5", "--window", "25:30", "--tol", "1e-6",
                       "--no-header")
    assert code == EXIT_OK and "PASS" in out


def test_verify_growth_refuses_ci(capsys):
    code, _, err = run(capsys, "verify", "growth", "--ideal", "x1^2,x2^2", "--vars", "2")
    assert code == EXIT_INPUT and "NoGrowthProfile" in err


def test_verify_golod_growth_monotone_flag(capsys):
    assert run(capsys, "verify", "golodgrowth", "--vars", "3", "--no-header")[0] == EXIT_OK
    assert run(capsys, "verify", "golodgrowth", "--vars", "3", "--require-monotone", "--no-header")[0] == EXIT_VIOLATION


def test_resource_cap(capsys):
    assert run(capsys, "verify", "lex", "--vars", "5", "--exhaustive")[0] == EXIT_CAP


def test_reproduce(capsys):
    code, out, _ = run(capsys, "reproduce", "remark-eps3", "--no-header")
    assert code == EXIT_OK and "MATCH" in out


def test_probe(capsys):
    code, out, _ = run(capsys, "probe", "--nmax", "4", "--no-header")
    assert code == EXIT_OK and "graphs examined (n <= 4)" in out


def test_output_is_deterministic_without_header(capsys):
    argv = ("deviations", "--koszul", "--graph", "cycle:5", "--trunc", "12", "--format", "json", "--no-header")
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
    assert "header" not in json.loads(a)


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.conf"
    cfg.write_text("trunc = 5\nvars = 2\n")
    code, out, _ = run(capsys, "hilbert", "--ideal", "x1^2", "--config", str(cfg), "--no-header")
    assert code == EXIT_OK and "HF(0..5)" in out
    # explicit flags override the file
    code, out, _ = run(capsys, "hilbert", "--ideal", "x1^2", "--config", str(cfg), "--trunc", "6", "--no-header")
    assert "HF(0..6)" in out
    cfg.write_text("bogus = 1\n")
    assert run(capsys, "hilbert", "--ideal", "x1^2", "--vars", "2", "--config", str(cfg))[0] == EXIT_INPUT


@pytest.mark.parametrize("flag", ["--help", "--version"])
def test_help_and_version_exit_zero(capsys, flag):
    assert run(capsys, flag)[0] == EXIT_OK
