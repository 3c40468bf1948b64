"""Command-line interface: ``gradedev <command> [options]``.

Exit codes: 0 pass, 1 property violation, 2 input error, 3 resource cap.
"""
from __future__ import annotations

import argparse
import configparser
import json
import sys
import warnings
from datetime import datetime, timezone

from . import __version__, corpus, reproduce, verify
from .asymptotics import HypothesisViolated, MinModulusNotCertified, NoGrowthProfile
from .betti import LatticeTooLarge, betti_table, golod_certificate
from .exact_arith import DEFAULT_ORDER, ArithmeticError_
from .formats import ParseError, parse_graph, parse_ideal, parse_rational
from .graphs import TooManyVertices, edge_ideal, min_modulus_probe
from .monomial_ideals import MonomialIdeal, hilbert_data, hilbert_series, lex_segment
from .poincare import (
    COMPLETE_INTERSECTION,
    USER_SUPPLIED,
    DeviationError,
    NoCertificate,
    PoincareSeries,
    deviations_from_series,
    poincare_ci,
    poincare_golod,
    poincare_koszul,
)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(ValueError):
    pass


# --- argument handling ---

def _trunc(text: str) -> int:
    n = int(text)
    if n < 4:
        raise argparse.ArgumentTypeError("--trunc must be at least 4")
    return n


def _vars(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("--vars must be at least 1")
    return n


def _window(text: str) -> tuple[int, int]:
    a, sep, b = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError("window must look like i0:i1")
    lo, hi = int(a), int(b)
    if not 1 <= lo <= hi:
        raise argparse.ArgumentTypeError("window needs 1 <= i0 <= i1")
    return lo, hi


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-header", action="store_true", help="omit the timestamp header")
    p.add_argument("--config", help="key=value file supplying option defaults")
    p.add_argument("--trunc", type=_trunc, default=DEFAULT_ORDER, help="truncation order N (>= 4)")
    return p


def _input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ideal", help='monomial ideal, e.g. "x1^2,x1*x2"')
    p.add_argument("--vars", type=_vars, help="number of variables n")
    p.add_argument("--graph", help="graph spec, e.g. cycle:5 or 'n=3; edges=1-2,2-3'")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="gradedev", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"gradedev {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert series data of S/I")
    _input_flags(p)

    p = sub.add_parser("betti", parents=[common], help="graded Betti table of S/I")
    _input_flags(p)

    p = sub.add_parser("lex", parents=[common], help="lex-segment ideal with the same Hilbert function")
    _input_flags(p)
    p.add_argument("--max-degree", type=int, help="explicit degree bound")

    p = sub.add_parser("deviations", parents=[common], help="deviations eps_1..eps_N")
    _input_flags(p)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--golod", action="store_true", help="Golod closed form (needs a certificate)")
    src.add_argument("--koszul", action="store_true", help="Koszul closed form (quadratic monomial ideals)")
    src.add_argument("--ci", action="store_true", help="complete intersection of codimension --codim")
    src.add_argument("--poincare", metavar="NUM/DEN", help="user-supplied rational Poincaré series")
    p.add_argument("--codim", type=int, help="codimension for --ci")
    p.add_argument("--force", action="store_true", help="use the Golod formula without a certificate")

    p = sub.add_parser("verify", parents=[common], help="property-verification suites")
    p.add_argument("suite", choices=verify.SUITES)
    _input_flags(p)
    p.add_argument("--quadratic", action="store_true", default=True, help="quadratic monomial corpus (default)")
    p.add_argument("--exhaustive", action="store_true", help="every quadratic ideal in --vars variables")
    p.add_argument("--sample", type=int, help="random sample of this many ideals")
    p.add_argument("--seed", type=int, default=corpus.DEFAULT_SEED)
    p.add_argument("--window", type=_window, help="growth window i0:i1")
    p.add_argument("--tol", type=float, help="growth tolerance")
    p.add_argument("--require-monotone", action="store_true", help="growth: also demand a monotone tail")
    p.add_argument("--nmin", type=int, default=3, help="graphgrowth: smallest n")
    p.add_argument("--nmax", type=int, help="graphgrowth / stanleyreisner: largest n")
    p.add_argument("--force", action="store_true")

    p = sub.add_parser("reproduce", parents=[common], help="reproduce a published example")
    p.add_argument("example", choices=sorted(reproduce.EXAMPLES))
    p.add_argument("--m", type=int, default=3, help="p4m: number of P4 components")

    p = sub.add_parser("probe", parents=[common], help="minimum-modulus root probe over small graphs")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--tol", type=float, default=1e-8, help="relative tie tolerance")
    return parser


def _read_config(path: str) -> dict[str, str]:
    cp = configparser.ConfigParser()
    try:
        with open(path, encoding="utf-8") as fh:
            cp.read_string("[gradedev]\n" + fh.read())
    except (OSError, configparser.Error) as exc:
        raise InputError(f"cannot read config {path}: {exc}") from None
    return {k.replace("-", "_"): v.strip().strip('"') for k, v in cp["gradedev"].items()}


def parse_args(argv) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        # config values become defaults; explicit flags still win
        conf = _read_config(args.config)
        sub = parser._subparsers._group_actions[0].choices[args.command]
        known = {a.dest: a for a in sub._actions}
        defaults = {}
        for key, val in conf.items():
            if key not in known:
                raise InputError(f"unknown config key {key!r} for {args.command}")
            action = known[key]
            if action.type is not None:
                try:
                    val = action.type(val)
                except (argparse.ArgumentTypeError, ValueError) as exc:
                    raise InputError(f"bad config value for {key}: {exc}") from None
            elif isinstance(action.default, bool):
                val = val.lower() in ("1", "true", "yes", "on")
            defaults[key] = val
        sub.set_defaults(**defaults)
        args = parser.parse_args(argv)
    return args


def _ideal_from_args(args) -> MonomialIdeal:
    if args.graph and args.ideal is not None:
        raise InputError("give either --ideal or --graph, not both")
    if args.graph:
        return edge_ideal(parse_graph(args.graph))
    if args.ideal is not None:
        if args.vars is None:
            raise InputError("--ideal needs --vars")
        return parse_ideal(args.ideal, args.vars)
    raise InputError("an --ideal (with --vars) or a --graph is required")


def _corpus_from_args(args) -> list[MonomialIdeal]:
    n = args.vars or 3
    if args.sample:
        return corpus.random_quadratic_ideals(n, args.sample, args.seed)
    if args.exhaustive or n <= 3:
        return corpus.quadratic_ideals(n)
    return corpus.random_quadratic_ideals(n, corpus.DEFAULT_SAMPLE, args.seed)


# --- output ---

def _header(args) -> str:
    stamp = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    return f"# gradedev {__version__} {args.command} {stamp}"


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        if not args.no_header:
            payload = {"header": _header(args), **payload}
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        if not args.no_header:
            print(_header(args))
        print(text)


def _series_text(xs) -> str:
    return ", ".join(str(x) for x in xs)


# --- commands ---

def cmd_hilbert(args) -> int:
    I = _ideal_from_args(args)
    hd = hilbert_data(I)
    hf = hilbert_series(I, args.trunc)
    payload = {"ideal": I.to_json(), **hd.to_json(), "hilbert_function": hf}
    text = "\n".join([
        f"ideal: {I or '(0)'} in {I.n} variables",
        f"K-polynomial: {hd.k_polynomial}",
        f"h-polynomial: {hd.h_polynomial}",
        f"dimension: {hd.dimension}",
        f"HF(0..{args.trunc}): {_series_text(hf)}",
    ])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_betti(args) -> int:
    I = _ideal_from_args(args)
    table = betti_table(I)
    cert = golod_certificate(I)
    payload = {"ideal": I.to_json(), "betti": table.to_json(), "totals": table.totals(),
               "golod_certificate": cert.status}
    text = f"ideal: {I or '(0)'}\n{table.format()}\nGolod certificate: {cert.status}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_lex(args) -> int:
    I = _ideal_from_args(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        L = lex_segment(I, args.max_degree)
    notes = [str(w.message) for w in caught]
    payload = {"ideal": I.to_json(), "lex": L.to_json(), "warnings": notes}
    text = f"ideal: {I or '(0)'}\nlex:   {L or '(0)'}" + "".join(f"\nwarning: {w}" for w in notes)
    _emit(args, payload, text)
    return EXIT_OK


def _deviation_source(args) -> tuple[PoincareSeries, int | None, str]:
    if args.poincare:
        P = PoincareSeries(parse_rational(args.poincare), USER_SUPPLIED)
        return P, None, "user-supplied closed form"
    if args.ci:
        if args.vars is None or args.codim is None:
            raise InputError("--ci needs --vars and --codim")
        return poincare_ci(args.vars, args.codim), args.vars, COMPLETE_INTERSECTION
    I = _ideal_from_args(args)
    if args.koszul:
        if not I.is_quadratic():
            raise NoCertificate("--koszul is certified only for quadratic monomial ideals")
        return poincare_koszul(hilbert_data(I), args.trunc), I.n, "Koszul (quadratic monomial ideal)"
    cert = golod_certificate(I)
    if I.is_zero():
        raise InputError("the zero ideal has no Golod closed form; use --ci --codim 0")
    if not cert.certified and not args.force:
        raise NoCertificate("Golod certificate is Unknown; rerun with --force for CONDITIONAL values")
    P = poincare_golod(I.n, betti_table(I).betti_totals())
    if not cert.certified:
        print("warning: no Golod certificate; values below are CONDITIONAL", file=sys.stderr)
        return PoincareSeries(P.closed_form, P.provenance, "CONDITIONAL"), I.n, "Golod (CONDITIONAL)"
    return P, I.n, f"Golod (certificate {cert.status})"


def cmd_deviations(args) -> int:
    P, _, label = _deviation_source(args)
    eps = deviations_from_series(P, args.trunc)
    payload = {"closed_form": P.closed_form.to_json(), "provenance": P.provenance, "certificate": label,
               "note": P.note, "deviations": eps.to_json()}
    lines = [f"closed form: {P.closed_form}", f"provenance: {label}", " i  eps_i"]
    lines += [f"{i:>2}  {e}" for i, e in enumerate(eps, start=1)]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _growth_input(args):
    order = args.window[1]
    if args.graph or args.ideal is not None:
        I = _ideal_from_args(args)
        eps, profile = verify._ideal_growth(I, order, force=args.force)
        return str(I), eps, profile
    raise InputError("verify growth needs --graph or --ideal")


def cmd_verify(args) -> int:
    suite = args.suite
    if suite == "lex":
        rep = verify.verify_lex(_corpus_from_args(args), order=min(args.trunc, 12))
    elif suite == "serre":
        rep = verify.verify_serre(_corpus_from_args(args), args.trunc)
    elif suite == "methods":
        rep = verify.verify_methods(_corpus_from_args(args), args.trunc)
    elif suite == "base":
        rep = verify.verify_base(_corpus_from_args(args), args.trunc)
    elif suite == "golodgrowth":
        rep = verify.verify_golod_growth(
            _corpus_from_args(args), args.window or (40, 60), args.tol or 0.1,
            require_monotone=args.require_monotone,
        )
    elif suite == "growth":
        args.window = args.window or (25, 30)
        label, eps, profile = _growth_input(args)
        rep = verify.verify_growth_single(label, eps, profile, args.window, args.tol or 1e-3,
                                          require_monotone=args.require_monotone)
    elif suite == "graphgrowth":
        rep = verify.verify_graph_growth(args.nmin, args.nmax or 12, args.window or (30, 40), args.tol or 1e-2)
    else:
        rep = verify.verify_stanley_reisner(args.nmax or 6)
    _emit(args, rep.to_json(), rep.format())
    return EXIT_OK if rep.passed else EXIT_VIOLATION


def cmd_reproduce(args) -> int:
    fn = reproduce.EXAMPLES[args.example]
    rep = fn(m=args.m) if args.example == "p4m" else fn()
    _emit(args, rep.to_json(), rep.format())
    return EXIT_OK if rep.passed else EXIT_VIOLATION


def cmd_probe(args) -> int:
    rep = min_modulus_probe(args.nmax, args.tol)
    _emit(args, rep.to_json(), rep.format())
    return EXIT_OK


COMMANDS = {
    "hilbert": cmd_hilbert,
    "betti": cmd_betti,
    "lex": cmd_lex,
    "deviations": cmd_deviations,
    "verify": cmd_verify,
    "reproduce": cmd_reproduce,
    "probe": cmd_probe,
}

INPUT_ERRORS = (
    InputError, ParseError, NoCertificate, DeviationError, ArithmeticError_, HypothesisViolated,
    MinModulusNotCertified, NoGrowthProfile, ValueError,
)
CAP_ERRORS = (LatticeTooLarge, TooManyVertices, corpus.CorpusTooLarge)


def main(argv=None) -> int:
    try:
        args = parse_args(argv)
        return COMMANDS[args.command](args)
    except CAP_ERRORS as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except INPUT_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # argparse usage errors
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
