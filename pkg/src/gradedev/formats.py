"""Text and JSON formats for ideals, polynomials and graphs."""
from __future__ import annotations

import ast
import re

from .exact_arith import IntPolynomial, RationalFunction


class ParseError(ValueError):
    pass


_VAR = re.compile(r"^([A-Za-z]+)(\d+)$")
_BARE = "xyzwuv"


def _parse_var(name: str, n: int) -> int:
    m = _VAR.match(name)
    if m:
        idx = int(m.group(2))
    elif len(name) == 1 and name in _BARE:
        idx = _BARE.index(name) + 1
    else:
        raise ParseError(f"unknown variable {name!r}")
    if not 1 <= idx <= n:
        raise ParseError(f"variable {name!r} outside 1..{n}")
    return idx - 1


def parse_monomial(text: str, n: int) -> tuple[int, ...]:
    exps = [0] * n
    for factor in text.split("*"):
        factor = factor.strip()
        if not factor:
            raise ParseError(f"empty factor in {text!r}")
        if factor == "1":
            continue
        name, _, power = factor.partition("^")
        try:
            e = int(power) if power else 1
        except ValueError:
            raise ParseError(f"bad exponent in {factor!r}") from None
        exps[_parse_var(name.strip(), n)] += e
    return tuple(exps)


def parse_ideal(text: str, n: int):
    """'x1^2, x1*x2, x3^2' -> MonomialIdeal. The empty string is the zero ideal."""
    from .monomial_ideals import minimalize

    terms = [t for t in (s.strip() for s in text.split(",")) if t]
    return minimalize([parse_monomial(t, n) for t in terms], n)


def format_monomial(m) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"


def format_ideal(I) -> str:
    if not I.gens:
        return "(0)"
    return "(" + ", ".join(format_monomial(g) for g in I.gens) + ")"


def _eval_poly(node) -> IntPolynomial:
    if isinstance(node, ast.Expression):
        return _eval_poly(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return IntPolynomial((node.value,))
    if isinstance(node, ast.Name):
        if node.id != "z":
            raise ParseError(f"unknown symbol {node.id!r}; polynomials are in z")
        return IntPolynomial.z()
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_poly(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            exp = node.right
            if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int) and exp.value >= 0):
                raise ParseError("exponents must be nonnegative integer literals")
            return _eval_poly(node.left) ** exp.value
        left, right = _eval_poly(node.left), _eval_poly(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
    raise ParseError(f"unsupported syntax in polynomial: {ast.dump(node)[:60]}")


def parse_polynomial(text: str) -> IntPolynomial:
    """Integer polynomial in z written with + - * ^ and parentheses."""
    try:
        tree = ast.parse(text.replace("^", "**").strip(), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse polynomial {text!r}: {exc.msg}") from None
    return _eval_poly(tree)


def _split_top_level(text: str, sep: str) -> list[str]:
    depth, parts, cur = 0, [], []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_rational(text: str) -> RationalFunction:
    """'num / den'; everything right of the top-level slash is the denominator,
    so '1 / (z-1)*(z^2+1)' means 1 / ((z-1)(z^2+1))."""
    parts = _split_top_level(text, "/")
    if len(parts) > 2:
        raise ParseError("expected a single top-level '/'")
    num = parse_polynomial(parts[0])
    den = parse_polynomial(parts[1]) if len(parts) == 2 else IntPolynomial.one()
    return RationalFunction(num, den)


def parse_graph(text: str):
    """'n=5; edges=1-2,2-3' or a named constructor: path:n, cycle:n,
    complete:n, star:k (K_{1,k}), empty:n, disjoint:<spec>xm."""
    from . import graphs

    text = text.strip()
    if text.startswith("disjoint:"):
        body = text[len("disjoint:"):]
        spec, sep, copies = body.rpartition("x")
        if not sep or not copies.isdigit():
            raise ParseError(f"expected disjoint:<spec>x<m>, got {text!r}")
        return graphs.disjoint_union(parse_graph(spec), int(copies))
    named = {
        "path": graphs.path,
        "cycle": graphs.cycle,
        "complete": graphs.complete,
        "star": graphs.star,
        "empty": graphs.empty,
    }
    kind, sep, arg = text.partition(":")
    if sep and kind in named:
        try:
            return named[kind](int(arg))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    fields = {}
    for part in text.split(";"):
        key, eq, val = part.partition("=")
        if not eq:
            raise ParseError(f"cannot parse graph spec {text!r}")
        fields[key.strip()] = val.strip()
    if "n" not in fields:
        raise ParseError("graph spec needs n=<vertices>")
    edges = []
    for e in filter(None, (s.strip() for s in fields.get("edges", "").split(","))):
        a, dash, b = e.partition("-")
        if not dash:
            raise ParseError(f"bad edge {e!r}")
        edges.append((int(a), int(b)))
    try:
        return graphs.Graph.of(int(fields["n"]), edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_graph(G) -> str:
    edges = ",".join(f"{a}-{b}" for a, b in sorted(G.edges))
    return f"n={G.n}; edges={edges}"
