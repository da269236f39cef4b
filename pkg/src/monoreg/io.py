"""Parsing and serialization for ideals, complexes and graphs.

Ideal text grammar: comma-separated monomials, each a ``*``-product of
factors ``x<k>`` or ``x<k>^<d>`` with 1-based ``k``; ``1`` is the unit
monomial and a lone ``0`` is the zero ideal. JSON form:
``{"n": 3, "gens": [[1, 3, 0], [0, 1, 5], [6, 0, 1]]}``.
"""

from __future__ import annotations

import json
import os
import re
from fractions import Fraction
from typing import Any

from .digraph import WeightedOrientedGraph
from .exceptions import GraphInvariantError, ParseError
from .monomial import MonomialIdeal
from .simplicial import SimplicialComplex

_TOKEN = re.compile(r"\s*(?:(?P<var>x(?P<idx>\d+))|(?P<num>\d+)|(?P<op>[*^,])|(?P<bad>\S))")


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _tokens(text: str):
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            return
        start = m.end() - len(m.group(0).lstrip())
        if m.group("bad") is not None:
            raise ParseError(f"unexpected character {m.group('bad')!r}", *_position(text, start))
        if m.group("var") is not None:
            yield "var", int(m.group("idx")), start
        elif m.group("num") is not None:
            yield "num", int(m.group("num")), start
        else:
            yield m.group("op"), None, start
        pos = m.end()


def _parse_text(text: str) -> list[dict[int, int]]:
    toks = list(_tokens(text))
    end = len(text)
    k = 0

    def peek():
        return toks[k] if k < len(toks) else ("eof", None, end)

    def fail(msg, at):
        raise ParseError(msg, *_position(text, at))

    if len(toks) == 1 and toks[0][0] == "num" and toks[0][1] == 0:
        return []
    monomials = []
    while True:
        factors: dict[int, int] = {}
        while True:
            kind, val, at = peek()
            if kind == "var":
                if val < 1:
                    fail(f"variable x{val}: variables are 1-based", at)
                k += 1
                exp = 1
                if peek()[0] == "^":
                    k += 1
                    kind2, val2, at2 = peek()
                    if kind2 != "num":
                        fail("expected an exponent after '^'", at2)
                    k += 1
                    exp = val2
                factors[val] = factors.get(val, 0) + exp
            elif kind == "num" and val == 1:
                k += 1
            else:
                fail("expected a variable like x1 or the unit monomial 1", at)
            if peek()[0] == "*":
                k += 1
                continue
            break
        monomials.append(factors)
        kind, _, at = peek()
        if kind == "eof":
            return monomials
        if kind != ",":
            fail(f"expected ',' or end of input, found {kind!r}", at)
        k += 1


def parse_ideal(text: str, n: int | None = None) -> MonomialIdeal:
    """Parse the text grammar or the JSON form.

    ``n`` defaults to the largest variable index that appears.
    """
    if text.lstrip().startswith("{"):
        return ideal_from_json(_load_json(text), n)
    if not text.strip():
        raise ParseError("empty ideal description")
    monomials = _parse_text(text)
    top = max((v for mono in monomials for v in mono), default=0)
    if n is None:
        n = top
    elif top > n:
        raise ParseError(f"variable x{top} exceeds the declared {n} variables")
    gens = tuple(tuple(mono.get(j, 0) for j in range(1, n + 1)) for mono in monomials)
    return MonomialIdeal(n, gens)


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def ideal_from_json(data: Any, n: int | None = None) -> MonomialIdeal:
    if not isinstance(data, dict) or "gens" not in data:
        raise ParseError("ideal JSON must be an object with a 'gens' list")
    gens = data["gens"]
    if not isinstance(gens, list) or not all(isinstance(g, list) and all(isinstance(e, int) for e in g) for g in gens):
        raise ParseError("'gens' must be a list of integer lists")
    n = data.get("n", n)
    if n is None:
        if not gens:
            raise ParseError("'n' is required for an ideal without generators")
        n = len(gens[0])
    if any(len(g) != n for g in gens):
        raise ParseError(f"every generator must have length n = {n}")
    if any(e < 0 for g in gens for e in g):
        raise ParseError("exponents must be non-negative")
    return MonomialIdeal(n, tuple(tuple(g) for g in gens))


def ideal_to_json(ideal: MonomialIdeal) -> dict:
    return {"n": ideal.n, "gens": [list(g) for g in ideal.gens]}


def read_argument(value: str) -> str:
    """Return the file contents if ``value`` names a file, else ``value`` itself."""
    if os.path.isfile(value):
        with open(value, encoding="utf-8") as fh:
            return fh.read()
    return value


def load_ideal(value: str, n: int | None = None) -> MonomialIdeal:
    return parse_ideal(read_argument(value), n)


def parse_exponent(text: str, n: int | None = None) -> tuple[int, ...]:
    try:
        a = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise ParseError(f"exponent must be comma-separated integers, got {text!r}") from None
    if n is not None and len(a) != n:
        raise ParseError(f"exponent has {len(a)} entries, expected {n}")
    if any(e < 0 for e in a):
        raise ParseError("exponent entries must be non-negative")
    return a


def parse_complex(text: str) -> SimplicialComplex:
    data = _load_json(text)
    if not isinstance(data, dict) or "n" not in data or "facets" not in data:
        raise ParseError("complex JSON must have 'n' and 'facets'")
    return SimplicialComplex(int(data["n"]), tuple(tuple(f) for f in data["facets"]))


def graph_from_json(data: Any, normalize_sources: bool = False) -> WeightedOrientedGraph:
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ParseError("graph JSON must have 'n' and 'edges'")
    n = data["n"]
    edges = data["edges"]
    if not isinstance(n, int) or n < 1:
        raise ParseError("'n' must be a positive integer")
    if not isinstance(edges, list) or not all(isinstance(e, list) and len(e) == 2 for e in edges):
        raise ParseError("'edges' must be a list of [tail, head] pairs")
    for i, j in edges:
        if not (isinstance(i, int) and isinstance(j, int)) or not (1 <= i <= n and 1 <= j <= n):
            raise GraphInvariantError("vertex-range", f"edge [{i}, {j}] has an endpoint outside 1..{n}")
    seen = set()
    for i, j in edges:
        if (i, j) in seen:
            raise GraphInvariantError("double-edge", f"edge [{i}, {j}] listed twice")
        seen.add((i, j))
    weights = data.get("weights", {})
    if not isinstance(weights, dict):
        raise ParseError("'weights' must be an object mapping vertex to weight")
    try:
        weights = {int(k): int(v) for k, v in weights.items()}
    except (TypeError, ValueError):
        raise ParseError("weights must map integer vertices to integer weights") from None
    graph = WeightedOrientedGraph.build(n, edges, weights, normalize_sources=normalize_sources)
    if "vertices" in data:
        graph = WeightedOrientedGraph(n, graph.edges, graph.weights, frozenset(data["vertices"]))
    return graph


def parse_graph(text: str, normalize_sources: bool = False) -> WeightedOrientedGraph:
    return graph_from_json(_load_json(text), normalize_sources)


def load_graph(value: str, normalize_sources: bool = False) -> WeightedOrientedGraph:
    return parse_graph(read_argument(value), normalize_sources)


def fraction_str(x: Fraction) -> str:
    """Exact rational as ``p/q`` (``p`` when integral)."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
