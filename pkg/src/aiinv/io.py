"""Text and JSON formats for ideals and complexes.

Ideal text::

    vars: 3
    1 1 1
    2 0 0

Complex text (vertices are 1-based; ``{}`` is the empty face, no facet
lines means the void complex)::

    vertices: 3
    1 2
    2 3

JSON: ``{"vars": s, "gens": [[...], ...]}`` and
``{"vertices": s, "facets": [[...], ...] | [] | null}``.
"""

from __future__ import annotations

import json
from typing import Optional

from .complexes import SimplicialComplex
from .monomials import MonomialIdeal
from .verify import complex_to_json, ideal_to_json

__all__ = [
    "ParseError", "parse_ideal", "parse_complex", "read_ideal", "read_complex",
    "ideal_to_json", "complex_to_json", "ideal_from_json", "complex_from_json",
    "format_ideal", "format_complex",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line, self.column = line, column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


def _content_lines(text: str):
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield n, raw, line


def _header(lines, key: str) -> int:
    try:
        n, raw, line = next(lines)
    except StopIteration:
        raise ParseError(f"missing '{key}: <count>' header") from None
    name, sep, value = line.partition(":")
    if not sep or name.strip() != key:
        raise ParseError(f"expected '{key}: <count>' header", n, 1)
    try:
        count = int(value)
    except ValueError:
        col = raw.index(":") + 1 + (len(value) - len(value.lstrip())) + 1
        raise ParseError(f"bad {key} count {value.strip()!r}", n, col) from None
    if count < 0:
        raise ParseError(f"{key} count must be nonnegative", n)
    return count


def _ints(n: int, raw: str, line: str) -> list[int]:
    out = []
    col = 0
    for tok in line.split():
        col = raw.index(tok, col)
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"not an integer: {tok!r}", n, col + 1) from None
        col += len(tok)
    return out


def ideal_from_json(obj) -> MonomialIdeal:
    try:
        s = int(obj["vars"])
        gens = obj["gens"]
        return MonomialIdeal(s, gens)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad ideal JSON: {exc}") from None


def complex_from_json(obj) -> SimplicialComplex:
    try:
        s = int(obj["vertices"])
        facets = obj["facets"]
        if facets is None:
            return SimplicialComplex.void(s)
        if not facets:
            return SimplicialComplex.irrelevant(s)
        for F in facets:
            if any(not 1 <= int(v) <= s for v in F):
                raise ValueError(f"vertex outside 1..{s} in {F}")
        return SimplicialComplex.from_facets(s, [[int(v) - 1 for v in F] for F in facets])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad complex JSON: {exc}") from None


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def parse_ideal(text: str) -> MonomialIdeal:
    if text.lstrip().startswith("{"):
        return ideal_from_json(_load_json(text))
    lines = _content_lines(text)
    s = _header(lines, "vars")
    gens = []
    for n, raw, line in lines:
        g = _ints(n, raw, line)
        if len(g) != s:
            raise ParseError(f"expected {s} exponents, got {len(g)}", n, 1)
        bad = next((i for i, e in enumerate(g) if e < 0), None)
        if bad is not None:
            raise ParseError("negative exponent", n, raw.index(line.split()[bad]) + 1)
        gens.append(g)
    return MonomialIdeal(s, gens)


def parse_complex(text: str) -> SimplicialComplex:
    if text.lstrip().startswith("{"):
        return complex_from_json(_load_json(text))
    lines = _content_lines(text)
    s = _header(lines, "vertices")
    facets = []
    seen = False
    for n, raw, line in lines:
        seen = True
        if line.strip() == "{}":
            facets.append([])
            continue
        F = _ints(n, raw, line)
        for v in F:
            if not 1 <= v <= s:
                raise ParseError(f"vertex {v} outside 1..{s}", n, raw.index(str(v)) + 1)
        facets.append([v - 1 for v in F])
    if not seen:
        return SimplicialComplex.void(s)
    return SimplicialComplex.from_facets(s, facets)


def read_ideal(path: str) -> MonomialIdeal:
    with open(path) as fh:
        return parse_ideal(fh.read())


def read_complex(path: str) -> SimplicialComplex:
    with open(path) as fh:
        return parse_complex(fh.read())


def format_ideal(I: MonomialIdeal) -> str:
    lines = [f"vars: {I.ambient}"]
    lines += [" ".join(map(str, g)) for g in I.gens]
    return "\n".join(lines) + "\n"


def format_complex(delta: SimplicialComplex) -> str:
    lines = [f"vertices: {delta.vertices}"]
    for F in delta.facet_sets():
        lines.append(" ".join(str(v + 1) for v in F) if F else "{}")
    return "\n".join(lines) + "\n"
