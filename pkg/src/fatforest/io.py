"""Text formats for complexes and graphs.

Facet lists::

    n=5          # optional header; defaults to the largest label
    1 2
    2 3 4
    5

A line holding only ``-`` is the empty face, so ``n=3`` followed by ``-``
is the complex ``{∅}``; a header with no facet lines is the void complex.
Edge lists use the same header and comment rules with one ``u v`` pair per
line.
"""

from __future__ import annotations

from .complex import Graph, SimplicialComplex


class ParseError(ValueError):
    pass


def _lines(text: str):
    n = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("n="):
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate n= header")
            try:
                n = int(line[2:])
            except ValueError:
                raise ParseError(f"line {lineno}: bad header {line!r}") from None
            if n < 0:
                raise ParseError(f"line {lineno}: negative n")
            continue
        yield lineno, line, n
    yield None, None, n


def parse_facets(text: str) -> SimplicialComplex:
    facets: list[list[int]] = []
    n = None
    for lineno, line, n in _lines(text):
        if line is None:
            break
        if line == "-":
            facets.append([])
            continue
        try:
            f = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if any(v < 1 for v in f):
            raise ParseError(f"line {lineno}: vertex labels must be positive")
        facets.append(f)
    top = max((v for f in facets for v in f), default=0)
    if n is None:
        n = top
    elif top > n:
        raise ParseError(f"vertex {top} exceeds n={n}")
    return SimplicialComplex(n, facets)


def parse_edges(text: str) -> Graph:
    edges: list[tuple[int, int]] = []
    n = None
    for lineno, line, n in _lines(text):
        if line is None:
            break
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 1 or v < 1 or u == v:
            raise ParseError(f"line {lineno}: bad edge {line!r}")
        edges.append((u, v))
    top = max((max(e) for e in edges), default=0)
    if n is None:
        n = top
    elif top > n:
        raise ParseError(f"vertex {top} exceeds n={n}")
    return Graph(n, frozenset(edges))


def format_facets(c: SimplicialComplex) -> str:
    out = [f"n={c.n}"]
    for f in c.facets:
        out.append(" ".join(map(str, f)) if f else "-")
    return "\n".join(out) + "\n"


def format_edges(g: Graph) -> str:
    return "\n".join([f"n={g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges()]) + "\n"


def read_facets(path) -> SimplicialComplex:
    with open(path) as fh:
        return parse_facets(fh.read())


def read_edges(path) -> Graph:
    with open(path) as fh:
        return parse_edges(fh.read())
