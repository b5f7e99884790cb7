from __future__ import annotations

from itertools import combinations, permutations

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from fatforest.complex import Graph, SimplicialComplex

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def worked_example() -> SimplicialComplex:
    return SimplicialComplex(5, [[1, 2], [2, 3, 4], [5]])


@pytest.fixture
def pentagon() -> SimplicialComplex:
    return SimplicialComplex(5, [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]])


# -- brute-force references (no library logic beyond the data types) -------


def all_subsets(n: int):
    for size in range(n + 1):
        yield from combinations(range(1, n + 1), size)


def brute_faces(c: SimplicialComplex) -> set[tuple[int, ...]]:
    return {s for s in all_subsets(c.n) if c.is_face(s)}


def brute_minimal_nonfaces(c: SimplicialComplex) -> list[tuple[int, ...]]:
    faces = brute_faces(c)
    out = []
    for s in all_subsets(c.n):
        if s in faces:
            continue
        if len(s) == 0 or all(sub in faces for sub in combinations(s, len(s) - 1)):
            out.append(s)
    return sorted(out)


def brute_dual_faces(c: SimplicialComplex) -> set[tuple[int, ...]]:
    faces = brute_faces(c)
    full = set(range(1, c.n + 1))
    return {s for s in all_subsets(c.n) if tuple(sorted(full - set(s))) not in faces}


def brute_has_chordless_cycle(g: Graph) -> bool:
    """Enumerate vertex sequences of length >= 4 forming an induced cycle."""
    for size in range(4, g.n + 1):
        for vs in combinations(range(1, g.n + 1), size):
            sub_edges = sum(1 for a, b in combinations(vs, 2) if g.has_edge(a, b))
            if sub_edges != size:
                continue
            first = vs[0]
            for perm in permutations(vs[1:]):
                cyc = (first, *perm)
                if all(g.has_edge(cyc[i], cyc[(i + 1) % size]) for i in range(size)):
                    return True
    return False


def is_chordless_cycle(g: Graph, cyc) -> bool:
    k = len(cyc)
    if k < 4 or len(set(cyc)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = (j - i) in (1, k - 1)
            if g.has_edge(cyc[i], cyc[j]) != adjacent:
                return False
    return True


@st.composite
def graphs(draw, max_n: int = 8, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, keep in zip(pairs, mask) if keep))


@st.composite
def complexes(draw, max_n: int = 7):
    n = draw(st.integers(0, max_n))
    facets = draw(
        st.lists(st.frozensets(st.integers(1, n), max_size=n) if n else st.just(frozenset()), max_size=6)
    )
    return SimplicialComplex(n, facets)
