"""Graphs and simplicial complexes on the vertex set ``1..n``.

Faces are sorted tuples of vertex labels. A :class:`SimplicialComplex` is held
either as an explicit facet list or as the flag (clique) complex of a
:class:`Graph`; the flag view answers membership queries by a pairwise
adjacency test and only enumerates facets when asked to.

The void complex (no faces at all) and the empty complex ``{∅}`` are different
values: ``SimplicialComplex(n, [])`` versus ``SimplicialComplex(n, [()])``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

Face = tuple[int, ...]


def as_face(vertices: Iterable[int]) -> Face:
    return tuple(sorted(set(vertices)))


def mask_of(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << (v - 1)
    return m


def face_of(mask: int) -> Face:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``1..n``.

    Edges are stored as canonical pairs ``(u, v)`` with ``u < v``; the
    constructor accepts pairs in either order.
    """

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u}, {v}) outside 1..{self.n}")
            canon.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, frozenset(combinations(range(1, n + 1), 2)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, frozenset((i, i % n + 1) for i in range(1, n + 1)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, frozenset((i, i + 1) for i in range(1, n)))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(nb) for v, nb in adj.items()}

    @cached_property
    def adjacency_masks(self) -> dict[int, int]:
        return {v: mask_of(nb) for v, nb in self.adjacency.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        adj = self.adjacency
        return all(b in adj[a] for a, b in combinations(vs, 2))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced(self, w: Iterable[int]) -> Graph:
        """Induced subgraph on ``w``, relabelled ``1..|w|`` in increasing order."""
        ws = as_face(w)
        pos = {v: i + 1 for i, v in enumerate(ws)}
        return Graph(
            len(ws),
            frozenset((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos),
        )


def _maximal(faces: Iterable[Face]) -> tuple[Face, ...]:
    uniq = sorted(set(faces), key=len, reverse=True)
    kept: list[Face] = []
    kept_sets: list[frozenset[int]] = []
    for f in uniq:
        fs = frozenset(f)
        if not any(fs <= k for k in kept_sets):
            kept.append(f)
            kept_sets.append(fs)
    return tuple(sorted(kept))


def _bron_kerbosch(adj: dict[int, int], n: int) -> list[int]:
    # maximal cliques as bitmasks, Tomita pivoting
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot_src = p | x
        best, best_cnt = 0, -1
        m = pivot_src
        while m:
            low = m & -m
            u = low.bit_length()
            c = bin(p & adj[u]).count("1")
            if c > best_cnt:
                best, best_cnt = u, c
            m ^= low
        cand = p & ~adj[best]
        while cand:
            low = cand & -cand
            v = low.bit_length()
            expand(r | low, p & adj[v], x & adj[v])
            p &= ~low
            x |= low
            cand ^= low

    if n:
        expand(0, (1 << n) - 1, 0)
    return out


class SimplicialComplex:
    """Finite simplicial complex on the ground set ``1..n``.

    Parameters
    ----------
    n : int
        Ground-set size. Never inferred from the facets, so vertices that are
        not faces (degree-one generators of the Stanley-Reisner ideal) survive.
    facets : iterable of iterables, optional
        Generating faces. Non-maximal entries are discarded. ``[]`` gives the
        void complex and ``[()]`` the empty complex.
    graph : Graph, optional
        Build the flag complex of this graph instead (mutually exclusive with
        ``facets``).
    """

    __slots__ = ("n", "_facets", "_masks", "_graph", "__weakref__")

    def __init__(self, n: int, facets: Iterable[Iterable[int]] | None = None, *, graph: Graph | None = None):
        if n < 0:
            raise ValueError(f"ground-set size must be non-negative, got {n}")
        self.n = n
        self._graph = None
        self._facets: tuple[Face, ...] | None = None
        self._masks: tuple[int, ...] | None = None
        if graph is not None:
            if facets is not None:
                raise TypeError("pass either facets or graph, not both")
            if graph.n != n:
                raise ValueError("graph vertex count differs from ground-set size")
            self._graph = graph
            return
        fs = [as_face(f) for f in (facets or [])]
        for f in fs:
            if f and (f[0] < 1 or f[-1] > n):
                raise ValueError(f"facet {f} outside 1..{n}")
        self._facets = _maximal(fs)

    # -- constructors ---------------------------------------------------

    @classmethod
    def simplex(cls, n: int) -> SimplicialComplex:
        return cls(n, [range(1, n + 1)])

    @classmethod
    def void(cls, n: int = 0) -> SimplicialComplex:
        return cls(n, [])

    @classmethod
    def empty(cls, n: int = 0) -> SimplicialComplex:
        return cls(n, [()])

    # -- representation -------------------------------------------------

    @property
    def is_flag_view(self) -> bool:
        return self._graph is not None

    @property
    def graph(self) -> Graph | None:
        """The underlying graph of a flag view, else ``None``."""
        return self._graph

    @property
    def facets(self) -> tuple[Face, ...]:
        if self._facets is None:
            g = self._graph
            masks = _bron_kerbosch(g.adjacency_masks, g.n)
            self._facets = tuple(sorted(face_of(m) for m in masks)) if g.n else ((),)
        return self._facets

    @property
    def facet_masks(self) -> tuple[int, ...]:
        if self._masks is None:
            self._masks = tuple(mask_of(f) for f in self.facets)
        return self._masks

    @property
    def is_void(self) -> bool:
        return self._graph is None and not self._facets

    @property
    def dim(self) -> int:
        """Dimension; ``-1`` for ``{∅}`` and, by convention, ``-2`` when void."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    def vertices(self) -> Face:
        if self._graph is not None:
            return tuple(range(1, self.n + 1))
        return as_face(v for f in self._facets for v in f)

    def is_face(self, face: Iterable[int]) -> bool:
        f = as_face(face)
        if any(v < 1 or v > self.n for v in f):
            return False
        if self._graph is not None:
            return self._graph.is_clique(f)
        m = mask_of(f)
        return any(m & fm == m for fm in self.facet_masks)

    def faces(self) -> Iterator[Face]:
        """All faces, by increasing size then lexicographically."""
        seen: set[int] = set()
        for fm in self.facet_masks:
            sub = fm
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & fm
        yield from sorted((face_of(m) for m in seen), key=lambda f: (len(f), f))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.n, self.facets))

    def __repr__(self) -> str:
        if self._facets is None:
            return f"SimplicialComplex(n={self.n}, graph={sorted(self._graph.edges)})"
        return f"SimplicialComplex(n={self.n}, facets={list(self._facets)})"


def complement_graph(g: Graph) -> Graph:
    return Graph(
        g.n,
        frozenset(e for e in combinations(range(1, g.n + 1), 2) if e not in g.edges),
    )


def one_skeleton(c: SimplicialComplex) -> Graph:
    """Graph whose edges are the 2-element faces of ``c`` (same ``n``)."""
    if c.is_flag_view:
        return c.graph
    edges = set()
    for f in c.facets:
        edges.update(combinations(f, 2))
    return Graph(c.n, frozenset(edges))


def flag_complex(g: Graph) -> SimplicialComplex:
    return SimplicialComplex(g.n, graph=g)


def induced_subcomplex(c: SimplicialComplex, w: Iterable[int]) -> SimplicialComplex:
    """Restriction of ``c`` to ``w``, relabelled ``1..|w|`` preserving order."""
    ws = as_face(w)
    if c.is_flag_view:
        return flag_complex(c.graph.induced(ws))
    if c.is_void:
        return SimplicialComplex.void(len(ws))
    pos = {v: i + 1 for i, v in enumerate(ws)}
    return SimplicialComplex(
        len(ws), [[pos[v] for v in f if v in pos] for f in c.facets]
    )


def minimal_nonfaces(c: SimplicialComplex) -> list[Face]:
    """Inclusion-minimal non-faces, sorted lexicographically.

    These index the minimal generators of the Stanley-Reisner ideal.
    """
    if c.is_void:
        return [()]
    if c.is_flag_view:
        return sorted(complement_graph(c.graph).edges)
    out: list[Face] = [(v,) for v in range(1, c.n + 1) if not c.is_face((v,))]
    masks = c.facet_masks

    def is_face_mask(m: int) -> bool:
        return any(m & fm == m for fm in masks)

    level = {mask_of((v,)) for v in range(1, c.n + 1) if is_face_mask(mask_of((v,)))}
    while level:
        nxt = set()
        for m in level:
            top = m.bit_length()
            for v in range(top + 1, c.n + 1):
                s = m | (1 << (v - 1))
                rest = s
                ok = True
                while rest:
                    low = rest & -rest
                    sub = s ^ low
                    if sub != m and not is_face_mask(sub):
                        ok = False
                        break
                    rest ^= low
                if not ok:
                    continue
                if is_face_mask(s):
                    nxt.add(s)
                else:
                    out.append(face_of(s))
        level = nxt
    return sorted(set(out))


def alexander_dual(c: SimplicialComplex) -> SimplicialComplex:
    """Complex of all ``F`` whose complement in ``1..n`` is not a face of ``c``."""
    full = set(range(1, c.n + 1))
    return SimplicialComplex(c.n, [full.difference(m) for m in minimal_nonfaces(c)])
