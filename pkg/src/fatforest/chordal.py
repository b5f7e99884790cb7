"""Chordality recognition and fat-forest decomposition.

A graph is chordal exactly when it is the 1-skeleton of a fat forest, and a
complex is a fat forest exactly when it is the clique complex of a chordal
graph. This module turns both statements into procedures: maximum cardinality
search for a perfect elimination order, maximal cliques read off that order,
and an ordering of the cliques in which every new facet meets the union of the
previous ones in a single simplex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .complex import Face, Graph, SimplicialComplex, as_face, one_skeleton


class NotChordal(ValueError):
    """Raised by operations that require a chordal graph.

    ``cycle`` holds a chordless cycle of length at least 4.
    """

    def __init__(self, cycle: tuple[int, ...]):
        self.cycle = cycle
        super().__init__(f"graph is not chordal; chordless cycle {list(cycle)}")


class NotFatForest(ValueError):
    """The complex admits no fat-forest decomposition.

    Attributes
    ----------
    reason : str
        ``"not-chordal"`` (certificate is a chordless cycle of the 1-skeleton),
        ``"not-flag"`` (certificate is a clique of the 1-skeleton that is not a
        face) or ``"void"``.
    certificate : tuple of int
    """

    def __init__(self, reason: str, certificate: tuple[int, ...] = ()):
        self.reason = reason
        self.certificate = certificate
        msgs = {
            "not-chordal": f"1-skeleton is not chordal; chordless cycle {list(certificate)}",
            "not-flag": f"complex is not the clique complex of its 1-skeleton; missing face {list(certificate)}",
            "void": "the void complex has no decomposition",
        }
        super().__init__(msgs.get(reason, reason))


@dataclass(frozen=True)
class FatForestDecomposition:
    """Facets ``F_1..F_k`` in an order where each ``F_j`` meets the union of
    its predecessors in the simplex ``attachments[j-1]``.

    ``attachments[0]`` and ``parents[0]`` are placeholders for ``F_1``
    (``()`` and ``None``). ``parents[j]`` is the index of the earliest facet
    containing ``attachments[j]``, or ``None`` when the attachment is empty.
    """

    n: int
    facets: tuple[Face, ...]
    attachments: tuple[Face, ...]
    parents: tuple[int | None, ...]

    @property
    def k(self) -> int:
        return len(self.facets)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(f) - 1 for f in self.facets)

    @property
    def attach_dims(self) -> tuple[int, ...]:
        """``r_2..r_k``; empty for a single simplex."""
        return tuple(len(h) - 1 for h in self.attachments[1:])

    def complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.n, self.facets)

    @classmethod
    def from_ordered_facets(cls, n: int, facets) -> FatForestDecomposition:
        """Replay the recursive gluing on an explicit facet order.

        Raises NotFatForest if some facet meets the running union in
        something other than a face of one earlier facet.
        """
        facets = tuple(as_face(f) for f in facets)
        if not facets:
            raise NotFatForest("void")
        union: set[int] = set()
        attachments: list[Face] = [()]
        parents: list[int | None] = [None]
        for j, f in enumerate(facets):
            if j == 0:
                union.update(f)
                continue
            h = as_face(union.intersection(f))
            if len(h) == len(f):
                raise NotFatForest("not-flag", f)
            parent = next((i for i in range(j) if set(h) <= set(facets[i])), None)
            if parent is None:
                raise NotFatForest("not-flag", h)
            attachments.append(h)
            parents.append(parent if h else None)
            union.update(f)
        return cls(n, facets, tuple(attachments), tuple(parents))


def mcs_order(g: Graph) -> tuple[int, ...]:
    """Elimination order from maximum cardinality search.

    Vertices are visited by decreasing count of already-visited neighbours,
    ties going to the larger label, and the order returned is the reverse of
    the visit order. It is a perfect elimination order iff ``g`` is chordal.
    On an edgeless graph this is ``1, 2, ..., n``.
    """
    weight = {v: 0 for v in range(1, g.n + 1)}
    visited: list[int] = []
    adj = g.adjacency
    while weight:
        v = max(weight, key=lambda u: (weight[u], u))
        del weight[v]
        visited.append(v)
        for u in adj[v]:
            if u in weight:
                weight[u] += 1
    return tuple(reversed(visited))


def _later_neighbors(g: Graph, order) -> dict[int, list[int]]:
    pos = {v: i for i, v in enumerate(order)}
    return {v: sorted((u for u in g.adjacency[v] if pos[u] > pos[v]), key=pos.get) for v in order}


def is_perfect_elimination(g: Graph, order) -> bool:
    if sorted(order) != list(range(1, g.n + 1)):
        raise ValueError("order is not a permutation of 1..n")
    later = _later_neighbors(g, order)
    return all(g.is_clique(later[v]) for v in order)


def _induced_path(g: Graph, a: int, b: int, blocked: set[int]) -> list[int] | None:
    # shortest a-b path avoiding `blocked`; shortest paths are induced
    prev = {a: None}
    q = deque([a])
    while q:
        u = q.popleft()
        if u == b:
            path = []
            while u is not None:
                path.append(u)
                u = prev[u]
            return path[::-1]
        for w in sorted(g.adjacency[u]):
            if w not in prev and w not in blocked:
                prev[w] = u
                q.append(w)
    return None


def chordless_cycle(g: Graph) -> tuple[int, ...] | None:
    """A chordless cycle of length >= 4, or ``None`` if ``g`` is chordal.

    The search starts at the first vertex where the MCS order fails to be
    perfect. For each vertex ``v`` and non-adjacent neighbours ``a, b`` it
    looks for a shortest ``a``-``b`` path outside the closed neighbourhood
    of ``v``; closing it through ``v`` gives a chordless cycle.
    """
    order = mcs_order(g)
    later = _later_neighbors(g, order)
    failing = [v for v in order if not g.is_clique(later[v])]
    if not failing:
        return None
    adj = g.adjacency
    first = failing[0]
    rest = [v for v in range(1, g.n + 1) if v != first]
    for v in [first] + rest:
        for a, b in combinations(sorted(adj[v]), 2):
            if b in adj[a]:
                continue
            blocked = (set(adj[v]) | {v}) - {a, b}
            path = _induced_path(g, a, b, blocked)
            if path is not None:
                return (v, *path)
    raise AssertionError("MCS order failed but no chordless cycle found")


def is_chordal(g: Graph, certificate: bool = False):
    """Whether every cycle of length >= 4 in ``g`` has a chord.

    With ``certificate=True`` returns ``(flag, cycle)`` where ``cycle`` is a
    chordless cycle when ``flag`` is false and ``None`` otherwise.
    """
    ok = is_perfect_elimination(g, mcs_order(g))
    if not certificate:
        return ok
    return ok, (None if ok else chordless_cycle(g))


def maximal_cliques_chordal(g: Graph) -> list[Face]:
    """Maximal cliques of a chordal graph, sorted lexicographically.

    Each maximal clique is ``{v} ∪ later(v)`` for some vertex ``v`` of the
    perfect elimination order, so there are at most ``n`` of them.
    """
    if g.n == 0:
        return [()]
    order = mcs_order(g)
    later = _later_neighbors(g, order)
    if not all(g.is_clique(later[v]) for v in order):
        raise NotChordal(chordless_cycle(g))
    cands = [frozenset([v, *later[v]]) for v in order]
    out = [c for c in cands if not any(c < d for d in cands)]
    return sorted(set(as_face(c) for c in out))


def clique_tree_order(facets) -> list[Face]:
    """Order facets by a maximum-weight spanning tree of their intersection
    graph (Prim), weights ``|F ∩ F'|``.

    Each component starts at its largest facet; ties at every step go to the
    larger intersection, then the larger facet, then the lexicographically
    greater facet. For the cliques of a chordal graph this is a clique tree,
    so every facet meets the union of its predecessors inside its tree parent.
    """
    remaining = [tuple(f) for f in facets]
    sets = {f: frozenset(f) for f in remaining}
    key = {f: 0 for f in remaining}
    order: list[Face] = []
    while remaining:
        f = max(remaining, key=lambda x: (key[x], len(x), x))
        remaining.remove(f)
        order.append(f)
        for x in remaining:
            key[x] = max(key[x], len(sets[x] & sets[f]))
    return order


def fat_forest_decomposition(c: SimplicialComplex) -> FatForestDecomposition:
    """Decompose ``c`` as a fat forest.

    Raises
    ------
    NotFatForest
        If the 1-skeleton is not chordal (certificate: chordless cycle), if
        some clique of the 1-skeleton is not a face (certificate: that
        clique), or if ``c`` is void.
    """
    if c.is_void:
        raise NotFatForest("void")
    if c.n == 0:
        return FatForestDecomposition(0, ((),), ((),), (None,))
    g = one_skeleton(c)
    ok, cycle = is_chordal(g, certificate=True)
    if not ok:
        raise NotFatForest("not-chordal", cycle)
    cliques = maximal_cliques_chordal(g)
    if not c.is_flag_view:
        missing = [q for q in cliques if not c.is_face(q)]
        if missing:
            raise NotFatForest("not-flag", missing[0])
    return FatForestDecomposition.from_ordered_facets(c.n, clique_tree_order(cliques))


def is_fat_forest(c: SimplicialComplex) -> bool:
    try:
        fat_forest_decomposition(c)
    except NotFatForest:
        return False
    return True
