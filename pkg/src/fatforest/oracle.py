"""Brute-force graded Betti numbers via Hochster's formula.

    b_{i,j}(k[Δ]) = sum over |W| = j of dim_k H̃_{j-i-1}(Δ|W; k)

Reduced homology is computed from boundary-matrix ranks over GF(p) or over
the rationals (fraction-free). Nothing here uses chordality or the Hilbert
series, so it serves as an independent check on the pipeline.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

import numpy as np

from .complex import Face, SimplicialComplex, face_of
from .series import BettiTable

DEFAULT_MAX_N = 16
DEFAULT_MAX_FACES = 1 << 20


class TooLarge(RuntimeError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: GF(p) for a prime ``p``, or the rationals when ``p`` is None."""

    p: int | None = 2

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        t = text.strip().lower()
        if t in ("q", "qq", "rational", "rationals"):
            return cls(None)
        return cls(int(t))

    def __str__(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"


GF2 = FieldSpec(2)
GF32003 = FieldSpec(32003)
RATIONALS = FieldSpec(None)


def face_budget() -> int:
    env = os.environ.get("FATFOREST_BUDGET_FACES")
    return int(env) if env else DEFAULT_MAX_FACES


# -- chain complexes ------------------------------------------------------


def _faces_by_size(facet_masks, max_faces: int) -> list[list[int]]:
    """All faces as bitmasks grouped by cardinality; index 0 holds ``[0]``."""
    seen: set[int] = set()
    for fm in facet_masks:
        sub = fm
        while True:
            if sub not in seen:
                seen.add(sub)
                if len(seen) > max_faces:
                    raise TooLarge(f"more than {max_faces} faces")
            if sub == 0:
                break
            sub = (sub - 1) & fm
    top = max((m.bit_count() for m in seen), default=-1)
    levels: list[list[int]] = [[] for _ in range(top + 1)]
    for m in seen:
        levels[m.bit_count()].append(m)
    for lv in levels:
        lv.sort()
    return levels


def _boundary_columns(rows: list[int], cols: list[int]) -> list[dict[int, int]]:
    # column c = signed sum of its codimension-1 faces; sign (-1)^position
    index = {m: r for r, m in enumerate(rows)}
    out = []
    for m in cols:
        col = {}
        rest, pos = m, 0
        while rest:
            low = rest & -rest
            col[index[m ^ low]] = -1 if pos % 2 else 1
            rest ^= low
            pos += 1
        out.append(col)
    return out


def boundary_matrix(c: SimplicialComplex, q: int) -> np.ndarray:
    """Integer matrix of the boundary map from ``q``-faces to ``(q-1)``-faces.

    Rows and columns follow the lexicographic order of faces; ``q = 0``
    gives the augmentation onto the empty face.
    """
    levels = _faces_by_size(c.facet_masks, face_budget()) if not c.is_void else []
    rows = levels[q] if 0 <= q < len(levels) else []
    cols = levels[q + 1] if 0 <= q + 1 < len(levels) else []
    rows = sorted(rows, key=face_of)
    cols = sorted(cols, key=face_of)
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, col in enumerate(_boundary_columns(rows, cols)):
        for i, v in col.items():
            mat[i, j] = v
    return mat


def _rank_gf2(columns: list[dict[int, int]]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        v = 0
        for r, x in col.items():
            if x & 1:
                v |= 1 << r
        while v:
            top = v.bit_length() - 1
            if top in pivots:
                v ^= pivots[top]
            else:
                pivots[top] = v
                rank += 1
                break
    return rank


def _rank_modp(columns: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in columns:
        v = {r: x % p for r, x in col.items() if x % p}
        while v:
            top = max(v)
            piv = pivots.get(top)
            if piv is None:
                inv = pow(v[top], -1, p)
                pivots[top] = {r: x * inv % p for r, x in v.items()}
                rank += 1
                break
            f = v[top]
            for r, x in piv.items():
                y = (v.get(r, 0) - f * x) % p
                if y:
                    v[r] = y
                else:
                    v.pop(r, None)
    return rank


def _rank_rational(columns: list[dict[int, int]]) -> int:
    # fraction-free: v <- a*v - b*pivot, then divide out the content
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in columns:
        v = {r: x for r, x in col.items() if x}
        while v:
            top = max(v)
            piv = pivots.get(top)
            if piv is None:
                pivots[top] = v
                rank += 1
                break
            a, b = piv[top], v[top]
            g = gcd(a, b)
            a, b = a // g, b // g
            w = {r: a * x for r, x in v.items()}
            for r, x in piv.items():
                y = w.get(r, 0) - b * x
                if y:
                    w[r] = y
                else:
                    w.pop(r, None)
            content = 0
            for x in w.values():
                content = gcd(content, x)
                if content == 1:
                    break
            v = {r: x // content for r, x in w.items()} if content > 1 else w
    return rank


def _rank(columns, field: FieldSpec) -> int:
    if field.p == 2:
        return _rank_gf2(columns)
    if field.p is None:
        return _rank_rational(columns)
    return _rank_modp(columns, field.p)


def _homology_from_masks(facet_masks, field: FieldSpec, max_faces: int) -> list[int]:
    levels = _faces_by_size(facet_masks, max_faces)
    if not levels:
        return []
    sizes = [len(lv) for lv in levels]
    ranks = [0] * (len(levels) + 1)
    for s in range(1, len(levels)):
        ranks[s] = _rank(_boundary_columns(levels[s - 1], levels[s]), field)
    return [sizes[s] - ranks[s] - ranks[s + 1] for s in range(len(levels))]


def reduced_homology_dims(
    c: SimplicialComplex, field: FieldSpec = GF2, max_faces: int | None = None
) -> list[int]:
    """``[dim H̃_{-1}, dim H̃_0, ..., dim H̃_{dim c}]`` over ``field``.

    ``{∅}`` gives ``[1]``; the void complex gives ``[]`` (all zero).
    """
    if c.is_void:
        return []
    return _homology_from_masks(c.facet_masks, field, max_faces or face_budget())


# -- Hochster's formula ---------------------------------------------------


def _maximal_masks(masks) -> list[int]:
    uniq = sorted(set(masks), key=int.bit_count, reverse=True)
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


def _components(masks: list[int]) -> list[list[int]]:
    comps: list[tuple[int, list[int]]] = []
    for m in masks:
        hit = [c for c in comps if c[0] & m]
        support, members = m, [m]
        for c in hit:
            support |= c[0]
            members.extend(c[1])
            comps.remove(c)
        comps.append((support, members))
    return [c[1] for c in comps]


def _restricted_homology(facet_masks, w: int, field: FieldSpec, max_faces: int) -> list[int]:
    """Reduced homology of the restriction to ``w`` (nonvoid input).

    A disjoint union adds ``components - 1`` to H̃_0, and cones are acyclic,
    so only components whose facets have empty common intersection reach the
    rank computation.
    """
    restricted = _maximal_masks(f & w for f in facet_masks)
    if restricted == [0]:
        return [1]
    comps = _components(restricted)
    h: list[int] = [0, len(comps) - 1]
    for comp in comps:
        common = comp[0]
        for m in comp[1:]:
            common &= m
        if common:
            continue
        hc = _homology_from_masks(comp, field, max_faces)
        for q, x in enumerate(hc):
            if x:
                if q >= len(h):
                    h.extend([0] * (q + 1 - len(h)))
                h[q] += x
    return h


def _hochster_chunk(args) -> dict[tuple[int, int], int]:
    facet_masks, field, max_faces, start, stop = args
    acc: dict[tuple[int, int], int] = {}
    for w in range(start, stop):
        j = w.bit_count()
        for idx, x in enumerate(_restricted_homology(facet_masks, w, field, max_faces)):
            if x:
                q = idx - 1
                i = j - q - 1
                acc[(i, j)] = acc.get((i, j), 0) + x
    return acc


def hochster_betti_table(
    c: SimplicialComplex,
    field: FieldSpec = GF2,
    max_n: int = DEFAULT_MAX_N,
    max_faces: int | None = None,
    workers: int = 1,
) -> BettiTable:
    """Full graded Betti table of ``k[c]`` by summing over all ``2**n`` subsets.

    Raises TooLarge when ``n > max_n`` or a restriction exceeds the face
    budget. ``workers > 1`` splits the subsets across processes; the result
    does not depend on the split.
    """
    if c.n > max_n:
        raise TooLarge(f"n={c.n} exceeds the oracle bound {max_n}")
    if c.is_void:
        return BettiTable()
    max_faces = max_faces or face_budget()
    masks = tuple(c.facet_masks)
    total = 1 << c.n
    if workers <= 1 or total < 256:
        return BettiTable(_hochster_chunk((masks, field, max_faces, 0, total)))
    step = -(-total // (workers * 4))
    chunks = [(masks, field, max_faces, s, min(s + step, total)) for s in range(0, total, step)]
    table = BettiTable()
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for part in ex.map(_hochster_chunk, chunks):
            table = table + BettiTable(part)
    return table


def is_two_linear(t: BettiTable) -> bool:
    return all(j == i + 1 for i, j, _ in t.rows() if i >= 1)


def homological_profile(t: BettiTable) -> tuple[int, int]:
    """``(projdim, regularity)``: largest ``i`` and largest ``j - i`` with ``b_{i,j} != 0``."""
    rows = t.rows()
    return (
        max((i for i, _, _ in rows), default=0),
        max((j - i for i, j, _ in rows), default=0),
    )


def has_linear_resolution(t: BettiTable) -> bool:
    """All nonzero ``b_{i,j}`` with ``i >= 1`` lie on one line ``j - i = const``."""
    return len({j - i for i, j, _ in t.rows() if i >= 1}) <= 1
