"""Named families of fat forests, their closed-form Betti numbers, and a
checker that evaluates competing formulas side by side over parameter grids.

Closed forms are the versions obtained by expanding the Hilbert series; where
a commonly quoted variant differs, the comment beside the function records
it. ``verify_identity`` treats the Hilbert-series pipeline as ground truth.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterable, Iterator

from .chordal import FatForestDecomposition
from .complex import Graph, SimplicialComplex
from .series import binom, pipeline_betti


class InvalidTableau(ValueError):
    pass


class InvalidSpec(ValueError):
    pass


class UnknownFamily(KeyError):
    pass


# -- multipartite / bipartite ---------------------------------------------


def multipartite_complex(*parts: int) -> SimplicialComplex:
    """Disjoint union of full simplices on ``parts[0], parts[1], ...`` vertices.

    Its Stanley-Reisner ideal is the edge ideal of the complete multipartite
    graph with those part sizes.
    """
    if not parts or any(p < 1 for p in parts):
        raise ValueError(f"parts must be positive, got {parts}")
    facets, start = [], 1
    for p in parts:
        facets.append(range(start, start + p))
        start += p
    return SimplicialComplex(start - 1, facets)


def betti_multipartite(ns: Iterable[int], i: int) -> int:
    # variant: sum_j C(N - n_j, i+1) - C(N, i+1); K_{1,1,1} forces the (s-1) factor
    ns = list(ns)
    total = sum(ns)
    return (len(ns) - 1) * binom(total, i + 1) - sum(binom(total - n, i + 1) for n in ns)


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for x, ca in enumerate(a):
        if ca:
            for y, cb in enumerate(b):
                out[x + y] += ca * cb
    return out


def jacques_multipartite(ns: Iterable[int], i: int) -> int:
    """``sum_{l>=2} (l-1) sum_{j_1<..<j_l} sum_{a_1+..+a_l=i+1, a>=1} prod C(n_j, a)``.

    The inner sum over compositions is the coefficient of ``x^(i+1)`` in
    ``prod_j ((1+x)^n_j - 1)``.
    """
    ns = list(ns)
    total = 0
    for l in range(2, len(ns) + 1):
        for js in combinations(ns, l):
            poly = [1]
            for n in js:
                poly = _poly_mul(poly, [0] + [binom(n, a) for a in range(1, n + 1)])
            if i + 1 < len(poly):
                total += (l - 1) * poly[i + 1]
    return total


def betti_bipartite(m: int, n: int, i: int) -> int:
    return binom(m + n, i + 1) - binom(m, i + 1) - binom(n, i + 1)


def jacques_bipartite(m: int, n: int, i: int) -> int:
    return sum(binom(m, j) * binom(n, i + 1 - j) for j in range(1, i + 1))


def corso_nagel_bipartite(m: int, n: int, i: int) -> int:
    return sum(binom(j, i) for j in range(n, n + m)) - binom(m, i + 1)


# -- squarefree lexsegments -----------------------------------------------


def lexsegment_complex(a: int, b: int) -> SimplicialComplex:
    """Complex of ``L(a, b)`` on ``b`` variables: facets ``{1},..,{a},{a+1..b}``.

    ``L(a, b)`` is generated by the squarefree quadrics lexicographically at
    least ``x_a x_b``.
    """
    if not 1 <= a <= b:
        raise ValueError(f"need 1 <= a <= b, got a={a}, b={b}")
    return SimplicialComplex(b, [(v,) for v in range(1, a + 1)] + [range(a + 1, b + 1)])


def betti_lex(a: int, b: int, i: int) -> int:
    return a * binom(b, i + 1) - a * binom(b - 1, i + 1) - binom(a, i + 1)


def lex_rhs_sum(a: int, b: int, i: int) -> int:
    return sum((k + 1) * binom(k, i - 1) for k in range(a)) + a * sum(
        binom(k, i - 1) for k in range(a, b - 1)
    )


def final_segment_complex(a: int, b: int, n: int) -> SimplicialComplex:
    """Complex of ``F(a, b)``, the quadrics lexicographically at most ``x_a x_b``.

    Facets are ``{1..a-1, i}`` for ``b <= i <= n`` and ``{1..a, j}`` for
    ``a < j < b``; when ``b = a + 1`` the second family is empty and
    ``{1..a}`` is a facet in its own right.
    """
    if not 1 <= a < b <= n:
        raise ValueError(f"need 1 <= a < b <= n, got {(a, b, n)}")
    base = list(range(1, a))
    facets = [base + [i] for i in range(b, n + 1)]
    facets += [base + [a, j] for j in range(a + 1, b)]
    if b == a + 1:
        facets.append(base + [a])
    return SimplicialComplex(n, facets)


# -- Ferrers tableaux -----------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    """Weakly decreasing row lengths ``λ_1 >= ... >= λ_m >= 1``."""

    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if not rows or rows[-1] < 1 or any(a < b for a, b in zip(rows, rows[1:])):
            raise InvalidTableau(f"not a weakly decreasing positive sequence: {rows}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_runs(cls, runs: Iterable[tuple[int, int]]) -> Tableau:
        """From ``[(μ_1, l_1), ..., (μ_k, l_k)]``, meaning ``μ_i`` repeated ``l_i`` times."""
        rows: list[int] = []
        for mu, l in runs:
            if l < 1:
                raise InvalidTableau(f"run length must be positive, got {l}")
            rows += [mu] * l
        return cls(tuple(rows))

    @property
    def runs(self) -> list[tuple[int, int]]:
        out: list[tuple[int, int]] = []
        for r in self.rows:
            if out and out[-1][0] == r:
                out[-1] = (r, out[-1][1] + 1)
            else:
                out.append((r, 1))
        return out

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return self.rows[0]


def _as_tableau(t) -> Tableau:
    return t if isinstance(t, Tableau) else Tableau(tuple(t))


def ferrers_labels(t) -> dict[int, str]:
    """Vertex names: ``x1..xm`` on labels ``1..m``, ``y1..`` after them."""
    t = _as_tableau(t)
    labels = {p: f"x{p}" for p in range(1, t.m + 1)}
    labels.update({t.m + q: f"y{q}" for q in range(1, t.width + 1)})
    return labels


def ferrers_graph(t) -> Graph:
    """Bipartite graph with edges ``x_p y_q`` for ``q <= λ_p``."""
    t = _as_tableau(t)
    return Graph(
        t.m + t.width,
        frozenset((p, t.m + q) for p, lam in enumerate(t.rows, 1) for q in range(1, lam + 1)),
    )


def ferrers_complex(t) -> SimplicialComplex:
    """Independence complex of the Ferrers graph of ``t``.

    For each threshold ``c`` in ``{0} ∪ {μ_i}`` there is one facet: the rows
    with ``λ_p <= c`` together with the columns ``y_{c+1}..y_{λ_1}``.
    """
    t = _as_tableau(t)
    m = t.m
    facets = []
    for c in [0] + sorted({mu for mu, _ in t.runs}):
        xs = [p for p, lam in enumerate(t.rows, 1) if lam <= c]
        ys = [m + q for q in range(c + 1, t.width + 1)]
        facets.append(xs + ys)
    return SimplicialComplex(m + t.width, facets)


def corso_nagel_betti(t, i: int) -> int:
    """``sum_j C(λ_j + j - 1, i) - C(m, i + 1)``."""
    t = _as_tableau(t)
    return sum(binom(lam + j - 1, i) for j, lam in enumerate(t.rows, 1)) - binom(t.m, i + 1)


def betti_ferrers_64421(i: int) -> int:
    return 2 * binom(7, i + 1) + binom(6, i + 1) - 4 * binom(5, i + 1)


def betti_n_one_block(n: int, m: int, i: int) -> int:
    """Betti numbers for the tableau ``(n, 1, ..., 1)`` with ``m`` rows."""
    return binom(n + 1, i + 1) + binom(m + 1, i + 1) - binom(n, i + 1) - binom(m, i + 1) - binom(2, i + 1)


def corso_nagel_n_one_block(n: int, m: int, i: int) -> int:
    # variant ends in -C(m+1, i+1); m = n = 1 forces -C(m, i+1)
    return binom(n, i) + sum(binom(j, i) for j in range(2, m + 1)) - binom(m, i + 1)


def _variant_n_one_block(n: int, m: int, i: int) -> int:
    return binom(n, i) + sum(binom(j, i) for j in range(2, m + 1)) - binom(m + 1, i + 1)


def betti_staircase(n: int, i: int) -> int:
    return n * binom(n + 1, i + 1) - (n + 1) * binom(n, i + 1)


def staircase_corso_nagel(n: int, i: int) -> int:
    return n * binom(n, i) - binom(n, i + 1)


# -- three blocks ---------------------------------------------------------


def three_block_complex(m: int, n: int, o: int) -> SimplicialComplex:
    """Facets ``[x2..xm, y2..yn, z2..zo]``, ``[x1..xm]``, ``[y1..yn]``, ``[z1..zo]``.

    Labels: ``x`` on ``1..m``, ``y`` on ``m+1..m+n``, ``z`` after. The
    Stanley-Reisner ideal contains ``x1y1``, ``x1z1`` and ``y1z1`` besides
    the mixed products ``x1 y_i``, ``y1 x_k``, ... with indices at least 2.
    """
    if min(m, n, o) < 2:
        raise ValueError(f"block sizes must be at least 2, got {(m, n, o)}")
    xs = list(range(1, m + 1))
    ys = list(range(m + 1, m + n + 1))
    zs = list(range(m + n + 1, m + n + o + 1))
    return SimplicialComplex(m + n + o, [xs[1:] + ys[1:] + zs[1:], xs, ys, zs])


def betti_three_block(m: int, n: int, o: int, i: int) -> int:
    # variant has +C(n+o, i+1); the series expansion gives a minus sign
    return (
        binom(m + n + 1, i + 1) + binom(m + o + 1, i + 1) + binom(n + o + 1, i + 1)
        - binom(m + n, i + 1) - binom(m + o, i + 1) - binom(n + o, i + 1)
        - binom(3, i + 1)
    )


def _variant_three_block(m: int, n: int, o: int, i: int) -> int:
    return (
        binom(m + n + 1, i + 1) + binom(m + o + 1, i + 1) + binom(n + o + 1, i + 1)
        - binom(m + n, i + 1) - binom(m + o, i + 1) + binom(n + o, i + 1)
        - binom(3, i + 1)
    )


# -- uniform (d, r)-forests -----------------------------------------------


@dataclass(frozen=True)
class UniformForestSpec:
    """``k`` facets of dimension ``d``, each glued along an ``r``-simplex."""

    d: int
    r: int
    k: int

    def __post_init__(self):
        if self.d < 0 or self.k < 1 or not -1 <= self.r < self.d:
            raise InvalidSpec(f"need d >= 0, k >= 1, -1 <= r < d; got {self}")

    @property
    def n(self) -> int:
        return self.k * (self.d - self.r) + self.r + 1


def uniform_forest(spec: UniformForestSpec) -> FatForestDecomposition:
    """Chain of ``d``-simplices: ``F_1 = {1..d+1}`` and ``F_j`` is the last
    ``r + 1`` vertices of ``F_{j-1}`` plus ``d - r`` new ones."""
    facets = [tuple(range(1, spec.d + 2))]
    nxt = spec.d + 2
    for _ in range(spec.k - 1):
        keep = facets[-1][len(facets[-1]) - (spec.r + 1):] if spec.r >= 0 else ()
        fresh = tuple(range(nxt, nxt + spec.d - spec.r))
        nxt += spec.d - spec.r
        facets.append(keep + fresh)
    return FatForestDecomposition.from_ordered_facets(spec.n, facets)


def betti_uniform(spec: UniformForestSpec, i: int) -> int:
    s = spec.d - spec.r
    return (spec.k - 1) * binom(spec.k * s, i + 1) - spec.k * binom((spec.k - 1) * s, i + 1)


def betti_uniform_abs(spec: UniformForestSpec, i: int) -> int:
    s = spec.d - spec.r
    return abs(spec.k * binom((spec.k - 1) * s, i + 1) - (spec.k - 1) * binom(spec.k * s, i + 1))


def uniform_dual_betti(spec: UniformForestSpec) -> dict[tuple[int, int], int]:
    """Predicted Betti table of the Alexander dual of a ``(d, r)``-forest."""
    s = spec.d - spec.r
    if spec.k == 1:
        # dual of a full simplex is void
        return {}
    return {(0, 0): 1, (1, (spec.k - 1) * s): spec.k, (2, spec.k * s): spec.k - 1}


# -- random generators ----------------------------------------------------


def random_fat_forest(max_k: int, max_d: int, seed: int, max_n: int | None = None) -> FatForestDecomposition:
    """Fat forest grown by the recursive gluing rule, deterministic in ``seed``.

    Each new facet picks an earlier facet ``F`` and a proper subset ``H`` of
    it, then adds at least one fresh vertex. Vertex labels are shuffled at
    the end. ``max_n`` caps the vertex count.
    """
    if max_k < 1 or max_d < 0:
        raise ValueError("need max_k >= 1 and max_d >= 0")
    rng = random.Random(seed)
    cap = max_n if max_n is not None else 1 << 30
    d0 = rng.randint(0, min(max_d, cap - 1))
    facets: list[tuple[int, ...]] = [tuple(range(1, d0 + 2))]
    nv = d0 + 1
    for _ in range(rng.randint(1, max_k) - 1):
        parent = rng.choice(facets)
        r = rng.randint(-1, len(parent) - 2)
        r = min(r, max_d - 1)
        lo, hi = r + 1, min(max_d, r + cap - nv)
        if hi < lo:
            break
        d = rng.randint(lo, hi)
        h = tuple(rng.sample(parent, r + 1))
        fresh = tuple(range(nv + 1, nv + d - r + 1))
        nv += d - r
        facets.append(tuple(sorted(h + fresh)))
    perm = list(range(1, nv + 1))
    rng.shuffle(perm)
    relabel = {v: perm[v - 1] for v in range(1, nv + 1)}
    facets = [sorted(relabel[v] for v in f) for f in facets]
    return FatForestDecomposition.from_ordered_facets(nv, facets)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi graph ``G(n, p)``, deterministic in ``seed``."""
    rng = random.Random(seed)
    return Graph(n, frozenset(e for e in combinations(range(1, n + 1), 2) if rng.random() < p))


# -- identity checker -----------------------------------------------------


@dataclass(frozen=True)
class Mismatch:
    params: tuple[int, ...]
    i: int
    values: dict


@dataclass
class IdentityReport:
    family: str
    ranges: dict
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    variant_discrepancies: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _pipeline_vector(c: SimplicialComplex, upto: int) -> list[int]:
    v = pipeline_betti(c)
    return v + [0] * (upto - len(v))


def _grid(ranges: dict, names: list[str]) -> Iterator[tuple[int, ...]]:
    yield from product(*(range(ranges[k][0], ranges[k][1] + 1) for k in names))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def _partitions_in_box(rows: int, width: int) -> Iterator[tuple[int, ...]]:
    # weakly decreasing sequences of `rows` values in 1..width starting at width
    def rec(prefix, left, cap):
        if left == 0:
            yield tuple(prefix)
            return
        for v in range(cap, 0, -1):
            yield from rec(prefix + [v], left - 1, v)

    yield from rec([width], rows - 1, width)


def _cases(family: str, rg: dict):
    """Yield ``(params, n_vertices, {label: f(i)})`` for every grid point."""
    g = globals()
    if family == "bipartite-jacques":
        for m, n in _grid(rg, ["m", "n"]):
            yield (m, n), m + n, {
                "closed": lambda i, m=m, n=n: g["betti_bipartite"](m, n, i),
                "jacques": lambda i, m=m, n=n: g["jacques_bipartite"](m, n, i),
            }, multipartite_complex(m, n)
    elif family == "bipartite-corso-nagel":
        for m, n in _grid(rg, ["m", "n"]):
            yield (m, n), m + n, {
                "closed": lambda i, m=m, n=n: g["betti_bipartite"](m, n, i),
                "corso_nagel": lambda i, m=m, n=n: g["corso_nagel_bipartite"](m, n, i),
                "tableau": lambda i, m=m, n=n: g["corso_nagel_betti"]([m] * n, i),
            }, ferrers_complex([m] * n)
    elif family == "multipartite-jacques":
        lo_n, hi_n = rg["N"]
        lo_s, hi_s = rg["s"]
        for total in range(lo_n, hi_n + 1):
            for s in range(lo_s, min(hi_s, total) + 1):
                for ns in _compositions(total, s):
                    yield ns, total, {
                        "closed": lambda i, ns=ns: g["betti_multipartite"](ns, i),
                        "jacques": lambda i, ns=ns: g["jacques_multipartite"](ns, i),
                    }, multipartite_complex(*ns)
    elif family == "lexsegment":
        for a, b in _grid(rg, ["a", "b"]):
            if a > b:
                continue
            formulas = {"closed": lambda i, a=a, b=b: g["betti_lex"](a, b, i)}
            # at a = b the sum equals its value at (a, a + 1); x_a x_a is not squarefree
            if a < b:
                formulas["sum"] = lambda i, a=a, b=b: g["lex_rhs_sum"](a, b, i)
            yield (a, b), b, formulas, lexsegment_complex(a, b)
    elif family == "ferrers-vs-pipeline":
        lo, hi = rg["size"]
        for size in range(max(lo, 2), hi + 1):
            for m in range(1, size):
                for rows in _partitions_in_box(m, size - m):
                    yield rows, size, {
                        "corso_nagel": lambda i, rows=rows: g["corso_nagel_betti"](rows, i),
                    }, ferrers_complex(rows)
    elif family == "staircase":
        for (n,) in _grid(rg, ["n"]):
            yield (n,), 2 * n, {
                "closed": lambda i, n=n: g["betti_staircase"](n, i),
                "corso_nagel": lambda i, n=n: g["staircase_corso_nagel"](n, i),
                "tableau": lambda i, n=n: g["corso_nagel_betti"](range(n, 0, -1), i),
            }, ferrers_complex(range(n, 0, -1))
    elif family == "n-one-block":
        for m, n in _grid(rg, ["m", "n"]):
            yield (m, n), m + n, {
                "closed": lambda i, m=m, n=n: g["betti_n_one_block"](n, m, i),
                "corso_nagel": lambda i, m=m, n=n: g["corso_nagel_n_one_block"](n, m, i),
            }, ferrers_complex([n] + [1] * (m - 1))
    elif family == "three-block":
        for m, n, o in _grid(rg, ["m", "n", "o"]):
            yield (m, n, o), m + n + o, {
                "closed": lambda i, m=m, n=n, o=o: g["betti_three_block"](m, n, o, i),
            }, three_block_complex(m, n, o)
    elif family == "uniform":
        lo, hi = rg["n"]
        for d in range(0, hi):
            for r in range(-1, d):
                for k in range(1, hi + 1):
                    spec = UniformForestSpec(d, r, k)
                    if not lo <= spec.n <= hi:
                        continue
                    yield (d, r, k), spec.n, {
                        "closed": lambda i, spec=spec: g["betti_uniform"](spec, i),
                        "abs": lambda i, spec=spec: g["betti_uniform_abs"](spec, i),
                    }, uniform_forest(spec).complex()
    else:
        raise UnknownFamily(family)


_VARIANTS: dict[str, Callable] = {
    "n-one-block": lambda p, i: _variant_n_one_block(p[1], p[0], i),
    "three-block": lambda p, i: _variant_three_block(*p, i),
}

FAMILY_RANGES: dict[str, dict[str, tuple[int, int]]] = {
    "bipartite-jacques": {"m": (1, 12), "n": (1, 12)},
    "bipartite-corso-nagel": {"m": (1, 12), "n": (1, 12)},
    "multipartite-jacques": {"N": (1, 12), "s": (1, 4)},
    "lexsegment": {"a": (1, 12), "b": (1, 12)},
    "ferrers-vs-pipeline": {"size": (2, 12)},
    "staircase": {"n": (1, 10)},
    "n-one-block": {"m": (2, 10), "n": (2, 10)},
    "three-block": {"m": (2, 5), "n": (2, 5), "o": (2, 5)},
    "uniform": {"n": (1, 13)},
}

FAMILIES = tuple(FAMILY_RANGES)


def verify_identity(family: str, ranges: dict | None = None) -> IdentityReport:
    """Evaluate every formula of ``family`` and the pipeline at each grid point.

    For each parameter tuple and each ``1 <= i <= n_vertices`` all values must
    agree; disagreements are collected in ``mismatches`` sorted by parameters.
    Known incorrect variants are evaluated too and only counted in
    ``variant_discrepancies``.
    """
    if family not in FAMILY_RANGES:
        raise UnknownFamily(family)
    rg = dict(FAMILY_RANGES[family])
    unknown = sorted(set(ranges or {}) - set(rg))
    if unknown:
        raise KeyError(f"{family} has no parameter {unknown[0]!r}; expected one of {sorted(rg)}")
    rg.update(ranges or {})
    report = IdentityReport(family, rg)
    variant = _VARIANTS.get(family)
    for params, nv, formulas, cx in _cases(family, rg):
        pipe = _pipeline_vector(cx, nv + 1)
        for i in range(1, nv + 1):
            vals = {name: f(i) for name, f in formulas.items()}
            vals["pipeline"] = pipe[i - 1]
            report.checked += 1
            if len(set(vals.values())) != 1:
                report.mismatches.append(Mismatch(tuple(params), i, vals))
            if variant is not None and variant(params, i) != vals["pipeline"]:
                report.variant_discrepancies += 1
    report.mismatches.sort(key=lambda mm: (mm.params, mm.i))
    return report
