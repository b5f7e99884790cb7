"""Hilbert series of fat forests and the invariants read off from it.

For a ring with a 2-linear resolution the numerator ``p(t)`` of the Hilbert
series over ``(1 - t)**n`` is ``1 - b12 t^2 + b23 t^3 - ...``, so the Betti
numbers are ``b_{i,i+1} = (-1)**i * [t^(i+1)] p``. This module is the one
place that sign convention lives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .chordal import FatForestDecomposition, fat_forest_decomposition
from .complex import SimplicialComplex


class ExponentOverflow(ValueError):
    pass


class NotTwoLinearShape(ValueError):
    pass


def binom(a: int, b: int) -> int:
    """``C(a, b)`` with ``C(a, b) = 0`` for ``b < 0`` or ``b > a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class SeriesTermSum:
    """``sum(c / (1 - t)**e for c, e in terms)``, normalized.

    Terms are sorted by decreasing exponent, exponents are distinct and
    coefficients nonzero.
    """

    terms: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_terms(cls, terms) -> SeriesTermSum:
        acc: dict[int, int] = {}
        for c, e in terms:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, 0) + c
        return cls(tuple((c, e) for e, c in sorted(acc.items(), reverse=True) if c))

    @property
    def max_exponent(self) -> int:
        return max((e for _, e in self.terms), default=0)

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        return sum((Fraction(c) / (1 - t) ** e for c, e in self.terms), Fraction(0))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, e in self.terms:
            sign = "-" if c < 0 else "+"
            body = str(abs(c)) if e == 0 else f"{abs(c)}/(1-t)^{e}"
            parts.append(f"{sign} {body}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


@dataclass(frozen=True)
class NumeratorPoly:
    """``p(t)`` with ``H(t) = p(t) / (1 - t)**n``; ``coeffs[k]`` is ``[t^k] p``."""

    coeffs: tuple[int, ...]
    n: int

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t):
        return sum(c * t**k for k, c in enumerate(self.coeffs))

    def divide_one_minus_t(self, times: int) -> NumeratorPoly:
        """Exact quotient by ``(1 - t)**times``; ValueError if not divisible."""
        q = list(self.coeffs)
        for _ in range(times):
            # p = (1 - t) s  =>  s_k = sum_{l<=k} p_l
            run, out = 0, []
            for c in q:
                run += c
                out.append(run)
            if out and out[-1] != 0:
                raise ValueError("not divisible by (1 - t)")
            q = out[:-1] if out else out
        return NumeratorPoly(tuple(q), self.n - times)


class BettiTable:
    """Graded Betti numbers ``(i, j) -> b_{i,j}``; zero entries are not stored."""

    def __init__(self, entries=None):
        self._e: dict[tuple[int, int], int] = {}
        for (i, j), v in dict(entries or {}).items():
            if v < 0:
                raise ValueError(f"negative Betti number at {(i, j)}")
            if v:
                self._e[(i, j)] = int(v)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._e.get(key, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self._e == other._e

    def __hash__(self):
        return hash(frozenset(self._e.items()))

    def __len__(self) -> int:
        return len(self._e)

    def __repr__(self) -> str:
        return f"BettiTable({dict(self.rows_dict())})"

    def rows(self) -> list[tuple[int, int, int]]:
        return [(i, j, v) for (i, j), v in sorted(self._e.items())]

    def rows_dict(self):
        return {(i, j): v for i, j, v in self.rows()}

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self._e.items() if a == i)

    @property
    def projdim(self) -> int:
        return max((i for i, _ in self._e), default=0)

    def linear(self) -> list[int]:
        """``[b_{1,2}, ..., b_{p,p+1}]`` dense up to the projective dimension."""
        return [self[(i, i + 1)] for i in range(1, self.projdim + 1)]

    def __add__(self, other: BettiTable) -> BettiTable:
        acc = dict(self._e)
        for k, v in other._e.items():
            acc[k] = acc.get(k, 0) + v
        return BettiTable(acc)


@dataclass(frozen=True)
class RingProfile:
    depth: int
    projdim: int
    krull_dim: int
    cohen_macaulay: bool


def hilbert_series(d: FatForestDecomposition) -> SeriesTermSum:
    """``sum 1/(1-t)^(d_i+1) - sum 1/(1-t)^(r_j+1)`` over facets and attachments."""
    return SeriesTermSum.from_terms(
        [(1, di + 1) for di in d.dims] + [(-1, r + 1) for r in d.attach_dims]
    )


def numerator(s: SeriesTermSum, n: int) -> NumeratorPoly:
    """Numerator of ``s`` over ``(1 - t)**n``."""
    if s.max_exponent > n:
        raise ExponentOverflow(f"exponent {s.max_exponent} exceeds n={n}")
    coeffs = [0] * (n + 1)
    for c, e in s.terms:
        m = n - e
        for k in range(m + 1):
            coeffs[k] += c * (-1) ** k * binom(m, k)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return NumeratorPoly(tuple(coeffs), n)


def betti_from_numerator(p: NumeratorPoly) -> BettiTable:
    """Linear Betti numbers encoded by a 2-linear numerator.

    Raises NotTwoLinearShape unless ``p(0) = 1``, ``[t] p = 0`` and every
    extracted number is non-negative.
    """
    c = p.coeffs
    if not c or c[0] != 1:
        raise NotTwoLinearShape(f"constant term {c[0] if c else 0} != 1")
    if len(c) > 1 and c[1] != 0:
        raise NotTwoLinearShape(f"t coefficient {c[1]} != 0")
    entries = {(0, 0): 1}
    for i in range(1, len(c) - 1):
        b = (-1) ** i * c[i + 1]
        if b < 0:
            raise NotTwoLinearShape(f"negative Betti number {b} at i={i}")
        entries[(i, i + 1)] = b
    return BettiTable(entries)


def ring_profile(d: FatForestDecomposition) -> RingProfile:
    """Depth, projective dimension, Krull dimension and CM status.

    A single simplex is a polynomial ring: depth equals dimension and the
    projective dimension is 0.
    """
    krull = max(d.dims) + 1
    rs = d.attach_dims
    depth = krull if not rs else min(rs) + 2
    cm = not rs or (len(set(d.dims)) == 1 and all(r == d.dims[0] - 1 for r in rs))
    return RingProfile(depth=depth, projdim=d.n - depth, krull_dim=krull, cohen_macaulay=cm)


@dataclass(frozen=True)
class PipelineResult:
    decomposition: FatForestDecomposition
    series: SeriesTermSum
    numerator: NumeratorPoly
    betti: BettiTable
    profile: RingProfile = field(compare=False)


def run_pipeline(c: SimplicialComplex) -> PipelineResult:
    """Decomposition, Hilbert series, numerator, Betti table and profile of ``c``.

    Raises NotFatForest when ``c`` has no 2-linear resolution.
    """
    d = fat_forest_decomposition(c)
    s = hilbert_series(d)
    p = numerator(s, c.n)
    return PipelineResult(d, s, p, betti_from_numerator(p), ring_profile(d))


def pipeline_betti(c: SimplicialComplex) -> list[int]:
    """``[b_{1,2}, b_{2,3}, ...]`` of a fat forest via its Hilbert series."""
    return run_pipeline(c).betti.linear()
