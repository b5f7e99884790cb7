from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fatforest.chordal import fat_forest_decomposition
from fatforest.complex import SimplicialComplex, minimal_nonfaces
from fatforest.families import UniformForestSpec, random_fat_forest, uniform_forest
from fatforest.series import (
    BettiTable,
    ExponentOverflow,
    NotTwoLinearShape,
    NumeratorPoly,
    SeriesTermSum,
    betti_from_numerator,
    binom,
    hilbert_series,
    numerator,
    ring_profile,
    run_pipeline,
)

SAMPLE_POINTS = [Fraction(-3), Fraction(-1, 2), Fraction(1, 3), Fraction(2, 7), Fraction(5)]


def test_binom_convention():
    assert binom(5, 2) == 10
    assert binom(3, 4) == 0 and binom(3, -1) == 0 and binom(0, 0) == 1


def test_worked_example_series(worked_example):
    s = hilbert_series(fat_forest_decomposition(worked_example))
    assert s.terms == ((1, 3), (1, 2), (-1, 0))
    # the worked example's final form (1 + 2t - 3t^2 + t^3) / (1 - t)^3
    for t in SAMPLE_POINTS:
        assert s(t) == (1 + 2 * t - 3 * t**2 + t**3) / (1 - t) ** 3


def test_single_simplex_series():
    s = hilbert_series(fat_forest_decomposition(SimplicialComplex.simplex(4)))
    assert s.terms == ((1, 4),)


@pytest.mark.parametrize("d,r,k", [(1, 0, 2), (2, 0, 3), (3, 1, 4), (2, -1, 2)])
def test_uniform_series(d, r, k):
    s = hilbert_series(uniform_forest(UniformForestSpec(d, r, k)))
    assert s == SeriesTermSum.from_terms([(k, d + 1), (-(k - 1), r + 1)])


def test_numerator_examples(worked_example):
    s = hilbert_series(fat_forest_decomposition(worked_example))
    assert numerator(s, 5).coeffs == (1, 0, -6, 9, -5, 1)
    assert numerator(SeriesTermSum.from_terms([(1, 4)]), 4).coeffs == (1,)
    # 2(1-t) - (1-t)^2 = 1 - t^2
    path = hilbert_series(uniform_forest(UniformForestSpec(1, 0, 2)))
    assert numerator(path, 3).coeffs == (1, 0, -1)


def test_numerator_overflow():
    with pytest.raises(ExponentOverflow):
        numerator(SeriesTermSum.from_terms([(1, 5)]), 3)


@given(st.integers(0, 2**63 - 1))
def test_numerator_agrees_with_rational_evaluation(seed):
    d = random_fat_forest(5, 4, seed)
    s = hilbert_series(d)
    p = numerator(s, d.n)
    for t in SAMPLE_POINTS:
        assert s(t) == Fraction(p(t)) / (1 - t) ** d.n


def test_betti_from_numerator_examples():
    t = betti_from_numerator(NumeratorPoly((1, 0, -6, 9, -5, 1), 5))
    assert t.linear() == [6, 9, 5, 1] and t[(0, 0)] == 1
    assert betti_from_numerator(NumeratorPoly((1,), 3)) == BettiTable({(0, 0): 1})
    assert betti_from_numerator(NumeratorPoly((1, 0, -1), 3)).rows() == [(0, 0, 1), (1, 2, 1)]


@pytest.mark.parametrize("coeffs", [(1, -1), (1, 0, 2), (2, 0, -1), (1, 0, -1, -1)])
def test_betti_from_numerator_rejects_non_linear_shapes(coeffs):
    with pytest.raises(NotTwoLinearShape):
        betti_from_numerator(NumeratorPoly(coeffs, 5))


def test_profile_examples(worked_example):
    prof = ring_profile(fat_forest_decomposition(worked_example))
    assert (prof.depth, prof.projdim, prof.krull_dim, prof.cohen_macaulay) == (1, 4, 3, False)
    single = ring_profile(fat_forest_decomposition(SimplicialComplex.simplex(3)))
    assert (single.depth, single.projdim, single.krull_dim, single.cohen_macaulay) == (3, 0, 3, True)


@pytest.mark.parametrize("d,k", [(1, 3), (2, 2), (3, 4)])
def test_cm_uniform(d, k):
    prof = ring_profile(uniform_forest(UniformForestSpec(d, d - 1, k)))
    assert prof.cohen_macaulay and prof.depth == d + 1 == prof.krull_dim


@given(st.integers(0, 2**63 - 1))
def test_pipeline_invariants(seed):
    d = random_fat_forest(6, 4, seed)
    c = d.complex()
    res = run_pipeline(c)
    p, prof, vec = res.numerator, res.profile, res.betti.linear()
    assert prof.depth + prof.projdim == c.n
    assert prof.cohen_macaulay == (prof.depth == prof.krull_dim)
    assert vec[:1] == ([len(minimal_nonfaces(c))] if minimal_nonfaces(c) else [])
    assert prof.projdim == len(vec) == max(p.degree - 1, 0)
    # a full simplex is a polynomial ring with p = 1
    if prof.krull_dim < c.n:
        assert p(1) == 0
        assert 1 + sum((-1) ** i * b for i, b in enumerate(vec, 1)) == 0
    else:
        assert p.coeffs == (1,)
    q = p.divide_one_minus_t(c.n - prof.krull_dim)
    assert q(1) == sum(1 for di in d.dims if di + 1 == prof.krull_dim)


@pytest.mark.parametrize("d,r,k", [(2, 0, 3), (3, 1, 2), (1, 0, 5)])
def test_uniform_quotient_counts_facets(d, r, k):
    dec = uniform_forest(UniformForestSpec(d, r, k))
    p = numerator(hilbert_series(dec), dec.n)
    assert p.divide_one_minus_t(dec.n - (d + 1))(1) == k
