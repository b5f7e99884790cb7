"""Acceptance gate: eight end-to-end checks with their time limits.

Each ``criterion_*`` function raises AssertionError on failure and returns a
short summary on success. Under pytest every criterion adds one PASS/FAIL
line to the terminal summary; run this file directly to get the same lines
without pytest.
"""

from __future__ import annotations

import contextlib
import io
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fatforest import cli  # noqa: E402
from fatforest.chordal import NotFatForest, fat_forest_decomposition, is_chordal  # noqa: E402
from fatforest.complex import SimplicialComplex, alexander_dual, flag_complex, one_skeleton  # noqa: E402
from fatforest.families import (  # noqa: E402
    UniformForestSpec,
    betti_ferrers_64421,
    corso_nagel_betti,
    ferrers_complex,
    random_fat_forest,
    random_graph,
    uniform_dual_betti,
    uniform_forest,
)
from fatforest.oracle import (  # noqa: E402
    GF2,
    GF32003,
    RATIONALS,
    has_linear_resolution,
    hochster_betti_table,
    homological_profile,
    is_two_linear,
)
from fatforest.series import BettiTable, run_pipeline  # noqa: E402

import conftest  # noqa: E402

FIELDS = (GF2, GF32003, RATIONALS)
WORKED_EXAMPLE = SimplicialComplex(5, [[1, 2], [2, 3, 4], [5]])
PENTAGON = SimplicialComplex(5, [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]])


def _elapsed_below(limit: float, start: float, what: str) -> float:
    dt = time.perf_counter() - start
    assert dt < limit, f"{what} took {dt:.2f} s, limit {limit} s"
    return dt


def criterion_1(field=GF2) -> tuple[str, BettiTable]:
    start = time.perf_counter()
    res = run_pipeline(WORKED_EXAMPLE)
    assert res.numerator.coeffs == (1, 0, -6, 9, -5, 1), res.numerator.coeffs
    assert res.numerator.n == 5
    assert res.betti.linear() == [6, 9, 5, 1], res.betti.linear()
    table = hochster_betti_table(WORKED_EXAMPLE, field)
    assert table == res.betti, (table, res.betti)
    dt = _elapsed_below(1.0, start, "worked example")
    return f"numerator (1,0,-6,9,-5,1), betti (6,9,5,1), oracle agrees over {field} ({dt:.3f} s)", table


def criterion_2(field=GF2) -> tuple[str, BettiTable]:
    start = time.perf_counter()
    c = ferrers_complex((6, 4, 4, 2, 1))
    assert c.n == 11
    vec = run_pipeline(c).betti.linear()
    for i in range(1, c.n + 1):
        got = vec[i - 1] if i <= len(vec) else 0
        assert got == betti_ferrers_64421(i) == corso_nagel_betti((6, 4, 4, 2, 1), i), i
    assert vec[0] == 17
    table = hochster_betti_table(c, field)
    assert table.linear() == vec and is_two_linear(table)
    dt = _elapsed_below(30.0, start, "Ferrers oracle check")
    return f"betti {tuple(vec)} from formula, tableau formula, pipeline and oracle over {field} ({dt:.2f} s)", table


IDENTITY_SUITES = [
    ("bipartite-jacques", ["m=1:12", "n=1:12"]),
    ("bipartite-corso-nagel", ["m=1:12", "n=1:12"]),
    ("multipartite-jacques", ["N=1:12", "s=1:4"]),
    ("lexsegment", ["a=1:12", "b=1:12"]),
    ("staircase", ["n=1:10"]),
    ("n-one-block", ["m=2:10", "n=2:10"]),
    ("three-block", ["m=2:5", "n=2:5", "o=2:5"]),
    ("uniform", ["n=1:13"]),
]


def criterion_3() -> str:
    start = time.perf_counter()
    failed = []
    for family, ranges in IDENTITY_SUITES:
        argv = ["verify", family, "--format", "json"]
        for r in ranges:
            argv += ["--range", r]
        with contextlib.redirect_stdout(io.StringIO()):
            code = cli.main(argv)
        if code != 0:
            failed.append((family, code))
    assert not failed, f"suites with nonzero exit: {failed}"
    dt = _elapsed_below(120.0, start, "identity suites")
    return f"{len(IDENTITY_SUITES)} suites exit 0 ({dt:.2f} s)"


def criterion_4(count: int = 600) -> str:
    start = time.perf_counter()
    bad = []
    chordal = 0
    for seed in range(count):
        n = 1 + seed % 8
        p = (0.2, 0.4, 0.6, 0.8)[(seed // 8) % 4]
        g = random_graph(n, p, seed)
        # the edge ring of the complement of g has Stanley-Reisner complex flag(g)
        linear = is_two_linear(hochster_betti_table(flag_complex(g)))
        ok = is_chordal(g)
        chordal += ok
        if ok != linear:
            bad.append(seed)
    assert not bad, f"counterexamples at seeds {bad[:10]}"
    dt = _elapsed_below(120.0, start, "Froberg sample")
    return f"{count} graphs on n <= 8 ({chordal} chordal), no counterexamples ({dt:.2f} s)"


def criterion_5(count: int = 200) -> str:
    start = time.perf_counter()
    failures = []
    sizes = []
    for seed in range(count):
        dec = random_fat_forest(6, 5, seed, max_n=13)
        c = dec.complex()
        assert c.n <= 13
        sizes.append(c.n)
        pd_oracle, _ = homological_profile(hochster_betti_table(c))
        prof = run_pipeline(c).profile
        depth = min(dec.attach_dims) + 2 if dec.k > 1 else c.n
        cm = len(set(dec.dims)) == 1 and all(r == dec.dims[0] - 1 for r in dec.attach_dims)
        cm_oracle = pd_oracle == c.n - (c.dim + 1)
        checks = (
            depth == c.n - pd_oracle == prof.depth,
            prof.projdim == pd_oracle,
            cm == cm_oracle == prof.cohen_macaulay,
        )
        if not all(checks):
            failures.append((seed, checks))
    assert not failures, f"profile failures: {failures[:5]}"
    dt = time.perf_counter() - start
    return f"{count} forests, n from {min(sizes)} to {max(sizes)}, zero failures ({dt:.2f} s)"


def uniform_specs(max_n: int = 12):
    for d in range(0, max_n):
        for r in range(-1, d):
            for k in range(1, max_n + 1):
                if k * (d - r) + r + 1 <= max_n:
                    yield UniformForestSpec(d, r, k)


def criterion_6(field=GF2) -> tuple[str, dict]:
    start = time.perf_counter()
    tables = {}
    problems = []
    for spec in uniform_specs():
        c = uniform_forest(spec).complex()
        dual = alexander_dual(c)
        table = hochster_betti_table(dual, field)
        tables[(spec.d, spec.r, spec.k)] = table
        if table != BettiTable(uniform_dual_betti(spec)):
            problems.append((spec, "table", table.rows()))
            continue
        if spec.k == 1:
            # a single simplex: the dual is void and there is no ideal to resolve
            if not dual.is_void:
                problems.append((spec, "void"))
            continue
        if has_linear_resolution(table) != (spec.r == spec.d - 1):
            problems.append((spec, "linear"))
        pd_dual, reg_dual = homological_profile(table)
        if pd_dual != dual.n - (dual.dim + 1):
            problems.append((spec, "cohen-macaulay"))
        pd, reg = homological_profile(hochster_betti_table(c, field))
        # the swap relates ideal regularity (quotient regularity + 1) to projdim
        if not (reg + 1 == pd_dual and pd == reg_dual + 1):
            problems.append((spec, "terai", (pd, reg, pd_dual, reg_dual)))
    assert not problems, f"dual failures: {problems[:5]}"
    dt = time.perf_counter() - start
    return f"{len(tables)} specs with n <= 12 over {field}: predicted tables, linearity, Terai swap ({dt:.2f} s)", tables


def criterion_7() -> str:
    try:
        fat_forest_decomposition(PENTAGON)
    except NotFatForest as e:
        assert e.reason == "not-chordal"
        cyc = e.certificate
        assert conftest.is_chordless_cycle(one_skeleton(PENTAGON), cyc), cyc
    else:
        raise AssertionError("pipeline accepted the pentagon")
    table = hochster_betti_table(PENTAGON)
    assert table[(3, 5)] == 1 and not is_two_linear(table)
    return f"refused with chordless cycle {list(cyc)}; oracle b_3,5 = 1, not 2-linear"


def criterion_8() -> str:
    results = {}
    for field in FIELDS:
        results[field] = (criterion_1(field)[1], criterion_2(field)[1], criterion_6(field)[1])
    first = results[FIELDS[0]]
    for field in FIELDS[1:]:
        for idx, name in enumerate(("worked example", "Ferrers", "duals")):
            assert results[field][idx] == first[idx], f"{name} differs over {field}"
    return "criteria 1, 2, 6 identical over GF(2), GF(32003) and Q"


CRITERIA = {
    1: ("worked example", lambda: criterion_1()[0]),
    2: ("Ferrers (6,4,4,2,1)", lambda: criterion_2()[0]),
    3: ("identity suites", criterion_3),
    4: ("Froberg equivalence", criterion_4),
    5: ("ring profile on random forests", criterion_5),
    6: ("uniform forest duals", lambda: criterion_6()[0]),
    7: ("pentagon negative control", criterion_7),
    8: ("characteristic independence", criterion_8),
}


def run_criterion(num: int) -> tuple[bool, str]:
    name, fn = CRITERIA[num]
    try:
        detail = fn()
    except AssertionError as e:
        return False, f"FAIL  criterion {num} ({name}): {e}"
    return True, f"PASS  criterion {num} ({name}): {detail}"


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num):
    ok, line = run_criterion(num)
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(num) for num in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
