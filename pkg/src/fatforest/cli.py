"""Command line front end.

Exit codes: 0 success, 1 verification mismatch, 2 parse error,
3 input is not a fat forest (pipeline mode), 4 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import families as fam
from .chordal import (
    NotFatForest,
    fat_forest_decomposition,
    is_chordal,
    maximal_cliques_chordal,
    mcs_order,
)
from .complex import SimplicialComplex, alexander_dual, complement_graph, flag_complex, minimal_nonfaces, one_skeleton
from .io import ParseError, read_edges, read_facets
from .oracle import (
    FieldSpec,
    TooLarge,
    has_linear_resolution,
    hochster_betti_table,
    homological_profile,
    is_two_linear,
)
from .series import BettiTable, run_pipeline

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_NOT_FAT_FOREST, EXIT_BUDGET = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


# -- argument helpers -----------------------------------------------------


def parse_params(text: str, names: list[str] | None = None) -> list[int] | dict[str, int]:
    """``"6,4,4,2,1"`` -> list; ``"d:2,r:1,k:3"`` or ``"d=2,..."`` -> dict."""
    toks = [t.strip() for t in text.split(",") if t.strip()]
    try:
        if any(":" in t or "=" in t for t in toks):
            out = {}
            for t in toks:
                key, val = t.replace("=", ":").split(":", 1)
                out[key.strip()] = int(val)
            return out
        return [int(t) for t in toks]
    except ValueError:
        raise CliError(EXIT_PARSE, f"cannot parse parameters {text!r}") from None


def _named(params, names: list[str]) -> list[int]:
    if isinstance(params, dict):
        missing = [k for k in names if k not in params]
        extra = [k for k in params if k not in names]
        if missing or extra:
            raise CliError(EXIT_PARSE, f"expected parameters {names}, got {sorted(params)}")
        return [params[k] for k in names]
    if len(params) != len(names):
        raise CliError(EXIT_PARSE, f"expected {len(names)} parameters {names}, got {params}")
    return list(params)


def parse_range(text: str) -> tuple[int, int]:
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise CliError(EXIT_PARSE, f"bad range {text!r}") from None


def _uniform_spec(text: str) -> fam.UniformForestSpec:
    try:
        return fam.UniformForestSpec(*_named(parse_params(text), ["d", "r", "k"]))
    except fam.InvalidSpec as e:
        raise CliError(EXIT_PARSE, str(e)) from None


def load_complex(args) -> SimplicialComplex:
    try:
        if getattr(args, "uniform", None):
            return fam.uniform_forest(_uniform_spec(args.uniform)).complex()
        if args.facets:
            if args.complement:
                raise CliError(EXIT_PARSE, "--complement applies to --edges input only")
            return read_facets(args.facets)
        if args.edges:
            g = read_edges(args.edges)
            return flag_complex(complement_graph(g) if args.complement else g)
    except (ParseError, OSError) as e:
        raise CliError(EXIT_PARSE, str(e)) from None
    raise CliError(EXIT_PARSE, "an input is required: --edges FILE or --facets FILE")


def _oracle(c: SimplicialComplex, args) -> BettiTable:
    try:
        return hochster_betti_table(c, args.field, max_n=args.max_n, workers=args.threads)
    except TooLarge as e:
        raise CliError(EXIT_BUDGET, str(e)) from None


def _betti_rows(t: BettiTable) -> list[dict]:
    return [{"i": i, "j": j, "value": v} for i, j, v in t.rows()]


def _decomposition_rows(d) -> list[dict]:
    out = []
    for idx, f in enumerate(d.facets):
        h = d.attachments[idx]
        out.append({
            "facet": list(f),
            "dim": len(f) - 1,
            "attach": list(h) if idx else None,
            "attach_dim": len(h) - 1 if idx else None,
        })
    return out


def _certificate(e: NotFatForest) -> dict:
    kind = {"not-chordal": "chordless-cycle", "not-flag": "missing-face"}.get(e.reason, e.reason)
    return {"kind": kind, "vertices": list(e.certificate)}


# -- rendering ------------------------------------------------------------


def _render_table_betti(t: BettiTable) -> list[str]:
    if not len(t):
        return ["  (zero ring)"]
    lines = ["   i   j  value"]
    lines += [f"{i:4d}{j:4d}  {v}" for i, j, v in t.rows()]
    return lines


def _emit(report: dict, fmt: str, table_lines: list[str], csv_rows: tuple[list[str], list[list]] | None):
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        header, rows = csv_rows if csv_rows else (["i", "j", "value"], [[r["i"], r["j"], r["value"]] for r in report.get("betti", [])])
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    return "\n".join(table_lines) + "\n"


# -- subcommands ----------------------------------------------------------


def cmd_betti(args) -> tuple[int, str]:
    c = load_complex(args)
    report: dict = {"n": c.n, "mode": args.mode}
    ok, _ = is_chordal(one_skeleton(c), certificate=True)
    report["chordal_complement"] = ok
    lines = [f"n = {c.n}   mode = {args.mode}"]
    pipe = None
    try:
        pipe = run_pipeline(c)
    except NotFatForest as e:
        report["certificate"] = _certificate(e)
        lines.append("not 2-linear: " + str(e))
        if args.mode == "pipeline":
            return EXIT_NOT_FAT_FOREST, _emit(report, args.format, lines, None)
    code = EXIT_OK
    if pipe is not None and args.mode != "oracle":
        d, prof = pipe.decomposition, pipe.profile
        report["decomposition"] = _decomposition_rows(d)
        report["hilbert_numerator"] = list(pipe.numerator.coeffs)
        lines.append("decomposition:")
        for row in report["decomposition"]:
            att = "" if row["attach"] is None else f"  attached along {row['attach']} (r={row['attach_dim']})"
            lines.append(f"  {row['facet']} (d={row['dim']}){att}")
        lines.append(f"Hilbert series: {pipe.series}")
        lines.append(f"numerator over (1-t)^{c.n}: {list(pipe.numerator.coeffs)}")
        lines.append(f"linear Betti numbers: {pipe.betti.linear()}")
    betti = pipe.betti if pipe is not None else None
    if args.mode in ("oracle", "both"):
        table = _oracle(c, args)
        lines.append(f"oracle over {args.field}:")
        lines += _render_table_betti(table)
        if not is_two_linear(table):
            lines.append("oracle: resolution is not 2-linear")
        if args.mode == "both" and pipe is not None and table != pipe.betti:
            lines.append("MISMATCH between pipeline and oracle")
            code = EXIT_MISMATCH
        if betti is None or args.mode == "oracle":
            betti = table
    report["betti"] = _betti_rows(betti) if betti is not None else []
    if pipe is not None and args.mode != "oracle":
        prof = pipe.profile
        report.update(depth=prof.depth, projdim=prof.projdim, krull_dim=prof.krull_dim, cohen_macaulay=prof.cohen_macaulay)
        lines.append(f"depth {prof.depth}, projdim {prof.projdim}, dim {prof.krull_dim}, CM {prof.cohen_macaulay}")
    return code, _emit(report, args.format, lines, None)


_FAMILY_BUILDERS = {
    "bipartite": (["m", "n"], lambda m, n: (fam.multipartite_complex(m, n), lambda i: fam.betti_bipartite(m, n, i), None)),
    "lexsegment": (["a", "b"], lambda a, b: (fam.lexsegment_complex(a, b), lambda i: fam.betti_lex(a, b, i), None)),
    "final-segment": (["a", "b", "n"], lambda a, b, n: (fam.final_segment_complex(a, b, n), None, None)),
    "n-one-block": (["n", "m"], lambda n, m: (fam.ferrers_complex([n] + [1] * (m - 1)), lambda i: fam.betti_n_one_block(n, m, i), fam.ferrers_labels([n] + [1] * (m - 1)))),
    "staircase": (["n"], lambda n: (fam.ferrers_complex(range(n, 0, -1)), lambda i: fam.betti_staircase(n, i), fam.ferrers_labels(range(n, 0, -1)))),
    "three-block": (["m", "n", "o"], lambda m, n, o: (fam.three_block_complex(m, n, o), lambda i: fam.betti_three_block(m, n, o, i), None)),
}


def _build_family(name: str, params, seed: int):
    if name in _FAMILY_BUILDERS:
        names, build = _FAMILY_BUILDERS[name]
        return build(*_named(params, names))
    if name == "multipartite":
        ns = params if isinstance(params, list) else list(params.values())
        return fam.multipartite_complex(*ns), lambda i: fam.betti_multipartite(ns, i), None
    if name == "ferrers":
        rows = params if isinstance(params, list) else list(params.values())
        try:
            t = fam.Tableau(tuple(rows))
        except fam.InvalidTableau as e:
            raise CliError(EXIT_PARSE, str(e)) from None
        return fam.ferrers_complex(t), lambda i: fam.corso_nagel_betti(t, i), fam.ferrers_labels(t)
    if name == "uniform":
        spec = _uniform_spec(",".join(f"{k}:{v}" for k, v in params.items()) if isinstance(params, dict) else ",".join(map(str, params)))
        return fam.uniform_forest(spec).complex(), lambda i: fam.betti_uniform(spec, i), None
    if name == "random":
        max_k, max_d = _named(params, ["max_k", "max_d"])
        return fam.random_fat_forest(max_k, max_d, seed).complex(), None, None
    raise fam.UnknownFamily(name)


FAMILY_NAMES = sorted([*_FAMILY_BUILDERS, "multipartite", "ferrers", "uniform", "random"])


def cmd_family(args) -> tuple[int, str]:
    params = parse_params(args.params)
    try:
        c, closed, labels = _build_family(args.name, params, args.seed)
    except ValueError as e:
        raise CliError(EXIT_PARSE, str(e)) from None
    pipe = run_pipeline(c)
    lo, hi = parse_range(args.i_range) if args.i_range else (1, max(pipe.profile.projdim, 1))
    vec = pipe.betti.linear()
    rows, code = [], EXIT_OK
    for i in range(lo, hi + 1):
        p = vec[i - 1] if 1 <= i <= len(vec) else 0
        cf = closed(i) if closed else None
        match = cf is None or cf == p
        if not match:
            code = EXIT_MISMATCH
        rows.append({"i": i, "closed_form": cf, "pipeline": p, "match": match})
    prof = pipe.profile
    facets = [[labels[v] for v in f] if labels else list(f) for f in c.facets]
    report = {
        "family": args.name,
        "params": params,
        "n": c.n,
        "facets": facets,
        "rows": rows,
        "depth": prof.depth,
        "projdim": prof.projdim,
        "krull_dim": prof.krull_dim,
        "cohen_macaulay": prof.cohen_macaulay,
    }
    lines = [f"{args.name} {args.params}: n = {c.n}", "facets: " + "  ".join("[" + ",".join(map(str, f)) + "]" for f in facets)]
    lines.append("   i  closed  pipeline  match")
    for r in rows:
        cf = "-" if r["closed_form"] is None else str(r["closed_form"])
        lines.append(f"{r['i']:4d}  {cf:>6}  {r['pipeline']:>8}  {'yes' if r['match'] else 'NO'}")
    lines.append(f"depth {prof.depth}, projdim {prof.projdim}, dim {prof.krull_dim}, CM {prof.cohen_macaulay}")
    csv_rows = (["i", "closed_form", "pipeline", "match"], [[r["i"], r["closed_form"], r["pipeline"], r["match"]] for r in rows])
    return code, _emit(report, args.format, lines, csv_rows)


def cmd_verify(args) -> tuple[int, str]:
    ranges = {}
    for spec in args.range or []:
        if "=" not in spec:
            raise CliError(EXIT_PARSE, f"range must look like name=lo:hi, got {spec!r}")
        k, v = spec.split("=", 1)
        ranges[k.strip()] = parse_range(v)
    try:
        rep = fam.verify_identity(args.family, ranges)
    except KeyError as e:
        raise CliError(EXIT_PARSE, f"unknown family or range name: {e}") from None
    report = {
        "family": rep.family,
        "ranges": {k: list(v) for k, v in rep.ranges.items()},
        "checked": rep.checked,
        "mismatches": [{"params": list(m.params), "i": m.i, "values": m.values} for m in rep.mismatches],
        "variant_discrepancies": rep.variant_discrepancies,
        "ok": rep.ok,
    }
    lines = [f"{rep.family}: {rep.checked} values checked, {len(rep.mismatches)} mismatches"]
    if rep.mismatches:
        m = rep.mismatches[0]
        lines.append(f"first mismatch: params={m.params} i={m.i} values={m.values}")
    if rep.variant_discrepancies:
        lines.append(f"variant formula differs from the pipeline at {rep.variant_discrepancies} values")
    csv_rows = (["params", "i", "values"], [[" ".join(map(str, m.params)), m.i, json.dumps(m.values, sort_keys=True)] for m in rep.mismatches])
    return (EXIT_OK if rep.ok else EXIT_MISMATCH), _emit(report, args.format, lines, csv_rows)


def cmd_dual(args) -> tuple[int, str]:
    c = load_complex(args)
    dual = alexander_dual(c)
    lines = [f"n = {c.n}"]
    report: dict = {"n": c.n, "dual_facets": [list(f) for f in dual.facets]}
    if dual.is_void:
        lines.append("dual is the void complex: its Stanley-Reisner ideal is the unit ideal (the input's ideal is zero)")
        report.update(dual_minimal_nonfaces=[[]], betti=[], cohen_macaulay=None, linear_resolution=None)
        return EXIT_OK, _emit(report, args.format, lines, None)
    table = _oracle(dual, args)
    projdim, reg = homological_profile(table)
    cm = projdim == dual.n - (dual.dim + 1)
    linear = has_linear_resolution(table)
    report.update(
        dual_minimal_nonfaces=[list(f) for f in minimal_nonfaces(dual)],
        betti=_betti_rows(table),
        projdim=projdim,
        regularity=reg,
        cohen_macaulay=cm,
        linear_resolution=linear,
    )
    lines.append("dual facets: " + "  ".join("{" + ",".join(map(str, f)) + "}" for f in dual.facets))
    lines.append("dual minimal non-faces: " + "  ".join("{" + ",".join(map(str, f)) + "}" for f in report["dual_minimal_nonfaces"]))
    lines.append(f"oracle Betti table of the dual over {args.field}:")
    lines += _render_table_betti(table)
    lines.append(f"CM {cm}, linear resolution {linear}, projdim {projdim}, regularity {reg}")
    code = EXIT_OK
    if getattr(args, "uniform", None):
        spec = _uniform_spec(args.uniform)
        pred = fam.uniform_dual_betti(spec)
        report["predicted"] = [{"i": i, "j": j, "value": v} for (i, j), v in sorted(pred.items())]
        agree = BettiTable(pred) == table
        report["prediction_matches"] = agree
        lines.append("predicted: " + ", ".join(f"b_{i},{j} = {v}" for (i, j), v in sorted(pred.items())) + ("  (matches)" if agree else "  (MISMATCH)"))
        if not agree:
            code = EXIT_MISMATCH
    return code, _emit(report, args.format, lines, None)


def cmd_chordal(args) -> tuple[int, str]:
    if not args.edges:
        raise CliError(EXIT_PARSE, "chordal needs --edges FILE")
    try:
        g = read_edges(args.edges)
    except (ParseError, OSError) as e:
        raise CliError(EXIT_PARSE, str(e)) from None
    if args.complement:
        g = complement_graph(g)
    ok, cycle = is_chordal(g, certificate=True)
    report = {"n": g.n, "chordal": ok, "order": list(mcs_order(g))}
    lines = [f"n = {g.n}: {'chordal' if ok else 'not chordal'}", f"MCS elimination order: {report['order']}"]
    if ok:
        report["maximal_cliques"] = [list(q) for q in maximal_cliques_chordal(g)]
        lines.append("maximal cliques: " + "  ".join(map(str, report["maximal_cliques"])))
    else:
        report["certificate"] = {"kind": "chordless-cycle", "vertices": list(cycle)}
        lines.append(f"chordless cycle: {list(cycle)}")
    return EXIT_OK, _emit(report, args.format, lines, None)


def cmd_decompose(args) -> tuple[int, str]:
    c = load_complex(args)
    try:
        d = fat_forest_decomposition(c)
    except NotFatForest as e:
        report = {"n": c.n, "fat_forest": False, "certificate": _certificate(e)}
        return EXIT_NOT_FAT_FOREST, _emit(report, args.format, [f"not a fat forest: {e}"], None)
    rows = _decomposition_rows(d)
    report = {"n": c.n, "fat_forest": True, "decomposition": rows}
    lines = [f"n = {c.n}: fat forest with {d.k} facets"]
    for row in rows:
        att = "" if row["attach"] is None else f"  attached along {row['attach']} (r={row['attach_dim']})"
        lines.append(f"  {row['facet']} (d={row['dim']}){att}")
    return EXIT_OK, _emit(report, args.format, lines, None)


def cmd_hilbert(args) -> tuple[int, str]:
    c = load_complex(args)
    try:
        pipe = run_pipeline(c)
    except NotFatForest as e:
        return EXIT_NOT_FAT_FOREST, _emit({"n": c.n, "certificate": _certificate(e)}, args.format, [f"not a fat forest: {e}"], None)
    prof = pipe.profile
    report = {
        "n": c.n,
        "series": [{"coefficient": cf, "exponent": e} for cf, e in pipe.series.terms],
        "hilbert_numerator": list(pipe.numerator.coeffs),
        "betti": _betti_rows(pipe.betti),
        "depth": prof.depth,
        "projdim": prof.projdim,
        "krull_dim": prof.krull_dim,
        "cohen_macaulay": prof.cohen_macaulay,
    }
    lines = [
        f"H(t) = {pipe.series}",
        f"     = p(t)/(1-t)^{c.n},  p = {list(pipe.numerator.coeffs)}",
        f"linear Betti numbers: {pipe.betti.linear()}",
        f"depth {prof.depth}, projdim {prof.projdim}, dim {prof.krull_dim}, CM {prof.cohen_macaulay}",
    ]
    return EXIT_OK, _emit(report, args.format, lines, None)


def cmd_oracle(args) -> tuple[int, str]:
    c = load_complex(args)
    table = _oracle(c, args)
    projdim, reg = homological_profile(table)
    report = {"n": c.n, "field": str(args.field), "betti": _betti_rows(table), "two_linear": is_two_linear(table), "projdim": projdim, "regularity": reg}
    lines = [f"n = {c.n}, field {args.field}"] + _render_table_betti(table)
    lines.append(f"2-linear {report['two_linear']}, projdim {projdim}, regularity {reg}")
    return EXIT_OK, _emit(report, args.format, lines, None)


# -- parser ---------------------------------------------------------------


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "csv"], default="table")
    common.add_argument("--field", type=_field, default=FieldSpec(2), help="2, another prime, or 'rational'")
    common.add_argument("--mode", choices=["pipeline", "oracle", "both"], default="pipeline")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--max-n", type=int, default=16)
    common.add_argument("--seed", type=int, default=0)

    inputs = argparse.ArgumentParser(add_help=False)
    src = inputs.add_mutually_exclusive_group()
    src.add_argument("--edges", metavar="FILE")
    src.add_argument("--facets", metavar="FILE")
    inputs.add_argument("--complement", action="store_true", help="use the complement of the --edges graph")

    parser = argparse.ArgumentParser(prog="fatforest", description="Betti numbers of edge rings with 2-linear resolution.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", parents=[common, inputs], help="Betti data of an edge ring or complex")
    p.set_defaults(func=cmd_betti)
    p = sub.add_parser("family", parents=[common], help="closed form versus pipeline for a named family")
    p.add_argument("name", choices=FAMILY_NAMES)
    p.add_argument("--params", required=True)
    p.add_argument("--i-range")
    p.set_defaults(func=cmd_family)
    p = sub.add_parser("verify", parents=[common], help="check a family's identities over parameter ranges")
    p.add_argument("family", choices=fam.FAMILIES)
    p.add_argument("--range", action="append", metavar="NAME=LO:HI")
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("dual", parents=[common, inputs], help="Alexander dual and its Betti table")
    p.add_argument("--uniform", metavar="d:D,r:R,k:K")
    p.set_defaults(func=cmd_dual)
    p = sub.add_parser("chordal", parents=[common, inputs], help="chordality test with certificate")
    p.set_defaults(func=cmd_chordal)
    for name, func, text in [
        ("decompose", cmd_decompose, "fat-forest decomposition"),
        ("hilbert", cmd_hilbert, "Hilbert series and ring profile"),
        ("oracle", cmd_oracle, "Hochster-formula Betti table"),
    ]:
        p = sub.add_parser(name, parents=[common, inputs], help=text)
        p.add_argument("--uniform", metavar="d:D,r:R,k:K")
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, out = args.func(args)
    except CliError as e:
        print(f"fatforest: {e}", file=sys.stderr)
        return e.code
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
