"""Command-line front end: exact computations with machine-readable reports.

Every subcommand supports `--emit json`, which wraps the payload in an
envelope {command, inputs, result, version} serialized with sorted keys, so
identical inputs (and seeds) give byte-identical output.  The report path
(`--report-dir` on classify and freudenthal) writes a CSV table and a PNG
figure next to each other.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from fractions import Fraction
from typing import List, Optional

from . import __version__
from .classify import classify, constraint_fixtures, q_triviality
from .nlie import (ad, fj_residual_for, nbracket, wedge_bracket, wedge_parse,
                   wn_bracket)
from .polynomials import poly_parse, random_poly
from .qideal import (GeneratorSpec, generator_closed_form, generator_direct)
from .slnrep import (build_irrep, freudenthal_multiplicities, weyl_dimension)
from .verma import VermaContext, sing_plus_submodule, singular_vectors


def _parse_weight(text: str, n: int):
    parts = [p for p in text.replace(",", " ").split() if p]
    lam = tuple(int(p) for p in parts)
    if len(lam) != n - 1:
        raise ValueError("weight needs %d coordinates, got %d" % (n - 1, len(lam)))
    return lam


def _emit(args, result, text_lines: List[str]) -> None:
    if args.emit == "json":
        inputs = {k: v for k, v in vars(args).items()
                  if k not in ("func", "emit") and v is not None}
        envelope = {"command": args.command, "inputs": inputs,
                    "result": result, "version": __version__}
        print(json.dumps(envelope, sort_keys=True, default=str))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# Subcommand handlers (each returns a process exit code)
# ---------------------------------------------------------------------------

def cmd_bracket(args) -> int:
    n = args.n
    if len(args.polys) != n:
        raise ValueError("bracket needs exactly n polynomials")
    if args.algebra == "wn":
        value = wn_bracket([poly_parse(t, n - 1) for t in args.polys])
    else:
        value = nbracket([poly_parse(t, n) for t in args.polys])
    _emit(args, {"value": str(value)}, [str(value)])
    return 0


def cmd_fj(args) -> int:
    n = args.n
    rng = random.Random(args.seed)
    if args.algebra == "wn":
        nvars, bracket = n - 1, wn_bracket
    else:
        nvars, bracket = n, nbracket
    failures = []
    for t in range(args.trials):
        avs = [random_poly(rng, nvars, args.max_degree) for _ in range(n - 1)]
        bvs = [random_poly(rng, nvars, args.max_degree) for _ in range(n)]
        if not fj_residual_for(bracket, avs, bvs).is_zero():
            failures.append(t)
    result = {"trials": args.trials, "failures": failures}
    ok = not failures
    text = ["OK %d/%d" % (args.trials, args.trials)] if ok else \
           ["FAIL %d/%d (first failing trial %d)"
            % (args.trials - len(failures), args.trials, failures[0])]
    _emit(args, result, text)
    return 0 if ok else 1


def cmd_ad(args) -> int:
    w = wedge_parse(args.wedge, args.n)
    field = ad(w)
    _emit(args, {"field": str(field),
                 "divergence_free": field.is_divergence_free()}, [str(field)])
    return 0


def cmd_wedge_bracket(args) -> int:
    a = wedge_parse(args.left, args.n)
    b = wedge_parse(args.right, args.n)
    value = wedge_bracket(a, b)
    _emit(args, {"value": str(value)}, [str(value)])
    return 0


def _mono_of(text: str, n: int):
    p = poly_parse(text, n)
    if len(p.terms) != 1 or next(iter(p.terms.values())) != 1:
        raise ValueError("expected a plain monomial, got %r" % text)
    return next(iter(p.terms))


def _word_payload(word):
    first, second = word.canonical()
    return {
        "first_order": [[list(m), k + 1, str(c)]
                        for (m, k), c in sorted(first.items())],
        "second_order": [[list(ml), q + 1, list(mr), s + 1, str(c)]
                         for ((ml, q), (mr, s)), c in sorted(second.items())],
    }


def cmd_qgen(args) -> int:
    n = args.n
    monos = tuple(_mono_of(t, n) for t in args.monomials)
    spec = GeneratorSpec(monos, n)
    word = generator_closed_form(spec)
    payload = {"cases": spec.cases(), "total_degree": spec.total_degree(),
               "word": _word_payload(word)}
    lines = ["cases: %s  total degree: %d" % (",".join(spec.cases()) or "-",
                                              spec.total_degree())]
    if args.check:
        same = word == generator_direct(spec)
        payload["matches_direct"] = same
        lines.append("closed form %s direct construction"
                     % ("matches" if same else "DIFFERS FROM"))
        if not same:
            _emit(args, payload, lines)
            return 1
    lines.append("first order: %d terms, second order: %d terms"
                 % (len(payload["word"]["first_order"]),
                    len(payload["word"]["second_order"])))
    _emit(args, payload, lines)
    return 0


def cmd_freudenthal(args) -> int:
    n = args.n
    lam = _parse_weight(args.weight, n)
    mults = freudenthal_multiplicities(lam, n)
    dim = weyl_dimension(lam, n)
    rows = sorted(mults.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    payload = {"weight": list(lam), "dimension": dim,
               "multiplicity_sum": sum(mults.values()),
               "multiplicities": [[list(c), m] for c, m in rows]}
    lines = ["dim L(%s) = %d" % (lam, dim)]
    lines += ["  c=%s  mult=%d" % (c, m) for c, m in rows]
    if args.report_dir:
        _freudenthal_report(args.report_dir, lam, rows, dim)
        lines.append("report written to %s" % args.report_dir)
    _emit(args, payload, lines)
    return 0 if sum(mults.values()) == dim else 1


def _freudenthal_report(outdir: str, lam, rows, dim: int) -> None:
    os.makedirs(outdir, exist_ok=True)
    stem = "freudenthal_" + "-".join(str(x) for x in lam)
    with open(os.path.join(outdir, stem + ".csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["root_coordinates", "height", "multiplicity"])
        for c, m in rows:
            w.writerow([" ".join(str(x) for x in c), sum(c), m])
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from collections import Counter
    per_height = Counter()
    for c, m in rows:
        per_height[sum(c)] += m
    heights = sorted(per_height)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(heights, [per_height[h] for h in heights], color="#4878a8")
    ax.set_xlabel("height of lambda - mu")
    ax.set_ylabel("total multiplicity")
    ax.set_title("weight multiplicities, highest weight %s (dim %d)"
                 % (list(lam), dim))
    fig.tight_layout()
    fig.savefig(os.path.join(outdir, stem + ".png"), dpi=120)
    plt.close(fig)


def cmd_irrep(args) -> int:
    n = args.n
    lam = _parse_weight(args.weight, n)
    module = build_irrep(lam, n, max_dim=args.max_dim)
    mults = freudenthal_multiplicities(lam, n)
    per_weight = {c: len(ids) for c, ids in module.weights.items()}
    agree = per_weight == mults
    payload = {"weight": list(lam), "dimension": module.dim,
               "weyl_dimension": weyl_dimension(lam, n),
               "weight_space_dims": [[list(c), d] for c, d in
                                     sorted(per_weight.items())],
               "matches_freudenthal": agree}
    lines = ["dim = %d (Weyl formula %d), weight spaces match Freudenthal: %s"
             % (module.dim, payload["weyl_dimension"], agree)]
    _emit(args, payload, lines)
    return 0 if agree and module.dim == payload["weyl_dimension"] else 1


def cmd_singular(args) -> int:
    n = args.n
    lam = _parse_weight(args.weight, n)
    module = build_irrep(lam, n, max_dim=args.max_dim)
    ctx = VermaContext(module, depth_bound=args.depth)
    sing = singular_vectors(module, args.depth, ctx)
    sub = sing_plus_submodule(module, args.depth, ctx, sing)
    payload = {"weight": list(lam), "depth": args.depth,
               "singular_dims": {str(d): len(vs)
                                 for d, vs in sorted(sing.by_depth.items())},
               "degree_one_suffices": sing.degree_one_suffices,
               "submodule_dims": {str(d): sub.dimension(d)
                                  for d in range(1, args.depth + 1)}}
    lines = ["singular vectors by depth: " +
             ", ".join("%d: %d" % (d, len(vs))
                       for d, vs in sorted(sing.by_depth.items()))]
    lines.append("shift-submodule dims: " +
                 ", ".join("%d: %d" % (d, sub.dimension(d))
                           for d in range(1, args.depth + 1)))
    _emit(args, payload, lines)
    return 0


def _report_payload(r) -> dict:
    out = {"weight": list(r.weight), "admissible": r.admissible,
           "exceptional_index": r.exceptional, "depth": r.depth,
           "generators_evaluated": r.generators_evaluated,
           "violation_count": len(r.violations),
           "sweep_truncated": r.truncated,
           "notes": list(r.discrepancy_notes)}
    if r.violations:
        spec, value = r.violations[0]
        out["first_violation"] = {
            "monomials": [list(m) for m in spec.monomials],
            "value": [[list(p), i, str(c)]
                      for (p, i), c in sorted(value.terms.items())]}
    return out


def cmd_classify(args) -> int:
    n = args.n
    weights = None
    if args.weights:
        weights = [_parse_weight(w, n) for w in args.weights.split(";")]
    result = classify(n, grid_bound=args.grid, depth=args.depth,
                      weights=weights, max_violations=args.max_violations)
    payload = {"n": n, "grid_bound": args.grid, "depth": args.depth,
               "admissible": [list(w) for w in result.admissible],
               "conforms": result.conforms(),
               "discrepancy_notes": result.discrepancy_notes,
               "reports": [_report_payload(r) for r in result.reports]}
    lines = ["admissible weights: " +
             (", ".join(str(w) for w in result.admissible) or "none")]
    for r in result.reports:
        lines.append("  %s: %s (%d generators%s)"
                     % (r.weight, "admissible" if r.admissible else "violates",
                        r.generators_evaluated,
                        ", sweep truncated" if r.truncated else ""))
    for note in result.discrepancy_notes:
        lines.append("note [%s] weight %s: %s"
                     % (note["kind"], note["weight"], note["detail"]))
    if args.report_dir:
        _classify_report(args.report_dir, result)
        lines.append("report written to %s" % args.report_dir)
    _emit(args, payload, lines)
    return 0 if result.conforms() else 2


def _classify_report(outdir: str, result) -> None:
    os.makedirs(outdir, exist_ok=True)
    stem = "classify_n%d" % result.n
    with open(os.path.join(outdir, stem + ".csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["weight", "admissible", "exceptional_index",
                    "generators_evaluated", "violations", "sweep_truncated"])
        for r in result.reports:
            w.writerow([" ".join(str(x) for x in r.weight), int(r.admissible),
                        "" if r.exceptional is None else r.exceptional,
                        r.generators_evaluated, len(r.violations),
                        int(r.truncated)])
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    reports = result.reports
    if result.n == 3 and all(len(r.weight) == 2 for r in reports):
        xs = sorted({r.weight[0] for r in reports})
        ys = sorted({r.weight[1] for r in reports})
        grid = [[0.5] * len(xs) for _ in ys]
        for r in reports:
            grid[ys.index(r.weight[1])][xs.index(r.weight[0])] = \
                1.0 if r.admissible else 0.0
        fig, ax = plt.subplots(figsize=(5, 4))
        im = ax.imshow(grid, origin="lower", cmap="RdYlGn", vmin=0, vmax=1)
        ax.set_xticks(range(len(xs)), [str(x) for x in xs])
        ax.set_yticks(range(len(ys)), [str(y) for y in ys])
        ax.set_xlabel("lambda_1")
        ax.set_ylabel("lambda_2")
        ax.set_title("admissible weights (green), n=3")
        fig.colorbar(im, ax=ax, shrink=0.8)
    else:
        labels = [str(r.weight) for r in reports]
        colors = ["#2e8b57" if r.admissible else "#b03030" for r in reports]
        fig, ax = plt.subplots(figsize=(6, 0.5 * len(reports) + 1.5))
        ax.barh(range(len(reports)),
                [len(r.violations) for r in reports], color=colors)
        ax.set_yticks(range(len(reports)), labels)
        ax.set_xlabel("violations found (0 = admissible)")
        ax.set_title("admissibility sweep, n=%d" % result.n)
    fig.tight_layout()
    fig.savefig(os.path.join(outdir, stem + ".png"), dpi=120)
    plt.close(fig)


def cmd_fixtures(args) -> int:
    n = args.n
    weights = None
    if args.weights:
        weights = [_parse_weight(w, n) for w in args.weights.split(";")]
    results = constraint_fixtures(n, weights=weights, max_dim=args.max_dim)
    ok = all(r.passed for r in results)
    payload = {"n": n, "all_passed": ok,
               "rows": [{"name": r.name, "weight": list(r.weight),
                         "passed": r.passed, "note": r.note}
                        for r in results]}
    lines = ["%-24s %-12s %-5s %s" % ("fixture", "weight", "ok", "note")]
    lines += ["%-24s %-12s %-5s %s" % (r.name, str(r.weight),
                                       "pass" if r.passed else "FAIL", r.note)
              for r in results]
    lines.append("all passed" if ok else "FAILURES present")
    _emit(args, payload, lines)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snlie", description="exact n-ary bracket computations")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--emit", choices=("text", "json"), default="text")
        p.add_argument("--n", type=int, required=True,
                       help="number of variables n (>= 3)")

    p = sub.add_parser("bracket", help="n-ary Jacobian bracket of n polynomials")
    common(p)
    p.add_argument("--algebra", choices=("jacobian", "wn"), default="jacobian")
    p.add_argument("polys", nargs="+")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("fj", help="seeded Filippov-Jacobi property suite")
    common(p)
    p.add_argument("--algebra", choices=("jacobian", "wn"), default="jacobian")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=4)
    p.set_defaults(func=cmd_fj)

    p = sub.add_parser("ad", help="vector field of a wedge (f1 ^ ... ^ f_{n-1})")
    common(p)
    p.add_argument("wedge")
    p.set_defaults(func=cmd_ad)

    p = sub.add_parser("wedge-bracket", help="Lie bracket on the wedge space")
    common(p)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_wedge_bracket)

    p = sub.add_parser("qgen", help="ideal generator from 2n-2 monomials")
    common(p)
    p.add_argument("--check", action="store_true",
                   help="verify the closed form against the direct construction")
    p.add_argument("monomials", nargs="+")
    p.set_defaults(func=cmd_qgen)

    p = sub.add_parser("freudenthal", help="weight multiplicities of L(lambda)")
    common(p)
    p.add_argument("--weight", required=True, help="comma-separated, n-1 entries")
    p.add_argument("--report-dir", help="write CSV and PNG chart here")
    p.set_defaults(func=cmd_freudenthal)

    p = sub.add_parser("irrep", help="explicit module vs multiplicity oracles")
    common(p)
    p.add_argument("--weight", required=True)
    p.add_argument("--max-dim", type=int, default=300)
    p.set_defaults(func=cmd_irrep)

    p = sub.add_parser("singular", help="singular vectors of the induced module")
    common(p)
    p.add_argument("--weight", required=True)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--max-dim", type=int, default=300)
    p.set_defaults(func=cmd_singular)

    p = sub.add_parser("classify", help="admissibility sweep over a weight grid")
    common(p)
    p.add_argument("--grid", type=int, default=2)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--max-violations", type=int, default=10)
    p.add_argument("--weights", help="semicolon-separated weights overriding the grid")
    p.add_argument("--report-dir", help="write CSV and PNG figure here")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fixtures", help="frozen generator-value fixture table")
    common(p)
    p.add_argument("--weights", help="semicolon-separated weights")
    p.add_argument("--max-dim", type=int, default=300)
    p.set_defaults(func=cmd_fixtures)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
