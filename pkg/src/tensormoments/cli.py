"""Command-line front end: expect, effective, tree, weingarten, wishart, mc.

Every cross-check command prints a PASS/FAIL verdict with both sides'
exact values and exits 0 only when all checks pass.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .algebra import LaurentPoly, partitions_of
from .bubbles import Bubble, ColorSplit, chain_decomposition, chain_obstruction
from .effective import effective_observable, laguerre_reconstruct, wishart_moment_exact
from .montecarlo import SampleSpec, estimate_expectation
from .oracle import (
    BubbleTooLarge,
    dominant_contractions,
    expectation,
    gaussian_expectation,
    per_color_dimensions,
)
from .trees import CornerLabeledTree, catalan_product, enumerate_trees, tree_to_bubble
from .weingarten import weingarten_table


def _emit(report: dict, args) -> None:
    text = json.dumps(report, indent=1)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(text)


def _parse_dim(text: str):
    """'N', 'N^3' or a plain integer."""
    if text.startswith("N"):
        power = 1 if text == "N" else int(text.split("^", 1)[1])
        return LaurentPoly.monomial(power)
    return int(text)


def cmd_expect(args) -> int:
    bubble = Bubble.load(args.bubble)
    try:
        result = expectation(bubble, alpha=args.alpha, threads=args.threads)
    except BubbleTooLarge as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    exp, count = dominant_contractions(bubble, threads=args.threads)
    report = result.to_json()
    report["dominant"] = {"exp": exp, "count": count}
    report["raw_str"] = str(result.raw)
    report["scaled_str"] = str(result.scaled)
    if args.numeric_N is not None:
        report["value_at_N"] = per_color_dimensions(
            bubble, [args.numeric_N] * bubble.d, threads=args.threads
        )
    _emit(report, args)
    return 0


def cmd_effective(args) -> int:
    bubble = Bubble.load(args.bubble)
    split = ColorSplit(bubble.d, [int(c) for c in args.split.split(",")])
    if chain_decomposition(bubble, split) is None:
        print(f"not chain-expressible: {chain_obstruction(bubble, split)}", file=sys.stderr)
        return 2
    expansion = effective_observable(bubble, split)
    row_dim = LaurentPoly.monomial(split.d - len(split.column_colors))
    col_dim = LaurentPoly.monomial(len(split.column_colors))
    reconstructed = laguerre_reconstruct(expansion, row_dim, col_dim)
    oracle = gaussian_expectation(bubble, threads=args.threads)
    ok = reconstructed == oracle
    report = {
        "expansion": expansion.to_json(),
        "expansion_str": str(expansion),
        "reconstructed": reconstructed.to_records(),
        "oracle": oracle.to_records(),
        "cross_check": "PASS" if ok else "FAIL",
    }
    _emit(report, args)
    print(f"cross-check: {'PASS' if ok else 'FAIL'} "
          f"(angular route {reconstructed} vs oracle {oracle})")
    return 0 if ok else 1


def _tree_rows(trees, threads):
    rows = []
    for t in trees:
        bubble = tree_to_bubble(t)
        predicted = catalan_product(t)
        _, coeff = gaussian_expectation(bubble, threads=threads).leading_term()
        rows.append(
            {
                "tree": t.to_json(),
                "n": bubble.n,
                "predicted": predicted,
                "oracle_leading_coeff": int(coeff),
                "verdict": "PASS" if coeff == predicted else "FAIL",
            }
        )
    return rows


def cmd_tree(args) -> int:
    if args.enumerate:
        v, k = args.enumerate
        trees = list(enumerate_trees(v, k))
    else:
        trees = [CornerLabeledTree.load(args.tree)]
    rows = _tree_rows(trees, args.threads)
    ok = all(r["verdict"] == "PASS" for r in rows)
    if args.csv:
        print("n,predicted,oracle_leading_coeff,verdict")
        for r in rows:
            print(f"{r['n']},{r['predicted']},{r['oracle_leading_coeff']},{r['verdict']}")
    else:
        _emit({"trees": rows, "all_pass": ok}, args)
    return 0 if ok else 1


def cmd_weingarten(args) -> int:
    dim = _parse_dim(args.dim)
    table = weingarten_table(args.n, dim)
    rows = []
    for p in partitions_of(args.n):
        value = table[p]
        rows.append(
            {
                "class": list(p.parts),
                "value": value.to_records() if hasattr(value, "to_records") else str(value),
                "value_str": str(value),
            }
        )
    if args.csv:
        print("class,value")
        for r in rows:
            print(f"\"{r['class']}\",\"{r['value_str']}\"")
    else:
        _emit({"n": args.n, "dim": args.dim, "values": rows}, args)
    return 0


def cmd_wishart(args) -> int:
    row = _parse_dim(args.rows)
    col = _parse_dim(args.cols)
    moment = wishart_moment_exact(args.lengths, row, col)
    if isinstance(moment, LaurentPoly):
        report = {"lengths": args.lengths, "moment": moment.to_records(), "moment_str": str(moment)}
    else:
        report = {"lengths": args.lengths, "moment": str(moment)}
    _emit(report, args)
    return 0


def cmd_mc(args) -> int:
    bubble = Bubble.load(args.bubble)
    spec = SampleSpec(
        N=args.numeric_N,
        d=bubble.d,
        samples=args.samples,
        seed=args.seed,
        variance=args.variance,
    )
    estimate = estimate_expectation(bubble, spec)
    report = estimate.to_json()
    ok = True
    if bubble.n <= 7:
        exact = per_color_dimensions(bubble, [args.numeric_N] * bubble.d)
        exact_scaled = float(exact) * args.variance**bubble.n
        report["exact"] = exact_scaled
        deviation = abs(estimate.mean - exact_scaled)
        ok = deviation <= 5 * estimate.stderr
        report["within_5_sigma"] = "PASS" if ok else "FAIL"
    _emit(report, args)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tensormoments",
        description="Gaussian expectations of random-tensor bubble observables",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--csv", action="store_true")
        p.add_argument("--out", default=None)

    p = sub.add_parser("expect", help="exact Wick-enumeration expectation")
    p.add_argument("bubble")
    p.add_argument("--alpha", type=int, default=0, help="covariance exponent")
    p.add_argument("--numeric-N", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_expect)

    p = sub.add_parser("effective", help="angular integration + cross-check")
    p.add_argument("bubble")
    p.add_argument("--split", default="2,4", help="comma-separated column colors")
    common(p)
    p.set_defaults(func=cmd_effective)

    p = sub.add_parser("tree", help="Catalan-product law on tree observables")
    p.add_argument("tree", nargs="?", default=None)
    p.add_argument("--enumerate", nargs=2, type=int, metavar=("V", "K"), default=None)
    common(p)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("weingarten", help="Weingarten table for S_n")
    p.add_argument("n", type=int)
    p.add_argument("--dim", default="N^2", help="'N^k' or an integer")
    common(p)
    p.set_defaults(func=cmd_weingarten)

    p = sub.add_parser("wishart", help="complex Wishart trace moments")
    p.add_argument("lengths", nargs="+", type=int)
    p.add_argument("--rows", default="N^2")
    p.add_argument("--cols", default="N^2")
    common(p)
    p.set_defaults(func=cmd_wishart)

    p = sub.add_parser("mc", help="Monte Carlo estimate")
    p.add_argument("bubble")
    p.add_argument("--numeric-N", type=int, required=True)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--variance", type=float, default=1.0)
    common(p)
    p.set_defaults(func=cmd_mc)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "tree" and args.tree is None and args.enumerate is None:
        print("tree: provide a tree file or --enumerate V K", file=sys.stderr)
        return 2
    start = time.perf_counter()
    code = args.func(args)
    elapsed = time.perf_counter() - start
    print(f"done in {elapsed:.3f}s (exit {code})", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
