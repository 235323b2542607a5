"""Command-line interface: solve / decide / oracle / gen / bench.

Exit codes: 0 on success, 2 on input validation errors, 1 on anything
unexpected.  Thresholds on the command line are plain lengths; the
library's internal squared representation never leaks out.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .bench import bench, bench_csv
from .decision import compare_to_optimal
from .formats import emit_solution, parse_instance, render_svg
from .generators import gen_maxgap_instance, gen_membership_instance, gen_random_instance
from .oracle import brute_force_optimum
from .solver import preprocess, solve


def _read_instance(args) -> tuple[np.ndarray, np.ndarray]:
    text = Path(args.input).read_text()
    return parse_instance(text, force_text=getattr(args, "text", False))


def _cmd_solve(args) -> int:
    P, S = _read_instance(args)
    report = solve(P, S)
    payload = emit_solution(report)
    print(payload)
    if args.json:
        Path(args.json).write_text(payload + "\n")
    if args.svg:
        Path(args.svg).write_text(render_svg(P, S, report.tree))
    return 0


def _cmd_decide(args) -> int:
    P, S = _read_instance(args)
    if not args.lam > 0:
        raise ValueError("threshold must be positive")
    ctx = preprocess(P, S)
    J = compare_to_optimal(ctx, args.lam * args.lam)
    print(f"J = {sorted(J)}")
    print("lambda* < lambda" if J else "lambda* >= lambda")
    return 0


def _cmd_oracle(args) -> int:
    P, S = _read_instance(args)
    lam, tree = brute_force_optimum(P, S)
    doc = {
        "bottleneck": math.sqrt(lam),
        "component_vertices": tree.component_vertices.tolist(),
        "skeleton_edges": [sorted(e) for e in tree.skeleton_edges.tolist()],
        "external_edges": [[i, int(s)] for i, s in enumerate(tree.external_edges.tolist())],
    }
    print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    return 0


def _instance_json(P, S, metadata: dict) -> str:
    doc = {"P": P.tolist(), "S": S.tolist(), "metadata": metadata}
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _cmd_gen(args) -> int:
    if args.kind == "maxgap":
        if args.values:
            values = np.asarray([float(v) for v in args.values.split(",")])
        else:
            rng = np.random.default_rng(args.seed)
            values = rng.uniform(0.0, 100.0, args.m)
        inst = gen_maxgap_instance(values, args.n, seed=args.seed)
        payload = _instance_json(
            inst.P, inst.S,
            {"name": "maxgap", "seed": args.seed, "expected_bottleneck": inst.expected},
        )
    elif args.kind == "membership":
        if args.f:
            f = tuple(int(v) for v in args.f.split(","))
        else:
            rng = np.random.default_rng(args.seed)
            f = tuple(int(v) for v in rng.integers(1, args.m + 1, args.n))
        perturb = None
        if args.perturb:
            j, coords = args.perturb.split(":")
            x, y = coords.split(",")
            perturb = (int(j), (float(x), float(y)))
        inst = gen_membership_instance(f, args.m, perturb=perturb)
        payload = _instance_json(
            inst.P, inst.S,
            {"name": "membership", "seed": args.seed, "f": list(f)},
        )
    else:
        P, S = gen_random_instance(args.n, args.m, args.extent, args.seed)
        payload = _instance_json(P, S, {"name": "random", "seed": args.seed})
    if args.out:
        Path(args.out).write_text(payload + "\n")
    else:
        print(payload)
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    rows = bench(sizes, seed=args.seed, reps=args.reps, yao_impl=args.yao)
    print(bench_csv(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bsteiner",
        description="Bottleneck-optimal full Steiner trees in the plane.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("--input", required=True)
    p.add_argument("--text", action="store_true", help="force the whitespace format")
    p.add_argument("--svg", help="write an SVG rendering here")
    p.add_argument("--json", help="also write the solution JSON here")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("decide", help="compare the optimum against a threshold")
    p.add_argument("--input", required=True)
    p.add_argument("--text", action="store_true")
    p.add_argument("--lambda", dest="lam", type=float, required=True,
                   help="threshold as a length")
    p.set_defaults(fn=_cmd_decide)

    p = sub.add_parser("oracle", help="brute-force optimum for small instances")
    p.add_argument("--input", required=True)
    p.add_argument("--text", action="store_true")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("gen", help="generate an instance file")
    gensub = p.add_subparsers(dest="kind", required=True)
    g = gensub.add_parser("maxgap", help="known optimum: the largest value gap")
    g.add_argument("--values", help="comma-separated values (default: random)")
    g.add_argument("--m", type=int, default=16, help="value count when random")
    g.add_argument("--n", type=int, default=4, help="even terminal count")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g = gensub.add_parser("membership", help="grid terminals over a baseline")
    g.add_argument("--f", help="comma-separated 1-based columns (default: random)")
    g.add_argument("--m", type=int, default=8)
    g.add_argument("--n", type=int, default=4)
    g.add_argument("--perturb", help="J:X,Y moves grid terminal J to (X, Y)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g = gensub.add_parser("random", help="uniform points in a square")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--extent", type=float, default=100.0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("bench", help="doubling benchmark CSV")
    p.add_argument("--sizes", required=True, help="comma-separated ascending sizes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--yao", choices=("fast", "brute"), default="fast")
    p.set_defaults(fn=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # pragma: no cover - defensive
        print(f"internal error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
