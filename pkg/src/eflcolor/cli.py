"""Command-line front end.

Exit codes: 0 success, 1 invalid coloring or unmet ``--expect``, 2 usage,
parse or library error.
"""

from __future__ import annotations

import argparse
import os
import sys
from math import ceil
from typing import Optional, Sequence, TextIO

from . import formats
from .classify import DensityClass, density_report, is_linear, is_uniform
from .coloring import efl_coloring, greedy_high_degree, is_rainbow, partition_coloring
from .errors import HypergraphError, PartialColoring
from .generators import derive_seed, dual_affine_plane, pencil, random_linear_uniform, weakly_dense_stream
from .model import Coloring, Hypergraph
from .oracle import DEFAULT_CAP, chromatic_number, validate_coloring

CAP_ENV = "EFLCOLOR_ORACLE_CAP"


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as f:
        return f.read()


def _load(path: str) -> Hypergraph:
    return formats.parse(_read(path))


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _open_out(path: Optional[str]) -> TextIO:
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w")


def cmd_classify(args, out: TextIO) -> int:
    H = _load(args.file)
    n = args.n if args.n is not None else H.edge_count
    ok, w = is_linear(H)
    rep = density_report(H, n)
    print(f"vertices {H.vertex_count}", file=out)
    print(f"edges {H.edge_count}", file=out)
    print(f"linear {_yn(ok)}" + ("" if ok else f" witness {w[0]} {w[1]}"), file=out)
    print(f"uniform {_yn(is_uniform(H, n))} n {n}", file=out)
    print(f"class {rep.density_class}", file=out)
    for d, cnt in rep.degree_histogram.items():
        print(f"degree {d} count {cnt}", file=out)
    for k, wit in rep.violations:
        print(f"violation k {k} count {len(wit)} witnesses " + " ".join(map(str, wit)), file=out)
    if args.expect is not None and rep.density_class.value != args.expect:
        print(f"expectation failed: expected {args.expect}", file=out)
        return 1
    return 0


def _emit_verdict(H: Hypergraph, coloring: Coloring, out: TextIO, extra: Sequence[str] = ()) -> int:
    valid, w = validate_coloring(H, coloring)
    body = formats.serialize_coloring(coloring, extra)
    out.write(body)
    print(f"c colors_used {len(coloring.colors_used())}", file=out)
    if valid:
        print("c verdict valid", file=out)
        return 0
    j, u, u2 = w
    print(f"c verdict invalid edge {j} vertices {u} {u2} color {coloring[u]}", file=out)
    return 1


def cmd_color(args, out: TextIO) -> int:
    H = _load(args.file)
    n = args.n if args.n is not None else H.edge_count
    if args.algo == "efl":
        if args.n is not None and args.n != H.edge_count:
            raise UsageError("efl takes n from the edge count; drop --n or make it match")
        col, _ = efl_coloring(H)
        extra = [f"algo efl n {n}", f"rainbow {_yn(is_rainbow(H, col))}"]
    elif args.algo == "greedy":
        col = greedy_high_degree(H, n)
        extra = [f"algo greedy n {n}"]
    else:
        col, _ = partition_coloring(H, n, args.base_edge)
        extra = [f"algo partition n {n} base_edge {args.base_edge}"]
    return _emit_verdict(H, col, out, extra)


def cmd_chi(args, out: TextIO) -> int:
    H = _load(args.file)
    cap = args.cap
    if cap is None:
        env = os.environ.get(CAP_ENV)
        cap = int(env) if env else DEFAULT_CAP
    res = chromatic_number(H, args.max_colors, cap=cap)
    print(f"chi {res.chi}", file=out)
    print(f"nodes {res.nodes_explored}", file=out)
    return _emit_verdict(H, res.witness, out)


def cmd_check(args, out: TextIO) -> int:
    H = _load(args.file)
    col = formats.parse_coloring(_read(args.coloring), H.vertex_count)
    try:
        valid, w = validate_coloring(H, col)
    except PartialColoring:
        missing = next(v for v, c in enumerate(col.colors) if c is None)
        print(f"invalid uncolored vertex {missing}", file=out)
        return 1
    if valid:
        print("valid", file=out)
        return 0
    j, u, u2 = w
    print(f"invalid edge {j} vertices {u} {u2} color {col[u]}", file=out)
    return 1


def cmd_gen(args, out_default: TextIO) -> int:
    if args.kind == "dualaffine":
        blocks = [formats.serialize(dual_affine_plane(args.param), [f"dualaffine q {args.param}"])]
    elif args.kind == "pencil":
        blocks = [formats.serialize(pencil(args.param), [f"pencil n {args.param}"])]
    else:
        if args.seed is None:
            raise UsageError("gen random needs --seed")
        n, seed = args.param, args.seed
        if args.count is None and not args.weakly_dense:
            blocks = [formats.serialize(random_linear_uniform(n, seed), [f"random n {n} seed {seed}"])]
        elif args.weakly_dense:
            count = args.count or 1
            blocks = [
                formats.serialize(H, [f"random n {n} seed {seed} weakly_dense index {i}"])
                for i, H in enumerate(weakly_dense_stream(n, seed, count))
            ]
        else:
            blocks = [
                formats.serialize(random_linear_uniform(n, derive_seed(seed, i)), [f"random n {n} seed {seed} index {i}"])
                for i in range(args.count)
            ]
    out = _open_out(args.output) if args.output else out_default
    try:
        out.write("".join(blocks))
    finally:
        if out is not out_default and out is not sys.stdout:
            out.close()
    return 0


def cmd_trace(args, out: TextIO) -> int:
    H = _load(args.file)
    col, tr = efl_coloring(H)
    print(f"n {tr.n}", file=out)
    print("v1 " + " ".join(map(str, tr.v1)), file=out)
    print("v2 " + " ".join(map(str, tr.v2)), file=out)
    print("v3 " + " ".join(map(str, tr.v3)), file=out)
    print(f"phase1 palette_used {tr.phase1_palette_used} partition {_yn(tr.phase1_routed_partition)}", file=out)
    print("phase2 order " + " ".join(map(str, tr.phase2_order)), file=out)
    for v, slack, seen in zip(tr.phase2_order, tr.phase2_slack, tr.phase2_colored_neighbors):
        print(
            f"phase2 vertex {v} degree {H.degree(v)} slack {slack} "
            f"ceil {ceil(slack)} colored_neighbors {seen} color {col[v]}",
            file=out,
        )
    for j, (k, pending) in enumerate(zip(tr.phase3_kE, tr.phase3_uncolored)):
        print(f"phase3 edge {j} kE {k} uncolored {pending}", file=out)
    return _emit_verdict(H, col, out, [f"algo efl n {tr.n}"])


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eflcolor", description="Coloring and density checks for linear hypergraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="linearity, uniformity and density class")
    c.add_argument("file")
    c.add_argument("--n", type=int)
    c.add_argument("--expect", choices=[d.value for d in DensityClass])
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("color", help="color an instance")
    c.add_argument("file")
    c.add_argument("--algo", choices=["efl", "greedy", "partition"], required=True)
    c.add_argument("--n", type=int)
    c.add_argument("--base-edge", type=int, default=0)
    c.set_defaults(func=cmd_color)

    c = sub.add_parser("chi", help="exact chromatic number")
    c.add_argument("file")
    c.add_argument("--max-colors", type=int)
    c.add_argument("--cap", type=int)
    c.set_defaults(func=cmd_chi)

    c = sub.add_parser("check", help="validate a coloring file")
    c.add_argument("file")
    c.add_argument("coloring")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("gen", help="generate instances")
    c.add_argument("kind", choices=["dualaffine", "pencil", "random"])
    c.add_argument("param", type=int)
    c.add_argument("--seed", type=int)
    c.add_argument("--count", type=int)
    c.add_argument("--weakly-dense", action="store_true", help="keep only weakly dense draws")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_gen)

    c = sub.add_parser("trace", help="run the three-phase coloring and print its trace")
    c.add_argument("file")
    c.set_defaults(func=cmd_trace)
    return p


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = out if out is not None else sys.stdout
    try:
        return args.func(args, out)
    except (HypergraphError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run(command_line: Sequence[str]) -> int:
    return main(command_line)


if __name__ == "__main__":
    sys.exit(main())
