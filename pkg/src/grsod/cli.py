"""Command line entry point: `grsod <command> ...`.

Exit codes: 0 all checks pass, 1 a check failed, 2 invalid input,
3 internal assertion (a computed object contradicts a proven statement).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__, memo
from .bottweil import cohomology_gr
from .dualstair import BlockContext, e_class, staircase_e, staircase_q, staircase_u
from .grcore import format_diagram, parse_diagram
from .homcalc import GrContext, InternalError, ext_equivariant, ext_graded, format_graded, graded_as_json, parse_irred
from .kclass import KClass, kapranov_coordinates
from .littlewood import GLWeight, dim_gl, lr_coefficient, lr_product
from .pathblocks import HalfPoint, PathError, block_at, diagonal_path, enumerate_paths, parse_path, validate_path
from .verify import (
    Report, guard, verify_block, verify_diagonal, verify_pattern, verify_sod, verify_staircase,
)

log = logging.getLogger("grsod")


def _ctx(args) -> GrContext:
    if args.n is None or args.k is None:
        raise ValueError("--n and --k are required")
    ctx = GrContext(args.k, args.n)
    guard(ctx, args.force)
    return ctx


def _point(text: str) -> HalfPoint:
    pts = parse_path(text)
    if len(pts) != 1:
        raise PathError(f"expected a single point 'x,y', got {text!r}")
    return pts[0]


def _block(ctx: GrContext, text: str) -> BlockContext:
    p = _point(text)
    if not p.is_node:
        raise PathError(f"E-bundles live on integer points, got ({p})")
    if not p.in_rectangle(ctx):
        raise PathError(f"point ({p}) lies outside the {ctx.r}x{ctx.k} rectangle")
    return BlockContext.at_point(ctx, p.x2 // 2, p.y2 // 2)


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def _emit_report(args, report: Report) -> int:
    if args.json:
        print(json.dumps(report.as_json(), sort_keys=True, indent=2))
    else:
        print(f"{report.check} {report.ctx}: {report.status.upper()} "
              f"({report.details.get('counterexample_count', 0)} counterexamples, {report.elapsed_ms} ms)")
        for key, val in sorted(report.details.items()):
            if key not in ("counterexamples", "counterexample_count", "paths"):
                print(f"  {key}: {val}")
        for p in report.details.get("paths", []):
            print(f"  path {p['path']}: sizes {p['sizes']} det {p['determinant']}")
        for ce in report.details.get("counterexamples", []):
            print("  counterexample: " + json.dumps(ce, sort_keys=True))
    return 0 if report.passed else 1


# --- calculators -------------------------------------------------------------

def cmd_lr(args):
    a, b = parse_diagram(args.a), parse_diagram(args.b)
    if args.c is not None:
        c = parse_diagram(args.c)
        m = lr_coefficient(a, b, c)
        _emit(args, {"a": list(a), "b": list(b), "c": list(c), "coefficient": m}, str(m))
    else:
        prod = lr_product(a, b, args.rows)
        _emit(args, [{"c": list(c), "coefficient": m} for c, m in sorted(prod.items())],
              "\n".join(f"{format_diagram(c)} {m}" for c, m in sorted(prod.items())))
    return 0


def cmd_dim(args):
    w = parse_diagram(args.weight)
    d = dim_gl(GLWeight(w, args.rank))
    _emit(args, {"weight": list(w), "rank": args.rank, "dim": d}, str(d))
    return 0


def cmd_bbw(args):
    ctx = _ctx(args)
    res = cohomology_gr(ctx.k, ctx.n, parse_diagram(args.q), parse_diagram(args.u))
    text = "vanishing" if res.vanishing else f"degree {res.degree}, dominant {format_diagram(res.dominant)}"
    _emit(args, res.as_json(), text)
    return 0


def cmd_ext(args):
    ctx = _ctx(args)
    a, b = parse_irred(args.source), parse_irred(args.target)
    if args.equivariant:
        e = ext_equivariant(ctx, a, b)
        _emit(args, {str(d): m for d, m in sorted(e.items())},
              "\n".join(f"Ext^{d}_G: {m}" for d, m in sorted(e.items())) or "0")
    else:
        e = ext_graded(ctx, a, b)
        _emit(args, graded_as_json(e), format_graded(e))
    return 0


def cmd_kclass(args):
    ctx = _ctx(args)
    cls = KClass.of(ctx, parse_irred(args.irred))
    coords = kapranov_coordinates(cls)
    _emit(args, {"class": cls.as_json(), "rank": cls.rank(), "kapranov": coords},
          f"{cls}\nrank {cls.rank()}\nKapranov coordinates {coords}")
    return 0


def cmd_eclass(args):
    ctx = _ctx(args)
    bc = _block(ctx, args.point)
    lam, mu = parse_diagram(args.lam), parse_diagram(args.mu)
    cls = e_class(bc, lam, mu, args.route)
    _emit(args, {"route": args.route, "block": [bc.w, bc.h], "lam": list(lam), "mu": list(mu),
                 "class": cls.as_json(), "rank": cls.rank()},
          f"E^{{{format_diagram(lam)},{format_diagram(mu)}}} ({args.route}) = {cls}\nrank {cls.rank()}")
    return 0


def cmd_staircase(args):
    ctx = _ctx(args)
    if args.kind == "U":
        cx = staircase_u(ctx, parse_diagram(args.lam))
    elif args.kind == "Q":
        cx = staircase_q(ctx, parse_diagram(args.mu))
    else:
        if args.point is None:
            raise ValueError("E staircases need --point")
        cx = staircase_e(_block(ctx, args.point), parse_diagram(args.lam), parse_diagram(args.mu),
                         args.kind[-1], route=args.route)
    payload = cx.as_json()
    lines = [f"{i}: {lab}  (rank {cls.rank()})" for i, (lab, cls) in enumerate(cx.terms)]
    lines.append(f"exact in K-theory: {payload['exact']}; rank alternating sum {cx.rank_alternation()}")
    _emit(args, payload, "\n".join(lines))
    return 0 if payload["exact"] and cx.rank_alternation() == 0 else 1


def cmd_blocks(args):
    ctx = _ctx(args)
    path = validate_path(ctx, parse_path(args.path)) if args.path else diagonal_path(ctx)
    comps = []
    for i, p in enumerate(path.points):
        block = block_at(ctx, p)
        comps.append({"point": str(p), "twist": i, "size": len(block.pairs),
                      "pairs": [[list(lam), list(mu)] for lam, mu in block.pairs]})
    text = [f"path {path}", "sizes " + ",".join(str(c["size"]) for c in comps)]
    for c in comps:
        text.append(f"  ({c['point']}) twist {c['twist']}: " +
                    " ".join(f"{format_diagram(lam)}|{format_diagram(mu)}" for lam, mu in c["pairs"]))
    _emit(args, {"path": str(path), "components": comps}, "\n".join(text))
    return 0


def cmd_paths(args):
    ctx = _ctx(args)
    paths = enumerate_paths(ctx)
    _emit(args, [str(p) for p in paths], "\n".join(str(p) for p in paths) + f"\n{len(paths)} paths")
    return 0


# --- verifiers ------------------------------------------------------------------

def cmd_verify_sod(args):
    ctx = _ctx(args)
    paths = [validate_path(ctx, parse_path(t)) for t in args.path] if args.path else None
    return _emit_report(args, verify_sod(ctx, paths, all_paths=args.all_paths, jobs=args.jobs,
                                         mutation=args.mutate, seed=args.seed))


def cmd_verify_block(args):
    ctx = _ctx(args)
    p = _point(args.point)
    if not p.in_rectangle(ctx):
        raise PathError(f"point ({p}) lies outside the {ctx.r}x{ctx.k} rectangle")
    return _emit_report(args, verify_block(ctx, p))


def cmd_verify_staircase(args):
    return _emit_report(args, verify_staircase(_ctx(args), route=args.route, mutation=args.mutate))


def cmd_verify_pattern(args):
    return _emit_report(args, verify_pattern(_ctx(args)))


def cmd_verify_diagonal(args):
    return _emit_report(args, verify_diagonal(_ctx(args)))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cache", metavar="FILE", help="append-only memo cache (JSONL)")
    common.add_argument("--force", action="store_true", help="allow n > 10")

    parser = argparse.ArgumentParser(prog="grsod", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"grsod {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(fn=fn)
        return p

    p = add("lr", cmd_lr, "Littlewood-Richardson coefficients")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c")
    p.add_argument("--rows", type=int, help="truncate the product to this many rows")

    p = add("dim", cmd_dim, "dimension of a GL(rank) irreducible")
    p.add_argument("--weight", required=True)
    p.add_argument("--rank", type=int, required=True)

    p = add("bbw", cmd_bbw, "cohomology of (V/U)^q (x) U^u")
    p.add_argument("--u", default="[]")
    p.add_argument("--q", default="[]")

    p = add("ext", cmd_ext, "Ext between irreducibles given as '[u];[q];t'")
    p.add_argument("--source", "--src", required=True)
    p.add_argument("--target", "--dst", required=True)
    p.add_argument("--equivariant", action="store_true")

    p = add("kclass", cmd_kclass, "K-class and Kapranov coordinates of an irreducible")
    p.add_argument("--irred", required=True)

    p = add("eclass", cmd_eclass, "K-class of an E-bundle")
    p.add_argument("--point", required=True, help="integer point 'x,y' of the rectangle")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--route", choices=("gram", "push_p", "push_f"), default="gram")

    p = add("staircase", cmd_staircase, "print a staircase complex and its exactness verdict")
    p.add_argument("--kind", choices=("U", "Q", "E-L", "E-M"), required=True)
    p.add_argument("--lam", default="[]")
    p.add_argument("--mu", default="[]")
    p.add_argument("--point")
    p.add_argument("--route", choices=("gram", "push_p", "push_f"), default="gram")

    p = add("blocks", cmd_blocks, "blocks along a path (diagonal path by default)")
    p.add_argument("--path")

    p = add("paths", cmd_paths, "enumerate canonical paths")
    p.add_argument("--enumerate", action="store_true", help="accepted for compatibility; enumeration is the default")

    p = add("verify-sod", cmd_verify_sod, "check the decomposition along paths")
    p.add_argument("--path", action="append", help="repeatable")
    p.add_argument("--all-paths", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--mutate", choices=("swap-twists", "duplicate-class"), help="self-test: must fail")
    p.add_argument("--seed", type=int, default=0)

    p = add("verify-block", cmd_verify_block, "check one block and its E-collection")
    p.add_argument("--point", required=True)

    p = add("verify-staircase", cmd_verify_staircase, "check all staircase complexes")
    p.add_argument("--route", choices=("gram", "push_p", "push_f"), default="gram")
    p.add_argument("--mutate", choices=("multiplicity",), help="self-test: must fail")

    add("verify-pattern", cmd_verify_pattern, "equivariant Ext pattern inside every block")
    add("verify-diagonal", cmd_verify_diagonal, "orthogonality of diagonally shifted blocks")
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    if args.cache:
        memo.load(args.cache)
    try:
        code = args.fn(args)
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.cache:
        memo.save(args.cache)
    return code


if __name__ == "__main__":
    sys.exit(main())
