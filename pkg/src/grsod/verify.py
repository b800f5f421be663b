"""End-to-end checks producing machine-readable reports."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from . import __version__
from .dualstair import (
    BlockContext, admissible_blocks, check_exact_k, corollary_order, degenerate, e_class,
    e_class_push_f, e_class_push_p, factors, gram_equivariant, irreducible, staircase_e,
    staircase_e_instances, staircase_q, staircase_q_instances, staircase_u, staircase_u_instances,
)
from .grcore import contains
from .homcalc import GrContext, TwistedIrred, ext_equivariant, ext_graded, trivial_weight
from .kclass import KClass, chi, chi_g, kapranov_coordinates
from .linalg import det, same_lattice
from .pathblocks import (
    CanonicalPath, HalfPoint, block_at, diagonal_path, enumerate_paths, generator, parse_path, validate_path,
)

MAX_N = 10
MAX_COUNTEREXAMPLES = 20


@dataclass
class Report:
    check: str
    ctx: GrContext
    status: str = "pass"
    details: dict = field(default_factory=dict)
    elapsed_ms: int = 0

    def fail(self, counterexample: dict) -> None:
        self.status = "fail"
        bucket = self.details.setdefault("counterexamples", [])
        if len(bucket) < MAX_COUNTEREXAMPLES:
            bucket.append(counterexample)
        self.details["counterexample_count"] = self.details.get("counterexample_count", 0) + 1

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_json(self, timing: bool = True) -> dict:
        out = {"toolVersion": __version__, "ctx": {"k": self.ctx.k, "n": self.ctx.n},
               "check": self.check, "status": self.status, "details": self.details}
        if timing:
            out["elapsedMillis"] = self.elapsed_ms
        return out


class _Timer:
    def __init__(self, report: Report):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed_ms = int((time.perf_counter() - self.t0) * 1000)
        return False


class ResourceLimit(ValueError):
    pass


def guard(ctx: GrContext, force: bool = False) -> None:
    # path counts grow like Delannoy numbers, generator pairs like binomial(n,k)^2
    if ctx.n > MAX_N and not force:
        raise ResourceLimit(f"n = {ctx.n} > {MAX_N}; pass --force to run anyway")


def _irr_json(a: TwistedIrred) -> dict:
    return {"u": list(a.u), "q": list(a.q), "twist": a.twist}


def _graded_json(g):
    return {str(d): [[list(w), m] for w, m in sorted(ws.items())] for d, ws in sorted(g.items())}


# --- semi-orthogonal decompositions --------------------------------------

def _path_generators(ctx: GrContext, path: CanonicalPath, twists: list[int]):
    comps = []
    for i, p in enumerate(path.points):
        block = block_at(ctx, p)
        comps.append([generator(ctx, lam, mu, twists[i]) for lam, mu in block.pairs])
    return comps


def check_path(k: int, n: int, path_text: str, mutation: str | None = None, seed: int = 0) -> dict:
    """All per-path checks; returns a plain dict so it can cross process boundaries."""
    ctx = GrContext(k, n)
    path = validate_path(ctx, parse_path(path_text))
    twists = list(range(len(path.points)))
    note = None
    if mutation == "swap-twists":
        i = random.Random(seed).randrange(len(twists) - 1)
        twists[i], twists[i + 1] = twists[i + 1], twists[i]
        note = f"twists of components {i} and {i + 1} swapped"
    comps = _path_generators(ctx, path, twists)
    sizes = [len(c) for c in comps]
    out = {"path": path_text, "sizes": sizes, "counterexamples": [], "mutation": note}
    bad = out["counterexamples"]

    if sum(sizes) != comb(n, k):
        bad.append({"kind": "count", "total": sum(sizes), "expected": comb(n, k)})

    # generators are exceptional in the equivariant category; their plain
    # self-Ext may have higher terms (the tangent bundle of Gr(2,4) is one)
    one = {0: {trivial_weight(ctx): 1}}
    plain_exceptional = 0
    for comp in comps:
        for g in comp:
            e = ext_equivariant(ctx, g, g)
            if e != {0: 1}:
                bad.append({"kind": "exceptional", "object": _irr_json(g), "ext_G": {str(d): m for d, m in e.items()}})
            plain_exceptional += ext_graded(ctx, g, g) == one
    out["plain_exceptional"] = plain_exceptional

    pairs = 0
    for i, j in combinations(range(len(comps)), 2):
        for later in comps[j]:
            for earlier in comps[i]:
                pairs += 1
                e = ext_graded(ctx, later, earlier)
                if e:
                    bad.append({"kind": "semi-orthogonality", "components": [i, j],
                                "source": _irr_json(later), "target": _irr_json(earlier), "ext": _graded_json(e)})
    out["cross_pairs"] = pairs

    classes = [KClass.of(ctx, g) for comp in comps for g in comp]
    if mutation == "duplicate-class":
        classes[-1] = classes[0]
        out["mutation"] = "last generator class replaced by the first"
    matrix = [kapranov_coordinates(c) for c in classes] if len(classes) == comb(n, k) else None
    d = det(matrix) if matrix else 0
    out["determinant"] = d
    out["matrix"] = matrix
    if abs(d) != 1:
        ce = {"kind": "fullness", "determinant": d}
        if matrix:
            dup = next(((a, b) for a, b in combinations(range(len(matrix)), 2) if matrix[a] == matrix[b]), None)
            if dup:
                ce["equal_rows"] = list(dup)
        bad.append(ce)
    return out


def verify_sod(ctx: GrContext, paths: list[CanonicalPath] | None = None, all_paths: bool = False,
               jobs: int = 1, mutation: str | None = None, seed: int = 0) -> Report:
    report = Report("verify-sod", ctx)
    with _Timer(report):
        if all_paths:
            paths = enumerate_paths(ctx)
        elif not paths:
            paths = [diagonal_path(ctx)]
        texts = [str(p) for p in paths]
        args = [(ctx.k, ctx.n, t, mutation, seed) for t in texts]
        if jobs > 1 and len(args) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_check_path_star, args))
        else:
            results = [check_path(*a) for a in args]
        summaries = []
        for res in results:
            for ce in res["counterexamples"]:
                report.fail(dict(ce, path=res["path"]))
            summaries.append({key: res[key] for key in ("path", "sizes", "cross_pairs", "plain_exceptional", "determinant", "mutation")})
        report.details["paths"] = summaries
        report.details["generators"] = comb(ctx.n, ctx.k)
        matrices = [r["matrix"] for r in results if r["matrix"] and det(r["matrix"]) != 0]
        same = all(same_lattice(matrices[0], m) for m in matrices[1:]) if matrices else False
        report.details["lattice_path_independent"] = same
        if len(matrices) != len(results) or not same:
            report.fail({"kind": "lattice", "detail": "generator lattices differ between paths or are degenerate"})
        report.details.setdefault("counterexample_count", 0)
    return report


def _check_path_star(args):
    return check_path(*args)


# --- blocks ---------------------------------------------------------------

def block_context_for(ctx: GrContext, point: HalfPoint) -> tuple[BlockContext, list]:
    """Integer block containing Bl_p, and the pairs of Bl_p itself."""
    x_up = -(-point.x2 // 2)
    y_down = point.y2 // 2
    bc = BlockContext.at_point(ctx, x_up, y_down)
    pairs = [(lam, mu) for lam, mu in block_at(ctx, point).pairs]
    return bc, pairs


def _irr_pair(pair):
    return {"lam": list(pair[0]), "mu": list(pair[1])}


def verify_block(ctx: GrContext, point: HalfPoint) -> Report:
    report = Report("verify-block", ctx)
    with _Timer(report):
        bc, pairs = block_context_for(ctx, point)
        report.details.update({"point": str(point), "w": bc.w, "h": bc.h, "size": len(pairs),
                               "degenerate": degenerate(bc)})
        try:
            gram_equivariant(bc)
        except AssertionError as exc:
            report.fail({"kind": "gram-triangularity", "detail": str(exc)})
        routes = ["gram"] + [r for r, ok in (("push_p", bc.has_push_p), ("push_f", bc.has_push_f)) if ok]
        report.details["routes"] = routes
        classes = {}
        for lam, mu in pairs:
            g = e_class(bc, lam, mu, "gram")
            classes[(lam, mu)] = g
            for route, fn in (("push_p", e_class_push_p), ("push_f", e_class_push_f)):
                if route not in routes:
                    continue
                cls, cert = fn(bc, lam, mu)
                if not cert.ok:
                    report.fail({"kind": "vanishing-certificate", **_irr_pair((lam, mu)), **cert.as_json()})
                if cls != g:
                    report.fail({"kind": "route-disagreement", "route": route, **_irr_pair((lam, mu)),
                                 "gram": g.as_json(), "other": cls.as_json()})
            if not g.is_nonnegative():
                report.fail({"kind": "nonnegativity", **_irr_pair((lam, mu)), "class": g.as_json()})
            for a, _ in g:
                if not contains(lam, a.u):
                    report.fail({"kind": "support", **_irr_pair((lam, mu)), "term": _irr_json(a)})
        # delta pairing against the block's irreducibles
        for (a, b) in pairs:
            irr = KClass.of(ctx, irreducible(ctx, a, b))
            for key, cls in classes.items():
                want = 1 if key == (a, b) else 0
                got = chi_g(irr, cls)
                if got != want:
                    report.fail({"kind": "dual-pairing", "irreducible": _irr_pair((a, b)),
                                 "e": _irr_pair(key), "chi_G": got, "expected": want})
        # E-collection in an order refining the corollary's partial order
        order = corollary_order(pairs)
        certified = 0
        for i, j in combinations(range(len(order)), 2):
            earlier, later = classes[order[i]], classes[order[j]]
            x = chi(later, earlier)
            if x:
                report.fail({"kind": "e-collection-chi", "later": _irr_pair(order[j]),
                             "earlier": _irr_pair(order[i]), "chi": x})
            if all(not ext_graded(ctx, f, e) for f in factors(later) for e in factors(earlier)):
                certified += 1
        for key in order:
            if chi(classes[key], classes[key]) != 1:
                report.fail({"kind": "e-exceptional-chi", **_irr_pair(key)})
        report.details["ordered_pairs"] = len(order) * (len(order) - 1) // 2
        report.details["factorwise_vanishing_certified"] = certified
        report.details.setdefault("counterexample_count", 0)
    return report


# --- staircases -----------------------------------------------------------

def verify_staircase(ctx: GrContext, route: str = "gram", mutation: str | None = None) -> Report:
    report = Report("verify-staircase", ctx)
    counts = {"U": 0, "Q": 0, "E-L": 0, "E-M": 0}
    mutated = False

    def delta():
        nonlocal mutated
        if mutation == "multiplicity" and not mutated:
            mutated = True
            return {1: 1}
        return None

    def record(label, cx, meta):
        counts[cx.kind] += 1
        exact = check_exact_k(cx)
        ranks = cx.rank_alternation()
        if not exact or ranks:
            report.fail({"kind": cx.kind, **meta, "exact": exact, "rank_alternation": ranks,
                         "residue": cx.alternating_sum().as_json(), "terms": [lab for lab, _ in cx.terms]})

    with _Timer(report):
        for lam in staircase_u_instances(ctx):
            record("U", staircase_u(ctx, lam, delta()), {"lam": list(lam)})
        for mu in staircase_q_instances(ctx):
            record("Q", staircase_q(ctx, mu, delta()), {"mu": list(mu)})
        for bc in admissible_blocks(ctx):
            for variant in ("L", "M"):
                for lam, mu in staircase_e_instances(bc, variant):
                    cx = staircase_e(bc, lam, mu, variant, route=route, mult_delta=delta())
                    record("E", cx, {"block": [bc.w, bc.h], "lam": list(lam), "mu": list(mu)})
        report.details["instances"] = counts
        report.details["mutation"] = "first exterior-power degree raised by 1" if mutated else None
        report.details.setdefault("counterexample_count", 0)
    return report


# --- equivariant pattern and diagonal orthogonality ---------------------------

def verify_pattern(ctx: GrContext, blocks: list[BlockContext] | None = None) -> Report:
    """Equivariant Ext between a block's irreducibles: nonzero iff both indices are contained.

    Violations are split by direction: `necessity` (nonzero without
    containment), `sufficiency` (containment but zero) and `diagonal`.
    """
    report = Report("verify-pattern", ctx)
    tally = {"necessity": 0, "sufficiency": 0, "diagonal": 0, "pairs": 0}
    with _Timer(report):
        for bc in blocks if blocks is not None else admissible_blocks(ctx):
            pairs = bc.pairs()
            irr = {p: irreducible(ctx, *p) for p in pairs}
            for src in pairs:
                for dst in pairs:
                    tally["pairs"] += 1
                    e = ext_equivariant(ctx, irr[src], irr[dst])
                    inside = contains(dst[0], src[0]) and contains(dst[1], src[1])
                    kind = None
                    if src == dst:
                        if e != {0: 1}:
                            kind = "diagonal"
                    elif e and not inside:
                        kind = "necessity"
                    elif inside and not e:
                        kind = "sufficiency"
                    if kind:
                        tally[kind] += 1
                        report.fail({"kind": kind, "block": [bc.w, bc.h], "source": _irr_pair(src),
                                     "target": _irr_pair(dst), "ext_G": {str(d): m for d, m in e.items()}})
        report.details["tally"] = tally
        report.details.setdefault("counterexample_count", 0)
    return report


def verify_diagonal(ctx: GrContext) -> Report:
    """Ext(B_{p'}(t), B_p) = 0 for integer p and p' = p + (t, t), t >= 1."""
    report = Report("verify-diagonal", ctx)
    checked = 0
    with _Timer(report):
        for x in range(ctx.r + 1):
            for y in range(ctx.k + 1):
                p = HalfPoint(2 * x, 2 * y)
                low = [generator(ctx, lam, mu) for lam, mu in block_at(ctx, p).pairs]
                t = 1
                while x + t <= ctx.r and y + t <= ctx.k:
                    p2 = HalfPoint(2 * (x + t), 2 * (y + t))
                    for lam, mu in block_at(ctx, p2).pairs:
                        src = generator(ctx, lam, mu, t)
                        for tgt in low:
                            checked += 1
                            e = ext_graded(ctx, src, tgt)
                            if e:
                                report.fail({"p": [x, y], "t": t, "source": _irr_json(src),
                                             "target": _irr_json(tgt), "ext": _graded_json(e)})
                    t += 1
        report.details["pairs"] = checked
        report.details.setdefault("counterexample_count", 0)
    return report
