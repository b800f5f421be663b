"""Blocks of diagram pairs and lattice paths through the (n-k) x k rectangle.

Points are stored doubled (x2 = 2x, y2 = 2y) so half-integers stay exact.
A canonical path lists the points where a strictly increasing path meets
the integer grid, with non-integer coordinates snapped to m + 1/2.  Two
consecutive points may share a half-integer coordinate: the path then
crosses two grid lines while staying inside one unit strip.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .grcore import BoxSpec, enumerate_box
from .homcalc import GrContext, TwistedIrred
from .littlewood import GLWeight, dual_weight


class PathError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class HalfPoint:
    x2: int
    y2: int

    def __post_init__(self):
        if self.x2 % 2 and self.y2 % 2:
            raise PathError(f"{self} has no integer coordinate")

    @classmethod
    def of(cls, x, y) -> "HalfPoint":
        x2, y2 = 2 * x, 2 * y
        if x2 != int(x2) or y2 != int(y2):
            raise PathError(f"({x},{y}) is not a half-integer point")
        return cls(int(x2), int(y2))

    @property
    def is_node(self) -> bool:
        return self.x2 % 2 == 0 and self.y2 % 2 == 0

    def in_rectangle(self, ctx: GrContext) -> bool:
        return 0 <= self.x2 <= 2 * ctx.r and 0 <= self.y2 <= 2 * ctx.k

    def __str__(self):
        return f"{_half(self.x2)},{_half(self.y2)}"


def _half(v2: int) -> str:
    return str(v2 // 2) if v2 % 2 == 0 else f"{v2 / 2:g}"


def block_boxes(ctx: GrContext, p: HalfPoint) -> tuple[BoxSpec, BoxSpec]:
    """(box of lambda, box of mu) = (Y_{floor(n-k-x), floor(y)}, Y_{floor(k-y), floor(x)})."""
    if not p.in_rectangle(ctx):
        raise PathError(f"point ({p}) lies outside the {ctx.r}x{ctx.k} rectangle")
    return (BoxSpec((2 * ctx.r - p.x2) // 2, p.y2 // 2),
            BoxSpec((2 * ctx.k - p.y2) // 2, p.x2 // 2))


class Block(NamedTuple):
    point: HalfPoint
    pairs: tuple


def block_at(ctx: GrContext, p: HalfPoint) -> Block:
    lam_box, mu_box = block_boxes(ctx, p)
    mus = enumerate_box(mu_box)
    return Block(p, tuple((lam, mu) for lam in enumerate_box(lam_box) for mu in mus))


def generator(ctx: GrContext, lam, mu, twist: int = 0) -> TwistedIrred:
    """Sigma^lam U^* (x) Sigma^mu (V/U) (x) O(twist), normalized."""
    return TwistedIrred(dual_weight(GLWeight(lam, ctx.k)).weight, mu, twist).normalized(ctx)


# --- paths ----------------------------------------------------------------

def _coord_step_ok(a2: int, b2: int) -> bool:
    """Can one coordinate go from a to b between consecutive grid crossings?"""
    if a2 % 2 == 0:
        return b2 in (a2 + 1, a2 + 2)
    return b2 in (a2, a2 + 1)


def step_ok(p: HalfPoint, q: HalfPoint) -> bool:
    return p != q and _coord_step_ok(p.x2, q.x2) and _coord_step_ok(p.y2, q.y2)


@dataclass(frozen=True)
class CanonicalPath:
    points: tuple

    @property
    def length(self) -> int:
        return len(self.points) - 1

    def __str__(self):
        return ";".join(str(p) for p in self.points)


def validate_path(ctx: GrContext, points) -> CanonicalPath:
    pts = tuple(p if isinstance(p, HalfPoint) else HalfPoint.of(*p) for p in points)
    if len(pts) < 2:
        raise PathError("a path needs at least its two endpoints")
    if pts[0] != HalfPoint(0, 0):
        raise PathError(f"path must start at (0,0), starts at ({pts[0]})")
    if pts[-1] != HalfPoint(2 * ctx.r, 2 * ctx.k):
        raise PathError(f"path must end at ({ctx.r},{ctx.k}), ends at ({pts[-1]})")
    for p in pts:
        if not p.in_rectangle(ctx):
            raise PathError(f"point ({p}) lies outside the rectangle")
    for p, q in zip(pts, pts[1:]):
        if not step_ok(p, q):
            raise PathError(_step_error(p, q))
    return CanonicalPath(pts)


def _step_error(p: HalfPoint, q: HalfPoint) -> str:
    for name, a2, b2 in (("x", p.x2, q.x2), ("y", p.y2, q.y2)):
        if b2 < a2 or (b2 == a2 and a2 % 2 == 0):
            return f"{name} does not increase from ({p}) to ({q})"
        lo, hi = a2 / 2, b2 / 2
        inner = [m for m in range(int(lo) + 1, int(hi) + 1) if lo < m < hi]
        if inner:
            return f"{name}-interval ({_half(a2)},{_half(b2)}) contains grid line {inner[0]}"
    return f"({p}) -> ({q}) is not a valid step"


def parse_path(text: str) -> list[HalfPoint]:
    pts = []
    for chunk in text.strip().split(";"):
        try:
            xs, ys = chunk.split(",")
            pts.append(HalfPoint.of(float(xs), float(ys)))
        except ValueError as exc:
            if isinstance(exc, PathError):
                raise
            raise PathError(f"bad point {chunk!r} in path {text!r}") from None
    return pts


def block_signature(ctx: GrContext, path: CanonicalPath) -> tuple:
    return tuple(block_boxes(ctx, p) for p in path.points)


def _successors(ctx: GrContext, p: HalfPoint):
    for dx in (0, 1, 2):
        for dy in (0, 1, 2):
            q = (p.x2 + dx, p.y2 + dy)
            if q[0] % 2 and q[1] % 2:
                continue
            qp = HalfPoint(*q)
            if qp.in_rectangle(ctx) and step_ok(p, qp):
                yield qp


def enumerate_paths(ctx: GrContext, dedup: bool = True) -> list[CanonicalPath]:
    """All canonical paths by DFS, deduplicated by their block sequences."""
    end = HalfPoint(2 * ctx.r, 2 * ctx.k)
    out = []

    def dfs(trail):
        p = trail[-1]
        if p == end:
            out.append(CanonicalPath(tuple(trail)))
            return
        for q in _successors(ctx, p):
            # the last grid crossing must be the corner itself
            if q.x2 == end.x2 and q != end or q.y2 == end.y2 and q != end:
                continue
            trail.append(q)
            dfs(trail)
            trail.pop()

    dfs([HalfPoint(0, 0)])
    if not dedup:
        return out
    seen = set()
    unique = []
    for path in out:
        sig = block_signature(ctx, path)
        if sig not in seen:
            seen.add(sig)
            unique.append(path)
    return unique


def diagonal_path(ctx: GrContext) -> CanonicalPath:
    """Diagonal through nodes to the border, then along it to the corner."""
    m = min(ctx.r, ctx.k)
    pts = [HalfPoint(2 * i, 2 * i) for i in range(m + 1)]
    x2, y2 = pts[-1].x2, pts[-1].y2
    if (x2, y2) != (2 * ctx.r, 2 * ctx.k):
        pts.pop()
        x2, y2 = 2 * (m - 1), 2 * (m - 1)
        # leave the diagonal through the last cell, then hug the far border
        if ctx.r > ctx.k:
            y2 += 1
            for x in range(m, ctx.r):
                pts.append(HalfPoint(2 * x, y2))
        else:
            x2 += 1
            for y in range(m, ctx.k):
                pts.append(HalfPoint(x2, 2 * y))
        pts.append(HalfPoint(2 * ctx.r, 2 * ctx.k))
    return validate_path(ctx, pts)


def decomposition_of(ctx: GrContext, path: CanonicalPath) -> list[tuple[Block, int]]:
    return [(block_at(ctx, p), i) for i, p in enumerate(path.points)]


def generators_of(ctx: GrContext, path: CanonicalPath) -> list[list[TwistedIrred]]:
    """Generators of each component B_{p_i}(i), normalized."""
    return [[generator(ctx, lam, mu, i) for lam, mu in block.pairs]
            for block, i in decomposition_of(ctx, path)]
