"""Ext groups and Euler pairings between irreducible equivariant bundles on Gr(k, n).

An irreducible bundle U^u (x) (V/U)^q (x) O(t) is a `TwistedIrred`.  With
O(1) = det U^*, twists are absorbed into the U-weight by `normalized()`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import memo
from .bottweil import cohomology_gr
from .grcore import DiagramError, diagram, pad, parse_diagram, format_diagram, trim
from .littlewood import GLWeight, dim_gl, dual_weight, tensor_decompose


class InternalError(AssertionError):
    """A computed value contradicts a proven statement; never expected on valid input."""


@dataclass(frozen=True, order=True)
class GrContext:
    k: int
    n: int

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise ValueError(f"need 0 < k < n, got k={self.k}, n={self.n}")

    @property
    def r(self) -> int:
        """Rank of the quotient bundle V/U."""
        return self.n - self.k

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    def __str__(self):
        return f"Gr({self.k},{self.n})"


@dataclass(frozen=True, order=True)
class TwistedIrred:
    u: tuple = ()
    q: tuple = ()
    twist: int = 0

    def __post_init__(self):
        object.__setattr__(self, "u", diagram(self.u))
        object.__setattr__(self, "q", diagram(self.q))

    def normalized(self, ctx: GrContext) -> "TwistedIrred":
        self.check(ctx)
        if self.twist == 0:
            return self
        u = trim(p - self.twist for p in pad(self.u, ctx.k))
        return TwistedIrred(u, self.q, 0)

    def check(self, ctx: GrContext) -> "TwistedIrred":
        if len(self.u) > ctx.k or len(self.q) > ctx.r:
            raise DiagramError(f"{self} does not live on {ctx}")
        return self

    def twisted(self, t: int) -> "TwistedIrred":
        return TwistedIrred(self.u, self.q, self.twist + t)

    def dual(self, ctx: GrContext) -> "TwistedIrred":
        a = self.normalized(ctx)
        return TwistedIrred(dual_weight(GLWeight(a.u, ctx.k)).weight,
                            dual_weight(GLWeight(a.q, ctx.r)).weight)

    def rank(self, ctx: GrContext) -> int:
        return dim_gl(GLWeight(self.u, ctx.k)) * dim_gl(GLWeight(self.q, ctx.r))

    def __str__(self):
        return f"{format_diagram(self.u)};{format_diagram(self.q)};{self.twist}"


def normalize_twist(ctx: GrContext, a: TwistedIrred) -> TwistedIrred:
    return a.normalized(ctx)


_IRRED_RE = re.compile(r"^\s*(\[[^\]]*\])\s*;\s*(\[[^\]]*\])\s*(?:;\s*(-?\d+)\s*)?$")


def parse_irred(text: str) -> TwistedIrred:
    """'[u];[q];t' (t optional)."""
    m = _IRRED_RE.match(text)
    if not m:
        raise DiagramError(f"expected '[u];[q];t', got {text!r}")
    return TwistedIrred(parse_diagram(m.group(1)), parse_diagram(m.group(2)), int(m.group(3) or 0))


def structure_sheaf() -> TwistedIrred:
    return TwistedIrred()


def trivial_weight(ctx: GrContext) -> tuple:
    return (0,) * ctx.n


def ext_graded(ctx: GrContext, a: TwistedIrred, b: TwistedIrred) -> dict[int, dict[tuple, int]]:
    """Ext^*(a, b) = H^*(X, a^v (x) b) as {degree: {GL(n) weight: multiplicity}}.

    a^v (x) b splits into irreducibles, so this is exact: decompose the U and
    V/U factors separately and run BBW on every pair of summands.
    """
    return {d: dict(ws) for d, ws in _ext_cached(ctx, a.normalized(ctx), b.normalized(ctx))}


def _ext_cached(ctx, a, b):
    key = (ctx.k, ctx.n, a.u, a.q, b.u, b.q)
    t = memo.table("ext")
    if key in t:
        return t[key]
    av = a.dual(ctx)
    u_parts = tensor_decompose(GLWeight(av.u, ctx.k), GLWeight(b.u, ctx.k))
    q_parts = tensor_decompose(GLWeight(av.q, ctx.r), GLWeight(b.q, ctx.r))
    acc: dict[int, dict[tuple, int]] = {}
    for qw, qm in q_parts.items():
        for uw, um in u_parts.items():
            res = cohomology_gr(ctx.k, ctx.n, qw, uw)
            if res.vanishing:
                continue
            if res.degree > ctx.dim:
                raise InternalError(f"BBW degree {res.degree} exceeds dim {ctx} = {ctx.dim}")
            slot = acc.setdefault(res.degree, {})
            slot[res.dominant] = slot.get(res.dominant, 0) + qm * um
    frozen = tuple(sorted((d, tuple(sorted(ws.items()))) for d, ws in acc.items()))
    return memo.remember("ext", key, frozen)


def cohomology(ctx: GrContext, a: TwistedIrred) -> dict[int, dict[tuple, int]]:
    return ext_graded(ctx, structure_sheaf(), a)


def ext_equivariant(ctx: GrContext, a: TwistedIrred, b: TwistedIrred) -> dict[int, int]:
    """Multiplicity of the trivial GL(n) representation in each Ext degree."""
    zero = trivial_weight(ctx)
    out = {}
    for d, ws in ext_graded(ctx, a, b).items():
        m = ws.get(zero, 0)
        if m:
            out[d] = m
    return out


def euler_chi(ctx: GrContext, a: TwistedIrred, b: TwistedIrred) -> int:
    total = 0
    for d, ws in ext_graded(ctx, a, b).items():
        dim = sum(m * dim_gl(GLWeight(w, ctx.n)) for w, m in ws.items())
        total += -dim if d % 2 else dim
    return total


def euler_chi_g(ctx: GrContext, a: TwistedIrred, b: TwistedIrred) -> int:
    return sum(-m if d % 2 else m for d, m in ext_equivariant(ctx, a, b).items())


def graded_as_json(graded: dict[int, dict[tuple, int]]) -> dict:
    return {"degrees": {str(d): [{"weight": list(w), "mult": m} for w, m in sorted(ws.items())]
                        for d, ws in sorted(graded.items())}}


def format_graded(graded: dict[int, dict[tuple, int]]) -> str:
    if not graded:
        return "0 (all degrees vanish)"
    lines = []
    for d, ws in sorted(graded.items()):
        parts = [f"{m}x{format_diagram(w)}" if m > 1 else format_diagram(w) for w, m in sorted(ws.items())]
        lines.append(f"H^{d}: " + " + ".join(parts))
    return "\n".join(lines)
