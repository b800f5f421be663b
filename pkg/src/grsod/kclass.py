"""Equivariant K-classes on Gr(k, n) and K_0 coordinates in the Kapranov basis.

The equivariant K-group is free on irreducible bundles U^u (x) (V/U)^q, so a
class is a finite map (u, q) -> int.  The forgetful map to K_0 is read off
through Euler pairings against the Kapranov bundles Sigma^lambda U^*.
"""

from __future__ import annotations

from collections import defaultdict

from . import memo
from .grcore import BoxSpec, diagram, enumerate_box, format_diagram
from .homcalc import GrContext, InternalError, TwistedIrred, euler_chi, euler_chi_g
from .linalg import det, is_upper_unitriangular, solve_upper_unitriangular
from .littlewood import GLWeight, dual_weight, tensor_decompose


class KClass:
    """Integer combination of irreducible equivariant bundles on a fixed Gr(k, n)."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: GrContext, terms=None):
        self.ctx = ctx
        acc: dict[tuple, int] = defaultdict(int)
        for (u, q), c in dict(terms or {}).items():
            a = TwistedIrred(u, q).check(ctx)
            acc[(a.u, a.q)] += c
        self.terms = {key: c for key, c in sorted(acc.items()) if c}

    @classmethod
    def of(cls, ctx: GrContext, a: TwistedIrred) -> "KClass":
        a = a.normalized(ctx)
        return cls(ctx, {(a.u, a.q): 1})

    def _same(self, other: "KClass"):
        if other.ctx != self.ctx:
            raise ValueError(f"classes live on {self.ctx} and {other.ctx}")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return KClass(self.ctx, out)

    def __neg__(self):
        return KClass(self.ctx, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return KClass(self.ctx, {key: c * other for key, c in self.terms.items()})
        self._same(other)
        ctx = self.ctx
        out: dict[tuple, int] = defaultdict(int)
        for (u1, q1), c1 in self.terms.items():
            for (u2, q2), c2 in other.terms.items():
                us = tensor_decompose(GLWeight(u1, ctx.k), GLWeight(u2, ctx.k))
                qs = tensor_decompose(GLWeight(q1, ctx.r), GLWeight(q2, ctx.r))
                for u, mu in us.items():
                    for q, mq in qs.items():
                        out[(u, q)] += c1 * c2 * mu * mq
        return KClass(ctx, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, KClass) and self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, tuple(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        for (u, q), c in self.terms.items():
            yield TwistedIrred(u, q), c

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"KClass({self.ctx}, {self.terms})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (u, q), c in self.terms.items():
            body = f"U^{format_diagram(u)}(V/U)^{format_diagram(q)}"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)

    def rank(self) -> int:
        return sum(c * a.rank(self.ctx) for a, c in self)

    def dual(self) -> "KClass":
        return KClass(self.ctx, {(a.dual(self.ctx).u, a.dual(self.ctx).q): c for a, c in self})

    def twist(self, t: int) -> "KClass":
        out: dict[tuple, int] = {}
        for a, c in self:
            b = a.twisted(t).normalized(self.ctx)
            out[(b.u, b.q)] = out.get((b.u, b.q), 0) + c
        return KClass(self.ctx, out)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def as_json(self) -> list[dict]:
        return [{"u": list(u), "q": list(q), "coeff": c} for (u, q), c in self.terms.items()]

    @classmethod
    def from_json(cls, ctx: GrContext, data) -> "KClass":
        return cls(ctx, {(diagram(t["u"]), diagram(t["q"])): int(t["coeff"]) for t in data})


def class_of(ctx: GrContext, a: TwistedIrred) -> KClass:
    return KClass.of(ctx, a)


def zero(ctx: GrContext) -> KClass:
    return KClass(ctx)


def one(ctx: GrContext) -> KClass:
    return KClass.of(ctx, TwistedIrred())


def mul_class(a: KClass, b: KClass) -> KClass:
    return a * b


def dual_class(a: KClass) -> KClass:
    return a.dual()


def twist_class(a: KClass, t: int) -> KClass:
    return a.twist(t)


def lambda_v_class(ctx: GrContext, c: int) -> KClass:
    """Lambda^c V = sum_{a+b=c} Lambda^a U (x) Lambda^b (V/U)."""
    if not 0 <= c <= ctx.n:
        raise ValueError(f"exterior power {c} out of range 0..{ctx.n}")
    terms = {}
    for a in range(max(0, c - ctx.r), min(c, ctx.k) + 1):
        terms[((1,) * a, (1,) * (c - a))] = 1
    return KClass(ctx, terms)


def lambda_v_dual_class(ctx: GrContext, c: int) -> KClass:
    return lambda_v_class(ctx, c).dual()


def det_quotient(ctx: GrContext) -> KClass:
    """det(V/U): the O(1) that makes U-type staircases equivariantly exact."""
    return KClass(ctx, {((), (1,) * ctx.r): 1})


def det_v(ctx: GrContext) -> KClass:
    return KClass(ctx, {((1,) * ctx.k, (1,) * ctx.r): 1})


def chi(a: KClass, b: KClass) -> int:
    """Bilinear Euler pairing sum (-1)^i dim Ext^i(a, b)."""
    a._same(b)
    return sum(ca * cb * euler_chi(a.ctx, x, y) for x, ca in a for y, cb in b)


def chi_g(a: KClass, b: KClass) -> int:
    a._same(b)
    return sum(ca * cb * euler_chi_g(a.ctx, x, y) for x, ca in a for y, cb in b)


# --- Kapranov coordinates -------------------------------------------------

def kapranov_index(ctx: GrContext) -> list[tuple]:
    return enumerate_box(BoxSpec(ctx.r, ctx.k))


def kapranov_bundle(ctx: GrContext, lam) -> TwistedIrred:
    """Sigma^lam U^* = U^{-lam}."""
    return TwistedIrred(dual_weight(GLWeight(lam, ctx.k)).weight, ())


def kapranov_gram(ctx: GrContext) -> list[list[int]]:
    """G[mu][lam] = chi(U^{-mu}, U^{-lam}) in enumeration order; upper unitriangular."""
    key = (ctx.k, ctx.n)
    t = memo.table("kapranov_gram")
    if key not in t:
        index = kapranov_index(ctx)
        bundles = [kapranov_bundle(ctx, lam) for lam in index]
        g = [[euler_chi(ctx, a, b) for b in bundles] for a in bundles]
        if not is_upper_unitriangular(g):
            raise InternalError(f"Kapranov Gram matrix on {ctx} is not unitriangular")
        memo.remember("kapranov_gram", key, tuple(tuple(row) for row in g))
    return [list(row) for row in t[key]]


def kapranov_coordinates(a: KClass) -> list[int]:
    ctx = a.ctx
    probes = [KClass.of(ctx, kapranov_bundle(ctx, mu)) for mu in kapranov_index(ctx)]
    rhs = [chi(p, a) for p in probes]
    return solve_upper_unitriangular(kapranov_gram(ctx), rhs)


def coordinates_to_class(ctx: GrContext, coords: list[int]) -> KClass:
    """Inverse direction, useful as an oracle: sum x_lam [U^{-lam}]."""
    out = zero(ctx)
    for lam, x in zip(kapranov_index(ctx), coords):
        if x:
            out = out + KClass.of(ctx, kapranov_bundle(ctx, lam)) * x
    return out


def collection_matrix(classes: list[KClass]) -> list[list[int]]:
    return [kapranov_coordinates(c) for c in classes]


def collection_determinant(ctx: GrContext, classes: list[KClass]) -> int:
    expected = len(kapranov_index(ctx))
    if len(classes) != expected:
        raise ValueError(f"need {expected} classes on {ctx}, got {len(classes)}")
    return det(collection_matrix(classes))
