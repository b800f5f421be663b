"""Exceptional bundles E^{lam,mu}, their dual-collection property, and staircase complexes.

A block context (w, h) on Gr(k, n) is Bl_{w,h} = Y_{w,h} x Y_{k-h, n-k-w}.
The irreducible attached to (a, b) in it is U^a (x) (V/U)^{-b}.

E^{lam,mu} is computed three ways:
  gram   - the unique class in the span of the sub-block that pairs to a
           delta function under chi_G against the block's irreducibles;
  push_p - pushforward from Fl(k-h, k; V), filtered by irreducibles;
  push_f - pushforward from Fl(k, n-w; V).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bottweil import push_inner
from .grcore import BoxSpec, DiagramError, band_cuts, contains, cyclic_shift, enumerate_box, pad, trim, twist
from .homcalc import GrContext, InternalError, TwistedIrred, euler_chi_g
from .kclass import KClass, det_quotient, lambda_v_class, lambda_v_dual_class
from .littlewood import GLWeight, dual_weight, skew_expand, tensor_decompose


@dataclass(frozen=True)
class BlockContext:
    ctx: GrContext
    w: int
    h: int

    def __post_init__(self):
        if not (0 <= self.w <= self.ctx.r and 0 <= self.h <= self.ctx.k):
            raise ValueError(f"block ({self.w},{self.h}) outside {self.ctx}")

    @property
    def lam_box(self) -> BoxSpec:
        return BoxSpec(self.w, self.h)

    @property
    def mu_box(self) -> BoxSpec:
        return BoxSpec(self.ctx.k - self.h, self.ctx.r - self.w)

    @property
    def admissible(self) -> bool:
        """0 < w < n-k and 0 < h < k: both pushforward constructions apply."""
        return 0 < self.w < self.ctx.r and 0 < self.h < self.ctx.k

    @property
    def has_push_p(self) -> bool:
        return 0 < self.h < self.ctx.k

    @property
    def has_push_f(self) -> bool:
        return 0 < self.w < self.ctx.r

    def pairs(self) -> list[tuple]:
        mus = enumerate_box(self.mu_box)
        return [(lam, mu) for lam in enumerate_box(self.lam_box) for mu in mus]

    def check_pair(self, lam, mu):
        self.lam_box.check(lam)
        self.mu_box.check(mu)

    @classmethod
    def at_point(cls, ctx: GrContext, x: int, y: int) -> "BlockContext":
        return cls(ctx, ctx.r - x, y)


def admissible_blocks(ctx: GrContext) -> list[BlockContext]:
    return [BlockContext(ctx, w, h) for w in range(1, ctx.r) for h in range(1, ctx.k)]


def irreducible(ctx: GrContext, a, b) -> TwistedIrred:
    """U^a (x) (V/U)^{-b}."""
    return TwistedIrred(a, dual_weight(GLWeight(b, ctx.r)).weight)


# --- Gram route -----------------------------------------------------------

def gram_order(pairs):
    """A total order refining reverse containment on both indices: bigger first."""
    return sorted(pairs, key=lambda p: (-sum(p[0]) - sum(p[1]), tuple(-x for x in p[0]), tuple(-x for x in p[1])))


def gram_equivariant(bc: BlockContext) -> list[list[int]]:
    """M[i][j] = chi_G(irr_i, irr_j) over the block in enumeration order.

    Raises InternalError unless M[i][j] != 0 implies containment of both
    indices and the diagonal is 1.
    """
    ctx = bc.ctx
    pairs = bc.pairs()
    irr = [irreducible(ctx, a, b) for a, b in pairs]
    m = [[euler_chi_g(ctx, x, y) for y in irr] for x in irr]
    for i, (a, b) in enumerate(pairs):
        if m[i][i] != 1:
            raise InternalError(f"chi_G of {a},{b} with itself is {m[i][i]}")
        for j, (c, d) in enumerate(pairs):
            if m[i][j] and not (contains(c, a) and contains(d, b)):
                raise InternalError(f"chi_G({a},{b}; {c},{d}) = {m[i][j]} without containment")
    return m


def e_class_gram(bc: BlockContext, lam, mu) -> KClass:
    ctx = bc.ctx
    bc.check_pair(lam, mu)
    sub = gram_order([(a, b) for a in enumerate_box(bc.lam_box) if contains(lam, a)
                      for b in enumerate_box(bc.mu_box) if contains(mu, b)])
    irr = [irreducible(ctx, a, b) for a, b in sub]
    # sub[0] == (lam, mu); M restricted to sub is lower unitriangular in this order
    coeffs = [0] * len(sub)
    target = (trim(lam), trim(mu))
    for i in range(len(sub)):
        acc = sum(euler_chi_g(ctx, irr[i], irr[j]) * coeffs[j] for j in range(i))
        diag = euler_chi_g(ctx, irr[i], irr[i])
        if diag != 1:
            raise InternalError(f"singular Gram subsystem at {sub[i]}")
        rhs = 1 if sub[i] == target else 0
        coeffs[i] = rhs - acc
    return KClass(ctx, {(x.u, x.q): c for x, c in zip(irr, coeffs)})


# --- pushforward routes ---------------------------------------------------

@dataclass
class PushCertificate:
    route: str
    summands: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_json(self) -> dict:
        return {"route": self.route, "summands": self.summands, "ok": self.ok, "failures": self.failures}


def e_class_push_p(bc: BlockContext, lam, mu) -> tuple[KClass, PushCertificate]:
    """p_*((U/W)^lam (x) (V/W)^{-mu}) on Fl(k-h, k; V) -> Gr(k, V)."""
    ctx, h = bc.ctx, bc.h
    if not bc.has_push_p:
        raise ValueError(f"push_p needs 0 < h < k, block has h={h}")
    bc.check_pair(lam, mu)
    k, r = ctx.k, ctx.r
    cert = PushCertificate("push_p")
    terms: dict[tuple, int] = {}
    for nu in enumerate_box(BoxSpec(mu[0] if mu else 0, len(mu))):
        if not contains(mu, nu):
            continue
        q_weight = dual_weight(GLWeight(nu, r)).weight
        for alpha, m1 in skew_expand(mu, nu).items():
            if len(alpha) > h:
                continue
            pieces = tensor_decompose(GLWeight(lam, h), dual_weight(GLWeight(alpha, h)))
            for beta, m2 in pieces.items():
                cert.summands += 1
                res = push_inner([(beta, h), ((), k - h)])
                if res.vanishing:
                    continue
                if res.degree > 0:
                    cert.failures.append({"nu": list(nu), "alpha": list(alpha), "beta": list(beta),
                                          "degree": res.degree, "image": list(res.dominant)})
                    continue
                key = (trim(res.dominant), q_weight)
                terms[key] = terms.get(key, 0) + m1 * m2
    return KClass(ctx, terms), cert


def e_class_push_f(bc: BlockContext, lam, mu) -> tuple[KClass, PushCertificate]:
    """f_*((K/U)^{-mu} (x) K^lam) on Fl(k, n-w; V) -> Gr(k, V)."""
    ctx, w = bc.ctx, bc.w
    if not bc.has_push_f:
        raise ValueError(f"push_f needs 0 < w < n-k, block has w={w}")
    bc.check_pair(lam, mu)
    k, r = ctx.k, ctx.r
    s = r - w  # rank of K/U
    cert = PushCertificate("push_f")
    terms: dict[tuple, int] = {}
    mu_dual = dual_weight(GLWeight(mu, s))
    for alpha in enumerate_box(BoxSpec(lam[0] if lam else 0, len(lam))):
        if not contains(lam, alpha) or len(alpha) > k:
            continue
        for gamma, m1 in skew_expand(lam, alpha).items():
            if len(gamma) > s:
                continue
            for delta, m2 in tensor_decompose(mu_dual, GLWeight(gamma, s)).items():
                cert.summands += 1
                res = push_inner([((), w), (delta, s)])
                if res.vanishing:
                    continue
                if res.degree > 0:
                    cert.failures.append({"alpha": list(alpha), "gamma": list(gamma), "delta": list(delta),
                                          "degree": res.degree, "image": list(res.dominant)})
                    continue
                key = (alpha, trim(res.dominant))
                terms[key] = terms.get(key, 0) + m1 * m2
    return KClass(ctx, terms), cert


ROUTES = ("gram", "push_p", "push_f")


def degenerate(bc: BlockContext) -> bool:
    return bc.w in (0, bc.ctx.r) or bc.h in (0, bc.ctx.k)


def e_class(bc: BlockContext, lam, mu, route: str = "gram") -> KClass:
    """E^{lam,mu}; on degenerate blocks this is the irreducible U^lam (x) (V/U)^{-mu}."""
    if route == "gram":
        return e_class_gram(bc, lam, mu)
    if degenerate(bc) and not (route == "push_p" and bc.has_push_p or route == "push_f" and bc.has_push_f):
        bc.check_pair(lam, mu)
        return KClass.of(bc.ctx, irreducible(bc.ctx, lam, mu))
    if route == "push_p":
        cls, cert = e_class_push_p(bc, lam, mu)
    elif route == "push_f":
        cls, cert = e_class_push_f(bc, lam, mu)
    else:
        raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}")
    if not cert.ok:
        raise InternalError(f"higher direct images in {route} for {lam},{mu}: {cert.failures[0]}")
    return cls


# --- staircase complexes --------------------------------------------------

KINDS = ("U", "Q", "E-L", "E-M")


@dataclass
class StairComplex:
    kind: str
    terms: list  # [(label, KClass)]

    def alternating_sum(self):
        if not self.terms:
            return None
        total = self.terms[0][1] * 0
        for i, (_, cls) in enumerate(self.terms):
            total = total - cls if i % 2 else total + cls
        return total

    def ranks(self) -> list[int]:
        return [cls.rank() for _, cls in self.terms]

    def rank_alternation(self) -> int:
        return sum(-r if i % 2 else r for i, r in enumerate(self.ranks()))

    def as_json(self) -> dict:
        return {"kind": self.kind,
                "terms": [{"label": lab, "rank": cls.rank(), "class": cls.as_json()} for lab, cls in self.terms],
                "exact": check_exact_k(self)}


def check_exact_k(c: StairComplex) -> bool:
    total = c.alternating_sum()
    return total is None or not total


def _fmt(d):
    return "(" + ",".join(str(x) for x in d) + ")"


def staircase_u(ctx: GrContext, lam, mult_delta: dict | None = None) -> StairComplex:
    """0 -> U^lam -> ... -> U^{lam^(i)} (x) Lambda^{c_i} V -> ... -> U^{lam{1}}(1) -> 0.

    The final O(1) carries its equivariant structure det(V/U).
    `mult_delta` perturbs exterior-power degrees {i: delta} (mutation tests only).
    """
    box = BoxSpec(ctx.r, ctx.k)
    lam = box.check(lam)
    cuts = band_cuts(lam, box)
    U = lambda d: KClass(ctx, {(d, ()): 1})
    terms = [(f"U^{_fmt(lam)}", U(lam))]
    for i, (cut, c) in enumerate(cuts, start=1):
        c += (mult_delta or {}).get(i, 0)
        terms.append((f"U^{_fmt(cut)} x L^{c}V", U(cut) * lambda_v_class(ctx, c)))
    shifted = cyclic_shift(lam, box, 1)
    terms.append((f"U^{_fmt(shifted)}(1)", U(shifted) * det_quotient(ctx)))
    return StairComplex("U", terms)


def staircase_q(ctx: GrContext, mu, mult_delta: dict | None = None) -> StairComplex:
    """0 -> (V/U)^{-mu} -> ... -> (V/U)^{-mu^(i)} (x) Lambda^{c_i} V^* -> ... -> (V/U)^{-mu{1}}(1) -> 0.

    Obtained from the U-staircase on Gr(n-k, V^*); the final O(1) is det U^*.
    """
    box = BoxSpec(ctx.k, ctx.r)
    mu = box.check(mu)
    cuts = band_cuts(mu, box)
    Q = lambda d: KClass.of(ctx, irreducible(ctx, (), d))
    terms = [(f"(V/U)^-{_fmt(mu)}", Q(mu))]
    for i, (cut, c) in enumerate(cuts, start=1):
        c += (mult_delta or {}).get(i, 0)
        terms.append((f"(V/U)^-{_fmt(cut)} x L^{c}V*", Q(cut) * lambda_v_dual_class(ctx, c)))
    shifted = cyclic_shift(mu, box, 1)
    terms.append((f"(V/U)^-{_fmt(shifted)}(1)", Q(shifted).twist(1)))
    return StairComplex("Q", terms)


def staircase_e(bc: BlockContext, lam, mu, variant: str, route: str = "gram",
                mult_delta: dict | None = None) -> StairComplex:
    """Generalized staircases for E^{lam,mu}.

    L (lam_1 = w): cuts of lam in the w x h box, Lambda V, ends in
    E^{lam{1}, mu(1)}(1) from block (w, h-1).
    M (mu_1 = k-h): cuts of mu in the (k-h) x (n-k-w) box, Lambda V^*, ends
    in E^{lam(1), mu{1}}(1) from block (w+1, h).
    """
    ctx = bc.ctx
    bc.check_pair(lam, mu)
    lam, mu = trim(lam), trim(mu)
    delta = mult_delta or {}
    E = lambda b, l, m: e_class(b, l, m, route)
    if variant == "L":
        if not lam or lam[0] != bc.w:
            raise DiagramError(f"variant L needs lam_1 = w = {bc.w}, got {list(lam)}")
        terms = [(f"E^{_fmt(lam)},{_fmt(mu)}", E(bc, lam, mu))]
        for i, (cut, c) in enumerate(band_cuts(lam, bc.lam_box), start=1):
            c += delta.get(i, 0)
            terms.append((f"E^{_fmt(cut)},{_fmt(mu)} x L^{c}V", E(bc, cut, mu) * lambda_v_class(ctx, c)))
        end_bc = BlockContext(ctx, bc.w, bc.h - 1)
        lam_end = cyclic_shift(lam, bc.lam_box, 1)
        mu_end = trim(twist(pad(mu, ctx.r - bc.w), 1))
        end = E(end_bc, lam_end, mu_end) * det_quotient(ctx)
        terms.append((f"E^{_fmt(lam_end)},{_fmt(mu_end)}(1)", end))
        return StairComplex("E-L", terms)
    if variant == "M":
        if not mu or mu[0] != ctx.k - bc.h:
            raise DiagramError(f"variant M needs mu_1 = k-h = {ctx.k - bc.h}, got {list(mu)}")
        terms = [(f"E^{_fmt(lam)},{_fmt(mu)}", E(bc, lam, mu))]
        for i, (cut, c) in enumerate(band_cuts(mu, bc.mu_box), start=1):
            c += delta.get(i, 0)
            terms.append((f"E^{_fmt(lam)},{_fmt(cut)} x L^{c}V*", E(bc, lam, cut) * lambda_v_dual_class(ctx, c)))
        end_bc = BlockContext(ctx, bc.w + 1, bc.h)
        lam_end = trim(twist(pad(lam, bc.h), 1))
        mu_end = cyclic_shift(mu, bc.mu_box, 1)
        end = E(end_bc, lam_end, mu_end).twist(1)
        terms.append((f"E^{_fmt(lam_end)},{_fmt(mu_end)}(1)", end))
        return StairComplex("E-M", terms)
    raise ValueError(f"variant must be 'L' or 'M', got {variant!r}")


def staircase_u_instances(ctx: GrContext) -> list[tuple]:
    return [lam for lam in enumerate_box(BoxSpec(ctx.r, ctx.k)) if lam and lam[0] == ctx.r]


def staircase_q_instances(ctx: GrContext) -> list[tuple]:
    return [mu for mu in enumerate_box(BoxSpec(ctx.k, ctx.r)) if mu and mu[0] == ctx.k]


def staircase_e_instances(bc: BlockContext, variant: str) -> list[tuple]:
    if variant == "L":
        return [(lam, mu) for lam, mu in bc.pairs() if lam and lam[0] == bc.w]
    return [(lam, mu) for lam, mu in bc.pairs() if mu and mu[0] == bc.ctx.k - bc.h]


# --- orthogonality of E-collections ---------------------------------------

def corollary_order(pairs):
    """A total order refining (a, b) <= (l, m) iff a contains l and b contains m."""
    return gram_order(pairs)


def factors(cls: KClass):
    """Irreducible filtration factors read off a nonnegative class."""
    return [a for a, c in cls if c > 0]
