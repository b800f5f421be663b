"""Littlewood-Richardson coefficients and Schur functor decompositions.

Weights of GL(r) are tuples of ints; they are padded to length r internally
and returned trimmed.  Products of rational weights are reduced to products
of partitions by a determinant twist.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import prod

from . import memo
from .grcore import DiagramError, contains, diagram, pad, size, trim


@dataclass(frozen=True)
class GLWeight:
    weight: tuple
    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError(f"rank must be non-negative, got {self.rank}")
        object.__setattr__(self, "weight", diagram(self.weight))
        if len(self.weight) > self.rank:
            raise DiagramError(f"{list(self.weight)} has too many rows for GL({self.rank})")

    @property
    def padded(self) -> tuple:
        return pad(self.weight, self.rank)


class RankMismatch(ValueError):
    pass


def _check_partition(d):
    d = diagram(d)
    if d and d[-1] < 0:
        raise DiagramError(f"{list(d)} has negative parts")
    return d


def lr_product(alpha, beta, max_rows: int | None = None) -> dict[tuple, int]:
    """s_alpha * s_beta as {gamma: multiplicity}, dropping gamma with > max_rows rows.

    Enumerates LR tableaux of shape gamma/alpha and content beta: beta_i
    boxes labelled i are added as a horizontal strip, subject to the
    lattice-word condition.
    """
    alpha, beta = _check_partition(alpha), _check_partition(beta)
    if max_rows is None:
        max_rows = len(alpha) + len(beta)
    if len(alpha) > max_rows or len(beta) > max_rows:
        return {}
    # s_a s_b = s_b s_a; strip the shorter content
    if (size(beta), beta) > (size(alpha), alpha):
        alpha, beta = beta, alpha
    key = (alpha, beta, max_rows)
    t = memo.table("lr")
    if key not in t:
        memo.remember("lr", key, tuple(sorted(_lr_fill(alpha, beta, max_rows).items())))
    return dict(t[key])


def _lr_fill(alpha, beta, max_rows):
    result: Counter = Counter()
    rows = len(alpha) + len(beta)
    rows = min(rows, max_rows)
    start = pad(alpha, rows) if len(alpha) <= rows else None
    if start is None:
        return result
    m = len(beta)

    # prev_cum[r]: number of (label-1) entries in rows 0..r (inclusive)
    def place(label, shape, prev_cum):
        if label > m:
            result[trim(shape)] += 1
            return
        need = beta[label - 1]
        cur = list(shape)
        cum = [0] * rows

        def row(r, remaining, running):
            if r == rows:
                if remaining == 0:
                    place(label + 1, tuple(cur), cum[:])
                return
            limit = shape[r - 1] - shape[r] if r > 0 else remaining
            limit = min(limit, remaining)
            for a in range(limit, -1, -1):
                total = running + a
                if label > 1:
                    allowed = prev_cum[r - 1] if r > 0 else 0
                    if total > allowed:
                        continue
                cur[r] = shape[r] + a
                cum[r] = total
                row(r + 1, remaining - a, total)
            cur[r] = shape[r]

        row(0, need, 0)

    place(1, start, [0] * rows)
    return result


def lr_coefficient(alpha, beta, gamma) -> int:
    alpha, beta, gamma = (_check_partition(x) for x in (alpha, beta, gamma))
    if size(gamma) != size(alpha) + size(beta):
        return 0
    if not (contains(gamma, alpha) and contains(gamma, beta)):
        return 0
    return lr_product(alpha, beta, len(gamma)).get(gamma, 0)


def dual_weight(a: GLWeight) -> GLWeight:
    return GLWeight(trim(-p for p in reversed(a.padded)), a.rank)


def dim_gl(a: GLWeight) -> int:
    """Weyl dimension formula."""
    w = a.padded
    r = a.rank
    num = prod(w[i] - w[j] + j - i for i in range(r) for j in range(i + 1, r))
    den = prod(j - i for i in range(r) for j in range(i + 1, r))
    return num // den


def tensor_decompose(a: GLWeight, b: GLWeight) -> dict[tuple, int]:
    """Sigma^a (x) Sigma^b for GL(r), as {weight: multiplicity} with weights trimmed."""
    if a.rank != b.rank:
        raise RankMismatch(f"GL({a.rank}) vs GL({b.rank})")
    r = a.rank
    if r == 0:
        return {(): 1}
    pa, pb = a.padded, b.padded
    ma, mb = pa[-1], pb[-1]
    base_a = tuple(p - ma for p in pa)
    base_b = tuple(p - mb for p in pb)
    out = {}
    for gamma, mult in lr_product(trim(base_a), trim(base_b), r).items():
        out[trim(p + ma + mb for p in pad(gamma, r))] = mult
    return out


def skew_expand(beta, alpha) -> dict[tuple, int]:
    """Sigma^{beta/alpha} as {gamma: m^beta_{alpha,gamma}}."""
    beta, alpha = _check_partition(beta), _check_partition(alpha)
    if not contains(beta, alpha):
        raise DiagramError(f"{list(alpha)} is not contained in {list(beta)}")
    n = size(beta) - size(alpha)
    out = {}
    for gamma in _partitions_inside(beta, n):
        c = lr_coefficient(alpha, gamma, beta)
        if c:
            out[gamma] = c
    return out


def _partitions_inside(outer, n):
    """Partitions of n contained in `outer`."""
    outer = tuple(outer)

    def rec(i, remaining, cap):
        if remaining == 0:
            yield ()
            return
        if i >= len(outer):
            return
        for p in range(min(cap, outer[i], remaining), 0, -1):
            for rest in rec(i + 1, remaining - p, p):
                yield (p,) + rest

    yield from rec(0, n, n)
