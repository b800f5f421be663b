"""Independent reference implementations used to freeze expected values.

Nothing here imports the engine: each oracle recomputes a quantity by a
different method (monomial expansion, simple reflections, tableau counting).
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from math import comb


# --- Schur polynomials as monomial counters -----------------------------------

def _ssyt(shape, nvars):
    """Yield the content vector of every SSYT of `shape` with entries 1..nvars."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    filling = {}

    def rec(i):
        if i == len(cells):
            content = [0] * nvars
            for v in filling.values():
                content[v - 1] += 1
            yield tuple(content)
            return
        r, c = cells[i]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, nvars + 1):
            filling[(r, c)] = v
            yield from rec(i + 1)
        filling.pop((r, c), None)

    yield from rec(0)


@lru_cache(maxsize=None)
def schur_monomials(shape, nvars):
    shape = tuple(p for p in shape if p)
    if len(shape) > nvars:
        return Counter()
    return Counter(_ssyt(shape, nvars))


def _peel(poly: Counter, nvars: int) -> dict:
    """Write a symmetric polynomial (as a monomial Counter) in the Schur basis."""
    poly = Counter({m: c for m, c in poly.items() if c})
    out = {}
    while poly:
        lead = max(poly)
        c = poly[lead]
        shape = tuple(p for p in lead if p)
        out[shape] = c
        for m, d in schur_monomials(shape, nvars).items():
            poly[m] -= c * d
        poly = Counter({m: v for m, v in poly.items() if v})
    return out


def lr_oracle(alpha, beta, nvars=None) -> dict:
    """Schur expansion of s_alpha * s_beta in nvars variables (default: no truncation)."""
    alpha = tuple(p for p in alpha if p)
    beta = tuple(p for p in beta if p)
    if nvars is None:
        nvars = max(1, len(alpha) + len(beta))
    a, b = schur_monomials(alpha, nvars), schur_monomials(beta, nvars)
    prod = Counter()
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            prod[tuple(x + y for x, y in zip(m1, m2))] += c1 * c2
    return _peel(prod, nvars)


def dim_oracle(weight, rank) -> int:
    """Dimension of a GL(rank) irreducible by counting tableaux after a det twist."""
    w = list(weight) + [0] * (rank - len(weight))
    shift = -min(w + [0])
    return sum(schur_monomials(tuple(x + shift for x in w), rank).values())


# --- Borel-Weil-Bott by simple reflections ----------------------------------------

def bbw_oracle(weight):
    """Dot action of simple reflections until dominant.

    Returns None when some reflection fixes the weight (cohomology vanishes),
    otherwise (number of reflections used, dominant weight).
    """
    w = list(weight)
    steps = 0
    while True:
        for i in range(len(w) - 1):
            if w[i] - w[i + 1] == -1:
                return None
            if w[i] < w[i + 1]:
                # s_i . w = s_i(w + rho) - rho
                w[i], w[i + 1] = w[i + 1] - 1, w[i] + 1
                steps += 1
                break
        else:
            return steps, tuple(w)


# --- counting -----------------------------------------------------------------

def delannoy(m: int, n: int) -> int:
    return sum(comb(m, i) * comb(n, i) * 2 ** i for i in range(min(m, n) + 1))


def partitions_in_box(w: int, h: int):
    """Diagrams with at most h rows and at most w columns, as trimmed tuples."""
    out = []
    for parts in product(range(w + 1), repeat=h):
        if all(parts[i] >= parts[i + 1] for i in range(h - 1)):
            out.append(tuple(p for p in parts if p))
    return out


def transpose_oracle(shape):
    shape = [p for p in shape if p]
    return tuple(sum(1 for p in shape if p > c) for c in range(shape[0] if shape else 0))
