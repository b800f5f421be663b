"""Borel-Bott-Weil for Grassmannians and relative Grassmannian fibrations.

Weights of a Levi factor are listed block by block, quotient-most block
first; on Gr(k, n) that is (V/U | U).  The rho-shift is (m, m-1, ..., 1).
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from . import memo
from .grcore import pad


class BBWResult(NamedTuple):
    vanishing: bool
    degree: int = 0
    dominant: tuple = ()

    def as_json(self) -> dict:
        return {"vanishing": self.vanishing, "degree": self.degree, "dominant": list(self.dominant)}


VANISHING = BBWResult(True, 0, ())


def rho(m: int) -> tuple:
    return tuple(range(m, 0, -1))


def bbw_reduce(shifted: Sequence[int]) -> BBWResult:
    """Cohomology from a rho-shifted sequence: repeats vanish, else sort.

    The degree is the number of pairs i < j with entry_i < entry_j; the
    dominant weight is the descending sort minus rho.
    """
    key = tuple(shifted)
    t = memo.table("bbw")
    if key in t:
        return BBWResult(*t[key])
    if len(set(key)) < len(key):
        res = VANISHING
    else:
        inversions = sum(1 for i in range(len(key)) for j in range(i + 1, len(key)) if key[i] < key[j])
        srt = sorted(key, reverse=True)
        res = BBWResult(False, inversions, tuple(s - r for s, r in zip(srt, rho(len(key)))))
    memo.remember("bbw", key, tuple(res))
    return res


def push_inner(blocks: Sequence[tuple[Sequence[int], int]]) -> BBWResult:
    """Relative BBW along the fibration merging the given blocks into one bundle.

    `blocks` is a list of (weight, rank), quotient-most first.  A
    non-vanishing result (d, nu) means R^d of the pushforward is the Schur
    functor nu of the merged bundle; blocks pulled back from the base are
    passed through by the caller.
    """
    seq = []
    for weight, rank in blocks:
        seq.extend(pad(weight, rank))
    m = len(seq)
    return bbw_reduce(tuple(s + r for s, r in zip(seq, rho(m))))


def cohomology_gr(k: int, n: int, q_weight: Sequence[int], u_weight: Sequence[int]) -> BBWResult:
    """H^*(Gr(k, n), (V/U)^q (x) U^u) as a single GL(n) irreducible in one degree."""
    return push_inner([(q_weight, n - k), (u_weight, k)])
