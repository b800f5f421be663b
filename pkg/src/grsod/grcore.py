"""Young diagram and weight combinatorics.

A diagram is a plain tuple of ints, weakly decreasing, stored with trailing
zeros trimmed.  Negative parts are allowed (GL dominant weights); box,
codec and transpose operations reject them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, NamedTuple, Sequence

Diagram = tuple  # tuple[int, ...]


class DiagramError(ValueError):
    pass


def diagram(parts: Iterable[int]) -> Diagram:
    """Validate and canonicalize (trim trailing zeros)."""
    d = tuple(int(p) for p in parts)
    for a, b in zip(d, d[1:]):
        if a < b:
            raise DiagramError(f"not weakly decreasing: {list(d)}")
    return trim(d)


def trim(d: Sequence[int]) -> Diagram:
    d = tuple(d)
    end = len(d)
    while end and d[end - 1] == 0:
        end -= 1
    return d[:end]


def pad(d: Sequence[int], length: int) -> tuple:
    """Pad with zeros to `length`; trailing zeros beyond it are dropped."""
    d = trim(d)
    if len(d) > length:
        raise DiagramError(f"{list(d)} has more than {length} nonzero rows")
    return d + (0,) * (length - len(d))


def size(d: Sequence[int]) -> int:
    return sum(d)


@dataclass(frozen=True)
class BoxSpec:
    w: int
    h: int

    def __post_init__(self):
        if self.w < 0 or self.h < 0:
            raise DiagramError(f"negative box {self.w}x{self.h}")

    def fits(self, d: Sequence[int]) -> bool:
        d = trim(d)
        return len(d) <= self.h and all(0 <= p <= self.w for p in d)

    def check(self, d: Sequence[int]) -> Diagram:
        d = diagram(d)
        if not self.fits(d):
            raise DiagramError(f"{list(d)} does not fit in a {self.w}x{self.h} box")
        return d


class BandCut(NamedTuple):
    cut: Diagram
    removed: int


def contains(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff b is a subdiagram of a (componentwise, after zero padding)."""
    a, b = diagram(a), diagram(b)
    n = max(len(a), len(b))
    return all(x >= y for x, y in zip(pad_any(a, n), pad_any(b, n)))


def pad_any(d: Sequence[int], length: int) -> tuple:
    return tuple(d) + (0,) * (length - len(d))


def enumerate_box(box: BoxSpec) -> list[Diagram]:
    """All diagrams in a w x h box, graded by size then lexicographic."""
    out = []
    for parts in combinations_with_replacement(range(box.w, -1, -1), box.h):
        out.append(trim(parts))
    out.sort(key=_graded_lex_key)
    return out


def _graded_lex_key(d):
    return (sum(d), d)


def box_count(box: BoxSpec) -> int:
    return comb(box.w + box.h, box.h)


def encode_binary(d: Sequence[int], box: BoxSpec) -> str:
    """Boundary path of `d` read from the lower-left corner: 0 = right, 1 = up."""
    d = pad(box.check(d), box.h)
    bits = []
    prev = 0
    # bottom row first
    for part in reversed(d):
        bits.append("0" * (part - prev))
        bits.append("1")
        prev = part
    bits.append("0" * (box.w - prev))
    return "".join(bits)


def decode_binary(word: str, box: BoxSpec) -> Diagram:
    if len(word) != box.w + box.h or set(word) - {"0", "1"}:
        raise DiagramError(f"bad word {word!r} for a {box.w}x{box.h} box")
    if word.count("1") != box.h:
        raise DiagramError(f"word {word!r} must contain exactly {box.h} ones")
    rows = []
    rights = 0
    for bit in word:
        if bit == "0":
            rights += 1
        else:
            rows.append(rights)
    return trim(reversed(rows))


def rotate(word: str, steps: int = 1) -> str:
    """a1..an -> an a1..a(n-1), applied `steps` times (negative allowed)."""
    if not word:
        return word
    s = steps % len(word)
    return word[len(word) - s:] + word[: len(word) - s]


def cyclic_shift(d: Sequence[int], box: BoxSpec, steps: int = 1) -> Diagram:
    d = box.check(d)
    n = box.w + box.h
    if n == 0:
        return d
    steps %= n
    for _ in range(steps):
        rows = pad(d, box.h)
        if box.h == 0:
            break
        if rows[0] < box.w:
            d = trim(p + 1 for p in rows)
        else:
            d = trim(rows[1:] + (0,))
    return d


def twist(d: Sequence[int], t: int) -> Diagram:
    """Add t to every part; length is that of the given sequence."""
    return tuple(p + t for p in d)


def transpose(d: Sequence[int]) -> Diagram:
    d = diagram(d)
    if d and d[-1] < 0:
        raise DiagramError(f"cannot transpose {list(d)}: negative part")
    if not d:
        return ()
    return tuple(sum(1 for p in d if p > j) for j in range(d[0]))


def band_cuts(d: Sequence[int], box: BoxSpec) -> list[BandCut]:
    """Band cuts of a maximal-width diagram via the transpose formulas."""
    d = box.check(d)
    w = box.w
    if w == 0 or not d or d[0] != w:
        raise DiagramError(f"{list(d)} is not of maximal width {w}")
    t = pad_any(transpose(d), w)
    total = size(d)
    cuts = []
    for i in range(1, w + 1):
        col = t[: w - i] + tuple(c - 1 for c in t[w - i + 1:]) + (0,)
        cut = transpose(trim(col))
        cuts.append(BandCut(cut, total - size(cut)))
    return cuts


def band_cuts_binary(d: Sequence[int], box: BoxSpec) -> list[BandCut]:
    """Same cuts from the bit-flip rule on the boundary word."""
    d = box.check(d)
    word = encode_binary(d, box)
    if not word or word[-1] != "1":
        raise DiagramError(f"{list(d)} is not of maximal width {box.w}")
    zeros = sorted((i for i, b in enumerate(word) if b == "0"), reverse=True)
    out = []
    for z in zeros:
        flipped = word[:z] + "1" + word[z + 1: -1] + "0"
        cut = decode_binary(flipped, box)
        out.append(BandCut(cut, size(d) - size(cut)))
    return out


def format_diagram(d: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in d) + "]"


def parse_diagram(text: str) -> Diagram:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise DiagramError(f"expected [a,b,...], got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    try:
        return diagram(int(x) for x in body.split(","))
    except ValueError as exc:
        if isinstance(exc, DiagramError):
            raise
        raise DiagramError(f"bad diagram {text!r}") from None
