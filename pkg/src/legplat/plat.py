"""Tuple encoding of Legendrian 4-plat fronts and their classical data.

A front has four strand positions, numbered 1 (top) to 4 (bottom).  Both
ends carry a pair of cusps joining positions (1, 2) and (3, 4).  A crossing
at slot ``k`` exchanges the strands at positions ``k`` and ``k + 1``.

Center bands put their crossings at slot 2; a side band ``(u, l)`` puts ``u``
crossings at slot 1 followed by ``l`` crossings at slot 3.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence, Union

Band = Union[int, tuple]

CUSP_PAIRS = ((1, 2), (3, 4))
WORD_CLASSES = {
    "O1": ("LLRR", "RRLL"),
    "O2": ("LRRL", "RLLR"),
    "O3": ("LRLR", "RLRL"),
}
# search order when picking a default orientation; top strand rightward first
CANDIDATE_WORDS = ("RLLR", "RLRL", "LRRL", "LRLR")

TAXONOMY = ("single", "double", "split-double", "split-triple",
            "split-quadruple", "long")


class TupleSyntaxError(ValueError):
    """Text does not follow the ``[t1,(u,l),t3,...]`` grammar."""


class TupleValidityError(ValueError):
    """Well-formed text encoding a tuple that breaks the canonical rules."""


class NotAKnotError(ValueError):
    """A knot-only quantity was requested for a multi-component link."""


class OrientationError(ValueError):
    """An orientation word is inconsistent with the cusps of a front."""


@dataclass(frozen=True)
class PlatTuple:
    bands: tuple

    def __post_init__(self):
        bands = tuple(tuple(b) if isinstance(b, (list, tuple)) else b
                      for b in self.bands)
        object.__setattr__(self, "bands", bands)
        if len(bands) % 2 == 0:
            raise TupleValidityError(
                f"tuple must have odd length, got {len(bands)}")
        for i, b in enumerate(bands):
            if i % 2 == 0:
                if isinstance(b, tuple) or not isinstance(b, int):
                    raise TupleValidityError(
                        f"band {i + 1} is a center band and must be an integer")
                if b <= 0:
                    raise TupleValidityError(
                        f"center band {i + 1} must be positive, got {b}")
            else:
                if not (isinstance(b, tuple) and len(b) == 2
                        and all(isinstance(x, int) for x in b)):
                    raise TupleValidityError(
                        f"band {i + 1} is a side band and must be a pair (u,l)")
                if b[0] < 0 or b[1] < 0:
                    raise TupleValidityError(
                        f"side band {i + 1} has a negative sub-band count")
                if b[0] + b[1] <= 0:
                    raise TupleValidityError(
                        f"side band {i + 1} must have u+l > 0, got {b}")

    def __str__(self):
        parts = []
        for b in self.bands:
            parts.append(f"({b[0]},{b[1]})" if isinstance(b, tuple) else str(b))
        return "[" + ",".join(parts) + "]"

    @property
    def n(self) -> int:
        return len(self.bands)

    def band_total(self, i: int) -> int:
        b = self.bands[i]
        return b[0] + b[1] if isinstance(b, tuple) else b

    @property
    def total_crossings(self) -> int:
        return sum(self.band_total(i) for i in range(self.n))

    def reflected(self) -> "PlatTuple":
        """Top-bottom mirror: side sub-bands trade places."""
        return PlatTuple(tuple((b[1], b[0]) if isinstance(b, tuple) else b
                               for b in self.bands))


_TOKEN = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)|(-?\d+)")


def parse_tuple(text: str) -> PlatTuple:
    s = "".join(text.split())
    if not (s.startswith("[") and s.endswith("]")):
        raise TupleSyntaxError(f"expected '[...]', got {text!r}")
    body = s[1:-1]
    if not body:
        raise TupleValidityError("tuple must have odd length, got 0")
    bands = []
    pos = 0
    while True:
        m = _TOKEN.match(body, pos)
        if m is None:
            raise TupleSyntaxError(f"cannot parse entry at {body[pos:]!r}")
        if m.group(3) is not None:
            bands.append(int(m.group(3)))
        else:
            bands.append((int(m.group(1)), int(m.group(2))))
        pos = m.end()
        if pos == len(body):
            break
        if body[pos] != ",":
            raise TupleSyntaxError(f"expected ',' at {body[pos:]!r}")
        pos += 1
    for i, b in enumerate(bands):
        # shape errors are reported as validity errors, matching the grammar's
        # parity rule rather than the token syntax
        if i % 2 == 0 and isinstance(b, tuple):
            raise TupleValidityError(f"band {i + 1} must be an integer")
        if i % 2 == 1 and not isinstance(b, tuple):
            raise TupleValidityError(f"band {i + 1} must be a pair (u,l)")
    return PlatTuple(tuple(bands))


def render_tuple(t: PlatTuple) -> str:
    return str(t)


class Crossing(NamedTuple):
    index: int          # x-order, 1-based
    slot: int           # 1, 2 or 3
    band: Optional[int] = None  # 1-based band index, None for free fronts
    sub: Optional[str] = None   # 'center', 'upper' or 'lower'


@dataclass(frozen=True)
class FrontDiagram:
    """Plat-form 4-strand front; cusps are implicit at both ends."""

    crossings: tuple
    nbands: int = 0

    @classmethod
    def from_slots(cls, slots: Sequence[int]) -> "FrontDiagram":
        for s in slots:
            if s not in (1, 2, 3):
                raise ValueError(f"slot must be 1, 2 or 3, got {s}")
        return cls(tuple(Crossing(i + 1, s) for i, s in enumerate(slots)))

    @property
    def slots(self) -> tuple:
        return tuple(c.slot for c in self.crossings)

    def __len__(self):
        return len(self.crossings)

    def band_crossings(self, band: int) -> list:
        return [c for c in self.crossings if c.band == band]


def build_front(t: PlatTuple) -> FrontDiagram:
    crossings = []
    for i, b in enumerate(t.bands):
        if isinstance(b, tuple):
            runs = ((1, b[0], "upper"), (3, b[1], "lower"))
        else:
            runs = ((2, b, "center"),)
        for slot, count, sub in runs:
            for _ in range(count):
                crossings.append(Crossing(len(crossings) + 1, slot, i + 1, sub))
    front = FrontDiagram(tuple(crossings), t.n)
    assert front.crossings[0].slot == 2 and front.crossings[-1].slot == 2
    return front


def tuple_from_slots(slots: Sequence[int]) -> PlatTuple:
    """Inverse of ``build_front``: read bands back off the slot sequence."""
    bands: list = []
    i, n = 0, len(slots)
    while i < n:
        if slots[i] == 2:
            j = i
            while j < n and slots[j] == 2:
                j += 1
            bands.append(j - i)
        else:
            j = i
            while j < n and slots[j] == 1:
                j += 1
            u = j - i
            while j < n and slots[j] == 3:
                j += 1
            if j < n and slots[j] != 2:
                raise TupleValidityError(f"slot 1 after slot 3 at crossing {j + 1}")
            bands.append((u, j - i - u))
        i = j
    return PlatTuple(tuple(bands))


def strand_permutation(slots: Sequence[int]) -> tuple:
    """``perm[p - 1]`` is the right-end position of the strand entering at p."""
    at = [1, 2, 3, 4]  # at[pos-1] = strand currently at pos
    for k in slots:
        at[k - 1], at[k] = at[k], at[k - 1]
    perm = [0] * 4
    for pos, strand in enumerate(at, start=1):
        perm[strand - 1] = pos
    return tuple(perm)


def component_count(f: Union[FrontDiagram, Sequence[int]]) -> int:
    slots = f.slots if isinstance(f, FrontDiagram) else tuple(f)
    perm = strand_permutation(slots)
    left = {1: 2, 2: 1, 3: 4, 4: 3}
    right_pos = {1: 2, 2: 1, 3: 4, 4: 3}
    inv = {p: s for s, p in enumerate(perm, start=1)}
    seen = set()
    count = 0
    for start in range(1, 5):
        if start in seen:
            continue
        count += 1
        s = start
        while s not in seen:
            seen.add(s)
            partner = left[s]
            seen.add(partner)
            # leave through the right end and come back along the cusp partner
            s = inv[right_pos[perm[partner - 1]]]
    return count


def is_knot(f) -> bool:
    return component_count(f) == 1


def flip(letter: str) -> str:
    return "L" if letter == "R" else "R"


def closable(word: str) -> bool:
    return word[0] != word[1] and word[2] != word[3]


def word_class(word: str) -> str:
    for name, words in WORD_CLASSES.items():
        if word in words:
            return name
    raise ValueError(f"not an orientation word: {word!r}")


def propagate(slots: Sequence[int], left_word: str) -> list:
    """Orientation words on every slice, left end first."""
    words = [left_word]
    w = list(left_word)
    for k in slots:
        w[k - 1], w[k] = w[k], w[k - 1]
        words.append("".join(w))
    return words


def valid_orientations(f: Union[FrontDiagram, Sequence[int]]) -> list:
    slots = f.slots if isinstance(f, FrontDiagram) else tuple(f)
    return [w for w in CANDIDATE_WORDS if closable(propagate(slots, w)[-1])]


def default_orientation(f) -> str:
    """Left word with the strand leaving the upper-left cusp on top oriented R."""
    return valid_orientations(f)[0]


def crossing_signs(slots: Sequence[int], left_word: str) -> tuple:
    words = propagate(slots, left_word)
    return tuple(+1 if words[i][k - 1] == words[i][k] else -1
                 for i, k in enumerate(slots))


@dataclass(frozen=True)
class OrientationState:
    words: tuple

    @property
    def left_word(self) -> str:
        return self.words[0]

    @property
    def right_word(self) -> str:
        return self.words[-1]

    def classes(self) -> tuple:
        return tuple(word_class(w) for w in self.words)


def band_taxonomy(total: int, subs: Sequence[int], split: bool) -> str:
    if total == 1:
        return "single"
    if any(s >= 3 for s in subs):
        return "long"
    if split:
        return {2: "split-double", 3: "split-triple", 4: "split-quadruple"}[total]
    return "double"


@dataclass(frozen=True)
class BandInfo:
    index: int          # 1-based
    sign: int
    position: str       # 'center' or 'side'
    internal: bool
    taxonomy: str
    counts: tuple       # (b,) for center bands, (u, l) for side bands

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def split(self) -> bool:
        return len(self.counts) == 2 and all(self.counts)

    def as_dict(self) -> dict:
        return {
            "index": self.index,
            "sign": "+" if self.sign > 0 else "-",
            "position": self.position,
            "internal": self.internal,
            "taxonomy": self.taxonomy,
            "counts": list(self.counts),
        }


@dataclass(frozen=True)
class BandReport:
    bands: tuple

    def __iter__(self):
        return iter(self.bands)

    def __getitem__(self, i):
        return self.bands[i]

    def __len__(self):
        return len(self.bands)

    @property
    def signs(self) -> tuple:
        return tuple(b.sign for b in self.bands)


class SignedFront(NamedTuple):
    front: FrontDiagram
    orientation: OrientationState
    signs: tuple
    bands: Optional[BandReport]


def orient_and_sign(f: FrontDiagram, left_word: Optional[str] = None,
                    check_knot: bool = True) -> SignedFront:
    """Propagate orientations through ``f`` and sign every crossing.

    Without ``left_word`` the front must be a knot (unless ``check_knot`` is
    off) and the strand leaving the upper-left cusp along the top is taken
    rightward.
    """
    slots = f.slots
    if left_word is None:
        if check_knot and not is_knot(slots):
            raise NotAKnotError(
                f"front has {component_count(slots)} components; "
                "pass an explicit orientation word")
        left_word = default_orientation(slots)
    if sorted(left_word) != ["L", "L", "R", "R"] or not closable(left_word):
        raise OrientationError(f"bad left orientation word {left_word!r}")
    words = propagate(slots, left_word)
    if not closable(words[-1]):
        raise OrientationError(
            f"orientation {left_word} does not close at the right cusps")
    signs = crossing_signs(slots, left_word)
    bands = _band_report(f, signs) if f.nbands else None
    if bands is not None and is_knot(slots):
        for a, b in zip(bands, bands.bands[1:]):
            assert not (a.sign > 0 and b.sign > 0), "adjacent positive bands"
    return SignedFront(f, OrientationState(tuple(words)), signs, bands)


def _band_report(f: FrontDiagram, signs: tuple) -> BandReport:
    out = []
    for b in range(1, f.nbands + 1):
        cs = f.band_crossings(b)
        bsigns = {signs[c.index - 1] for c in cs}
        assert len(bsigns) == 1, f"band {b} has mixed signs"
        if b % 2 == 1:
            counts = (len(cs),)
            split = False
        else:
            counts = (sum(c.sub == "upper" for c in cs),
                      sum(c.sub == "lower" for c in cs))
            split = all(counts)
        out.append(BandInfo(
            index=b,
            sign=bsigns.pop(),
            position="center" if b % 2 == 1 else "side",
            internal=1 < b < f.nbands,
            taxonomy=band_taxonomy(sum(counts), counts, split),
            counts=counts,
        ))
    return BandReport(tuple(out))


def writhe(signs: Sequence[int]) -> int:
    return sum(signs)


def rotation_number(words: Sequence[str]) -> int:
    """Half of (downward cusps - upward cusps)."""
    down = up = 0
    for top, _ in CUSP_PAIRS:
        # left cusp is traversed downward when its upper branch points left
        if words[0][top - 1] == "L":
            down += 1
        else:
            up += 1
        if words[-1][top - 1] == "R":
            down += 1
        else:
            up += 1
    return (down - up) // 2


def classical_invariants(f: FrontDiagram, left_word: Optional[str] = None) -> tuple:
    """``(tb, rotation)`` of a knot front."""
    if not is_knot(f):
        raise NotAKnotError(
            f"tb and rotation are computed for knots; front has "
            f"{component_count(f)} components")
    sf = orient_and_sign(f, left_word)
    tb = writhe(sf.signs) - 2
    return tb, rotation_number(sf.orientation.words)


def _side_pairs(total: int) -> Iterator[tuple]:
    for u in range(total, -1, -1):
        yield (u, total - u)


def _tuples_with_total(total: int) -> Iterator[tuple]:
    # first center band, then (side, center) pairs
    for b1 in range(1, total + 1):
        rest = total - b1
        if rest == 0:
            yield (b1,)
            continue
        for tail in _tails(rest):
            yield (b1,) + tail


def _tails(total: int) -> Iterator[tuple]:
    for side in range(1, total):
        for pair in _side_pairs(side):
            rem = total - side
            for c in range(1, rem + 1):
                if c == rem:
                    yield (pair, c)
                else:
                    for tail in _tails(rem - c):
                        yield (pair, c) + tail


def enumerate_tuples(max_crossings: int, knots_only: bool = False) -> Iterator[PlatTuple]:
    """Every canonical tuple with at most ``max_crossings`` crossings.

    Ordered by total crossings, then length, then generation order.
    """
    if max_crossings < 1:
        raise ValueError("max_crossings must be >= 1")
    for total in range(1, max_crossings + 1):
        batch = sorted(_tuples_with_total(total), key=len)
        for bands in batch:
            t = PlatTuple(bands)
            if knots_only and not is_knot(build_front(t)):
                continue
            yield t
