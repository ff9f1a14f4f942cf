"""Chekanov-Eliashberg DGA of a plat-form 4-plat front, graded mod 2.

Admissible disks are found by sweeping leftward from the positive corner.
Between the corner and the terminating left cusp a disk is the vertical
strip between an upper boundary position ``u`` and a lower boundary
position ``l`` (``u < l``); strands strictly between them run through the
interior.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

from .plat import FrontDiagram, SignedFront, orient_and_sign

# Local moves of a boundary at a crossing of slot ``k`` (positions k, k+1),
# keyed by (side, where the crossing sits relative to the boundary position):
#   'outer' - the crossing joins the boundary strand and the strand outside it
#   'inner' - the crossing joins the boundary strand and a strand inside the disk
# Values: allowed outcomes as (shift of the boundary position, is a corner).
# An outer crossing either lets the boundary follow its strand outward or
# turns a convex negative corner (disk in the top/bottom quadrant).  An inner
# crossing can only be passed through; a corner there would be concave.
CORNER_TABLE = {
    ("upper", "outer"): ((-1, False), (0, True)),
    ("upper", "inner"): ((+1, False),),
    ("lower", "outer"): ((+1, False), (0, True)),
    ("lower", "inner"): ((-1, False),),
}

LEFT_CUSP_BOUNDARIES = ((1, 2), (3, 4))


class Generator(NamedTuple):
    kind: str       # 'crossing' or 'cusp'
    index: int      # 1-based; cusps: 1 = upper pair, 2 = lower pair
    degree: int

    @property
    def name(self) -> str:
        return f"a{self.index}" if self.kind == "crossing" else f"c{self.index}"


class DiskWord(NamedTuple):
    origin: str
    corners: tuple      # generator names, counterclockwise from the origin
    left_cusp: int      # 1 = upper pair, 2 = lower pair


def generators(sf: SignedFront) -> list:
    gens = [Generator("crossing", i + 1, 0 if s > 0 else 1)
            for i, s in enumerate(sf.signs)]
    gens += [Generator("cusp", 1, 1), Generator("cusp", 2, 1)]
    return gens


def _classify(k: int, u: int, l: int):
    if k == u and k + 1 == l:
        return None, "pinched"
    if k + 1 == u:
        return "upper", "outer"
    if k == u:
        return "upper", "inner"
    if k == l:
        return "lower", "outer"
    if k + 1 == l:
        return "lower", "inner"
    return None, "clear"


def disks_from(slots: Sequence[int], start: int, u: int, l: int) -> list:
    """Corner data of every disk whose strip is (u, l) just left of event ``start``.

    Returns tuples ``(upper_corners, lower_corners, left_cusp)`` with corner
    crossing indices (0-based) listed right to left.
    """
    out = []

    def go(i, u, l, up, lo):
        if i < 0:
            if (u, l) in LEFT_CUSP_BOUNDARIES:
                out.append((tuple(up), tuple(lo), LEFT_CUSP_BOUNDARIES.index((u, l)) + 1))
            return
        side, where = _classify(slots[i], u, l)
        if where == "pinched":
            return
        if side is None:
            go(i - 1, u, l, up, lo)
            return
        for shift, corner in CORNER_TABLE[(side, where)]:
            nu, nl = (u + shift, l) if side == "upper" else (u, l + shift)
            if not (1 <= nu < nl <= 4):
                continue
            if side == "upper":
                go(i - 1, nu, nl, up + [i] if corner else up, lo)
            else:
                go(i - 1, nu, nl, up, lo + [i] if corner else lo)

    go(start - 1, u, l, [], [])
    return out


def enumerate_disks(f: FrontDiagram, a: Generator) -> list:
    slots = f.slots
    n = len(slots)
    if a.kind == "crossing":
        k = slots[a.index - 1]
        raw = disks_from(slots, a.index - 1, k, k + 1)
    else:
        top = 1 if a.index == 1 else 3
        raw = disks_from(slots, n, top, top + 1)
    out = []
    for up, lo, cusp in raw:
        # counterclockwise from the rightmost point: upper boundary right to
        # left, then lower boundary left to right
        order = list(up) + list(reversed(lo))
        out.append(DiskWord(a.name, tuple(f"a{i + 1}" for i in order), cusp))
    return out


def _add_mod2(acc: Counter, word: tuple) -> None:
    if acc[word]:
        del acc[word]
    else:
        acc[word] = 1


@dataclass
class Differential:
    """Generator name -> set of words (tuples of names); ``()`` is the unit."""

    generators: list
    terms: dict
    disks: dict = field(default_factory=dict, repr=False)

    @property
    def degree(self) -> dict:
        return {g.name: g.degree for g in self.generators}

    def __getitem__(self, name: str) -> frozenset:
        return self.terms[name]

    def word_degree(self, word: Sequence[str]) -> int:
        deg = self.degree
        return sum(deg[x] for x in word) % 2

    def apply_word(self, word: Sequence[str]) -> Counter:
        """Leibniz rule on a word, mod 2."""
        acc: Counter = Counter()
        for i, x in enumerate(word):
            pre, post = tuple(word[:i]), tuple(word[i + 1:])
            for w in self.terms[x]:
                _add_mod2(acc, pre + w + post)
        return acc

    def squared(self, name: str) -> Counter:
        acc: Counter = Counter()
        for w in self.terms[name]:
            for v in self.apply_word(w):
                _add_mod2(acc, v)
        return acc

    def square_violations(self) -> dict:
        return {g.name: dict(self.squared(g.name)) for g in self.generators
                if self.squared(g.name)}

    def degree_violations(self) -> list:
        deg = self.degree
        return [(a, w) for a, ws in self.terms.items() for w in ws
                if self.word_degree(w) != (deg[a] - 1) % 2]

    def to_json(self) -> dict:
        out = {}
        for g in self.generators:
            ws = self.terms[g.name]
            out[g.name] = {
                "degree": g.degree,
                "constant": () in ws,
                "words": sorted([list(w) for w in ws if w], key=lambda w: (len(w), w)),
            }
        return out

    def format(self, name: str) -> str:
        ws = sorted(self.terms[name], key=lambda w: (len(w), w))
        if not ws:
            return "0"
        return " + ".join("1" if not w else "".join(w) for w in ws)


def differential(sf: SignedFront) -> Differential:
    gens = generators(sf)
    terms = {}
    disks = {}
    for g in gens:
        ds = enumerate_disks(sf.front, g)
        acc: Counter = Counter()
        if g.kind == "cusp":
            _add_mod2(acc, ())
        for d in ds:
            _add_mod2(acc, d.corners)
        terms[g.name] = frozenset(acc)
        disks[g.name] = ds
    return Differential(gens, terms, disks)


def dga_of(f: FrontDiagram, left_word: Optional[str] = None) -> Differential:
    return differential(orient_and_sign(f, left_word))
