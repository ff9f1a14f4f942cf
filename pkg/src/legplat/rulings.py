"""Normal rulings of 4-plat fronts.

With four strands there are exactly two ruling disks, so the state of a
left-to-right sweep is a perfect matching of the four positions.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

from .plat import FrontDiagram

M12_34 = frozenset({(1, 2), (3, 4)})
M13_24 = frozenset({(1, 3), (2, 4)})
M14_23 = frozenset({(1, 4), (2, 3)})
MATCHINGS = {"12|34": M12_34, "13|24": M13_24, "14|23": M14_23}


def matching_name(m: frozenset) -> str:
    for name, v in MATCHINGS.items():
        if v == m:
            return name
    raise ValueError(m)


def companion(m: frozenset, p: int) -> int:
    for a, b in m:
        if a == p:
            return b
        if b == p:
            return a
    raise KeyError(p)


def _nested_or_disjoint(i: tuple, j: tuple) -> bool:
    a0, a1 = sorted(i)
    b0, b1 = sorted(j)
    if a1 < b0 or b1 < a0:
        return True
    return (a0 < b0 and b1 < a1) or (b0 < a0 and a1 < b1)


def switch_allowed(m: frozenset, slot: int) -> bool:
    """Normality at a switch between positions ``slot`` and ``slot + 1``."""
    k = slot
    return _nested_or_disjoint((k, companion(m, k)), (k + 1, companion(m, k + 1)))


# (matching, slot) pairs where a switch is legal; spelled out for the 4-strand case
NORMAL_SWITCHES = frozenset(
    (name, slot)
    for name, m in MATCHINGS.items()
    for slot in (1, 2, 3)
    if companion(m, slot) != slot + 1 and switch_allowed(m, slot)
)


def _transpose(m: frozenset, k: int) -> frozenset:
    swap = {k: k + 1, k + 1: k}
    return frozenset(tuple(sorted((swap.get(a, a), swap.get(b, b)))) for a, b in m)


class Ruling(NamedTuple):
    switches: tuple     # sorted 1-based crossing indices
    matchings: tuple    # matching names on every slice, left end first

    def as_list(self) -> list:
        return list(self.switches)


def enumerate_rulings(f: FrontDiagram, signs: Optional[Sequence[int]] = None) -> list:
    """Normal rulings; with ``signs`` only positive crossings may switch (graded)."""
    slots = f.slots
    out = []

    def go(i, m, switches, trail):
        if i == len(slots):
            if m == M12_34:
                out.append(Ruling(tuple(switches), tuple(trail)))
            return
        k = slots[i]
        if companion(m, k) == k + 1:
            return
        if (matching_name(m), k) in NORMAL_SWITCHES and (signs is None or signs[i] > 0):
            go(i + 1, m, switches + [i + 1], trail + [matching_name(m)])
        t = _transpose(m, k)
        go(i + 1, t, switches, trail + [matching_name(t)])

    go(0, M12_34, [], ["12|34"])
    out.sort(key=lambda r: (len(r.switches), r.switches))
    return out


def ruling_count(f: FrontDiagram) -> int:
    return len(enumerate_rulings(f))


def has_normal_ruling(f: FrontDiagram) -> bool:
    return bool(enumerate_rulings(f))


def has_graded_ruling(f: FrontDiagram, signs: Sequence[int]) -> bool:
    return bool(enumerate_rulings(f, signs))
