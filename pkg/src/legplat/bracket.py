"""Kauffman bracket and normalized Jones invariant of 4-strand plat fronts.

Fronts here may carry internal cusp pairs: an event ``('G', top, letter)``
is a right cusp followed by a left cusp on positions (top, top + 1).
Crossing events are ``('X', slot)``.

A front crossing is read as a smooth crossing with the strand running down
to the right in front.  Its A-smoothing keeps both strands horizontal and
its B-smoothing joins them into a cap and a cup.  Polynomials are dicts
mapping exponents of A to integer coefficients.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Callable, Sequence

DELTA = {2: -1, -2: -1}


def as_events(slots_or_events: Sequence) -> tuple:
    return tuple(e if isinstance(e, tuple) else ("X", e) for e in slots_or_events)


def _mul(p: dict, q: dict) -> dict:
    out: dict = defaultdict(int)
    for a, x in p.items():
        for b, y in q.items():
            out[a + b] += x * y
    return {k: v for k, v in out.items() if v}


def curve_count(events: Sequence, resolve: Callable[[int], str]) -> int:
    """Number of closed curves; ``resolve(i)`` gives 'X', 'A' or 'B' for crossing i."""
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    def through(col, skip):
        for p in range(1, 5):
            if p not in skip:
                union((col, p), (col + 1, p))

    col = 0
    union((0, 1), (0, 2))
    union((0, 3), (0, 4))
    xi = 0
    for ev in events:
        if ev[0] == "G":
            top = ev[1]
            union((col, top), (col, top + 1))
            union((col + 1, top), (col + 1, top + 1))
            through(col, (top, top + 1))
        else:
            k = ev[1]
            how = resolve(xi)
            xi += 1
            if how == "X":
                union((col, k), (col + 1, k + 1))
                union((col, k + 1), (col + 1, k))
            elif how == "A":
                union((col, k), (col + 1, k))
                union((col, k + 1), (col + 1, k + 1))
            else:
                union((col, k), (col, k + 1))
                union((col + 1, k), (col + 1, k + 1))
            through(col, (k, k + 1))
        col += 1
    union((col, 1), (col, 2))
    union((col, 3), (col, 4))
    return len({find((c, p)) for c in range(col + 1) for p in range(1, 5)})


def bracket(events: Sequence) -> dict:
    """Kauffman bracket normalized so that a single round circle is 1."""
    events = as_events(events)
    n = sum(1 for e in events if e[0] == "X")
    out: dict = defaultdict(int)
    for state in range(1 << n):
        b = bin(state).count("1")
        loops = curve_count(events, lambda i: "B" if (state >> i) & 1 else "A")
        term = {(n - b) - b: 1}
        for _ in range(loops - 1):
            term = _mul(term, DELTA)
        for k, v in term.items():
            out[k] += v
    return {k: v for k, v in out.items() if v}


def jones_normalized(events: Sequence, writhe: int) -> dict:
    """(-A^3)^(-writhe) times the bracket; an oriented link invariant."""
    sign = -1 if writhe % 2 else 1
    return {k - 3 * writhe: sign * v for k, v in bracket(events).items()}


def unlink_factor(components: int) -> dict:
    """Normalized invariant of the ``components``-component unlink."""
    out = {0: 1}
    for _ in range(components - 1):
        out = _mul(out, DELTA)
    return out


def to_jones_t(p: dict) -> dict:
    """Substitute A = t^(-1/4); keys become exponents of t."""
    return {-k / 4: v for k, v in p.items()}
