"""Filling transcripts and positivity-reduction transcripts.

A cobordism state is a row of pieces placed left to right: a
``Unknot`` is the two-cusp standard unknot and a ``Front4`` is a 4-strand
front whose events are crossings ``('X', slot)`` or internal cusp pairs
``('G', top, letter)`` (a right cusp then a left cusp on positions
``top, top + 1``; ``letter`` orients the new upper strand).

Moves:
  * zero-handle: a new unknot, or an unknot stacked below an existing one;
  * one-handle: oriented resolution of a positive crossing (read backwards,
    inserting the crossing) or a pinch joining facing cusps;
  * isotopy: replacing a piece by a front with the same components, tb,
    rotation and normalized Jones polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Union

from .bracket import curve_count, jones_normalized, unlink_factor
from .fillability import band_violations, theorem1_verdict
from .plat import (
    CANDIDATE_WORDS,
    NotAKnotError,
    OrientationError,
    PlatTuple,
    build_front,
    classical_invariants,
    closable,
    component_count,
    flip,
    orient_and_sign,
    propagate,
    valid_orientations,
)


class FillingError(ValueError):
    pass


class TranscriptError(FillingError):
    def __init__(self, index: Optional[int], message: str):
        where = "final state" if index is None else f"move {index}"
        super().__init__(f"{where}: {message}")
        self.index = index


@dataclass(frozen=True)
class Unknot:
    top: str

    @property
    def word(self) -> str:
        return self.top + flip(self.top)

    def to_json(self) -> dict:
        return {"type": "unknot", "top": self.top}


@dataclass(frozen=True)
class Front4:
    events: tuple
    left_word: str

    def words(self) -> list:
        """Orientation word on every slice; raises on an inconsistent gap."""
        w = list(self.left_word)
        if not closable(self.left_word):
            raise OrientationError(f"left word {self.left_word} is not closable")
        out = [self.left_word]
        for ev in self.events:
            if ev[0] == "X":
                k = ev[1]
                w[k - 1], w[k] = w[k], w[k - 1]
            else:
                top, letter = ev[1], ev[2]
                if w[top - 1] == w[top]:
                    raise OrientationError(f"right cusp on {top},{top + 1} is not closable")
                w[top - 1], w[top] = letter, flip(letter)
            out.append("".join(w))
        if not closable(out[-1]):
            raise OrientationError(f"right word {out[-1]} is not closable")
        return out

    @property
    def gaps(self) -> int:
        return sum(1 for e in self.events if e[0] == "G")

    @property
    def slots(self) -> tuple:
        return tuple(e[1] for e in self.events if e[0] == "X")

    def signs(self) -> list:
        ws = self.words()
        return [+1 if ws[i][e[1] - 1] == ws[i][e[1]] else -1
                for i, e in enumerate(self.events) if e[0] == "X"]

    def tb(self) -> int:
        return sum(self.signs()) - 2 - self.gaps

    def rotation(self) -> int:
        ws = self.words()
        down = 0
        cusps = 4 + 2 * self.gaps
        for top in (1, 3):
            down += ws[0][top - 1] == "L"
            down += ws[-1][top - 1] == "R"
        for i, e in enumerate(self.events):
            if e[0] == "G":
                down += ws[i][e[1] - 1] == "R"
                down += e[2] == "L"
        return (2 * down - cusps) // 2

    def components(self) -> int:
        return curve_count(self.events, lambda i: "X")

    def jones(self) -> dict:
        return jones_normalized(self.events, sum(self.signs()))

    def to_json(self) -> dict:
        return {"type": "front", "left_word": self.left_word,
                "events": [list(e) for e in self.events]}


Piece = Union[Unknot, Front4]


def piece_invariants(p: Piece) -> tuple:
    """(components, tb, rotation, normalized Jones) of a single piece."""
    if isinstance(p, Unknot):
        return (1, -1, 0, unlink_factor(1))
    return (p.components(), p.tb(), p.rotation(), p.jones())


def piece_from_json(d: dict) -> Piece:
    if d["type"] == "unknot":
        return Unknot(d["top"])
    return Front4(tuple(tuple(e) for e in d["events"]), d["left_word"])


@dataclass
class Move:
    kind: str       # 'zero-handle', 'one-handle' or 'isotopy'
    tag: str
    site: dict
    state: tuple    # pieces after the move

    def to_json(self) -> dict:
        site = {k: (v.to_json() if isinstance(v, (Unknot, Front4)) else v)
                for k, v in self.site.items()}
        return {"kind": self.kind, "tag": self.tag, "site": site,
                "state": [p.to_json() for p in self.state]}


@dataclass
class CobordismTranscript:
    target: str
    left_word: str
    moves: list = field(default_factory=list)
    declared: Optional[dict] = None     # accounting as recorded by the builder

    @property
    def zero_handles(self) -> int:
        return sum(m.kind == "zero-handle" for m in self.moves)

    @property
    def one_handles(self) -> int:
        return sum(m.kind == "one-handle" for m in self.moves)

    @property
    def euler_characteristic(self) -> int:
        return self.zero_handles - self.one_handles

    def accounting(self) -> dict:
        return {"zero_handles": self.zero_handles, "one_handles": self.one_handles,
                "euler_characteristic": self.euler_characteristic}

    def frames(self) -> list:
        return [()] + [m.state for m in self.moves]

    def to_json(self) -> dict:
        return {"target": self.target, "left_word": self.left_word,
                "accounting": self.accounting(),
                "moves": [m.to_json() for m in self.moves]}


def _piece(state: tuple, i) -> Piece:
    if not isinstance(i, int) or not 0 <= i < len(state):
        raise ValueError(f"no piece {i}")
    return state[i]


def _front(state: tuple, i) -> Front4:
    p = _piece(state, i)
    if not isinstance(p, Front4):
        raise ValueError(f"piece {i} is not a 4-strand front")
    return p


def _replace(state: tuple, i: int, *pieces) -> tuple:
    return state[:i] + tuple(pieces) + state[i + 1:]


def apply_move(state: tuple, kind: str, tag: str, site: dict) -> tuple:
    """State after a move; raises ValueError when the move is not valid here."""
    if kind == "zero-handle":
        top = site.get("top")
        if top not in ("L", "R"):
            raise ValueError(f"bad top letter {top!r}")
        if site.get("mode") == "new":
            return state + (Unknot(top),)
        if site.get("mode") == "below":
            i = site.get("piece")
            p = _piece(state, i)
            if not isinstance(p, Unknot):
                raise ValueError("can only stack below a lone unknot")
            return _replace(state, i, Front4((), p.word + top + flip(top)))
        raise ValueError(f"bad zero-handle mode {site.get('mode')!r}")

    if kind == "one-handle" and tag == "resolution":
        i, at, k = site.get("piece"), site.get("at"), site.get("slot")
        p = _front(state, i)
        if k not in (1, 2, 3) or not isinstance(at, int) or not 0 <= at <= len(p.events):
            raise ValueError("bad resolution site")
        w = p.words()[at]
        if w[k - 1] != w[k]:
            raise ValueError("strands at the site are oppositely oriented; "
                             "the crossing would be negative")
        events = p.events[:at] + (("X", k),) + p.events[at:]
        return _replace(state, i, Front4(events, p.left_word))

    if kind == "one-handle" and tag == "pinch":
        i = site.get("piece")
        p = _front(state, i)
        if "at" in site:
            at = site["at"]
            if not isinstance(at, int) or not 0 <= at < len(p.events) or p.events[at][0] != "G":
                raise ValueError("no cusp pair at the pinch site")
            _, top, letter = p.events[at]
            before = p.words()[at]
            if before[top - 1] != letter:
                raise ValueError("cusps at the pinch site have incompatible orientations")
            return _replace(state, i, Front4(p.events[:at] + p.events[at + 1:], p.left_word))
        top = site.get("pair")
        if top not in (1, 3):
            raise ValueError(f"bad pinch pair {top!r}")
        q = _front(state, i + 1)
        right, left = p.words()[-1], q.left_word
        if right[top - 1:top + 1] != left[top - 1:top + 1]:
            raise ValueError("cusps at the pinch site have incompatible orientations")
        other = 4 - top
        gap = ("G", other, left[other - 1])
        merged = Front4(p.events + (gap,) + q.events, p.left_word)
        return state[:i] + (merged,) + state[i + 2:]

    if kind == "isotopy":
        i = site.get("piece")
        new = site.get("to")
        old = _piece(state, i)
        if not isinstance(new, (Unknot, Front4)):
            raise ValueError("isotopy needs a replacement piece")
        if piece_invariants(old) != piece_invariants(new):
            raise ValueError("replacement differs in components, tb, rotation or Jones")
        return _replace(state, i, new)

    raise ValueError(f"unknown move {kind}/{tag}")


def _check_state(state: tuple) -> None:
    for p in state:
        if isinstance(p, Front4):
            p.words()


def validate_transcript(tr: CobordismTranscript, t: PlatTuple) -> bool:
    """Replay ``tr`` from the empty link; raises TranscriptError at the first bad move."""
    state: tuple = ()
    for n, m in enumerate(tr.moves):
        try:
            state = apply_move(state, m.kind, m.tag, m.site)
            _check_state(state)
        except (ValueError, OrientationError) as exc:
            raise TranscriptError(n, str(exc)) from None
        if state != tuple(m.state):
            raise TranscriptError(n, "recorded snapshot does not match the replay")
    f = build_front(t)
    target_words = valid_orientations(f)
    if (len(state) != 1 or not isinstance(state[0], Front4) or state[0].gaps
            or state[0].slots != f.slots or state[0].left_word not in target_words):
        raise TranscriptError(None, f"does not end at the front of {t}")
    if tr.declared is not None and tr.declared != tr.accounting():
        raise TranscriptError(None, "declared accounting disagrees with the moves")
    if component_count(f) == 1:
        tb, _ = classical_invariants(f, state[0].left_word)
        if tb != tr.one_handles - tr.zero_handles:
            raise TranscriptError(None, f"tb {tb} != one_handles - zero_handles "
                                        f"({tr.one_handles} - {tr.zero_handles})")
    return True


# ---------------------------------------------------------------- builder

@dataclass(frozen=True)
class _Segment:
    kind: str       # 'positive', 'positive-first' or 'negative-first'
    events: tuple
    word: str


def base_replacement_word(word: str) -> str:
    """Orientation of the positive center band isotopic to a 3-band base piece."""
    return word[0] + flip(word[0]) + flip(word[0]) + word[0]


def filling_form_problems(bands) -> list:
    """Reasons the signed bands are outside the builder's form."""
    out = [f"{v['rule']} at band {v['band']}" for v in band_violations(bands)]
    signs = bands.signs
    if any(a == b for a, b in zip(signs, signs[1:])):
        out.append("band signs do not alternate")
    for b in (bands[0], bands[-1]):
        if b.sign < 0 and b.total != 1:
            out.append(f"negative external band {b.index} is not a single crossing")
    if len(bands) == 1 and bands[0].sign < 0:
        out.append("a single band must be positive")
    return out


def _segments(sf) -> list:
    f = sf.front
    words = sf.orientation.words
    bands = sf.bands
    cuts = []
    for b in bands:
        if b.position == "center" and b.index > 1:
            if b.internal or b.total >= 2:
                cuts.append(f.band_crossings(b.index)[0].index)
    bounds = [0] + cuts + [len(f)]
    segs = []
    for lo, hi in zip(bounds, bounds[1:]):
        events = tuple(("X", k) for k in f.slots[lo:hi])
        band_ids = {c.band for c in f.crossings[lo:hi]}
        if len(band_ids) == 1:
            kind = "positive"
        else:
            kind = "positive-first" if sf.signs[lo] > 0 else "negative-first"
        segs.append(_Segment(kind, events, words[lo]))
    return segs


class _Builder:
    def __init__(self, tr: CobordismTranscript):
        self.tr = tr
        self.state: tuple = ()

    def emit(self, kind, tag, **site):
        self.state = apply_move(self.state, kind, tag, site)
        self.tr.moves.append(Move(kind, tag, site, self.state))

    def positive_band(self, count: int, word: str) -> int:
        idx = len(self.state)
        self.emit("zero-handle", "standard-unknot", mode="new", top=word[0])
        self.emit("zero-handle", "standard-unknot", mode="below", piece=idx, top=word[2])
        for j in range(count):
            self.emit("one-handle", "resolution", piece=idx, at=j, slot=2)
        return idx

    def fill(self, segs: list) -> None:
        seg = segs[0]
        if seg.kind == "positive":
            idx = self.positive_band(len(seg.events), seg.word)
        else:
            idx = self.positive_band(len(seg.events) - 4, base_replacement_word(seg.word))
            self.emit("isotopy", seg.kind, piece=idx, to=Front4(seg.events, seg.word))
        if len(segs) > 1:
            self.fill(segs[1:])
            self.emit("one-handle", "pinch", piece=idx, pair=1)
            self.emit("one-handle", "pinch", piece=idx, at=len(seg.events))


def build_filling(t: PlatTuple, left_word: Optional[str] = None) -> CobordismTranscript:
    """Filling transcript by induction on center bands.

    Each 3-band base piece is filled as a positive center band and moved by
    an invariant-checked isotopy; neighbouring pieces are joined by two
    pinches.  Links need a ``left_word`` or take the first orientation
    putting the tuple in the builder's form.
    """
    f = build_front(t)
    if left_word is None:
        if component_count(f) == 1:
            if not theorem1_verdict(t)["fillable"]:
                raise FillingError(f"{t} fails the band criterion")
            left_word = orient_and_sign(f).orientation.left_word
        else:
            for w in valid_orientations(f):
                sf = orient_and_sign(f, w, check_knot=False)
                if not filling_form_problems(sf.bands):
                    left_word = w
                    break
            else:
                raise FillingError(f"no orientation puts {t} in fillable form")
    if left_word not in CANDIDATE_WORDS:
        raise FillingError(f"bad orientation word {left_word!r}")
    try:
        sf = orient_and_sign(f, left_word, check_knot=False)
    except (OrientationError, AssertionError) as exc:
        raise FillingError(str(exc)) from None
    problems = filling_form_problems(sf.bands)
    if problems:
        raise FillingError(f"{t}: " + "; ".join(problems))
    tr = CobordismTranscript(str(t), left_word)
    _Builder(tr).fill(_segments(sf))
    tr.declared = tr.accounting()
    return tr


def pinch_filling(t: PlatTuple, max_pinches: int = 2) -> CobordismTranscript:
    """Filling by one 0-handle, one isotopy and pinches only.

    Searches for internal cusp pairs whose insertion turns the front into a
    tb = -1 unknot (checked by invariants); the filling caps that unknot and
    pinches every inserted pair.
    """
    f = build_front(t)
    if component_count(f) != 1:
        raise NotAKnotError(f"{t} is not a knot")
    tb, r = classical_invariants(f)
    pinches = tb + 1
    if r != 0 or pinches < 0 or pinches > max_pinches:
        raise FillingError(f"{t}: needs {pinches} pinches, limit {max_pinches}")
    w = orient_and_sign(f).orientation.left_word
    words = propagate(f.slots, w)
    sites = [(s, top) for s in range(len(f) + 1) for top in (1, 3)]
    target = piece_invariants(Unknot("R"))
    for chosen in combinations(sites, pinches):
        events = []
        for s in range(len(f) + 1):
            for top in (1, 3):
                if (s, top) in chosen:
                    events.append(("G", top, words[s][top - 1]))
            if s < len(f):
                events.append(("X", f.slots[s]))
        p = Front4(tuple(events), w)
        if piece_invariants(p) != target:
            continue
        tr = CobordismTranscript(str(t), w)
        b = _Builder(tr)
        b.emit("zero-handle", "standard-unknot", mode="new", top=w[0])
        b.emit("isotopy", "unknot", piece=0, to=p)
        while b.state[0].gaps:
            at = next(i for i, e in enumerate(b.state[0].events) if e[0] == "G")
            b.emit("one-handle", "pinch", piece=0, at=at)
        tr.declared = tr.accounting()
        return tr
    raise FillingError(f"{t}: no placement of {pinches} pinches gives an unknot")


# ---------------------------------------------------------------- positivity

P4P_CASES = ("side-double", "split-double", "center-same-side", "center-opposite-side")


@dataclass(frozen=True)
class P4PStep:
    kind: str           # 'R2-removal' or 'middle'
    band: int
    case: Optional[str]
    before: tuple       # (positive, negative) crossing counts
    after: tuple

    def to_json(self) -> dict:
        return {"kind": self.kind, "band": self.band, "case": self.case,
                "before": {"+": self.before[0], "-": self.before[1]},
                "after": {"+": self.after[0], "-": self.after[1]}}


@dataclass
class P4PTranscript:
    target: str
    start: tuple
    steps: list = field(default_factory=list)

    @property
    def final(self) -> tuple:
        return self.steps[-1].after if self.steps else self.start

    def negatives(self) -> list:
        return [self.start[1]] + [s.after[1] for s in self.steps]

    def to_json(self) -> dict:
        return {"target": self.target,
                "start": {"+": self.start[0], "-": self.start[1]},
                "final": {"+": self.final[0], "-": self.final[1]},
                "steps": [s.to_json() for s in self.steps]}


def _sides(counts: tuple) -> set:
    return {side for side, c in zip(("upper", "lower"), counts) if c}


def reduce_to_positive(t: PlatTuple) -> P4PTranscript:
    """Remove negative crossings of a fillable knot, outside in then left to right."""
    verdict = theorem1_verdict(t)
    if not verdict["fillable"]:
        raise FillingError(f"{t} fails the band criterion")
    bands = orient_and_sign(build_front(t)).bands
    pos = sum(b.total for b in bands if b.sign > 0)
    neg = sum(b.total for b in bands if b.sign < 0)
    tr = P4PTranscript(str(t), (pos, neg))
    cur = (pos, neg)

    def step(kind, b, case, removed):
        nonlocal cur
        after = (cur[0], cur[1] - removed)
        tr.steps.append(P4PStep(kind, b.index, case, cur, after))
        cur = after

    first, last = bands[0], bands[-1]
    if first.sign < 0:
        step("R2-removal", first, None, 1)
    for b in bands:
        if b.sign > 0 or not b.internal:
            continue
        if b.position == "side":
            case = "split-double" if b.split else "side-double"
        else:
            left, right = bands[b.index - 2], bands[b.index]
            same = _sides(left.counts) & _sides(right.counts)
            case = "center-same-side" if same else "center-opposite-side"
        step("middle", b, case, b.total)
    if last.sign < 0 and len(bands) > 1:
        step("R2-removal", last, None, 1)
    return tr


def validate_p4p(tr: P4PTranscript, t: PlatTuple) -> bool:
    """Crossing bookkeeping only: counts chain, decrease, and end at zero negatives."""
    bands = orient_and_sign(build_front(t)).bands
    start = (sum(b.total for b in bands if b.sign > 0),
             sum(b.total for b in bands if b.sign < 0))
    if tr.start != start:
        raise FillingError(f"start counts {tr.start} != {start}")
    cur = start
    seen = set()
    for n, s in enumerate(tr.steps):
        b = bands[s.band - 1]
        if s.before != cur:
            raise FillingError(f"step {n}: counts do not chain")
        if b.sign > 0 or s.band in seen:
            raise FillingError(f"step {n}: band {s.band} is not an unremoved negative band")
        if s.kind == "R2-removal":
            if b.internal or b.total != 1 or s.after != (cur[0], cur[1] - 1):
                raise FillingError(f"step {n}: bad R2 removal")
        elif s.kind == "middle":
            if s.case not in P4P_CASES or not b.internal or b.total != 2 \
                    or s.after != (cur[0], cur[1] - 2):
                raise FillingError(f"step {n}: bad middle step")
        else:
            raise FillingError(f"step {n}: unknown step {s.kind}")
        seen.add(s.band)
        cur = s.after
    if cur[1] != 0:
        raise FillingError(f"{cur[1]} negative crossings remain")
    if len(tr.steps) > sum(start):
        raise FillingError("too many steps")
    return True
