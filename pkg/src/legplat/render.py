"""SVG drawings of fronts and of filling transcripts (one frame per state)."""

from __future__ import annotations

from typing import Optional, Sequence
from xml.sax.saxutils import escape

from .cobordism import CobordismTranscript, Unknot

DX = 30         # uniform event spacing
DY = 24         # strand spacing
MARGIN = 20
FRAME_GAP = 30


def _y(pos: int, top: float) -> float:
    return top + (pos - 1) * DY


def _cusp(tip_x: float, end_x: float, y1: float, y2: float, side: str) -> str:
    mid = (y1 + y2) / 2
    return (f'<path class="cusp" data-side="{side}" fill="none" stroke="black" '
            f'd="M {end_x:g} {y1:g} Q {tip_x:g} {y1:g} {tip_x:g} {mid:g} '
            f'Q {tip_x:g} {y2:g} {end_x:g} {y2:g}"/>')


def _line(x1, y1, x2, y2, cls="strand") -> str:
    return (f'<line class="{cls}" x1="{x1:g}" y1="{y1:g}" x2="{x2:g}" y2="{y2:g}" '
            'stroke="black"/>')


def _front_parts(events: Sequence, left: float, top: float, strands: int = 4) -> tuple:
    """SVG elements for one piece and its drawn width."""
    parts = []
    x0 = left + DX / 2
    pairs = ((1, 2),) if strands == 2 else ((1, 2), (3, 4))
    for a, b in pairs:
        parts.append(_cusp(left, x0, _y(a, top), _y(b, top), "left"))
    for i, ev in enumerate(events):
        xa, xb = x0 + i * DX, x0 + (i + 1) * DX
        busy = (ev[1], ev[1] + 1)
        for p in range(1, strands + 1):
            if p not in busy:
                parts.append(_line(xa, _y(p, top), xb, _y(p, top)))
        k = ev[1]
        ya, yb = _y(k, top), _y(k + 1, top)
        if ev[0] == "X":
            parts.append(f'<g class="crossing" data-slot="{k}">'
                         + _line(xa, ya, xb, yb) + _line(xa, yb, xb, ya) + "</g>")
        else:
            parts.append(_cusp(xa + DX * 0.45, xa, ya, yb, "right"))
            parts.append(_cusp(xa + DX * 0.55, xb, ya, yb, "left"))
    xe = x0 + len(events) * DX
    for a, b in pairs:
        parts.append(_cusp(xe + DX / 2, xe, _y(a, top), _y(b, top), "right"))
    return parts, len(events) * DX + DX


def _state_parts(state: Sequence, top: float) -> tuple:
    parts, x = [], MARGIN
    for piece in state:
        if isinstance(piece, Unknot):
            p, w = _front_parts((), x, top, strands=2)
        else:
            p, w = _front_parts(piece.events, x, top)
        parts += p
        x += w + DX
    return parts, x


def _document(body: list, width: float, height: float) -> str:
    return "\n".join(
        [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" '
         f'height="{height:g}" viewBox="0 0 {width:g} {height:g}">'] + body + ["</svg>"]) + "\n"


def render_front(slots: Sequence[int], label: Optional[str] = None) -> str:
    events = [("X", k) for k in slots]
    top = MARGIN + (16 if label else 0)
    parts, width = _front_parts(events, MARGIN, top)
    body = []
    if label:
        body.append(f'<text x="{MARGIN}" y="{MARGIN}" font-size="12">{escape(label)}</text>')
    body.append('<g class="frame">')
    body += parts
    body.append("</g>")
    return _document(body, width + 2 * MARGIN, top + 3 * DY + MARGIN)


def render_transcript(tr: CobordismTranscript) -> str:
    body = [f'<text x="{MARGIN}" y="{MARGIN}" font-size="12">'
            f'{escape(tr.target)}  chi = {tr.euler_characteristic}</text>']
    top = MARGIN + 16
    width = 0.0
    labels = ["empty"] + [f"{m.kind} {m.tag}" for m in tr.moves]
    for n, (state, label) in enumerate(zip(tr.frames(), labels)):
        parts, w = _state_parts(state, top + 14)
        width = max(width, w)
        body.append(f'<g class="frame" data-index="{n}">')
        body.append(f'<text x="{MARGIN}" y="{top + 6:g}" font-size="10">'
                    f'{n}: {escape(label)}</text>')
        body += parts
        body.append("</g>")
        top += 14 + 3 * DY + FRAME_GAP
    return _document(body, max(width, 200) + MARGIN, top)
