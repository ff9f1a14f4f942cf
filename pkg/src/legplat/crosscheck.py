"""Exhaustive consistency sweep over enumerated knot tuples."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cobordism import (
    FillingError,
    build_filling,
    reduce_to_positive,
    validate_p4p,
    validate_transcript,
)
from .fillability import classify
from .plat import build_front, enumerate_tuples, parse_tuple
from .rulings import enumerate_rulings

WORKERS_ENV = "LEGPLAT_WORKERS"


@dataclass
class TupleCheck:
    tuple_text: str
    fillable: bool
    problems: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"tuple": self.tuple_text, "fillable": self.fillable,
                "problems": list(self.problems)}


def check_tuple(text: str) -> TupleCheck:
    """Every cross-module property for one knot tuple."""
    t = parse_tuple(text)
    report = classify(t)
    d = report.detail
    out = TupleCheck(str(t), bool(report.fillable), list(report.problems))
    p = out.problems

    if d.differential.square_violations():
        p.append("d^2 != 0")
    if d.differential.degree_violations():
        p.append("differential does not lower degree by one")
    dims = {c.dims for c in d.complexes}
    if len(dims) > 1:
        p.append(f"several linearized dimension pairs {sorted(dims)}")
    f = build_front(t)
    signs = tuple(+1 if c.degree == 0 else -1
                  for c in d.differential.generators if c.kind == "crossing")
    if bool(enumerate_rulings(f, signs)) != bool(d.augmentations):
        p.append("graded ruling and augmentation existence disagree")
    if d.rotation == 0 and bool(d.rulings) != bool(d.augmentations):
        p.append("ruling and augmentation existence disagree at rotation 0")

    if report.fillable:
        try:
            tr = build_filling(t)
            validate_transcript(tr, t)
            if tr.one_handles - tr.zero_handles != d.tb:
                p.append("filling accounting differs from tb")
            validate_p4p(reduce_to_positive(t), t)
        except FillingError as exc:
            p.append(f"transcript failure: {exc}")
    return out


@dataclass
class CrosscheckSummary:
    max_crossings: int
    checks: list

    @property
    def knots(self) -> int:
        return len(self.checks)

    @property
    def fillable(self) -> int:
        return sum(c.fillable for c in self.checks)

    @property
    def discrepancies(self) -> list:
        return [c for c in self.checks if c.problems]

    def to_json(self) -> dict:
        return {"max_crossings": self.max_crossings, "knots": self.knots,
                "fillable": self.fillable, "unfillable": self.knots - self.fillable,
                "discrepancies": [c.to_json() for c in self.discrepancies]}


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def crosscheck(max_crossings: int, workers: int = 1) -> CrosscheckSummary:
    texts = [str(t) for t in enumerate_tuples(max_crossings, knots_only=True)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            checks = list(pool.map(check_tuple, texts, chunksize=32))
    else:
        checks = [check_tuple(s) for s in texts]
    # enumeration order is the canonical output order
    return CrosscheckSummary(max_crossings, checks)

