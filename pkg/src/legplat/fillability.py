"""Band criterion for fillability, the obstruction battery, and their reconciliation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .dga import differential
from .linearization import (
    enumerate_augmentations,
    has_unbounded_odd_crossing_cycle,
    linearize,
    seidel_dimension_check,
)
from .plat import (
    NotAKnotError,
    PlatTuple,
    build_front,
    component_count,
    orient_and_sign,
    rotation_number,
    writhe,
)
from .rulings import enumerate_rulings

BATTERY_KEYS = (
    "not-a-knot",
    "rotation≠0",
    "no-normal-ruling",
    "no-augmentation",
    "seidel-dimension-fails-for-all-ε",
    "fundamental-class-fires",
)


class InconsistentVerdict(AssertionError):
    pass


def _knot_bands(t: PlatTuple):
    f = build_front(t)
    if component_count(f) != 1:
        raise NotAKnotError(f"{t} is a {component_count(f)}-component link")
    return orient_and_sign(f).bands


def band_violations(bands) -> list:
    out = []
    for b in bands:
        if b.sign < 0 and b.total > 2:
            out.append({"band": b.index, "rule": "negative-band>2"})
        if b.internal and b.total < 2:
            out.append({"band": b.index, "rule": "internal-band<2"})
    return out


def theorem1_verdict(t: PlatTuple) -> dict:
    violations = band_violations(_knot_bands(t))
    return {"fillable": not violations, "violations": violations}


def structural_checks(t: PlatTuple) -> dict:
    bands = _knot_bands(t)
    signs = bands.signs
    alternating = all(a != b for a, b in zip(signs, signs[1:]))
    externals = {bands[0].index: bands[0], bands[-1].index: bands[-1]}.values()
    singles = all(b.total == 1 for b in externals if b.sign < 0)
    return {"alternating-signs": alternating, "external-negative-singles": singles}


@dataclass
class BatteryDetail:
    """Intermediate data the battery computes; reused by reports."""

    tb: Optional[int] = None
    rotation: Optional[int] = None
    rulings: list = field(default_factory=list)
    differential: object = None
    augmentations: list = field(default_factory=list)
    complexes: list = field(default_factory=list)


def obstruction_battery(t: PlatTuple, detail: Optional[BatteryDetail] = None) -> dict:
    """Evaluate every obstruction; ``None`` marks checks undefined for links."""
    detail = detail if detail is not None else BatteryDetail()
    f = build_front(t)
    detail.rulings = enumerate_rulings(f)
    out = dict.fromkeys(BATTERY_KEYS)
    out["not-a-knot"] = component_count(f) != 1
    out["no-normal-ruling"] = not detail.rulings
    if out["not-a-knot"]:
        return out
    sf = orient_and_sign(f)
    detail.tb = writhe(sf.signs) - 2
    detail.rotation = rotation_number(sf.orientation.words)
    d = differential(sf)
    detail.differential = d
    detail.augmentations = enumerate_augmentations(d)
    detail.complexes = [linearize(d, eps) for eps in detail.augmentations]
    out["rotation≠0"] = detail.rotation != 0
    out["no-augmentation"] = not detail.augmentations
    out["seidel-dimension-fails-for-all-ε"] = not any(
        seidel_dimension_check(c.dims, detail.tb) for c in detail.complexes)
    out["fundamental-class-fires"] = all(
        has_unbounded_odd_crossing_cycle(c) for c in detail.complexes)
    return out


@dataclass
class FillabilityReport:
    tuple_text: str
    components: int
    theorem1: Optional[dict]
    battery: dict
    structure: Optional[dict]
    filling_built: Optional[bool] = None
    filling_error: Optional[str] = None
    consistent: Optional[bool] = None
    problems: list = field(default_factory=list)
    detail: BatteryDetail = field(default_factory=BatteryDetail, repr=False)

    @property
    def fillable(self) -> Optional[bool]:
        return None if self.theorem1 is None else self.theorem1["fillable"]

    @property
    def obstructed(self) -> bool:
        return any(v for v in self.battery.values())

    def to_json(self) -> dict:
        return {
            "tuple": self.tuple_text,
            "components": self.components,
            "theorem1": self.theorem1,
            "battery": self.battery,
            "structure": self.structure,
            "filling_built": self.filling_built,
            "filling_error": self.filling_error,
            "consistent": self.consistent,
            "problems": list(self.problems),
        }


def classify(t: PlatTuple, build: bool = True, strict: bool = False) -> FillabilityReport:
    """Full verdict for ``t``.

    With ``strict`` an inconsistent verdict raises instead of being flagged.
    Links get a partial battery and no verdict.
    """
    from .cobordism import FillingError, build_filling, validate_transcript

    f = build_front(t)
    comps = component_count(f)
    detail = BatteryDetail()
    battery = obstruction_battery(t, detail)
    if comps != 1:
        return FillabilityReport(str(t), comps, None, battery, None, detail=detail)
    report = FillabilityReport(str(t), comps, theorem1_verdict(t), battery,
                               structural_checks(t), detail=detail)
    problems = report.problems
    if build:
        try:
            validate_transcript(build_filling(t), t)
            report.filling_built = True
        except FillingError as exc:
            report.filling_built = False
            report.filling_error = str(exc)
    if report.fillable:
        fired = [k for k, v in battery.items() if v]
        if fired:
            problems.append(f"fillable but obstructed by {', '.join(fired)}")
        for k, v in report.structure.items():
            if not v:
                problems.append(f"fillable but structural check {k} fails")
        if build and not report.filling_built:
            problems.append(f"fillable but no filling built: {report.filling_error}")
    else:
        if not report.obstructed:
            problems.append("not fillable but no obstruction fires")
        if build and report.filling_built:
            problems.append("not fillable but a filling was built")
    report.consistent = not problems
    if strict and problems:
        raise InconsistentVerdict(f"{t}: " + "; ".join(problems))
    return report
