"""Acceptance criteria; each test prints one PASS/FAIL line."""

from legplat.cobordism import (
    FillingError,
    build_filling,
    reduce_to_positive,
    validate_p4p,
    validate_transcript,
)
from legplat.dga import differential
from legplat.linearization import enumerate_augmentations, fundamental_class_obstruction, \
    linearize
from legplat.plat import build_front, orient_and_sign, parse_tuple, render_tuple, \
    tuple_from_slots
from legplat.rulings import enumerate_rulings, has_normal_ruling
from test_linearization import naive_augmentations
from test_rulings import naive_rulings


def check(report_line, number, title, failures, total):
    ok = not failures
    detail = f"{total} checked, {len(failures)} failing"
    if failures:
        detail += f"; first: {failures[:3]}"
    report_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})")
    assert ok, detail


def test_criterion_1_band_criterion_equivalence(sweep, report_line):
    bad = []
    for t, r in sweep:
        clear = not r.obstructed
        if r.fillable != (clear and bool(r.filling_built)):
            bad.append(str(t))
    check(report_line, 1, "band criterion equivalence sweep", bad, len(sweep))


def test_criterion_2_showcase_round_trip(report_line):
    text = "[3,(6,2),2,(2,0),4]"
    t = parse_tuple(text)
    rebuilt = tuple_from_slots(build_front(t).slots)
    bad = [] if render_tuple(rebuilt) == text == str(t) else [render_tuple(rebuilt)]
    check(report_line, 2, "showcase tuple round trip", bad, 1)


def test_criterion_3_dga_correctness(sweep, report_line):
    bad = []
    for t, r in sweep:
        d = r.detail.differential
        if d.square_violations() or d.degree_violations():
            bad.append(str(t))
    check(report_line, 3, "d^2 = 0 and degree drop", bad, len(sweep))


def test_criterion_4_trefoil_oracle(report_line):
    f = build_front(parse_tuple("[3]"))
    d = differential(orient_and_sign(f))
    augs = enumerate_augmentations(d)
    bad = []
    switches = [r.switches for r in enumerate_rulings(f)]
    if switches != [(1,), (3,), (1, 2, 3)] or switches != naive_rulings(f.slots):
        bad.append(f"rulings {switches}")
    if d.format("c1") != "1 + a1 + a3 + a1a2a3" or d.format("c2") != "1 + a1 + a3 + a3a2a1":
        bad.append("differential")
    if len(augs) != 5 or sorted(a.bitstring() for a in augs) != naive_augmentations(d):
        bad.append(f"{len(augs)} augmentations")
    if {linearize(d, a).dims for a in augs} != {(2, 1)}:
        bad.append("dims")
    check(report_line, 4, "trefoil oracle", bad, 4)


def test_criterion_5_genus_accounting(sweep, report_line):
    bad, total = [], 0
    for t, r in sweep:
        try:
            tr = build_filling(t)
        except FillingError:
            continue
        total += 1
        validate_transcript(tr, t)
        if tr.one_handles - tr.zero_handles != r.detail.tb:
            bad.append(str(t))
    check(report_line, 5, "one_handles - zero_handles = tb", bad, total)


def test_criterion_6_corollary_checks(sweep, report_line):
    bad, total = [], 0
    for t, r in sweep:
        if not r.fillable:
            continue
        total += 1
        if not all(r.structure.values()):
            bad.append(f"{t} structure")
            continue
        try:
            p = reduce_to_positive(t)
            validate_p4p(p, t)
        except FillingError as exc:
            bad.append(f"{t}: {exc}")
            continue
        if p.final[1] != 0:
            bad.append(f"{t} ends with negatives")
    check(report_line, 6, "alternating signs, negative external singles, positivity", bad, total)


def test_criterion_7_single_chekanov_polynomial(sweep, report_line):
    bad = [str(t) for t, r in sweep if len({c.dims for c in r.detail.complexes}) > 1]
    check(report_line, 7, "single Chekanov polynomial", bad, len(sweep))


def test_criterion_8_obstruction_spot_checks(sweep, report_line):
    bad = []
    if has_normal_ruling(build_front(parse_tuple("[1,(1,0),1]"))):
        bad.append("[1,(1,0),1] has a ruling")
    firsts, with_augs = {}, {}
    for t, r in sweep:
        sf = orient_and_sign(build_front(t))
        for b in sf.bands:
            if b.sign < 0 and b.taxonomy in ("long", "split-quadruple"):
                firsts.setdefault(b.taxonomy, (t, r))
                if r.detail.augmentations:
                    with_augs.setdefault(b.taxonomy, (t, r))
    for kind in ("long", "split-quadruple"):
        for label, table in (("smallest", firsts), ("smallest with augmentations", with_augs)):
            if kind not in table:
                bad.append(f"no {label} knot with a negative {kind} band")
                continue
            t, r = table[kind]
            if not fundamental_class_obstruction(r.detail.differential, r.detail.augmentations):
                bad.append(f"{t} ({label} negative {kind})")
    check(report_line, 8, "obstruction spot checks", bad, 5)
