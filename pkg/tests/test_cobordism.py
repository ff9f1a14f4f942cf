import dataclasses
import json

import pytest

from legplat.bracket import jones_normalized, to_jones_t, unlink_factor
from legplat.cobordism import (
    FillingError,
    Front4,
    Move,
    TranscriptError,
    Unknot,
    apply_move,
    base_replacement_word,
    build_filling,
    piece_invariants,
    pinch_filling,
    reduce_to_positive,
    validate_p4p,
    validate_transcript,
)
from legplat.plat import build_front, classical_invariants, orient_and_sign, parse_tuple

FIVE_TWO = {1: 1, 2: -1, 3: 2, 4: -1, 5: 1, 6: -1}


def jones_t(text):
    f = build_front(parse_tuple(text))
    return to_jones_t(jones_normalized(f.slots, sum(orient_and_sign(f).signs)))


def test_trefoil_transcript():
    t = parse_tuple("[3]")
    tr = build_filling(t)
    assert validate_transcript(tr, t)
    assert (tr.zero_handles, tr.one_handles, tr.euler_characteristic) == (2, 3, -1)
    assert [m.tag for m in tr.moves if m.kind == "one-handle"] == ["resolution"] * 3
    assert len(tr.frames()) == 6
    assert tr.frames()[0] == ()


def test_trefoil_jones():
    assert jones_t("[3]") == {1: 1, 3: 1, 4: -1}


def test_accounting_example():
    t = parse_tuple("[1,(2,1),1]")
    tr = build_filling(t)
    assert validate_transcript(tr, t)
    assert tr.euler_characteristic == 1
    assert tr.one_handles - tr.zero_handles == classical_invariants(build_front(t))[0] == -1


def test_multi_piece_transcript_uses_pinches():
    t = parse_tuple("[2,(2,0),3,(0,2),2]")
    tr = build_filling(t)
    assert validate_transcript(tr, t)
    tags = [m.tag for m in tr.moves]
    assert tags.count("pinch") == 4
    json.dumps(tr.to_json())


def test_rejects_non_fillable():
    with pytest.raises(FillingError):
        build_filling(parse_tuple("[3,(6,2),2,(2,0),4]"))
    with pytest.raises(FillingError):
        reduce_to_positive(parse_tuple("[1,(1,0),1]"))


def test_incompatible_one_handle_is_invalid():
    t = parse_tuple("[3]")
    tr = build_filling(t)
    # stack the second unknot with the same orientation as the first: RLRL makes
    # the center strands antiparallel, so the first resolution is negative
    bad = list(tr.moves)
    bad[1] = Move("zero-handle", "standard-unknot", {"mode": "below", "piece": 0, "top": "R"},
                  (Front4((), "RLRL"),))
    tr.moves = bad
    with pytest.raises(TranscriptError) as exc:
        validate_transcript(tr, t)
    assert exc.value.index == 2


def test_incompatible_pinch_is_invalid():
    state = (Front4((("X", 2),), "RLLR"), Front4((("X", 2),), "LRRL"))
    with pytest.raises(ValueError):
        apply_move(state, "one-handle", "pinch", {"piece": 0, "pair": 1})


def test_wrong_accounting_is_invalid():
    t = parse_tuple("[3]")
    tr = build_filling(t)
    tr.declared = dict(tr.declared, zero_handles=1, euler_characteristic=-2)
    with pytest.raises(TranscriptError):
        validate_transcript(tr, t)


def test_euler_must_match_tb():
    # a transcript for [3] does not fill [1,(2,1),1]
    with pytest.raises(TranscriptError):
        validate_transcript(build_filling(parse_tuple("[3]")), parse_tuple("[1,(2,1),1]"))


def test_tampered_snapshot_is_invalid():
    t = parse_tuple("[3]")
    tr = build_filling(t)
    tr.moves[0] = dataclasses.replace(tr.moves[0], state=(Unknot("L"),))
    with pytest.raises(TranscriptError) as exc:
        validate_transcript(tr, t)
    assert exc.value.index == 0


def test_isotopy_checks_invariants():
    with pytest.raises(ValueError):
        apply_move((Unknot("R"),), "isotopy", "bogus",
                   {"piece": 0, "to": Front4((("X", 2),) * 3, "RLLR")})


@pytest.mark.parametrize("b1", range(1, 6))
def test_base_piece_positive_first(b1):
    for side in ((2, 0), (1, 1), (0, 2)):
        t = parse_tuple(f"[{b1},({side[0]},{side[1]}),1]")
        sf = orient_and_sign(build_front(t), "RLLR", check_knot=False)
        piece = Front4(tuple(("X", k) for k in sf.front.slots), "RLLR")
        model = Front4((("X", 2),) * (b1 - 1), base_replacement_word("RLLR"))
        assert piece_invariants(piece) == piece_invariants(model)


def test_unlink_invariant():
    assert piece_invariants(Front4((), "RLLR"))[3] == unlink_factor(2)


def test_five_two_pinch_filling():
    t = parse_tuple("[2,(2,0),3]")
    assert jones_t(str(t)) in (FIVE_TWO, {-k: v for k, v in FIVE_TWO.items()})
    tr = pinch_filling(t)
    assert validate_transcript(tr, t)
    kinds = [m.kind for m in tr.moves]
    assert kinds == ["zero-handle", "isotopy", "one-handle", "one-handle"]
    assert tr.euler_characteristic == -1
    assert build_filling(t).euler_characteristic == -1


def test_positivity_examples():
    assert reduce_to_positive(parse_tuple("[3]")).steps == []
    t = parse_tuple("[1,(2,1),1]")
    p = reduce_to_positive(t)
    assert [s.kind for s in p.steps] == ["R2-removal", "R2-removal"]
    assert p.final == (3, 0)
    assert validate_p4p(p, t)


def test_positivity_middle_cases():
    t = parse_tuple("[2,(2,0),3,(1,1),2]")
    p = reduce_to_positive(t)
    assert [s.case for s in p.steps] == ["side-double", "split-double"]
    assert validate_p4p(p, t)
    t = parse_tuple("[1,(2,0),2,(3,0),1]")
    p = reduce_to_positive(t)
    assert [s.kind for s in p.steps] == ["R2-removal", "middle", "R2-removal"]
    assert p.steps[1].case == "center-same-side"
    t = parse_tuple("[1,(2,0),2,(0,3),1]")
    assert reduce_to_positive(t).steps[1].case == "center-opposite-side"


def test_p4p_validator_rejects_bad_arithmetic():
    t = parse_tuple("[1,(2,1),1]")
    p = reduce_to_positive(t)
    p.steps[0] = dataclasses.replace(p.steps[0], after=(3, 0))
    with pytest.raises(FillingError):
        validate_p4p(p, t)
