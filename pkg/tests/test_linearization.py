from itertools import combinations, product

import pytest

from legplat import gf2
from legplat.dga import differential
from legplat.linearization import (
    Augmentation,
    InvalidAugmentation,
    enumerate_augmentations,
    fundamental_class_obstruction,
    linearize,
    seidel_dimension_check,
)
from legplat.plat import build_front, enumerate_tuples, orient_and_sign, parse_tuple


def dga(text):
    return differential(orient_and_sign(build_front(parse_tuple(text))))


def naive_augmentations(d):
    """Every full assignment; keep graded ones killing every differential."""
    names = [g.name for g in d.generators]
    out = []
    for bits in product((0, 1), repeat=len(names)):
        eps = dict(zip(names, bits))
        if any(eps[g.name] for g in d.generators if g.degree == 1):
            continue
        if all(sum(all(eps[x] for x in w) for w in d.terms[n]) % 2 == 0 for n in names):
            out.append("".join(str(eps[n]) for n in names if n.startswith("a")))
    return sorted(out)


def naive_rank(cols):
    span = {0}
    for c in cols:
        span |= {s ^ c for s in span}
    return len(span).bit_length() - 1


def test_trefoil_augmentations():
    d = dga("[3]")
    augs = enumerate_augmentations(d)
    assert len(augs) == 5
    # solutions of 1 + a1 + a3 + a1a2a3 = 0, worked by hand
    assert [a.bitstring() for a in augs] == ["001", "011", "100", "110", "111"]
    for a in augs:
        c = linearize(d, a)
        assert c.dims == (2, 1)
        assert c.squares_to_zero()
        assert seidel_dimension_check(c.dims, 1)


def test_augmentations_match_oracle():
    for t in enumerate_tuples(7, knots_only=True):
        d = differential(orient_and_sign(build_front(t)))
        assert sorted(a.bitstring() for a in enumerate_augmentations(d)) == \
            naive_augmentations(d), t


def test_linearized_differential_squares_to_zero():
    for t in enumerate_tuples(8, knots_only=True):
        d = differential(orient_and_sign(build_front(t)))
        for a in enumerate_augmentations(d):
            assert linearize(d, a).squares_to_zero(), t


def test_invalid_augmentation_rejected():
    d = dga("[3]")
    bad = Augmentation(tuple((g.name, 0) for g in d.generators))
    with pytest.raises(InvalidAugmentation):
        linearize(d, bad)


def test_fundamental_class_on_trefoil_is_quiet():
    assert not fundamental_class_obstruction(dga("[3]"))


def test_gf2_rank_matches_span_count():
    vecs = [0b1011, 0b0110, 0b1101, 0b0001, 0b1010]
    for r in range(len(vecs) + 1):
        for sub in combinations(vecs, r):
            assert gf2.rank(sub) == naive_rank(sub)
    assert gf2.in_span(0b1101, [0b1011, 0b0110])
    assert not gf2.in_span(0b0001, [0b1011, 0b0110])
    assert gf2.to_rows([0b01, 0b11], 2) == [[1, 1], [0, 1]]
