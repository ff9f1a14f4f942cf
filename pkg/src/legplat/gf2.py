"""Small dense GF(2) linear algebra on int bitsets."""

from __future__ import annotations

from typing import Iterable, List


def reduce_basis(vectors: Iterable[int]) -> dict:
    """Echelon basis keyed by leading bit."""
    basis: dict = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return basis


def rank(vectors: Iterable[int]) -> int:
    return len(reduce_basis(vectors))


def in_span(vec: int, vectors: Iterable[int]) -> bool:
    basis = reduce_basis(vectors)
    while vec:
        top = vec.bit_length() - 1
        if top not in basis:
            return False
        vec ^= basis[top]
    return True


def to_rows(columns: List[int], nrows: int) -> List[List[int]]:
    """Dense 0/1 matrix whose column j is the bitset ``columns[j]``."""
    return [[(c >> i) & 1 for c in columns] for i in range(nrows)]


def apply(columns: List[int], vec: int) -> int:
    """Image of ``vec`` under the map whose j-th column is ``columns[j]``."""
    acc = 0
    j = 0
    while vec:
        if vec & 1:
            acc ^= columns[j]
        vec >>= 1
        j += 1
    return acc


def compose(outer: List[int], inner: List[int]) -> List[int]:
    return [apply(outer, c) for c in inner]
