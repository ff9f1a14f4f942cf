"""Graded augmentations and linearized contact homology over GF(2)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from . import gf2
from .dga import Differential


class InvalidAugmentation(ValueError):
    pass


@dataclass(frozen=True)
class Augmentation:
    values: tuple       # (name, 0/1) pairs in generator order

    @property
    def as_dict(self) -> dict:
        return dict(self.values)

    def __getitem__(self, name: str) -> int:
        return self.as_dict[name]

    def bitstring(self) -> str:
        """Values on the crossings a1, a2, ... in x-order."""
        return "".join(str(v) for name, v in self.values if name.startswith("a"))

    def __str__(self):
        return self.bitstring()


def evaluate(eps: dict, word: Iterable[str]) -> int:
    for x in word:
        if not eps[x]:
            return 0
    return 1


def is_augmentation(d: Differential, eps: dict) -> bool:
    deg = d.degree
    if any(eps[g] for g in eps if deg[g] == 1):
        return False
    return all(sum(evaluate(eps, w) for w in d.terms[a]) % 2 == 0 for a in d.terms)


def enumerate_augmentations(d: Differential) -> list:
    """Every graded augmentation, ordered by crossing bitstring."""
    names = [g.name for g in d.generators]
    even = [g.name for g in d.generators if g.degree == 0]
    bit = {name: 1 << i for i, name in enumerate(even)}
    # only odd generators have words that can survive a graded augmentation
    constraints = []
    for g in d.generators:
        if g.degree != 1:
            continue
        masks = []
        for w in d.terms[g.name]:
            if all(x in bit for x in w):
                m = 0
                for x in w:
                    m |= bit[x]
                masks.append(m)
        if masks:
            constraints.append(masks)
    out = []
    for s in range(1 << len(even)):
        if all(sum((m & s) == m for m in masks) % 2 == 0 for masks in constraints):
            eps = {name: 0 for name in names}
            for name in even:
                if s & bit[name]:
                    eps[name] = 1
            out.append(Augmentation(tuple((name, eps[name]) for name in names)))
    out.sort(key=lambda a: a.bitstring())
    return out


@dataclass(frozen=True)
class LinearizedComplex:
    names: tuple
    degrees: tuple
    columns: tuple      # columns[j]: image of generator j, bit i = generator i

    def _indices(self, k: int) -> list:
        return [i for i, dg in enumerate(self.degrees) if dg == k]

    def block(self, src: int) -> list:
        """Dense matrix of the map from degree ``src`` into degree ``src - 1``."""
        rows, cols = self._indices((src - 1) % 2), self._indices(src)
        return [[(self.columns[j] >> i) & 1 for j in cols] for i in rows]

    @property
    def d10(self) -> list:
        return self.block(1)

    @property
    def d01(self) -> list:
        return self.block(0)

    def rank_from(self, k: int) -> int:
        return gf2.rank(self.columns[j] for j in self._indices(k))

    @property
    def dims(self) -> tuple:
        r0, r1 = self.rank_from(0), self.rank_from(1)
        n0, n1 = len(self._indices(0)), len(self._indices(1))
        return (n0 - r0 - r1, n1 - r1 - r0)

    def squares_to_zero(self) -> bool:
        return not any(gf2.compose(list(self.columns), list(self.columns)))

    def image(self, name: str) -> list:
        col = self.columns[self.names.index(name)]
        return [n for i, n in enumerate(self.names) if (col >> i) & 1]

    def is_cycle(self, name: str) -> bool:
        return self.columns[self.names.index(name)] == 0

    def is_boundary(self, name: str) -> bool:
        return gf2.in_span(1 << self.names.index(name), self.columns)

    def to_json(self) -> dict:
        return {
            "generators": list(self.names),
            "degrees": list(self.degrees),
            "d10": self.d10,
            "d01": self.d01,
            "dims": list(self.dims),
        }


def linearize(d: Differential, eps: Augmentation) -> LinearizedComplex:
    e = eps.as_dict
    if not is_augmentation(d, e):
        raise InvalidAugmentation(f"{eps.bitstring()} is not a graded augmentation")
    names = tuple(g.name for g in d.generators)
    index = {n: i for i, n in enumerate(names)}
    cols = []
    for a in names:
        col = 0
        for w in d.terms[a]:
            for i, x in enumerate(w):
                if all(e[y] for j, y in enumerate(w) if j != i):
                    col ^= 1 << index[x]
        cols.append(col)
    return LinearizedComplex(names, tuple(g.degree for g in d.generators), tuple(cols))


def seidel_dimension_check(dims: tuple, tb: int) -> bool:
    """Dimensions a filling-induced augmentation must produce."""
    lch0, lch1 = dims
    return lch1 == 1 and lch0 % 2 == 0 and lch0 == tb + 1


def has_unbounded_odd_crossing_cycle(c: LinearizedComplex) -> bool:
    return any(
        dg == 1 and name.startswith("a") and c.is_cycle(name) and not c.is_boundary(name)
        for name, dg in zip(c.names, c.degrees)
    )


def fundamental_class_obstruction(d: Differential,
                                  augmentations: Optional[list] = None) -> bool:
    """Whether every augmentation has an odd crossing that is a cycle but not a boundary."""
    if augmentations is None:
        augmentations = enumerate_augmentations(d)
    return all(has_unbounded_odd_crossing_cycle(linearize(d, eps))
               for eps in augmentations)
