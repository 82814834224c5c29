"""Total functions between finite indexed carriers.

A ``FiniteMap`` is the morphism currency of the whole toolkit: structure
maps of comma objects, point maps of affine sets, and the f, g, h, k, s of
split-pair searches are all values of this one type.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import IncompatibleStructuresError, MalformedInputError


@dataclass(frozen=True)
class FiniteMap:
    source: int
    target: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.source < 0 or self.target < 0:
            raise MalformedInputError("carrier sizes must be non-negative")
        if len(self.table) != self.source:
            raise MalformedInputError(
                f"table length {len(self.table)} does not match source size {self.source}"
            )
        if any(not (0 <= v < self.target) for v in self.table):
            raise MalformedInputError("table entry outside target carrier")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def after(self, other: "FiniteMap") -> "FiniteMap":
        """Composite self ∘ other."""
        if other.target != self.source:
            raise IncompatibleStructuresError(
                f"cannot compose: inner target {other.target} != outer source {self.source}"
            )
        return FiniteMap(other.source, self.target, tuple(self.table[v] for v in other.table))

    def is_injective(self) -> bool:
        return len(set(self.table)) == self.source

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.target

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.table)))


def identity_map(n: int) -> FiniteMap:
    return FiniteMap(n, n, tuple(range(n)))


def compose(g: FiniteMap, f: FiniteMap) -> FiniteMap:
    """g ∘ f, applying f first."""
    return g.after(f)


def all_maps(source: int, target: int) -> Iterator[FiniteMap]:
    """Every total function source -> target, in lexicographic table order."""
    for table in itertools.product(range(target), repeat=source):
        yield FiniteMap(source, target, table)


def constant_map(source: int, target: int, value: int) -> FiniteMap:
    return FiniteMap(source, target, (value,) * source)
