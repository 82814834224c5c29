"""Finite topological spaces and closure systems as affine sets.

Open and closed sets are bitmasks over the point carrier; a space transcribes
to an affine set over the two-element frame via characteristic rows, a
closure system over the two-element meet-lattice.  At finite scale a space is
sober exactly when it is T0; the direct generic-point sobriety procedure is
run alongside and must agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .affine import AffineSet, frame2, inf2
from .errors import (
    IncompatibleStructuresError,
    MalformedInputError,
    ResourceLimitError,
)

MAX_CENSUS_POINTS = 4


def subset_to_mask(subset: Iterable[int], points: int) -> int:
    mask = 0
    for x in subset:
        if not (0 <= x < points):
            raise MalformedInputError(f"point {x} outside carrier of size {points}")
        mask |= 1 << x
    return mask


def mask_to_subset(mask: int) -> tuple[int, ...]:
    return tuple(x for x in range(mask.bit_length()) if (mask >> x) & 1)


@dataclass(frozen=True)
class FiniteSpace:
    points: int
    opens: tuple[int, ...]

    def __post_init__(self):
        opens = tuple(sorted(set(self.opens)))
        object.__setattr__(self, "opens", opens)
        full = (1 << self.points) - 1
        if any(not (0 <= u <= full) for u in opens):
            raise MalformedInputError("open set outside the point carrier")
        present = set(opens)
        if 0 not in present or full not in present:
            raise MalformedInputError("opens must contain the empty set and the whole set")
        for u, v in itertools.combinations(opens, 2):
            if u | v not in present or u & v not in present:
                raise MalformedInputError("opens not closed under union and intersection")

    @classmethod
    def from_subsets(cls, points: int, subsets: Iterable[Iterable[int]]) -> "FiniteSpace":
        return cls(points, tuple(subset_to_mask(s, points) for s in subsets))

    def closeds(self) -> tuple[int, ...]:
        full = (1 << self.points) - 1
        return tuple(sorted(full ^ u for u in self.opens))


@dataclass(frozen=True)
class ClosureSystem:
    points: int
    closed: tuple[int, ...]

    def __post_init__(self):
        closed = tuple(sorted(set(self.closed)))
        object.__setattr__(self, "closed", closed)
        full = (1 << self.points) - 1
        if any(not (0 <= c <= full) for c in closed):
            raise MalformedInputError("closed set outside the point carrier")
        present = set(closed)
        if full not in present:
            raise MalformedInputError("closed sets must contain the whole set")
        for u, v in itertools.combinations(closed, 2):
            if u & v not in present:
                raise MalformedInputError("closed sets not closed under intersection")

    @classmethod
    def from_subsets(cls, points: int, subsets: Iterable[Iterable[int]]) -> "ClosureSystem":
        return cls(points, tuple(subset_to_mask(s, points) for s in subsets))


def _mask_row(mask: int, points: int) -> tuple[int, ...]:
    return tuple((mask >> x) & 1 for x in range(points))


def _row_mask(row: Sequence[int]) -> int:
    return sum(1 << x for x, v in enumerate(row) if v == 1)


def space_to_affine(space: FiniteSpace) -> AffineSet:
    """Characteristic rows of the opens, over the two-element frame."""
    rows = tuple(_mask_row(u, space.points) for u in space.opens)
    return AffineSet(space.points, frame2(), rows)


def affine_to_space(xs: AffineSet) -> FiniteSpace:
    """Opens are the 1-preimages of the structure rows."""
    if xs.algebra != frame2():
        raise IncompatibleStructuresError("ambient algebra is not the two-element frame")
    return FiniteSpace(xs.points, tuple(_row_mask(row) for row in xs.maps))


def closure_system_to_affine(system: ClosureSystem) -> AffineSet:
    """Characteristic rows of the closed sets, over the two-element
    meet-lattice with top."""
    rows = tuple(_mask_row(c, system.points) for c in system.closed)
    return AffineSet(system.points, inf2(), rows)


def affine_to_closure_system(xs: AffineSet) -> ClosureSystem:
    if xs.algebra != inf2():
        raise IncompatibleStructuresError("ambient algebra is not the two-element meet-lattice")
    return ClosureSystem(xs.points, tuple(_row_mask(row) for row in xs.maps))


def point_closure(space: FiniteSpace, x: int) -> int:
    out = (1 << space.points) - 1
    for c in space.closeds():
        if (c >> x) & 1:
            out &= c
    return out


def _is_irreducible(space: FiniteSpace, c: int) -> bool:
    if c == 0:
        return False
    closeds = space.closeds()
    for c1, c2 in itertools.combinations_with_replacement(closeds, 2):
        if (c1 | c2) & c == c and c1 & c != c and c2 & c != c:
            return False
    return True


def sober_via_generic_points(space: FiniteSpace) -> tuple[bool, int | None]:
    """Direct sobriety: every irreducible closed set has exactly one point
    whose closure it is.  Returns a failing closed set (as a mask) if any."""
    for c in set(space.closeds()):
        if not _is_irreducible(space, c):
            continue
        generic = [x for x in range(space.points) if point_closure(space, x) == c]
        if len(generic) != 1:
            return False, c
    return True, None


def is_sober_finite(space: FiniteSpace) -> tuple[bool, tuple[int, int] | None]:
    """Finite sobriety via the T0 separation test.

    In a finite space an irreducible closed set is a union of point closures
    and irreducibility collapses it to a single one, so sober and T0 agree;
    the direct generic-point procedure is run as well and any disagreement
    (impossible) raises rather than returning a wrong answer.
    """
    witness = None
    for x, y in itertools.combinations(range(space.points), 2):
        if all(((u >> x) & 1) == ((u >> y) & 1) for u in space.opens):
            witness = (x, y)
            break
    t0 = witness is None
    direct, _ = sober_via_generic_points(space)
    if t0 != direct:
        raise RuntimeError("internal: T0 and generic-point sobriety disagree")
    return t0, witness


def enumerate_topologies(points: int) -> list[FiniteSpace]:
    """All topologies on the labelled point set, via the bijection with
    reflexive transitive relations (up-set opens)."""
    if points > MAX_CENSUS_POINTS:
        raise ResourceLimitError(f"topology census capped at {MAX_CENSUS_POINTS} points")
    pairs = [(x, y) for x in range(points) for y in range(points) if x != y]
    spaces = []
    for bits in itertools.product((False, True), repeat=len(pairs)):
        rel = [[x == y for y in range(points)] for x in range(points)]
        for (x, y), b in zip(pairs, bits):
            rel[x][y] = b
        if not all(
            not (rel[x][y] and rel[y][z]) or rel[x][z]
            for x in range(points)
            for y in range(points)
            for z in range(points)
        ):
            continue
        opens = tuple(
            mask
            for mask in range(1 << points)
            if all(
                not ((mask >> x) & 1) or ((mask >> y) & 1)
                for x in range(points)
                for y in range(points)
                if rel[x][y]
            )
        )
        spaces.append(FiniteSpace(points, opens))
    return sorted(spaces, key=lambda s: s.opens)


def enumerate_closure_systems(points: int) -> list[ClosureSystem]:
    """All closure systems on the labelled point set, by direct enumeration
    of intersection-closed families containing the whole set."""
    if points > MAX_CENSUS_POINTS:
        raise ResourceLimitError(f"closure-system census capped at {MAX_CENSUS_POINTS} points")
    full = (1 << points) - 1
    others = [m for m in range(full)]
    systems = []
    for r in range(len(others) + 1):
        for combo in itertools.combinations(others, r):
            family = set(combo) | {full}
            if all(a & b in family for a, b in itertools.combinations(family, 2)):
                systems.append(ClosureSystem(points, tuple(sorted(family))))
    return sorted(systems, key=lambda s: s.closed)


def is_continuous(table: Sequence[int], source: FiniteSpace, target: FiniteSpace) -> bool:
    """Preimage test for a point map between finite spaces."""
    if len(table) != source.points or any(not (0 <= v < target.points) for v in table):
        raise MalformedInputError("point map does not match the carriers")
    opens = set(source.opens)
    for u in target.opens:
        pre = sum(1 << x for x in range(source.points) if (u >> table[x]) & 1)
        if pre not in opens:
            return False
    return True
