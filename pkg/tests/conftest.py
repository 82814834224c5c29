"""Shared fixtures: independent brute-force oracles kept separate from the
production code paths they validate."""

from __future__ import annotations

import itertools

import pytest

from afcheck.maps import FiniteMap


def brute_force_split_search(f: FiniteMap, g: FiniteMap) -> bool:
    """Unrestricted witness search: every Z with |Z| <= |Y|, every h, k, s.

    Deliberately naive; no surjectivity or quotient reasoning.  Only the
    |Z| <= |Y| bound is kept (restricting any witness to the image of h
    stays a witness).
    """
    nx, ny = f.source, f.target
    sections = [
        s
        for s in itertools.product(range(nx), repeat=ny)
        if all(g.table[s[y]] == y for y in range(ny))
    ]
    if not sections:
        return ny == 0 and nx == 0 and brute_force_split_empty(f, g)
    for nz in range(1 if ny else 0, ny + 1):
        for h in itertools.product(range(nz), repeat=ny):
            if any(h[f.table[x]] != h[g.table[x]] for x in range(nx)):
                continue
            for s in sections:
                fs = tuple(f.table[s[y]] for y in range(ny))
                for k in itertools.product(range(ny), repeat=nz):
                    if all(fs[y] == k[h[y]] for y in range(ny)):
                        return True
    return False


def brute_force_split_empty(f: FiniteMap, g: FiniteMap) -> bool:
    return f.source == 0 and f.target == 0


def brute_force_topologies(points: int) -> set[tuple[int, ...]]:
    """All open-set families on the labelled points, by direct enumeration of
    subset families closed under union and intersection."""
    full = (1 << points) - 1
    masks = list(range(full + 1))
    found = set()
    for bits in itertools.product((0, 1), repeat=len(masks)):
        family = frozenset(m for m, b in zip(masks, bits) if b)
        if 0 not in family or full not in family:
            continue
        if all(u | v in family and u & v in family for u in family for v in family):
            found.add(tuple(sorted(family)))
    return found


def brute_force_closure_systems(points: int) -> set[tuple[int, ...]]:
    full = (1 << points) - 1
    masks = list(range(full + 1))
    found = set()
    for bits in itertools.product((0, 1), repeat=len(masks)):
        family = frozenset(m for m, b in zip(masks, bits) if b)
        if full not in family:
            continue
        if all(u & v in family for u in family for v in family):
            found.add(tuple(sorted(family)))
    return found


@pytest.fixture
def split_oracle():
    return brute_force_split_search


@pytest.fixture
def topology_oracle():
    return brute_force_topologies


@pytest.fixture
def closure_system_oracle():
    return brute_force_closure_systems
