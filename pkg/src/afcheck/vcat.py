"""Finite quantale-enriched categories.

A V-category is a carrier with a V-valued structure matrix; V-functors into
(V, hom) are the currency of the isomorphism with affine sets: one direction
collects all such functors, the other rebuilds the matrix as the initial
structure (pointwise meet of residuals) of a structure set.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .affine import AffineSet, vccd_closure_report
from .errors import IncompatibleStructuresError, MalformedInputError, PreconditionViolationError
from .quantale import Quantale
from .report import LawReport

VMap = tuple[int, ...]


@dataclass(frozen=True)
class VCategory:
    quantale: Quantale
    size: int
    a: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        matrix = tuple(tuple(int(v) for v in row) for row in self.a)
        object.__setattr__(self, "a", matrix)
        if len(matrix) != self.size or any(len(row) != self.size for row in matrix):
            raise MalformedInputError("structure matrix shape does not match carrier")
        if any(not (0 <= v < self.quantale.size) for row in matrix for v in row):
            raise MalformedInputError("matrix entry outside the quantale carrier")


def check_vcategory(x: VCategory) -> LawReport:
    """Diagnose reflexivity (k <= a(p,p)) and transitivity of the matrix."""
    q, a = x.quantale, x.a
    report = LawReport()
    for p in range(x.size):
        report.checked += 1
        if not q.leq[q.unit][a[p][p]]:
            report.add("reflexivity", (p,))
    for p, r, s in itertools.product(range(x.size), repeat=3):
        report.checked += 1
        if not q.leq[q.tensor[a[r][s]][a[p][r]]][a[p][s]]:
            report.add("transitivity", (p, r, s))
    return report


def check_vfunctor(f, x: VCategory, y: VCategory) -> LawReport:
    """List every pair where f fails a(p,r) <= b(f p, f r)."""
    if x.quantale != y.quantale:
        raise IncompatibleStructuresError("V-categories over different quantales")
    table = tuple(f.table) if hasattr(f, "table") else tuple(f)
    if len(table) != x.size or any(not (0 <= v < y.size) for v in table):
        raise MalformedInputError("map does not match the carriers")
    q = x.quantale
    report = LawReport()
    for p, r in itertools.product(range(x.size), repeat=2):
        report.checked += 1
        if not q.leq[x.a[p][r]][y.a[table[p]][table[r]]]:
            report.add("vfunctor", (p, r))
    return report


def hom_self_vcategory(q: Quantale) -> VCategory:
    """The quantale carrier as a V-category under its own residuation."""
    return VCategory(q, q.size, q.hom)


def initial_structure(q: Quantale, size: int, structure_maps: Iterable[Sequence[int]]) -> VCategory:
    """The largest structure making every given map a V-functor into (V, hom):
    a(p, r) is the meet over the maps of hom(value at p, value at r)."""
    maps = [tuple(m) for m in structure_maps]
    for m in maps:
        if len(m) != size or any(not (0 <= v < q.size) for v in m):
            raise MalformedInputError("structure map malformed")
    matrix = tuple(
        tuple(q.meet_of(q.hom[m[p]][m[r]] for m in maps) for r in range(size))
        for p in range(size)
    )
    return VCategory(q, size, matrix)


def enumerate_vfunctors_to_V(x: VCategory) -> tuple[VMap, ...]:
    """All maps into the quantale satisfying the V-functor inequality against
    (V, hom), by exhaustive enumeration of the |V|^|X| candidates."""
    q = x.quantale
    out = []
    for psi in itertools.product(range(q.size), repeat=x.size):
        if all(
            q.leq[x.a[p][r]][q.hom[psi[p]][psi[r]]]
            for p in range(x.size)
            for r in range(x.size)
        ):
            out.append(psi)
    return tuple(out)


def expansion_identity_check(x: VCategory, psi: Sequence[int]) -> LawReport:
    """Verify psi(p) equals the join over r of psi(r) (x) a(r, p).

    If psi is not a V-functor into (V, hom) the report carries a
    precondition violation instead of identity failures.
    """
    q = x.quantale
    psi_t = tuple(int(v) for v in psi)
    pre = check_vfunctor(psi_t, x, hom_self_vcategory(q))
    report = LawReport()
    if not pre.ok:
        for v in pre.violations:
            report.add("precondition-vfunctor", v.witness, "psi is not a V-functor")
        return report
    for p in range(x.size):
        report.checked += 1
        rhs = q.join_of(q.tensor[psi_t[r]][x.a[r][p]] for r in range(x.size))
        if psi_t[p] != rhs:
            report.add("expansion-identity", (p, psi_t[p], rhs))
    return report


def is_separated(x: VCategory) -> tuple[bool, tuple[int, int] | None]:
    """No two distinct points may be isomorphic (mutually k-related)."""
    q = x.quantale
    for p, r in itertools.combinations(range(x.size), 2):
        if q.leq[q.unit][x.a[p][r]] and q.leq[q.unit][x.a[r][p]]:
            return False, (p, r)
    return True, None


def is_adjoint_pair(x: VCategory, phi: Sequence[int], psi: Sequence[int]) -> bool:
    """The fixed convention: phi is the covariant leg, psi the contravariant
    one, with the unit and counit inequalities below."""
    q, a, n = x.quantale, x.a, x.size
    for p, r in itertools.product(range(n), repeat=2):
        if not q.leq[q.tensor[a[p][r]][phi[p]]][phi[r]]:
            return False
        if not q.leq[q.tensor[psi[r]][a[p][r]]][psi[p]]:
            return False
        if not q.leq[q.tensor[psi[p]][phi[r]]][a[p][r]]:
            return False
    return q.leq[q.unit][q.join_of(q.tensor[phi[p]][psi[p]] for p in range(n))]


def enumerate_adjoint_pairs(x: VCategory) -> Iterator[tuple[VMap, VMap]]:
    q = x.quantale
    for phi in itertools.product(range(q.size), repeat=x.size):
        for psi in itertools.product(range(q.size), repeat=x.size):
            if is_adjoint_pair(x, phi, psi):
                yield phi, psi


def representing_point(x: VCategory, phi: Sequence[int], psi: Sequence[int]) -> int | None:
    for p0 in range(x.size):
        if all(phi[r] == x.a[p0][r] and psi[r] == x.a[r][p0] for r in range(x.size)):
            return p0
    return None


def is_cauchy_complete(x: VCategory) -> tuple[bool, list[tuple[VMap, VMap]]]:
    """Every adjoint pair of modules must be representable by a point."""
    missing = [
        (phi, psi)
        for phi, psi in enumerate_adjoint_pairs(x)
        if representing_point(x, phi, psi) is None
    ]
    return not missing, missing


def roundtrip_iso_check(q: Quantale, obj) -> LawReport:
    """Both composites of the isomorphism with affine structure sets.

    V-category input: rebuilding the matrix from all V-functors into (V, hom)
    must reproduce it exactly.  Affine input (structure set closed under the
    enriched-complete operations): collecting the V-functors of the initial
    structure must reproduce the set exactly.
    """
    if isinstance(obj, VCategory):
        if obj.quantale != q:
            raise IncompatibleStructuresError("V-category is over a different quantale")
        report = LawReport()
        rebuilt = initial_structure(q, obj.size, enumerate_vfunctors_to_V(obj))
        for p, r in itertools.product(range(obj.size), repeat=2):
            report.checked += 1
            if rebuilt.a[p][r] != obj.a[p][r]:
                report.add("roundtrip-gf", (p, r, obj.a[p][r], rebuilt.a[p][r]))
        return report
    if isinstance(obj, AffineSet):
        closure = vccd_closure_report(q, obj)
        if not closure.ok:
            raise PreconditionViolationError(
                "structure set is not closed under the enriched-complete operations"
            )
        report = LawReport()
        x = initial_structure(q, obj.points, obj.maps)
        recovered = set(enumerate_vfunctors_to_V(x))
        original = set(obj.maps)
        report.checked += len(original | recovered)
        for row in sorted(original - recovered):
            report.add("roundtrip-fg", row, "structure map lost")
        for row in sorted(recovered - original):
            report.add("roundtrip-fg", row, "extra V-functor appeared")
        return report
    raise MalformedInputError("roundtrip check expects a VCategory or an AffineSet")


def enumerate_vcategories(q: Quantale, size: int) -> Iterator[VCategory]:
    """All valid V-categories on the given carrier, exhaustively.

    Diagonal entries range over the up-set of the unit, off-diagonal entries
    over the whole carrier; transitivity is filtered explicitly.
    """
    diag_choices = [v for v in range(q.size) if q.leq[q.unit][v]]
    cells = [(p, r) for p in range(size) for r in range(size)]
    pools = [diag_choices if p == r else range(q.size) for p, r in cells]
    for values in itertools.product(*pools):
        a = [[0] * size for _ in range(size)]
        for (p, r), v in zip(cells, values):
            a[p][r] = v
        if _transitive(q, a, size):
            yield VCategory(q, size, tuple(map(tuple, a)))


def _transitive(q: Quantale, a, size: int) -> bool:
    return all(
        q.leq[q.tensor[a[r][s]][a[p][r]]][a[p][s]]
        for p in range(size)
        for r in range(size)
        for s in range(size)
    )


def sample_vcategories(q: Quantale, size: int, count: int, seed: int = 0) -> list[VCategory]:
    """Rejection-sample valid V-categories; reproducible for a fixed seed.

    Draws may repeat: on small carriers there can be fewer distinct valid
    structures than requested samples.
    """
    rng = random.Random(seed)
    diag_choices = [v for v in range(q.size) if q.leq[q.unit][v]]
    out: list[VCategory] = []
    while len(out) < count:
        a = [[0] * size for _ in range(size)]
        for p in range(size):
            for r in range(size):
                a[p][r] = rng.choice(diag_choices) if p == r else rng.randrange(q.size)
        if _transitive(q, a, size):
            out.append(VCategory(q, size, tuple(map(tuple, a))))
    return out
