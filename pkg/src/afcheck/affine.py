"""Affine sets over a finite algebra.

An affine set is a finite point set X together with a subalgebra S of the
pointwise power algebra A^X.  S is stored as a canonical (sorted, deduped)
tuple of value rows, one row per member map X -> A, so set equality is plain
tuple equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    IncompatibleStructuresError,
    MalformedInputError,
    PreconditionViolationError,
    ResourceLimitError,
)
from .maps import FiniteMap
from .quantale import Quantale
from .report import LawReport

Row = tuple[int, ...]

DEFAULT_CLOSURE_CAP = 4096


@dataclass(frozen=True)
class Operation:
    """One named operation: a flat table in row-major argument order."""

    name: str
    arity: int
    table: tuple[int, ...]


@dataclass(frozen=True)
class FinAlgebra:
    """A finite algebra: carrier 0..size-1 plus total operation tables.

    Reflection examples in the comma machinery assume at least one constant
    (arity-0 operation); this is not enforced structurally.
    """

    size: int
    operations: tuple[Operation, ...]
    quantale: Quantale | None = None

    def __post_init__(self):
        if self.size < 1:
            raise MalformedInputError("algebra carrier must be non-empty")
        for op in self.operations:
            if op.arity < 0:
                raise MalformedInputError(f"operation {op.name}: negative arity")
            if len(op.table) != self.size**op.arity:
                raise MalformedInputError(f"operation {op.name}: ragged table")
            if any(not (0 <= v < self.size) for v in op.table):
                raise MalformedInputError(f"operation {op.name}: entry outside carrier")

    @property
    def signature(self) -> tuple[tuple[str, int], ...]:
        return tuple((op.name, op.arity) for op in self.operations)

    def apply(self, op: Operation, args: Sequence[int]) -> int:
        idx = 0
        for a in args:
            idx = idx * self.size + a
        return op.table[idx]

    def constants(self) -> list[int]:
        return [op.table[0] for op in self.operations if op.arity == 0]


def encode_tuple(values: Sequence[int], base: int) -> int:
    idx = 0
    for v in values:
        idx = idx * base + v
    return idx


def decode_tuple(index: int, base: int, length: int) -> Row:
    out = []
    for _ in range(length):
        out.append(index % base)
        index //= base
    return tuple(reversed(out))


def _lattice_tables(leq):
    """Join/meet tables plus bounds of a finite lattice given by its order."""
    n = len(leq)
    if n == 0 or any(len(row) != n for row in leq):
        raise MalformedInputError("ragged or empty leq table")

    def lub(order, u, v):
        ubs = [w for w in range(n) if order[u][w] and order[v][w]]
        for w in ubs:
            if all(order[w][x] for x in ubs):
                return w
        return None

    geq = tuple(tuple(leq[v][u] for v in range(n)) for u in range(n))
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(n):
            j, m = lub(leq, u, v), lub(geq, u, v)
            if j is None or m is None:
                raise MalformedInputError(f"no join or meet for pair ({u}, {v})")
            join[u][v], meet[u][v] = j, m
    bottom = next((u for u in range(n) if all(leq[u][v] for v in range(n))), None)
    top = next((u for u in range(n) if all(leq[v][u] for v in range(n))), None)
    if bottom is None or top is None:
        raise MalformedInputError("order has no bottom or no top")
    return tuple(map(tuple, join)), tuple(map(tuple, meet)), bottom, top


def bounded_lattice_algebra(leq) -> FinAlgebra:
    """A finite bounded lattice as an algebra with meet, join, bot, top."""
    leq_t = tuple(tuple(bool(x) for x in row) for row in leq)
    join, meet, bottom, top = _lattice_tables(leq_t)
    n = len(leq_t)
    flat = lambda t: tuple(t[u][v] for u in range(n) for v in range(n))
    return FinAlgebra(
        n,
        (
            Operation("meet", 2, flat(meet)),
            Operation("join", 2, flat(join)),
            Operation("bot", 0, (bottom,)),
            Operation("top", 0, (top,)),
        ),
    )


def chain_leq(n: int) -> tuple[tuple[bool, ...], ...]:
    return tuple(tuple(u <= v for v in range(n)) for u in range(n))


@lru_cache(maxsize=None)
def frame2() -> FinAlgebra:
    """The two-element frame: finite meets and joins on the chain 0 < 1."""
    return bounded_lattice_algebra(chain_leq(2))


@lru_cache(maxsize=None)
def inf2() -> FinAlgebra:
    """The two-element complete meet-lattice: binary meet and the top."""
    return FinAlgebra(2, (Operation("meet", 2, (0, 0, 0, 1)), Operation("top", 0, (1,))))


def vccd_signature_algebra(q: Quantale) -> FinAlgebra:
    """The quantale carrier with the finite-scale enriched-complete operations:
    joins, meets, tensors u(x)- and cotensors hom(u,-).  On finite carriers
    every weighted (co)limit reduces to these."""
    n = q.size
    flat = lambda t: tuple(t[u][v] for u in range(n) for v in range(n))
    ops = [
        Operation("join", 2, flat(q.join)),
        Operation("meet", 2, flat(q.meet)),
        Operation("bot", 0, (q.bottom,)),
        Operation("top", 0, (q.top,)),
    ]
    for u in range(n):
        ops.append(Operation(f"tensor[{u}]", 1, tuple(q.tensor[u][v] for v in range(n))))
        ops.append(Operation(f"hom[{u}]", 1, tuple(q.hom[u][v] for v in range(n))))
    return FinAlgebra(n, tuple(ops), quantale=q)


def power_algebra(algebra: FinAlgebra, points: int) -> FinAlgebra:
    """The pointwise power A^n on the encoded carrier of all rows."""
    size = algebra.size**points
    ops = []
    for op in algebra.operations:
        table = []
        for args in itertools.product(range(size), repeat=op.arity):
            rows = [decode_tuple(a, algebra.size, points) for a in args]
            value = tuple(
                algebra.apply(op, tuple(r[p] for r in rows)) for p in range(points)
            )
            table.append(encode_tuple(value, algebra.size))
        ops.append(Operation(op.name, op.arity, tuple(table)))
    return FinAlgebra(size, tuple(ops), quantale=algebra.quantale)


@dataclass(frozen=True)
class AffineSet:
    points: int
    algebra: FinAlgebra
    maps: tuple[Row, ...]

    def __post_init__(self):
        canonical = tuple(sorted(set(tuple(r) for r in self.maps)))
        object.__setattr__(self, "maps", canonical)
        for row in canonical:
            if len(row) != self.points:
                raise MalformedInputError("row length does not match point count")
            if any(not (0 <= v < self.algebra.size) for v in row):
                raise MalformedInputError("row value outside algebra carrier")
        bad = _closure_defect(self.algebra, self.points, canonical)
        if bad is not None:
            raise MalformedInputError(
                f"structure set not closed under {bad[0]} at rows {bad[1]}"
            )


def _pointwise(algebra: FinAlgebra, op: Operation, rows: Sequence[Row], points: int) -> Row:
    return tuple(algebra.apply(op, tuple(r[p] for r in rows)) for p in range(points))


def _closure_defect(algebra, points, rows):
    present = set(rows)
    for op in algebra.operations:
        for args in itertools.product(rows, repeat=op.arity):
            if _pointwise(algebra, op, args, points) not in present:
                return op.name, args
    return None


def generate_subalgebra(
    algebra: FinAlgebra,
    points: int,
    generators: Iterable[Sequence[int]],
    max_size: int = DEFAULT_CLOSURE_CAP,
) -> AffineSet:
    """Least subalgebra of A^points containing the generators.

    Pointwise constants are always seeded: in a variety with constants every
    subalgebra contains them.  Closure runs to a fixed point; exceeding
    max_size raises ResourceLimitError.
    """
    current: set[Row] = set()
    for c in algebra.constants():
        current.add((c,) * points)
    for gen in generators:
        row = tuple(int(v) for v in gen)
        if len(row) != points or any(not (0 <= v < algebra.size) for v in row):
            raise MalformedInputError("generator row malformed")
        current.add(row)
    if len(current) > max_size:
        raise ResourceLimitError(f"subalgebra closure exceeded cap of {max_size} rows")
    changed = True
    while changed:
        changed = False
        for op in algebra.operations:
            for args in itertools.product(sorted(current), repeat=op.arity):
                row = _pointwise(algebra, op, args, points)
                if row not in current:
                    current.add(row)
                    changed = True
                    if len(current) > max_size:
                        raise ResourceLimitError(
                            f"subalgebra closure exceeded cap of {max_size} rows"
                        )
    return AffineSet(points, algebra, tuple(sorted(current)))


def generate_vccd_closure(
    q: Quantale,
    points: int,
    generators: Iterable[Sequence[int]],
    max_size: int = DEFAULT_CLOSURE_CAP,
) -> AffineSet:
    """Least subset of V^points closed under joins, meets, tensors, cotensors."""
    return generate_subalgebra(vccd_signature_algebra(q), points, generators, max_size)


def vccd_closure_report(q: Quantale, xs: AffineSet) -> LawReport:
    """Check that xs.maps is closed under the enriched-complete operations of q."""
    report = LawReport()
    if xs.algebra.size != q.size:
        raise IncompatibleStructuresError("affine set ambient does not match quantale carrier")
    sig = vccd_signature_algebra(q)
    present = set(xs.maps)
    for op in sig.operations:
        for args in itertools.product(xs.maps, repeat=op.arity):
            report.checked += 1
            if _pointwise(sig, op, args, xs.points) not in present:
                report.add("vccd-closure", (op.name, args))
    return report


def check_affine_morphism(f: FiniteMap, source: AffineSet, target: AffineSet) -> LawReport:
    """An affine morphism pulls every structure map of the target back into
    the source's structure set."""
    if source.algebra != target.algebra:
        raise IncompatibleStructuresError("affine sets have different ambient algebras")
    if f.source != source.points or f.target != target.points:
        raise MalformedInputError("point map does not match the carriers")
    report = LawReport()
    present = set(source.maps)
    for tau in target.maps:
        report.checked += 1
        pulled = tuple(tau[f(x)] for x in range(source.points))
        if pulled not in present:
            report.add("affine-morphism", (tau,), "pullback row not in source structure")
    return report


def equalizer(phi: Row, psi: Row) -> frozenset[int]:
    return frozenset(x for x in range(len(phi)) if phi[x] == psi[x])


def zariski_closure(xs: AffineSet, m: Iterable[int]) -> frozenset[int]:
    """Intersection of all equalizers of structure-map pairs containing m."""
    mset = frozenset(m)
    if any(not (0 <= x < xs.points) for x in mset):
        raise MalformedInputError("subset member outside the point carrier")
    out = frozenset(range(xs.points))
    for phi, psi in itertools.combinations_with_replacement(xs.maps, 2):
        eq = equalizer(phi, psi)
        if mset <= eq:
            out &= eq
    return out


def is_separated_affine(xs: AffineSet) -> tuple[bool, tuple[int, int] | None]:
    """True when the structure set separates points."""
    for x, y in itertools.combinations(range(xs.points), 2):
        if all(phi[x] == phi[y] for phi in xs.maps):
            return False, (x, y)
    return True, None


def affine_to_comma(xs: AffineSet):
    """View the affine set as a monic structure map S -> A^X over the set sort X."""
    from .comma import CommaObject

    rows = xs.maps
    index = {row: i for i, row in enumerate(rows)}
    ops = []
    for op in xs.algebra.operations:
        table = []
        for args in itertools.product(range(len(rows)), repeat=op.arity):
            row = _pointwise(xs.algebra, op, [rows[a] for a in args], xs.points)
            table.append(index[row])
        ops.append(Operation(op.name, op.arity, tuple(table)))
    a_obj = FinAlgebra(len(rows), tuple(ops), quantale=xs.algebra.quantale)
    g = FiniteMap(
        len(rows),
        xs.algebra.size**xs.points,
        tuple(encode_tuple(row, xs.algebra.size) for row in rows),
    )
    return CommaObject(a_obj, xs.points, g)


def comma_to_affine(obj, algebra: FinAlgebra) -> AffineSet:
    """Recover the affine set from a comma object with monic structure map:
    the image of g, decoded to value rows."""
    if not isinstance(obj.b_obj, int):
        raise MalformedInputError("comma object is not over the affine instantiation")
    points = obj.b_obj
    if obj.g.target != algebra.size**points:
        raise IncompatibleStructuresError("structure map target is not the matching power")
    if not obj.g.is_injective():
        raise PreconditionViolationError(
            "structure map is not monic; epireflect the comma object first"
        )
    rows = tuple(decode_tuple(v, algebra.size, points) for v in obj.g.table)
    return AffineSet(points, algebra, rows)


def affine_comma_roundtrip(xs: AffineSet):
    """Forward to the comma presentation and straight back; returns both legs."""
    obj = affine_to_comma(xs)
    return obj, comma_to_affine(obj, xs.algebra)
