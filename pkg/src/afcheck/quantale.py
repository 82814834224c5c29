"""Finite commutative unital quantales.

Carriers are index ranges 0..size-1 ("ranks"); for the built-in chain
quantales ranks ascend the lattice order, so 0 is bottom and size-1 is top.
All structure lives in lookup tables, so every downstream search is exact
integer comparison, never floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidElementError, InvalidParameterError, MalformedInputError
from .report import LawReport

KINDS = ("boolean", "lukasiewicz", "truncated_addition")

# Full join-distributivity is re-checked over every subset only up to this
# carrier size; beyond it the binary + empty reduction (equivalent on finite
# lattices) is used.
SUBSET_CHECK_LIMIT = 6


@dataclass(frozen=True)
class Quantale:
    size: int
    leq: tuple[tuple[bool, ...], ...]
    tensor: tuple[tuple[int, ...], ...]
    unit: int
    hom: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    labels: tuple[str, ...]

    def le(self, u: int, v: int) -> bool:
        return self.leq[u][v]

    def join_of(self, elements: Iterable[int]) -> int:
        out = self.bottom
        for v in elements:
            out = self.join[out][v]
        return out

    def meet_of(self, elements: Iterable[int]) -> int:
        out = self.top
        for v in elements:
            out = self.meet[out][v]
        return out

    def label(self, u: int) -> str:
        return self.labels[u]

    @classmethod
    def from_tables(
        cls,
        leq: Sequence[Sequence[bool | int]],
        tensor: Sequence[Sequence[int]],
        unit: int,
        labels: Sequence[str] | None = None,
    ) -> "Quantale":
        """Build a quantale from raw tables.

        Structural defects (ragged tables, out-of-range entries) raise
        MalformedInputError.  Law violations do not: they are diagnosed by
        check_quantale_laws, so deliberately broken instances can be built.
        """
        size = len(leq)
        if size == 0:
            raise MalformedInputError("empty carrier")
        leq_t = tuple(tuple(bool(x) for x in row) for row in leq)
        tensor_t = tuple(tuple(int(x) for x in row) for row in tensor)
        if any(len(row) != size for row in leq_t):
            raise MalformedInputError("ragged leq table")
        if len(tensor_t) != size or any(len(row) != size for row in tensor_t):
            raise MalformedInputError("ragged tensor table")
        if any(not (0 <= v < size) for row in tensor_t for v in row):
            raise MalformedInputError("tensor entry outside carrier")
        if not (0 <= unit < size):
            raise MalformedInputError("unit outside carrier")
        if labels is None:
            labels_t = tuple(str(i) for i in range(size))
        else:
            if len(labels) != size:
                raise MalformedInputError("label count does not match carrier size")
            labels_t = tuple(str(x) for x in labels)

        bottom = _least(leq_t, range(size))
        top = _least(tuple(tuple(leq_t[v][u] for v in range(size)) for u in range(size)), range(size))
        bottom = 0 if bottom is None else bottom
        top = size - 1 if top is None else top
        join_t = _lub_table(leq_t)
        meet_t = _lub_table(_transpose(leq_t))

        # hom(u,v) = join of {w : u (x) w <= v}; meaningful once the lattice
        # and distributivity laws hold, best-effort otherwise.
        hom_rows = []
        for u in range(size):
            row = []
            for v in range(size):
                acc = bottom
                for w in range(size):
                    if leq_t[tensor_t[u][w]][v]:
                        acc = join_t[acc][w]
                row.append(acc)
            hom_rows.append(tuple(row))

        return cls(
            size=size,
            leq=leq_t,
            tensor=tensor_t,
            unit=unit,
            hom=tuple(hom_rows),
            join=join_t,
            meet=meet_t,
            bottom=bottom,
            top=top,
            labels=labels_t,
        )


def _transpose(leq):
    n = len(leq)
    return tuple(tuple(leq[v][u] for v in range(n)) for u in range(n))


def _least(leq, candidates) -> int | None:
    """The element below all others, or None if there is no least element."""
    n = len(leq)
    for u in candidates:
        if all(leq[u][v] for v in range(n)):
            return u
    return None


def _lub_table(leq) -> tuple[tuple[int, ...], ...]:
    """Binary least-upper-bound table; falls back to the first minimal upper
    bound (deterministically) when no least one exists, so broken lattices
    still produce total tables for the law checker to inspect."""
    n = len(leq)
    out = []
    for u in range(n):
        row = []
        for v in range(n):
            ubs = [w for w in range(n) if leq[u][w] and leq[v][w]]
            least = None
            for w in ubs:
                if all(leq[w][x] for x in ubs):
                    least = w
                    break
            if least is None:
                minimal = [w for w in ubs if not any(x != w and leq[x][w] for x in ubs)]
                least = minimal[0] if minimal else (ubs[0] if ubs else u)
            row.append(least)
        out.append(tuple(row))
    return tuple(out)


def _chain_leq(size: int) -> tuple[tuple[bool, ...], ...]:
    return tuple(tuple(u <= v for v in range(size)) for u in range(size))


def make_quantale(kind: str, n: int = 1) -> Quantale:
    """Construct a built-in quantale.

    boolean: the two-element frame, tensor = meet, unit = top (n ignored).
    lukasiewicz: the chain {0, 1/n, ..., 1} with u (x) v = max(u+v-1, 0).
    truncated_addition: the chain {0, 1, ..., n, inf} under the reversed
    numeric order, tensor = sum truncated to inf, unit = numeric 0 = top.
    """
    if kind == "boolean":
        leq = _chain_leq(2)
        tensor = ((0, 0), (0, 1))
        return Quantale.from_tables(leq, tensor, unit=1, labels=("0", "1"))
    if kind == "lukasiewicz":
        if n < 1:
            raise InvalidParameterError("lukasiewicz chain needs n >= 1")
        size = n + 1
        tensor = tuple(tuple(max(i + j - n, 0) for j in range(size)) for i in range(size))
        labels = tuple(str(Fraction(i, n)) for i in range(size))
        return Quantale.from_tables(_chain_leq(size), tensor, unit=size - 1, labels=labels)
    if kind == "truncated_addition":
        if n < 1:
            raise InvalidParameterError("truncated_addition chain needs n >= 1")
        # rank 0 is inf (lattice bottom); rank r >= 1 carries the number n+1-r,
        # so rank size-1 is the number 0 = unit = lattice top.
        size = n + 2
        numeric = [None] + [n + 1 - r for r in range(1, size)]

        def ten(i, j):
            if i == 0 or j == 0:
                return 0
            s = numeric[i] + numeric[j]
            return 0 if s > n else size - 1 - s

        tensor = tuple(tuple(ten(i, j) for j in range(size)) for i in range(size))
        labels = ("inf",) + tuple(str(numeric[r]) for r in range(1, size))
        return Quantale.from_tables(_chain_leq(size), tensor, unit=size - 1, labels=labels)
    raise InvalidParameterError(f"unknown quantale kind {kind!r}; expected one of {KINDS}")


def hom(q: Quantale, u: int, v: int) -> int:
    """The residual: the largest w with u (x) w <= v."""
    if not (0 <= u < q.size) or not (0 <= v < q.size):
        raise InvalidElementError(f"element rank outside carrier of size {q.size}")
    return q.hom[u][v]


def check_quantale_laws(q: Quantale) -> LawReport:
    """Exhaustively diagnose the quantale axioms.

    Reports every failing instance of: partial order, binary joins/meets
    (hence completeness, the carrier being finite), tensor associativity /
    commutativity / unit, distributivity of tensor over joins, and the
    residuation adjunction.  The join-dependent checks are skipped when the
    lattice itself is broken, since joins are then meaningless.
    """
    report = LawReport()
    n = q.size
    _check_order(q, report)
    lattice_ok = report.ok

    for u, v, w in itertools.product(range(n), repeat=3):
        report.checked += 1
        if q.tensor[q.tensor[u][v]][w] != q.tensor[u][q.tensor[v][w]]:
            report.add("tensor-associative", (u, v, w))
    for u, v in itertools.product(range(n), repeat=2):
        report.checked += 1
        if q.tensor[u][v] != q.tensor[v][u]:
            report.add("tensor-commutative", (u, v))
    for u in range(n):
        report.checked += 1
        if q.tensor[q.unit][u] != u:
            report.add("tensor-unit", (u,))

    if not lattice_ok:
        return report

    for u in range(n):
        report.checked += 1
        if q.tensor[u][q.bottom] != q.bottom:
            report.add("join-distributive", (u,), "empty join not preserved")
    for u, v, w in itertools.product(range(n), repeat=3):
        report.checked += 1
        if q.tensor[u][q.join[v][w]] != q.join[q.tensor[u][v]][q.tensor[u][w]]:
            report.add("join-distributive", (u, v, w))
    if n <= SUBSET_CHECK_LIMIT:
        for u in range(n):
            for r in range(n + 1):
                for subset in itertools.combinations(range(n), r):
                    report.checked += 1
                    lhs = q.tensor[u][q.join_of(subset)]
                    rhs = q.join_of(q.tensor[u][w] for w in subset)
                    if lhs != rhs:
                        report.add("join-distributive", (u, subset))

    for u, v, w in itertools.product(range(n), repeat=3):
        report.checked += 1
        if q.leq[q.tensor[u][w]][v] != q.leq[w][q.hom[u][v]]:
            report.add("residuation", (u, v, w))
    return report


def _check_order(q: Quantale, report: LawReport) -> None:
    n = q.size
    for u in range(n):
        report.checked += 1
        if not q.leq[u][u]:
            report.add("leq-reflexive", (u,))
    for u, v in itertools.product(range(n), repeat=2):
        report.checked += 1
        if u != v and q.leq[u][v] and q.leq[v][u]:
            report.add("leq-antisymmetric", (u, v))
    for u, v, w in itertools.product(range(n), repeat=3):
        report.checked += 1
        if q.leq[u][v] and q.leq[v][w] and not q.leq[u][w]:
            report.add("leq-transitive", (u, v, w))
    for u, v in itertools.combinations(range(n), 2):
        report.checked += 2
        if not _has_lub(q.leq, u, v):
            report.add("join-exists", (u, v))
        if not _has_lub(_transpose(q.leq), u, v):
            report.add("meet-exists", (u, v))


def _has_lub(leq, u, v) -> bool:
    n = len(leq)
    ubs = [w for w in range(n) if leq[u][w] and leq[v][w]]
    return any(all(leq[w][x] for x in ubs) for w in ubs)
