"""Comma categories over a functor oracle.

A comma object is a structure map g from an algebra-side object A into the
image I(B) of a set-side object B.  The oracle supplies the two concrete
categories plus the functor data the constructions need: binary products and
image factorizations on the algebra side, binary coproducts on the set side,
and optionally a left adjoint J with unit eta.  Three oracle instances ship:
finite pointed sets (I = J = identity), finite bounded distributive lattices
(identity, no left adjoint), and the affine instantiation I(X) = A^X over the
dual-set sort with J = hom(-, A).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

from .affine import FinAlgebra, Operation, decode_tuple, encode_tuple, power_algebra
from .errors import (
    IncompatibleStructuresError,
    MalformedInputError,
    PreconditionViolationError,
    ResourceLimitError,
    UnsupportedInstanceError,
)
from .maps import FiniteMap, identity_map
from .report import LawReport

LATTICE_SIGNATURE = (("meet", 2), ("join", 2), ("bot", 0), ("top", 0))
POINTED_SIGNATURE = (("pt", 0),)


@dataclass(frozen=True)
class CommaObject:
    a_obj: object
    b_obj: object
    g: FiniteMap


@dataclass(frozen=True)
class CommaMorphism:
    f: FiniteMap
    h: FiniteMap


@dataclass(frozen=True)
class SplitStructure:
    z_size: int
    h: FiniteMap
    k: FiniteMap
    s: FiniteMap


class ProductData(NamedTuple):
    obj: FinAlgebra
    p1: FiniteMap
    p2: FiniteMap


class CoproductData(NamedTuple):
    obj: object
    in1: FiniteMap
    in2: FiniteMap


# ---------------------------------------------------------------------------
# concrete categories


class AlgebraCategory:
    """Finite algebras sharing one operation signature; morphisms are the
    operation-preserving maps, enumerated by backtracking search."""

    def __init__(self, signature):
        self.signature = tuple((str(n), int(a)) for n, a in signature)

    def check_object(self, obj: FinAlgebra) -> None:
        if not isinstance(obj, FinAlgebra) or obj.signature != self.signature:
            raise IncompatibleStructuresError("object does not match the category signature")

    def size(self, obj: FinAlgebra) -> int:
        return obj.size

    def identity(self, obj: FinAlgebra) -> FiniteMap:
        return identity_map(obj.size)

    def compose(self, g: FiniteMap, f: FiniteMap) -> FiniteMap:
        return g.after(f)

    def is_morphism(self, fm: FiniteMap, src: FinAlgebra, dst: FinAlgebra) -> bool:
        self.check_object(src)
        self.check_object(dst)
        if fm.source != src.size or fm.target != dst.size:
            return False
        for op_s, op_d in zip(src.operations, dst.operations):
            for args in itertools.product(range(src.size), repeat=op_s.arity):
                image_args = tuple(fm.table[a] for a in args)
                if fm.table[src.apply(op_s, args)] != dst.apply(op_d, image_args):
                    return False
        return True

    def morphisms(self, src: FinAlgebra, dst: FinAlgebra) -> tuple[FiniteMap, ...]:
        self.check_object(src)
        self.check_object(dst)
        return _algebra_homs(src, dst)

    def product(self, x: FinAlgebra, y: FinAlgebra) -> ProductData:
        self.check_object(x)
        self.check_object(y)
        size = x.size * y.size
        ops = []
        for op_x, op_y in zip(x.operations, y.operations):
            table = []
            for args in itertools.product(range(size), repeat=op_x.arity):
                lefts = tuple(a // y.size for a in args)
                rights = tuple(a % y.size for a in args)
                table.append(x.apply(op_x, lefts) * y.size + y.apply(op_y, rights))
            ops.append(Operation(op_x.name, op_x.arity, tuple(table)))
        obj = FinAlgebra(size, tuple(ops))
        p1 = FiniteMap(size, x.size, tuple(i // y.size for i in range(size)))
        p2 = FiniteMap(size, y.size, tuple(i % y.size for i in range(size)))
        return ProductData(obj, p1, p2)

    def pair(self, prod: ProductData, f: FiniteMap, g: FiniteMap) -> FiniteMap:
        """The unique map into the product with the given projections."""
        if f.source != g.source:
            raise IncompatibleStructuresError("pairing legs have different sources")
        lookup = {
            (prod.p1.table[i], prod.p2.table[i]): i for i in range(prod.obj.size)
        }
        table = tuple(lookup[(f.table[w], g.table[w])] for w in range(f.source))
        return FiniteMap(f.source, prod.obj.size, table)

    def image_factor(self, fm: FiniteMap, src: FinAlgebra, dst: FinAlgebra):
        """Factor a homomorphism as surjection onto its image subalgebra
        followed by the inclusion.  Image elements keep their first-occurrence
        order, so a monic map factors through itself on the nose and the
        factorization is idempotent."""
        self.check_object(src)
        self.check_object(dst)
        image = list(dict.fromkeys(fm.table))
        position = {v: i for i, v in enumerate(image)}
        ops = []
        for op in dst.operations:
            table = []
            for args in itertools.product(image, repeat=op.arity):
                value = dst.apply(op, args)
                if value not in position:
                    raise PreconditionViolationError(
                        "image is not closed under the operations; map is not a homomorphism"
                    )
                table.append(position[value])
            ops.append(Operation(op.name, op.arity, tuple(table)))
        img = FinAlgebra(len(image), tuple(ops), quantale=dst.quantale)
        e = FiniteMap(src.size, img.size, tuple(position[v] for v in fm.table))
        m = FiniteMap(img.size, dst.size, tuple(image))
        return img, e, m


@lru_cache(maxsize=None)
def _constraint_groups(alg: FinAlgebra):
    """Operation instances grouped by the largest carrier index they touch,
    so backtracking can check each constraint as soon as it is determined."""
    groups: list[list[tuple[int, tuple[int, ...], int]]] = [[] for _ in range(alg.size)]
    for oi, op in enumerate(alg.operations):
        for args in itertools.product(range(alg.size), repeat=op.arity):
            res = alg.apply(op, args)
            groups[max(args + (res,))].append((oi, args, res))
    return tuple(tuple(g) for g in groups)


@lru_cache(maxsize=None)
def _algebra_homs(src: FinAlgebra, dst: FinAlgebra) -> tuple[FiniteMap, ...]:
    groups = _constraint_groups(src)
    out: list[FiniteMap] = []
    assign = [0] * src.size

    def consistent(i: int) -> bool:
        for oi, args, res in groups[i]:
            image_args = tuple(assign[a] for a in args)
            if dst.apply(dst.operations[oi], image_args) != assign[res]:
                return False
        return True

    def extend(i: int) -> None:
        if i == src.size:
            out.append(FiniteMap(src.size, dst.size, tuple(assign)))
            return
        for v in range(dst.size):
            assign[i] = v
            if consistent(i):
                extend(i + 1)

    extend(0)
    return tuple(out)


def pointed_set(size: int, base: int = 0) -> FinAlgebra:
    if not (0 <= base < size):
        raise MalformedInputError("basepoint outside carrier")
    return FinAlgebra(size, (Operation("pt", 0, (base,)),))


class PointedSetCategory(AlgebraCategory):
    """Finite pointed sets; coproduct is the wedge sum."""

    def __init__(self):
        super().__init__(POINTED_SIGNATURE)

    def coproduct(self, x: FinAlgebra, y: FinAlgebra) -> CoproductData:
        self.check_object(x)
        self.check_object(y)
        bx, by = x.operations[0].table[0], y.operations[0].table[0]
        size = x.size + y.size - 1
        t1, nxt = [], 1
        for p in range(x.size):
            t1.append(0 if p == bx else nxt)
            nxt += p != bx
        t2 = []
        for p in range(y.size):
            t2.append(0 if p == by else nxt)
            nxt += p != by
        return CoproductData(
            pointed_set(size, 0),
            FiniteMap(x.size, size, tuple(t1)),
            FiniteMap(y.size, size, tuple(t2)),
        )

    def copair(self, cop: CoproductData, u: FiniteMap, v: FiniteMap) -> FiniteMap:
        if u.target != v.target:
            raise IncompatibleStructuresError("copairing legs have different targets")
        table: list[int | None] = [None] * self.size(cop.obj)
        for leg, inj in ((u, cop.in1), (v, cop.in2)):
            for p in range(inj.source):
                w = inj.table[p]
                if table[w] is not None and table[w] != leg.table[p]:
                    raise PreconditionViolationError("copairing legs disagree on the basepoint")
                table[w] = leg.table[p]
        return FiniteMap(len(table), u.target, tuple(table))


class SetOpCategory:
    """Finite sets with morphisms formally reversed: a morphism X -> Y is
    stored as the underlying function on carriers Y -> X.  Objects are the
    carrier sizes; coproducts are cartesian products of the underlying sets."""

    def check_object(self, obj) -> None:
        if not isinstance(obj, int) or obj < 0:
            raise IncompatibleStructuresError("set-sort objects are carrier sizes")

    def size(self, obj: int) -> int:
        return obj

    def identity(self, obj: int) -> FiniteMap:
        return identity_map(obj)

    def compose(self, g: FiniteMap, f: FiniteMap) -> FiniteMap:
        return f.after(g)

    def is_morphism(self, fm: FiniteMap, src: int, dst: int) -> bool:
        return fm.source == dst and fm.target == src

    def morphisms(self, src: int, dst: int) -> tuple[FiniteMap, ...]:
        return tuple(
            FiniteMap(dst, src, t) for t in itertools.product(range(src), repeat=dst)
        )

    def coproduct(self, x: int, y: int) -> CoproductData:
        size = x * y
        in1 = FiniteMap(size, x, tuple(i // y for i in range(size)))
        in2 = FiniteMap(size, y, tuple(i % y for i in range(size)))
        return CoproductData(size, in1, in2)

    def copair(self, cop: CoproductData, u: FiniteMap, v: FiniteMap) -> FiniteMap:
        if u.source != v.source:
            raise IncompatibleStructuresError("copairing legs have different targets")
        y = cop.in2.target
        table = tuple(u.table[w] * y + v.table[w] for w in range(u.source))
        return FiniteMap(u.source, cop.obj, table)


# ---------------------------------------------------------------------------
# functor oracles


class FunctorOracle:
    """The functor I from the set-side category into the algebra-side one."""

    a_cat: AlgebraCategory
    b_cat: object
    has_left_adjoint = False

    def I_obj(self, b_obj):
        raise UnsupportedInstanceError("oracle has no object map")

    def I_mor(self, h: FiniteMap, b_src, b_dst) -> FiniteMap:
        raise UnsupportedInstanceError("oracle has no morphism map")

    def J_obj(self, a_obj):
        raise UnsupportedInstanceError("oracle carries no left-adjoint data")

    def J_mor(self, f: FiniteMap, a_src, a_dst) -> FiniteMap:
        raise UnsupportedInstanceError("oracle carries no left-adjoint data")

    def eta(self, a_obj) -> FiniteMap:
        raise UnsupportedInstanceError("oracle carries no left-adjoint data")


class IdentityOracle(FunctorOracle):
    """I is the identity on one concrete category (both sorts coincide)."""

    def __init__(self, cat: AlgebraCategory, with_left_adjoint: bool):
        self.a_cat = cat
        self.b_cat = cat
        self.has_left_adjoint = with_left_adjoint

    def I_obj(self, b_obj):
        return b_obj

    def I_mor(self, h, b_src, b_dst):
        return h

    def J_obj(self, a_obj):
        self._need_j()
        return a_obj

    def J_mor(self, f, a_src, a_dst):
        self._need_j()
        return f

    def eta(self, a_obj):
        self._need_j()
        return identity_map(a_obj.size)

    def _need_j(self):
        if not self.has_left_adjoint:
            raise UnsupportedInstanceError("oracle carries no left-adjoint data")


class AffineOracle(FunctorOracle):
    """I sends a finite set X to the power algebra A^X; its left adjoint
    sends an algebra to its set of homomorphisms into A, with the unit
    evaluating each element at every homomorphism."""

    has_left_adjoint = True

    def __init__(self, algebra: FinAlgebra):
        self.algebra = algebra
        self.a_cat = AlgebraCategory(algebra.signature)
        self.b_cat = SetOpCategory()
        self._powers: dict[int, FinAlgebra] = {}

    def I_obj(self, b_obj: int) -> FinAlgebra:
        if b_obj not in self._powers:
            self._powers[b_obj] = power_algebra(self.algebra, b_obj)
        return self._powers[b_obj]

    def I_mor(self, h: FiniteMap, b_src: int, b_dst: int) -> FiniteMap:
        base = self.algebra.size
        table = []
        for idx in range(base**b_src):
            row = decode_tuple(idx, base, b_src)
            table.append(encode_tuple(tuple(row[h.table[j]] for j in range(b_dst)), base))
        return FiniteMap(base**b_src, base**b_dst, tuple(table))

    def _homs_to_a(self, a_obj: FinAlgebra) -> tuple[FiniteMap, ...]:
        return self.a_cat.morphisms(a_obj, self.algebra)

    def J_obj(self, a_obj: FinAlgebra) -> int:
        return len(self._homs_to_a(a_obj))

    def J_mor(self, f: FiniteMap, a_src: FinAlgebra, a_dst: FinAlgebra) -> FiniteMap:
        src_homs = self._homs_to_a(a_src)
        dst_homs = self._homs_to_a(a_dst)
        index = {chi.table: i for i, chi in enumerate(src_homs)}
        table = tuple(index[chi.after(f).table] for chi in dst_homs)
        return FiniteMap(len(dst_homs), len(src_homs), table)

    def eta(self, a_obj: FinAlgebra) -> FiniteMap:
        homs = self._homs_to_a(a_obj)
        base = self.algebra.size
        table = tuple(
            encode_tuple(tuple(chi.table[a] for chi in homs), base) for a in range(a_obj.size)
        )
        return FiniteMap(a_obj.size, base ** len(homs), table)


def pointed_sets_oracle() -> IdentityOracle:
    return IdentityOracle(PointedSetCategory(), with_left_adjoint=True)


def lattice_oracle() -> IdentityOracle:
    """Finite bounded distributive lattices under the identity functor.
    No left-adjoint data: coproducts of lattices are not provided, so the
    left-adjoint construction reports unsupported-instance here."""
    return IdentityOracle(AlgebraCategory(LATTICE_SIGNATURE), with_left_adjoint=False)


def affine_oracle(algebra: FinAlgebra) -> AffineOracle:
    return AffineOracle(algebra)


# ---------------------------------------------------------------------------
# comma-object plumbing


def check_comma_object(oracle: FunctorOracle, obj: CommaObject) -> LawReport:
    """Validate the structure map: correct carriers and a homomorphism."""
    ib = oracle.I_obj(obj.b_obj)
    if obj.g.source != oracle.a_cat.size(obj.a_obj) or obj.g.target != ib.size:
        raise MalformedInputError("structure map does not match the carriers")
    report = LawReport()
    report.checked += 1
    if not oracle.a_cat.is_morphism(obj.g, obj.a_obj, ib):
        report.add("comma-structure-hom", (), "structure map is not a homomorphism")
    return report


def check_comma_morphism(
    oracle: FunctorOracle, mor: CommaMorphism, src: CommaObject, dst: CommaObject
) -> bool:
    a_cat, b_cat = oracle.a_cat, oracle.b_cat
    if not a_cat.is_morphism(mor.f, src.a_obj, dst.a_obj):
        return False
    if not b_cat.is_morphism(mor.h, src.b_obj, dst.b_obj):
        return False
    ih = oracle.I_mor(mor.h, src.b_obj, dst.b_obj)
    return ih.after(src.g) == dst.g.after(mor.f)


def comma_morphisms(
    oracle: FunctorOracle, src: CommaObject, dst: CommaObject
) -> Iterator[CommaMorphism]:
    """All commuting squares between two comma objects, in a fixed order."""
    fs = oracle.a_cat.morphisms(src.a_obj, dst.a_obj)
    for h in oracle.b_cat.morphisms(src.b_obj, dst.b_obj):
        ih = oracle.I_mor(h, src.b_obj, dst.b_obj)
        lhs = ih.after(src.g)
        for f in fs:
            if lhs == dst.g.after(f):
                yield CommaMorphism(f, h)


def check_functor_oracle(oracle: FunctorOracle, b_objects, a_objects=()) -> LawReport:
    """Spot-check functoriality of I (and naturality of eta when present)
    over all composable pairs among the given objects."""
    report = LawReport()
    b_cat = oracle.b_cat
    for b in b_objects:
        report.checked += 1
        if oracle.I_mor(b_cat.identity(b), b, b) != identity_map(
            oracle.a_cat.size(oracle.I_obj(b))
        ):
            report.add("functor-identity", (repr(b),))
    for b1, b2, b3 in itertools.product(b_objects, repeat=3):
        for h in b_cat.morphisms(b1, b2):
            for h2 in b_cat.morphisms(b2, b3):
                report.checked += 1
                lhs = oracle.I_mor(b_cat.compose(h2, h), b1, b3)
                rhs = oracle.I_mor(h2, b2, b3).after(oracle.I_mor(h, b1, b2))
                if lhs != rhs:
                    report.add("functor-compose", (h.table, h2.table))
    if oracle.has_left_adjoint:
        for a1, a2 in itertools.product(a_objects, repeat=2):
            for f in oracle.a_cat.morphisms(a1, a2):
                report.checked += 1
                jf = oracle.J_mor(f, a1, a2)
                lhs = oracle.I_mor(jf, oracle.J_obj(a1), oracle.J_obj(a2)).after(oracle.eta(a1))
                rhs = oracle.eta(a2).after(f)
                if lhs != rhs:
                    report.add("eta-natural", (f.table,))
    return report


# ---------------------------------------------------------------------------
# the two adjoints of the projection functor


def right_adjoint_R(oracle: FunctorOracle, a_obj, b_obj) -> CommaObject:
    """The comma object A x I(B) with the second projection as structure map."""
    if getattr(oracle, "a_cat", None) is None:
        raise UnsupportedInstanceError("oracle supplies no algebra-side category")
    prod = oracle.a_cat.product(a_obj, oracle.I_obj(b_obj))
    return CommaObject(prod.obj, b_obj, prod.p2)


def _product_map(a_cat, src: ProductData, dst: ProductData, f: FiniteMap, g: FiniteMap):
    return a_cat.pair(dst, f.after(src.p1), g.after(src.p2))


def unit_gamma_check(oracle: FunctorOracle, obj: CommaObject) -> LawReport:
    """The unit (pairing of the identity with g, identity) into the right
    adjoint's image, plus both triangle identities, verified concretely."""
    a_cat, b_cat = oracle.a_cat, oracle.b_cat
    a_obj, b_obj, g = obj.a_obj, obj.b_obj, obj.g
    ib = oracle.I_obj(b_obj)
    prod = a_cat.product(a_obj, ib)
    pairing = a_cat.pair(prod, a_cat.identity(a_obj), g)

    report = LawReport()
    report.checked += 1
    if not a_cat.is_morphism(pairing, a_obj, prod.obj):
        report.add("gamma-component", (), "pairing is not a homomorphism")
    report.checked += 1
    id_b = b_cat.identity(b_obj)
    if oracle.I_mor(id_b, b_obj, b_obj).after(g) != prod.p2.after(pairing):
        report.add("gamma-square", (), "unit square does not commute")
    report.checked += 1
    if prod.p1.after(pairing) != a_cat.identity(a_obj):
        report.add("gamma-triangle-counit-F", ())
    # second triangle, at the pair (A, B): R(counit) after gamma at R(A,B)
    prod2 = a_cat.product(prod.obj, ib)
    pairing2 = a_cat.pair(prod2, a_cat.identity(prod.obj), prod.p2)
    r_counit = _product_map(a_cat, prod2, prod, prod.p1, identity_map(ib.size))
    report.checked += 1
    if r_counit.after(pairing2) != a_cat.identity(prod.obj):
        report.add("gamma-triangle-counit-R", ())
    return report


def left_adjoint_L(oracle: FunctorOracle, a_obj, b_obj) -> CommaObject:
    """The comma object built from the unit of J -| I followed by the image
    of the first coprojection into J(A) + B."""
    if not oracle.has_left_adjoint:
        raise UnsupportedInstanceError("oracle carries no left-adjoint data")
    ja = oracle.J_obj(a_obj)
    cop = oracle.b_cat.coproduct(ja, b_obj)
    structure = oracle.I_mor(cop.in1, ja, cop.obj).after(oracle.eta(a_obj))
    return CommaObject(a_obj, cop.obj, structure)


def rho_unit(oracle: FunctorOracle, a_obj, b_obj) -> CommaMorphism:
    """The unit (identity, second coprojection) of the left adjoint."""
    if not oracle.has_left_adjoint:
        raise UnsupportedInstanceError("oracle carries no left-adjoint data")
    ja = oracle.J_obj(a_obj)
    cop = oracle.b_cat.coproduct(ja, b_obj)
    return CommaMorphism(oracle.a_cat.identity(a_obj), cop.in2)


def _adjunct(oracle: FunctorOracle, a_obj, b_obj, g: FiniteMap):
    """All set-side morphisms J(A) -> B whose transpose equals g; the
    adjunction makes exactly one exist."""
    ja = oracle.J_obj(a_obj)
    eta = oracle.eta(a_obj)
    return ja, [
        cand
        for cand in oracle.b_cat.morphisms(ja, b_obj)
        if oracle.I_mor(cand, ja, b_obj).after(eta) == g
    ]


def unit_rho_check(oracle: FunctorOracle, obj: CommaObject) -> LawReport:
    """Validity of the left-adjoint unit plus both triangle identities,
    including uniqueness of the adjunct transposition used by the counit."""
    a_cat, b_cat = oracle.a_cat, oracle.b_cat
    a_obj, b_obj, g = obj.a_obj, obj.b_obj, obj.g
    report = LawReport()

    ja = oracle.J_obj(a_obj)
    cop = b_cat.coproduct(ja, b_obj)
    ell = left_adjoint_L(oracle, a_obj, b_obj)
    report.checked += 1
    if not b_cat.is_morphism(cop.in2, b_obj, cop.obj):
        report.add("rho-component", (), "coprojection is not a set-side morphism")

    _, adjuncts = _adjunct(oracle, a_obj, b_obj, g)
    report.checked += 1
    if len(adjuncts) != 1:
        report.add("adjunct-unique", (len(adjuncts),), "transpose of g not unique")
        return report
    g_flat = adjuncts[0]

    # counit at g, and the triangle F(counit) . rho = identity
    sigma_b = b_cat.copair(cop, g_flat, b_cat.identity(b_obj))
    report.checked += 1
    if not check_comma_morphism(oracle, CommaMorphism(a_cat.identity(a_obj), sigma_b), ell, obj):
        report.add("sigma-square", (), "counit square does not commute")
    report.checked += 1
    if b_cat.compose(sigma_b, cop.in2) != b_cat.identity(b_obj):
        report.add("rho-triangle-F", ())

    # triangle counit_L . L(rho) = identity at the pair (A, B)
    cop2 = b_cat.coproduct(ja, cop.obj)
    l_rho_b = b_cat.copair(cop, cop2.in1, b_cat.compose(cop2.in2, cop.in2))
    _, ell_adjuncts = _adjunct(oracle, a_obj, cop.obj, ell.g)
    report.checked += 1
    if len(ell_adjuncts) != 1:
        report.add("adjunct-unique", (len(ell_adjuncts),), "transpose of L's map not unique")
        return report
    sigma_l_b = b_cat.copair(cop2, ell_adjuncts[0], b_cat.identity(cop.obj))
    report.checked += 1
    if b_cat.compose(sigma_l_b, l_rho_b) != b_cat.identity(cop.obj):
        report.add("rho-triangle-L", ())
    return report


# ---------------------------------------------------------------------------
# regular epireflection onto monic structure maps


def epireflect(oracle: FunctorOracle, obj: CommaObject) -> tuple[CommaObject, CommaMorphism]:
    """Factor the structure map as surjection then injection; the reflected
    object carries the monic part, the unit the surjective part."""
    ib = oracle.I_obj(obj.b_obj)
    img, e, m = oracle.a_cat.image_factor(obj.g, obj.a_obj, ib)
    reflected = CommaObject(img, obj.b_obj, m)
    unit = CommaMorphism(e, oracle.b_cat.identity(obj.b_obj))
    return reflected, unit


def verify_reflection_universal(
    oracle: FunctorOracle,
    obj: CommaObject,
    target: CommaObject,
    max_carrier: int = 16,
) -> LawReport:
    """For every morphism from obj into a monic-structure target, exactly one
    mediating map must factor it through the reflection, found by exhaustive
    enumeration."""
    if not target.g.is_injective():
        raise PreconditionViolationError("target structure map must be monic")
    a_cat = oracle.a_cat
    sizes = (
        a_cat.size(obj.a_obj),
        a_cat.size(target.a_obj),
    )
    if max(sizes) > max_carrier:
        raise ResourceLimitError(f"carrier sizes {sizes} exceed enumeration cap {max_carrier}")
    reflected, unit = epireflect(oracle, obj)
    e, m = unit.f, reflected.g
    report = LawReport()
    candidates = a_cat.morphisms(reflected.a_obj, target.a_obj)
    for mor in comma_morphisms(oracle, obj, target):
        ih = oracle.I_mor(mor.h, obj.b_obj, target.b_obj)
        square_rhs = ih.after(m)
        found = [
            d for d in candidates if target.g.after(d) == square_rhs and d.after(e) == mor.f
        ]
        report.checked += 1
        if len(found) != 1:
            report.add(
                "reflection-universal",
                (mor.f.table, mor.h.table, len(found)),
                "mediating map not unique" if found else "no mediating map",
            )
    return report


# ---------------------------------------------------------------------------
# split coequalizer pairs


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of range(n) as canonical block-label tables
    (restricted growth strings)."""
    if n == 0:
        yield ()
        return

    def extend(prefix: list[int], mx: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(mx + 2):
            prefix.append(b)
            yield from extend(prefix, max(mx, b))
            prefix.pop()

    yield from extend([0], 0)


def sections_of(g: FiniteMap) -> Iterator[FiniteMap]:
    """All right inverses of g, in lexicographic order; none when g is not
    surjective."""
    fibers = [[x for x in range(g.source) if g.table[x] == y] for y in range(g.target)]
    if any(not f for f in fibers):
        return
    for choice in itertools.product(*fibers):
        yield FiniteMap(g.target, g.source, choice)


def find_split_structure(f: FiniteMap, g: FiniteMap) -> SplitStructure | None:
    """Search for a splitting witness of the parallel pair (f, g).

    Without loss of generality the search ranges over surjective h with
    |Z| <= |Y|, i.e. over set partitions of the common target: replacing Z by
    the image of h preserves all three equations, and if any witness exists
    then the quotient of Y by the equivalence generated by f(x) ~ g(x) works
    with the same section, because the fibers of any coequalizing h are
    unions of quotient classes, forcing f . s to be constant on each class.
    """
    if f.source != g.source or f.target != g.target:
        raise IncompatibleStructuresError("parallel pair must share source and target")
    ny = f.target
    for s in sections_of(g):
        fs = tuple(f.table[s.table[y]] for y in range(ny))
        for labels in set_partitions(ny):
            if any(labels[f.table[x]] != labels[g.table[x]] for x in range(f.source)):
                continue
            z_size = max(labels) + 1 if labels else 0
            k_table: list[int | None] = [None] * z_size
            ok = True
            for y in range(ny):
                block = labels[y]
                if k_table[block] is None:
                    k_table[block] = fs[y]
                elif k_table[block] != fs[y]:
                    ok = False
                    break
            if not ok:
                continue
            return SplitStructure(
                z_size,
                h=FiniteMap(ny, z_size, labels),
                k=FiniteMap(z_size, ny, tuple(k_table)),
                s=s,
            )
    return None


def quotient_labels(f: FiniteMap, g: FiniteMap) -> tuple[int, ...]:
    """Canonical coequalizer of (f, g) in finite sets: block labels of the
    equivalence on the target generated by f(x) ~ g(x)."""
    parent = list(range(f.target))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(f.source):
        ra, rb = find(f.table[x]), find(g.table[x])
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    labels, seen = [], {}
    for y in range(f.target):
        r = find(y)
        if r not in seen:
            seen[r] = len(seen)
        labels.append(seen[r])
    return tuple(labels)


def powerset_preimage(u: FiniteMap) -> FiniteMap:
    """The contravariant powerset construction 2^(-) on a map: subsets of the
    target (as bitmasks) pulled back along u."""
    table = []
    for subset in range(1 << u.target):
        table.append(sum(1 << x for x in range(u.source) if (subset >> u.table[x]) & 1))
    return FiniteMap(1 << u.target, 1 << u.source, tuple(table))


def split_coequalizer_check(witness: SplitStructure, f: FiniteMap, g: FiniteMap) -> LawReport:
    """Verify the three witness equations, that h really is a coequalizer of
    the pair (computed quotient comparison), and absoluteness on one functor
    instance: the contravariant powerset image satisfies the reversed
    equations and exhibits the image of h as the equalizer."""
    h, k, s = witness.h, witness.k, witness.s
    if (
        h.source != f.target
        or k.target != f.target
        or s.source != f.target
        or s.target != f.source
        or k.source != h.target
        or h.target != witness.z_size
    ):
        raise MalformedInputError("witness maps do not match the parallel pair")
    report = LawReport()
    for x in range(f.source):
        report.checked += 1
        if h.table[f.table[x]] != h.table[g.table[x]]:
            report.add("split-hf-hg", (x,))
    for y in range(f.target):
        report.checked += 2
        if g.table[s.table[y]] != y:
            report.add("split-gs", (y,))
        if f.table[s.table[y]] != k.table[h.table[y]]:
            report.add("split-fs-kh", (y,))

    labels = quotient_labels(f, g)
    report.checked += 1
    if not h.is_surjective():
        report.add("coequalizer", (), "h is not surjective")
    for y1, y2 in itertools.combinations(range(f.target), 2):
        report.checked += 1
        if (labels[y1] == labels[y2]) != (h.table[y1] == h.table[y2]):
            report.add("coequalizer", (y1, y2), "kernel of h differs from the quotient")

    pf, pg = powerset_preimage(f), powerset_preimage(g)
    ph, pk, ps = powerset_preimage(h), powerset_preimage(k), powerset_preimage(s)
    report.checked += 3
    if pf.after(ph) != pg.after(ph):
        report.add("dual-hf-hg", ())
    if ps.after(pg) != identity_map(1 << f.target):
        report.add("dual-gs", ())
    if ps.after(pf) != ph.after(pk):
        report.add("dual-fs-kh", ())
    report.checked += 1
    equalizer = {w for w in range(1 << f.target) if pf.table[w] == pg.table[w]}
    if not ph.is_injective() or set(ph.table) != equalizer:
        report.add("dual-equalizer", (), "powerset image of h is not the equalizer")
    return report
