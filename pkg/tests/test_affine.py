import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from afcheck.affine import (
    AffineSet,
    affine_comma_roundtrip,
    affine_to_comma,
    check_affine_morphism,
    comma_to_affine,
    equalizer,
    frame2,
    generate_subalgebra,
    generate_vccd_closure,
    inf2,
    is_separated_affine,
    power_algebra,
    vccd_signature_algebra,
    zariski_closure,
)
from afcheck.errors import (
    IncompatibleStructuresError,
    MalformedInputError,
    PreconditionViolationError,
    ResourceLimitError,
)
from afcheck.maps import FiniteMap, all_maps, identity_map
from afcheck.quantale import make_quantale

TWO = make_quantale("boolean")
LUK2 = make_quantale("lukasiewicz", 2)


def sierpinski():
    # structure set {chi_empty, chi_{0}, chi_X} on two points
    return generate_subalgebra(frame2(), 2, [(1, 0)])


def discrete2():
    return generate_subalgebra(frame2(), 2, [(1, 0), (0, 1)])


class TestGenerateSubalgebra:
    def test_sierpinski_has_three_maps(self):
        assert sierpinski().maps == ((0, 0), (1, 0), (1, 1))

    def test_no_generators_yields_constants(self):
        xs = generate_subalgebra(frame2(), 2, [])
        assert xs.maps == ((0, 0), (1, 1))

    def test_meet_semilattice_on_three_points(self):
        xs = generate_subalgebra(inf2(), 3, [(1, 0, 0)])
        assert xs.maps == ((1, 0, 0), (1, 1, 1))

    def test_output_is_closed(self):
        xs = sierpinski()
        present = set(xs.maps)
        for op in xs.algebra.operations:
            for args in itertools.product(xs.maps, repeat=op.arity):
                row = tuple(
                    xs.algebra.apply(op, tuple(r[p] for r in args)) for p in range(xs.points)
                )
                assert row in present

    def test_cap_raises(self):
        with pytest.raises(ResourceLimitError):
            generate_subalgebra(frame2(), 2, [(1, 0), (0, 1)], max_size=2)

    def test_unclosed_construction_rejected(self):
        with pytest.raises(MalformedInputError):
            AffineSet(2, frame2(), ((1, 0),))


def naive_vccd_closure(q, points, generators):
    """Independent fixed-point oracle using the quantale tables directly."""
    current = {tuple(g) for g in generators}
    current.add((q.bottom,) * points)
    current.add((q.top,) * points)
    changed = True
    while changed:
        changed = False
        snapshot = list(current)
        for a, b in itertools.product(snapshot, repeat=2):
            for row in (
                tuple(q.join[x][y] for x, y in zip(a, b)),
                tuple(q.meet[x][y] for x, y in zip(a, b)),
            ):
                if row not in current:
                    current.add(row)
                    changed = True
        for u in range(q.size):
            for a in snapshot:
                for row in (
                    tuple(q.tensor[u][x] for x in a),
                    tuple(q.hom[u][x] for x in a),
                ):
                    if row not in current:
                        current.add(row)
                        changed = True
    return tuple(sorted(current))


class TestVccdClosure:
    def test_boolean_single_generator(self):
        xs = generate_vccd_closure(TWO, 2, [(0, 1)])
        assert xs.maps == ((0, 0), (0, 1), (1, 1))

    def test_boolean_empty(self):
        assert generate_vccd_closure(TWO, 2, []).maps == ((0, 0), (1, 1))

    def test_lukasiewicz_point_generates_everything(self):
        xs = generate_vccd_closure(LUK2, 1, [(1,)])
        assert xs.maps == ((0,), (1,), (2,))
        assert xs.maps == naive_vccd_closure(LUK2, 1, [(1,)])

    def test_matches_independent_oracle(self):
        for gens in itertools.combinations(itertools.product(range(3), repeat=2), 2):
            xs = generate_vccd_closure(LUK2, 2, gens)
            assert xs.maps == naive_vccd_closure(LUK2, 2, gens)


class TestMorphisms:
    def test_identity(self):
        xs = sierpinski()
        assert check_affine_morphism(identity_map(2), xs, xs).ok

    def test_discrete_to_sierpinski(self):
        f = identity_map(2)
        assert check_affine_morphism(f, discrete2(), sierpinski()).ok

    def test_sierpinski_to_discrete_fails(self):
        report = check_affine_morphism(identity_map(2), sierpinski(), discrete2())
        assert not report.ok
        assert any(v.witness == ((0, 1),) for v in report.violations)

    def test_ambient_mismatch(self):
        xs = generate_subalgebra(inf2(), 2, [])
        with pytest.raises(IncompatibleStructuresError):
            check_affine_morphism(identity_map(2), sierpinski(), xs)

    def test_composition_closed(self):
        spaces = [sierpinski(), discrete2(), generate_subalgebra(frame2(), 2, [])]
        for a, b, c in itertools.product(spaces, repeat=3):
            for f in all_maps(a.points, b.points):
                if not check_affine_morphism(f, a, b).ok:
                    continue
                for g in all_maps(b.points, c.points):
                    if check_affine_morphism(g, b, c).ok:
                        assert check_affine_morphism(g.after(f), a, c).ok


class TestZariski:
    def test_sierpinski_open_point_is_closed(self):
        assert zariski_closure(sierpinski(), {0}) == {0}

    def test_whole_set(self):
        xs = sierpinski()
        assert zariski_closure(xs, {0, 1}) == {0, 1}

    def test_closure_system_example(self):
        xs = generate_subalgebra(inf2(), 3, [(1, 0, 0)])
        assert zariski_closure(xs, {1}) == {0, 1, 2}

    def test_closure_operator_laws_exhaustive(self):
        for xs in (sierpinski(), discrete2(), generate_subalgebra(inf2(), 3, [(1, 0, 0)])):
            points = range(xs.points)
            subsets = [
                frozenset(c)
                for r in range(xs.points + 1)
                for c in itertools.combinations(points, r)
            ]
            for m in subsets:
                cl = zariski_closure(xs, m)
                assert m <= cl
                assert zariski_closure(xs, cl) == cl
                for n in subsets:
                    if m <= n:
                        assert cl <= zariski_closure(xs, n)

    def test_closure_contained_in_every_containing_equalizer(self):
        xs = sierpinski()
        for m in ({0}, {1}, set(), {0, 1}):
            cl = zariski_closure(xs, m)
            for phi, psi in itertools.product(xs.maps, repeat=2):
                eq = equalizer(phi, psi)
                if m <= eq:
                    assert cl <= eq

    def test_out_of_range_subset(self):
        with pytest.raises(MalformedInputError):
            zariski_closure(sierpinski(), {5})


class TestSeparation:
    def test_sierpinski_separated(self):
        assert is_separated_affine(sierpinski()) == (True, None)

    def test_constants_never_separate(self):
        xs = generate_subalgebra(frame2(), 2, [])
        ok, witness = is_separated_affine(xs)
        assert not ok and witness == (0, 1)

    def test_singleton(self):
        xs = generate_subalgebra(frame2(), 1, [])
        assert is_separated_affine(xs) == (True, None)


class TestCommaRoundtrip:
    def test_sierpinski_roundtrip(self):
        obj, back = affine_comma_roundtrip(sierpinski())
        assert back == sierpinski()
        assert obj.a_obj.size == 3
        assert obj.g.is_injective()

    def test_constants_only_roundtrip(self):
        xs = generate_subalgebra(frame2(), 2, [])
        _, back = affine_comma_roundtrip(xs)
        assert back == xs

    def test_non_monic_needs_reflection_first(self):
        from afcheck.comma import CommaObject, affine_oracle, epireflect

        pw = power_algebra(frame2(), 2)
        obj = CommaObject(pw, 1, FiniteMap(4, 2, (0, 0, 1, 1)))
        with pytest.raises(PreconditionViolationError):
            comma_to_affine(obj, frame2())
        reflected, _ = epireflect(affine_oracle(frame2()), obj)
        xs = comma_to_affine(reflected, frame2())
        assert xs.points == 1 and xs.maps == ((0,), (1,))
        again, back = affine_comma_roundtrip(xs)
        assert back == xs

    def test_vccd_ambient_survives_roundtrip(self):
        xs = generate_vccd_closure(LUK2, 1, [(1,)])
        obj, back = affine_comma_roundtrip(xs)
        assert back == xs
        assert obj.a_obj.quantale == LUK2


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1)), max_size=4),
    st.sets(st.integers(0, 1)),
)
def test_zariski_extensive_and_idempotent_random(gens, m):
    xs = generate_subalgebra(frame2(), 2, gens)
    cl = zariski_closure(xs, m)
    assert set(m) <= cl
    assert zariski_closure(xs, cl) == cl
