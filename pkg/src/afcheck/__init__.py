"""Desk-scale verification toolkit for finite quantales, enriched categories,
affine sets, comma-category constructions, and finite spaces."""

from .affine import (
    AffineSet,
    FinAlgebra,
    Operation,
    affine_comma_roundtrip,
    affine_to_comma,
    bounded_lattice_algebra,
    chain_leq,
    check_affine_morphism,
    comma_to_affine,
    frame2,
    generate_subalgebra,
    generate_vccd_closure,
    inf2,
    is_separated_affine,
    power_algebra,
    vccd_signature_algebra,
    zariski_closure,
)
from .comma import (
    CommaMorphism,
    CommaObject,
    SplitStructure,
    affine_oracle,
    check_comma_morphism,
    check_comma_object,
    check_functor_oracle,
    comma_morphisms,
    epireflect,
    find_split_structure,
    lattice_oracle,
    left_adjoint_L,
    pointed_set,
    pointed_sets_oracle,
    rho_unit,
    right_adjoint_R,
    split_coequalizer_check,
    unit_gamma_check,
    unit_rho_check,
    verify_reflection_universal,
)
from .errors import (
    AfcheckError,
    IncompatibleStructuresError,
    InvalidElementError,
    InvalidParameterError,
    MalformedInputError,
    PreconditionViolationError,
    ResourceLimitError,
    UnsupportedInstanceError,
)
from .instances import (
    ClosureSystem,
    FiniteSpace,
    affine_to_closure_system,
    affine_to_space,
    closure_system_to_affine,
    enumerate_closure_systems,
    enumerate_topologies,
    is_continuous,
    is_sober_finite,
    sober_via_generic_points,
    space_to_affine,
)
from .maps import FiniteMap, all_maps, compose, constant_map, identity_map
from .quantale import Quantale, check_quantale_laws, hom, make_quantale
from .report import LawReport, Violation
from .vcat import (
    VCategory,
    check_vcategory,
    check_vfunctor,
    enumerate_adjoint_pairs,
    enumerate_vcategories,
    enumerate_vfunctors_to_V,
    expansion_identity_check,
    hom_self_vcategory,
    initial_structure,
    is_adjoint_pair,
    is_cauchy_complete,
    is_separated,
    roundtrip_iso_check,
    sample_vcategories,
)

__version__ = "0.1.0"
