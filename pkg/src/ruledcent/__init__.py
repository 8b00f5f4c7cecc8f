"""Toric extensions, equivariant strata, and centralizer homotopy types for
Hamiltonian cyclic group actions on the two rational ruled surfaces."""

from .actions import (
    CyclicAction,
    SurfaceKind,
    SymplecticForm,
    decompose_lambda,
    is_hamiltonian_torus,
    make_action,
    make_form,
    normalizer_flip,
    parse_rational,
    reparametrize_to_a_one,
    same_cyclic_subgroup,
)
from .classify import ClassKind, Classification, FixedPointStructure, classify, fixed_point_structure
from .extensions import (
    Completeness,
    Provenance,
    ToricExtension,
    ToricExtensionSet,
    circle_toric_extensions,
    cyclic_extensions_via_circle_chain,
    cyclic_toric_extensions,
)
from .homotopy import (
    HomotopyType,
    HtKind,
    PushoutPresentation,
    WeylGroup,
    centralizer_type,
    poincare_coeffs,
    weyl_group,
)
from .moves import (
    Equivalence,
    Move,
    TripleMod,
    apply_move,
    canonical_form,
    make_triple,
    orbit,
    smoothly_equivalent,
    verify_group_presentation,
)
from .polytope import Polytope, moment_polytope, polytope_area, polytope_json_dict, render_svg
from .strata import Stratum, codim_oracle_even, codim_oracle_odd, stratification, stratum_codim
from .weights import (
    WeightTable,
    check_edge_constraint,
    fixed_point_weights,
    other_end_weights,
    unique_weight_points,
)

__version__ = "0.1.0"

__all__ = [
    "CyclicAction",
    "SurfaceKind",
    "SymplecticForm",
    "decompose_lambda",
    "is_hamiltonian_torus",
    "make_action",
    "make_form",
    "normalizer_flip",
    "parse_rational",
    "reparametrize_to_a_one",
    "same_cyclic_subgroup",
    "ClassKind",
    "Classification",
    "FixedPointStructure",
    "classify",
    "fixed_point_structure",
    "Completeness",
    "Provenance",
    "ToricExtension",
    "ToricExtensionSet",
    "circle_toric_extensions",
    "cyclic_extensions_via_circle_chain",
    "cyclic_toric_extensions",
    "HomotopyType",
    "HtKind",
    "PushoutPresentation",
    "WeylGroup",
    "centralizer_type",
    "poincare_coeffs",
    "weyl_group",
    "Equivalence",
    "Move",
    "TripleMod",
    "apply_move",
    "canonical_form",
    "make_triple",
    "orbit",
    "smoothly_equivalent",
    "verify_group_presentation",
    "Polytope",
    "moment_polytope",
    "polytope_area",
    "polytope_json_dict",
    "render_svg",
    "Stratum",
    "codim_oracle_even",
    "codim_oracle_odd",
    "stratification",
    "stratum_codim",
    "WeightTable",
    "check_edge_constraint",
    "fixed_point_weights",
    "other_end_weights",
    "unique_weight_points",
]
