"""Symbolic toolkit around anticommuting variables and their scalar models.

Five views of the same small circle of ideas:

- :mod:`grassalg.complexes` — complex numbers as explicit real pairs
  with a configurable comparison tolerance;
- :mod:`grassalg.matrices` — the faithful 2x2 real-matrix picture of
  those scalars, plus a family of square-zero matrices and the grid
  classifier for when two of them anticommute;
- :mod:`grassalg.exterior` — the exterior algebra on countably many
  generators, where anticommutation holds by construction;
- :mod:`grassalg.star` — complex points relabeled as anticommuting
  symbols through an odd function, a construction that anticommutes but
  refuses to be associative;
- :mod:`grassalg.moyal` — the polynomial star product driven by an
  antisymmetric kernel built from the same odd functions.

:mod:`grassalg.exprparse` and :mod:`grassalg.cli` wrap everything in a
small expression language and a ``grassalg`` command.
"""

from .complexes import (
    DEFAULT_EPSILON,
    ComplexValue,
    FieldAxiomReport,
    I,
    ONE,
    Tolerance,
    ZERO,
    as_complex,
    deviation,
    epsilon,
    get_tolerance,
    local_tolerance,
    sample_complex,
    set_tolerance,
    verify_field_axioms,
)
from .exterior import (
    GrassmannElement,
    GrassmannPolynomial,
    NotOddGrade,
    check_monomial,
    merge_monomials,
    odd_square_check,
    poly_make,
    poly_mul,
    random_odd_element,
    theta,
)
from .exterior import anticommutator as grassmann_anticommutator
from .matrices import (
    DegenerateFamilyMember,
    GridCheckReport,
    HomomorphismReport,
    IDENTITY2,
    Mat2,
    NilpotentCandidate,
    NotInRepresentationSubset,
    ZERO2,
    anticommutator,
    build_nilpotent,
    classify_pair,
    is_real_multiple,
    lemma_grid_check,
    matrix_deviation,
    phi,
    phi_inv,
    proportionality_witness,
    verify_phi_homomorphism,
)
from .moyal import (
    DimensionMismatch,
    MultiPoly,
    StarKernel,
    build_kernel,
    moyal_commutator,
    moyal_star,
)
from .star import (
    NonassociativityWitness,
    OddFunctionSpec,
    OmegaMatrix,
    ThetaLabel,
    check_odd,
    find_nonassociativity_witness,
    mixed_product,
    omega,
    registry,
    star,
    star_commutator,
)
from .exprparse import (
    EvalTypeError,
    ParseError,
    UnboundGenerator,
    eval_expression,
    parse_complex,
    parse_expression,
    parse_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_EPSILON",
    "ComplexValue",
    "FieldAxiomReport",
    "I",
    "ONE",
    "Tolerance",
    "ZERO",
    "as_complex",
    "deviation",
    "epsilon",
    "get_tolerance",
    "local_tolerance",
    "sample_complex",
    "set_tolerance",
    "verify_field_axioms",
    "GrassmannElement",
    "GrassmannPolynomial",
    "NotOddGrade",
    "check_monomial",
    "merge_monomials",
    "odd_square_check",
    "poly_make",
    "poly_mul",
    "random_odd_element",
    "theta",
    "grassmann_anticommutator",
    "DegenerateFamilyMember",
    "GridCheckReport",
    "HomomorphismReport",
    "IDENTITY2",
    "Mat2",
    "NilpotentCandidate",
    "NotInRepresentationSubset",
    "ZERO2",
    "anticommutator",
    "build_nilpotent",
    "classify_pair",
    "is_real_multiple",
    "lemma_grid_check",
    "matrix_deviation",
    "phi",
    "phi_inv",
    "proportionality_witness",
    "verify_phi_homomorphism",
    "DimensionMismatch",
    "MultiPoly",
    "StarKernel",
    "build_kernel",
    "moyal_commutator",
    "moyal_star",
    "NonassociativityWitness",
    "OddFunctionSpec",
    "OmegaMatrix",
    "ThetaLabel",
    "check_odd",
    "find_nonassociativity_witness",
    "mixed_product",
    "omega",
    "registry",
    "star",
    "star_commutator",
    "EvalTypeError",
    "ParseError",
    "UnboundGenerator",
    "eval_expression",
    "parse_complex",
    "parse_expression",
    "parse_polynomial",
    "__version__",
]
