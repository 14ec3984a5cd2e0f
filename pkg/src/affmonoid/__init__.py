"""Affine monoids: normalization, Serre's (R1), a bounded (S2) probe and interior ideals."""

from .cone import RationalCone, relint_contains
from .exactlin import Lattice, hnf, snf
from .ideals import (
    MonoidIdeal,
    endomorphism_monoid,
    interior_ideal,
    quotient_codim_check,
    r_module_generators,
)
from .monoid import AffineMonoid, DescriptionError, build, load_description, parse_description
from .normalization import (
    hilbert_basis,
    is_normal,
    module_generators_of_saturation,
    saturated_interior_ideal,
)
from .serre import (
    AnalysisReport,
    InvariantViolation,
    analyze,
    check_r1,
    r1_criterion_A,
    r1_criterion_B,
    s2_probe,
)

__all__ = [
    "AffineMonoid",
    "AnalysisReport",
    "DescriptionError",
    "InvariantViolation",
    "Lattice",
    "MonoidIdeal",
    "RationalCone",
    "analyze",
    "build",
    "check_r1",
    "endomorphism_monoid",
    "hilbert_basis",
    "hnf",
    "interior_ideal",
    "is_normal",
    "load_description",
    "module_generators_of_saturation",
    "parse_description",
    "quotient_codim_check",
    "r1_criterion_A",
    "r1_criterion_B",
    "r_module_generators",
    "relint_contains",
    "s2_probe",
    "saturated_interior_ideal",
    "snf",
]
