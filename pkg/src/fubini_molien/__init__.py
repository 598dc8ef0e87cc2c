"""Molien series of compact matrix groups Gamma_+ x| (Z2 x ... x Z2) by
coset decomposition of the Haar integral, with independent oracles."""

from .algebra import Mat, Polynomial, PowerSeries, TrigPoly, series_inv_det
from .errors import ClosureError, MolienError, ParseError, RoundingError, SpecError
from .group_model import (
    CosetSystem,
    DecompositionReport,
    FiniteGroup,
    GroupSpec,
    build_element,
    check_preserves_form,
    close_group,
    coset_reps,
    verify_semidirect,
)
from .molien import molien_finite, molien_fubini, molien_fubini_n1
from .oracle import (
    check_invariant,
    quad_molien,
    reynolds_dim,
    sample_finite_invariant_dims,
)
from .specfile import SpecFile, load_spec, parse_spec

__version__ = "0.1.0"

__all__ = [
    "ClosureError",
    "CosetSystem",
    "DecompositionReport",
    "FiniteGroup",
    "GroupSpec",
    "Mat",
    "MolienError",
    "ParseError",
    "Polynomial",
    "PowerSeries",
    "RoundingError",
    "SpecError",
    "SpecFile",
    "TrigPoly",
    "build_element",
    "check_invariant",
    "check_preserves_form",
    "close_group",
    "coset_reps",
    "load_spec",
    "molien_finite",
    "molien_fubini",
    "molien_fubini_n1",
    "parse_spec",
    "quad_molien",
    "reynolds_dim",
    "sample_finite_invariant_dims",
    "series_inv_det",
    "verify_semidirect",
]
