"""Exact engine for multi-filtered noncommutative algebras."""

from .algebra import (
    Element,
    InvalidPresentationError,
    Presentation,
    Word,
    filtration_contains,
    make_presentation,
    mdeg,
    multiply,
    normal_form,
    normal_form_sum,
)
from .graded import GrPresentation, PBWReport, gr_injectivity_evidence, gr_structure, pbw_check
from .growth import GrowthTable, gk_estimate, graded_dim_compare, hilbert_count
from .laurent import BaseAutomorphism, BaseElement
from .orders import (
    EQ,
    GT,
    LT,
    DegThenLex,
    Lex,
    MatrixThenLex,
    PairProduct,
    admissibility_probe,
    compare,
    compare_signed,
    dickson_minimals,
    support,
)
from .presets import PresetSpec, load_preset
from .refilter import (
    CSet,
    CSetPreconditionError,
    PBWPreconditionError,
    RefiltrationCertificate,
    RegularityReport,
    WeightInfeasibleError,
    WeightVector,
    build_c_set,
    find_weight_vector,
    refilter,
    regularity_report,
    verify_certificate,
)
from .scalars import ONE, Q, ZERO, Scalar

__all__ = [name for name in dir() if not name.startswith("_")]
