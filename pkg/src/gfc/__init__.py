"""Exact expansion and classification of polynomial sets generated by F(xt - R(t))."""
from .classify import (
    CertificateBundle,
    Classification,
    Knob,
    ScanRow,
    Verdict,
    classify,
    run_certificate,
    scan_perturbations,
)
from .errors import (
    GFCError,
    InvalidParams,
    NonzeroConstantTerm,
    OrderExceeded,
    OrderTooSmall,
    ParityViolation,
    SingularIndex,
    SpecParseError,
    ZeroAlpha,
)
from .families import (
    FamilyParams,
    Kind,
    OrthogonalityVerdict,
    check_orthogonality,
    family_alpha,
    family_omega,
    family_polys,
    verify_rescaling,
)
from .genfun import GenFunSpec, IdentityReport, PolySeq, expand, is_symmetric, verify_gf7
from .recurrence import (
    DerivedSequences,
    GeneralRecurrence,
    Recurrence,
    extract_general,
    extract_ttrr,
    minimal_order,
)
from .series import Poly, TruncSeries, poly_derivative, series_compose_outer, series_mul

__version__ = "0.1.0"
