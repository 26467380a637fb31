"""Exact integer audits of Morse-Bott polynomials, twisted disc/sphere
bundle pairs, and stabilized Morse complexes."""

from .polyalg import IntPoly, NotDivisibleError, divide_by_one_plus_t
from .homology import (
    AbelianGroup,
    ChainComplexError,
    Explicit,
    HomologyProfile,
    InadmissibleCharacterError,
    IntegerChainComplex,
    IntegerMatrix,
    OrientationCharacter,
    Point,
    RealProjective,
    SmithNormalForm,
    Space,
    Sphere,
    Torus2,
    catalog_complex,
    homology,
    smith_normal_form,
    space_dim,
    space_tag,
)
from .bundles import BundleDescriptor, ThomIsoReport, thom_iso_check, thom_pair_homology
from .morse import (
    InconsistentTwistError,
    MorseData,
    SignTwist,
    morse_homology,
    stabilize,
)
from .morsebott import (
    CriticalSubmanifold,
    E2Report,
    FailsNegativeCoefficient,
    FailsNotDivisible,
    Holds,
    InequalityVerdict,
    MorseBottData,
    check_inequalities,
    e2_consistency,
    e2_page,
    mb_polynomial,
)
from .document import (
    AuditDocument,
    DocumentError,
    load_document,
    parse_document,
    serialize_document,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "AuditDocument",
    "BundleDescriptor",
    "ChainComplexError",
    "CriticalSubmanifold",
    "DocumentError",
    "E2Report",
    "Explicit",
    "FailsNegativeCoefficient",
    "FailsNotDivisible",
    "Holds",
    "HomologyProfile",
    "InadmissibleCharacterError",
    "InconsistentTwistError",
    "InequalityVerdict",
    "IntPoly",
    "IntegerChainComplex",
    "IntegerMatrix",
    "MorseBottData",
    "MorseData",
    "NotDivisibleError",
    "OrientationCharacter",
    "Point",
    "RealProjective",
    "SignTwist",
    "SmithNormalForm",
    "Space",
    "Sphere",
    "ThomIsoReport",
    "Torus2",
    "catalog_complex",
    "check_inequalities",
    "divide_by_one_plus_t",
    "e2_consistency",
    "e2_page",
    "homology",
    "load_document",
    "mb_polynomial",
    "morse_homology",
    "parse_document",
    "serialize_document",
    "smith_normal_form",
    "space_dim",
    "space_tag",
    "stabilize",
    "thom_iso_check",
    "thom_pair_homology",
]
