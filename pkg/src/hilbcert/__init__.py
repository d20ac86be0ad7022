"""Exact certificates for points of Hilbert schemes of points.

Certifies, with exact arithmetic over GF(p) or QQ, when a zero-dimensional
ideal defines a smooth point on an elementary component: trivial negative
tangents, graded tangent and obstruction spaces, relative criteria for
nested pairs, plus a seeded randomized search for new examples.
"""

from .artinian import ArtinianQuotient, FiniteModule, HilbertFunction
from .certify import (
    Certificate,
    dimension_formulas,
    elementary_certificate,
    pair_certificate,
    tnt_check,
)
from .fields import GF, QQ
from .gallery import build_entry, verify
from .groebner import IdealPresentation
from .homology import (
    Presentation,
    ext1_space,
    hom_nonneg_filtration,
    hom_space,
    t2_space,
)
from .parsing import IdealFile, ParseError, parse_ideal_file, parse_polynomial
from .rings import GradedRing, Polynomial
from .search import CandidateShape, random_candidate, screen

__version__ = "1.0.0"

__all__ = [
    "ArtinianQuotient",
    "CandidateShape",
    "Certificate",
    "FiniteModule",
    "GF",
    "GradedRing",
    "HilbertFunction",
    "IdealFile",
    "IdealPresentation",
    "ParseError",
    "Polynomial",
    "Presentation",
    "QQ",
    "build_entry",
    "dimension_formulas",
    "elementary_certificate",
    "ext1_space",
    "hom_nonneg_filtration",
    "hom_space",
    "pair_certificate",
    "parse_ideal_file",
    "parse_polynomial",
    "random_candidate",
    "screen",
    "t2_space",
    "tnt_check",
    "verify",
]
