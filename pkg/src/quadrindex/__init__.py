"""Index of quartic fields x^4 + a x^3 + b x + c at 2 and 3 via Newton polygons."""

from .ore import SplittingShape, analyze_prime, dedekind_p_maximal, ore_split
from .polyring import IntPoly, Quadrinomial, discriminant
from .quartic_index import (
    AnalyzeOptions,
    IndexReport,
    analyze,
    certify_irreducible,
    check_theorem3,
    engstrom_nu,
    match_theorem1,
    match_theorem2,
    verify_family,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyzeOptions",
    "IndexReport",
    "IntPoly",
    "Quadrinomial",
    "SplittingShape",
    "analyze",
    "analyze_prime",
    "certify_irreducible",
    "check_theorem3",
    "dedekind_p_maximal",
    "discriminant",
    "engstrom_nu",
    "match_theorem1",
    "match_theorem2",
    "ore_split",
    "verify_family",
]
