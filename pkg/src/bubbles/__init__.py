"""Exact scalar data of affine and cyclotomic Brauer and Kauffman categories."""

from .brauer import (
    BrauerClassification,
    BrauerOO,
    OmegaSeq,
    check_admissible,
    check_weak_admissible,
    classify_brauer,
    hat_poly,
    omega_of_roots,
    oo_of_poly,
    oracle_classify,
)
from .exactmath import Poly, RatFunc, SeriesInf, poly_gcd, poly_reverse, series_expand
from .kauffman import (
    KauffmanClassification,
    KauffmanOO,
    KauffmanParams,
    KOmegaSeq,
    classify_kauffman,
    hat_poly_k,
    loo_of_poly,
    oracle_classify_k,
    roo_of_poly,
)

__all__ = [
    "BrauerClassification", "BrauerOO", "OmegaSeq", "check_admissible", "check_weak_admissible",
    "classify_brauer", "hat_poly", "omega_of_roots", "oo_of_poly", "oracle_classify",
    "Poly", "RatFunc", "SeriesInf", "poly_gcd", "poly_reverse", "series_expand",
    "KauffmanClassification", "KauffmanOO", "KauffmanParams", "KOmegaSeq", "classify_kauffman",
    "hat_poly_k", "loo_of_poly", "oracle_classify_k", "roo_of_poly",
]
