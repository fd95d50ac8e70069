"""Quasisymmetric divided differences: trimming operators, indexed forests,
forest polynomials, quasisymmetric coinvariants and volume polynomials."""

from .basis import (
    Expansion,
    forest_coefficient,
    forest_expand,
    forest_polynomial,
    fundamental_expand,
    monomial_to_forest,
    slide_polynomial,
    trim_composite,
)
from .coinv import IdealSpec, coinv_dimensions, coinv_reduce, ideal_membership, verify_nilhecke
from .forest import (
    IndexedForest,
    enumerate_class,
    forest_of_word,
    mirror,
    qdes,
    star,
    theta_factorization,
    thompson_normal_form,
    trim_forest,
    trim_sequences,
    underline,
)
from .harmonic import d_pairing, is_harmonic, lambda_difference_coeffs, volume_polynomial
from .operators import bergeron_sottile, divided_difference, hivert_sigma, is_quasisymmetric, trim
from .poly import LPoly, ParseError, XPoly, lam, multiply, parse_lpoly, parse_poly, x

__version__ = "0.1.0"

__all__ = [
    "Expansion",
    "IdealSpec",
    "IndexedForest",
    "LPoly",
    "ParseError",
    "XPoly",
    "bergeron_sottile",
    "coinv_dimensions",
    "coinv_reduce",
    "d_pairing",
    "divided_difference",
    "enumerate_class",
    "forest_coefficient",
    "forest_expand",
    "forest_of_word",
    "forest_polynomial",
    "fundamental_expand",
    "hivert_sigma",
    "ideal_membership",
    "is_harmonic",
    "is_quasisymmetric",
    "lam",
    "lambda_difference_coeffs",
    "mirror",
    "monomial_to_forest",
    "multiply",
    "parse_lpoly",
    "parse_poly",
    "qdes",
    "slide_polynomial",
    "star",
    "theta_factorization",
    "thompson_normal_form",
    "trim",
    "trim_composite",
    "trim_forest",
    "trim_sequences",
    "underline",
    "verify_nilhecke",
    "volume_polynomial",
    "x",
]
