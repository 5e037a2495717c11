"""Exact certification of End(J) = Z and Picard rank 1 for hyperelliptic Jacobians over Q."""

from .certify import (
    Certificate,
    EndRingVerdict,
    PrimeCertificate,
    certify_curve,
    certify_prime,
    conclude_end_ring,
    conclude_picard_rank,
    search_primes,
    verify_certificate,
)
from .curve import HyperellipticCurve, count_points, has_good_reduction, reduce
from .endo import (
    discriminant_gcd,
    is_absolutely_simple,
    is_irreducible_over_Q,
    minpoly_power,
    poly_discriminant,
)
from .expr import parse_polynomial, render
from .finite_field import FieldElement, FiniteField, is_irreducible, make_extension, quadratic_character
from .lpoly import WeilPolynomial, is_ordinary, lpoly_from_counts, predicted_count, validate_weil

__all__ = [
    "Certificate",
    "EndRingVerdict",
    "FieldElement",
    "FiniteField",
    "HyperellipticCurve",
    "PrimeCertificate",
    "WeilPolynomial",
    "certify_curve",
    "certify_prime",
    "conclude_end_ring",
    "conclude_picard_rank",
    "count_points",
    "discriminant_gcd",
    "has_good_reduction",
    "is_absolutely_simple",
    "is_irreducible",
    "is_irreducible_over_Q",
    "is_ordinary",
    "lpoly_from_counts",
    "make_extension",
    "minpoly_power",
    "parse_polynomial",
    "poly_discriminant",
    "predicted_count",
    "quadratic_character",
    "reduce",
    "render",
    "search_primes",
    "validate_weil",
    "verify_certificate",
]
