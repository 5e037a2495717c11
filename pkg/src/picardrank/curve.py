"""Hyperelliptic curves y^2 = f(x) over Q and naive point counts mod p."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import polynomials as P
from ._arith import is_prime
from .errors import (
    BadReductionError,
    InvalidParameterError,
    ResourceLimitError,
    SingularCurveError,
    UnsupportedGenusError,
)
from .finite_field import FiniteField, fp_derivative, fp_gcd, fp_trim, make_extension

DEFAULT_Q_CAP = 2_000_000
# rows per vectorized batch; bounds memory for large q
CHUNK = 1 << 16


@dataclass(frozen=True)
class HyperellipticCurve:
    """The smooth projective model of ``y^2 = f(x)``, ``f`` given ascending."""

    f_coeffs: tuple[int, ...]

    def __post_init__(self):
        f = tuple(int(c) for c in self.f_coeffs)
        if not f or f[-1] == 0:
            raise InvalidParameterError("leading coefficient of f must be nonzero")
        if len(f) - 1 < 3:
            raise UnsupportedGenusError(f"deg f = {len(f) - 1} < 3 gives genus 0")
        if not P.is_squarefree_q(list(f)):
            raise SingularCurveError("f has a repeated factor over Q")
        object.__setattr__(self, "f_coeffs", f)

    @classmethod
    def from_coefficients(cls, coeffs) -> HyperellipticCurve:
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.f_coeffs) - 1

    @property
    def genus(self) -> int:
        return (self.degree - 1) // 2

    def shift(self, c: int) -> HyperellipticCurve:
        """The isomorphic curve y^2 = f(x + c)."""
        out: list[int] = []
        for a in reversed(self.f_coeffs):
            out = P.add(P.mul(out, [c, 1]), [a])
        return HyperellipticCurve(tuple(out))


def reduce(curve: HyperellipticCurve, p: int) -> list[int]:
    """Coefficients of f mod p, ascending, without trailing zeros."""
    return fp_trim(curve.f_coeffs, p)


def has_good_reduction(curve: HyperellipticCurve, p: int) -> bool:
    if p < 3 or not is_prime(p):
        return False
    if curve.f_coeffs[-1] % p == 0:
        return False
    fbar = reduce(curve, p)
    return len(fp_gcd(fbar, fp_derivative(fbar, p), p)) == 1


def count_points(
    curve: HyperellipticCurve,
    p: int,
    n: int,
    *,
    q_cap: int = DEFAULT_Q_CAP,
    field: FiniteField | None = None,
) -> int:
    """Number of F_{p^n}-points on the smooth projective model.

    Affine points contribute ``1 + chi(f(x))`` for each ``x`` in F_q.  At
    infinity there is one point when deg f is odd and ``1 + chi(lc(f))``
    when it is even.  ``field`` may supply an alternative model of F_{p^n}.
    """
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    if not has_good_reduction(curve, p):
        raise BadReductionError(f"curve has bad reduction at p = {p}")
    q = p**n
    if q > q_cap:
        raise ResourceLimitError(f"q = {q} exceeds enumeration cap {q_cap}")
    F = field if field is not None else make_extension(p, n)
    if (F.p, F.n) != (p, n):
        raise InvalidParameterError("supplied field does not match (p, n)")

    f = list(curve.f_coeffs)
    total = 0
    for start in range(0, q, CHUNK):
        xs = F.index_array(start, min(start + CHUNK, q))
        total += int(np.sum(F.character_array(F.poly_eval_array(f, xs))))
    affine = q + total

    if curve.degree % 2:
        infinity = 1
    else:
        infinity = 1 + int(F.character_array(F.constant_array(f[-1], 1))[0])
    return affine + infinity
