"""Exact algebra in Q[x]/(f): discriminants, irreducibility, Frobenius powers.

Integer polynomials are ascending coefficient lists, as in
:mod:`picardrank.polynomials`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from . import polynomials as P
from ._arith import divisors, totient
from .errors import (
    InvalidDiscriminantError,
    InvalidInputError,
    InvalidWeilError,
    UnsupportedDegreeError,
)
from .lpoly import WeilPolynomial, validate_weil


def sylvester_matrix(f, g) -> list[list[int]]:
    """Sylvester matrix of f (degree m) and g (degree n), size m+n."""
    f, g = P.trim(f), P.trim(g)
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    fd, gd = f[::-1], g[::-1]
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return rows


def bareiss_determinant(matrix) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    M = [list(row) for row in matrix]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def resultant(f, g) -> int:
    return bareiss_determinant(sylvester_matrix(f, g))


def poly_discriminant(f) -> int:
    """disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f)."""
    f = P.trim(f)
    d = len(f) - 1
    if d < 2:
        raise InvalidInputError("discriminant needs degree >= 2")
    r = resultant(f, P.derivative(f))
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, f[-1])
    assert rem == 0
    return q


def _has_integer_root(f) -> bool:
    c0 = f[0]
    if c0 == 0:
        return True
    return any(P.evaluate(f, s * r) == 0 for r in divisors(c0) for s in (1, -1))


def _quadratic_split(f) -> bool:
    """Does monic quartic f factor as (x^2 + a x + b)(x^2 + c x + d) over Z?"""
    c0, c1, c2, c3 = f[0], f[1], f[2], f[3]
    for b in divisors(c0):
        for b_signed in (b, -b):
            d = c0 // b_signed
            # a + c = c3 and a c = c2 - b - d: roots of z^2 - c3 z + (c2 - b - d)
            disc = c3 * c3 - 4 * (c2 - b_signed - d)
            if disc < 0:
                continue
            r = isqrt(disc)
            if r * r != disc or (c3 + r) % 2:
                continue
            a = (c3 + r) // 2
            for a_, c_ in ((a, c3 - a), (c3 - a, a)):
                if a_ * d + b_signed * c_ == c1:
                    return True
    return False


def is_irreducible_over_Q(f) -> bool:
    """Irreducibility of a monic integer polynomial of degree 2, 3 or 4."""
    f = P.trim(f)
    d = len(f) - 1
    if d > 4:
        raise UnsupportedDegreeError(f"degree {d} > 4 is not supported")
    if d < 1 or f[-1] != 1:
        raise InvalidInputError("expected a monic polynomial of degree >= 1")
    if d == 1:
        return True
    if _has_integer_root(f):
        return False
    if d == 4 and _quadratic_split(f):
        return False
    return True


def minpoly_power(f, d: int) -> list[int]:
    """Minimal polynomial over Q of x^d in Q[x]/(f).

    The powers 1, t, t^2, ... of t = x^d are written in the power basis and
    reduced against each other by exact elimination; the first dependency
    is the minimal polynomial, returned primitive with positive leading
    coefficient.
    """
    f = P.trim(f)
    n = len(f) - 1
    if d < 1:
        raise InvalidInputError("d must be >= 1")
    if n < 1 or f[-1] != 1:
        raise InvalidInputError("f must be monic of positive degree")
    if not P.is_squarefree_q(f):
        raise InvalidInputError("f is not squarefree")

    t = P.divmod_q(P.power([0, 1], d), f)[1]
    # echelon rows: (pivot, vector, combination of powers of t)
    basis: list[tuple[int, list[Fraction], list[Fraction]]] = []
    power = [Fraction(1)]
    for k in range(n + 1):
        vec = [Fraction(c) for c in power] + [Fraction(0)] * (n - len(power))
        combo = [Fraction(0)] * k + [Fraction(1)]
        for pivot, bvec, bcombo in basis:
            c = vec[pivot]
            if c:
                vec = [v - c * w for v, w in zip(vec, bvec)]
                combo = [x - c * (bcombo[i] if i < len(bcombo) else 0) for i, x in enumerate(combo)]
        pivot = next((i for i, v in enumerate(vec) if v), None)
        if pivot is None:
            return P.primitive(combo)
        inv = 1 / vec[pivot]
        basis.append((pivot, [v * inv for v in vec], [x * inv for x in combo]))
        power = P.divmod_q(P.mul(power, t), f)[1]
    raise AssertionError("dimension bound exceeded")


def simplicity_exponents(g: int) -> list[int]:
    """All d >= 1 with phi(d) <= 2g (phi(d) >= sqrt(d/2) bounds the search)."""
    bound = 2 * (2 * g) ** 2
    return [d for d in range(1, bound + 1) if totient(d) <= 2 * g]


@dataclass(frozen=True)
class SimplicityResult:
    simple: bool
    witness: str | int | None = None

    def __bool__(self) -> bool:
        return self.simple


def is_absolutely_simple(W: WeilPolynomial) -> SimplicityResult:
    """Absolute simplicity of the abelian variety with Weil polynomial W.

    Needs f_p irreducible and Q(pi^d) = Q(pi) for every d with
    phi(d) <= 2g.  The witness on failure is ``"reducible"`` or the
    smallest d where the degree drops.
    """
    check = validate_weil(W)
    if not check:
        raise InvalidWeilError(f"not a Weil polynomial ({check.reason})")
    f = W.ascending
    if not is_irreducible_over_Q(f):
        return SimplicityResult(False, "reducible")
    n = 2 * W.g
    for d in simplicity_exponents(W.g):
        if len(minpoly_power(f, d)) - 1 != n:
            return SimplicityResult(False, d)
    return SimplicityResult(True)


def discriminant_gcd(d1: int, d2: int) -> int:
    if d1 == 0 or d2 == 0:
        raise InvalidDiscriminantError("zero discriminant: Weil polynomial is not squarefree")
    return gcd(abs(d1), abs(d2))
