"""Characteristic polynomial of Frobenius from point counts.

A Weil polynomial of genus ``g`` over F_p is stored through its signed
elementary-symmetric data ``e_0 .. e_{2g}``::

    f_p(x) = sum_k (-1)^k e_k x^(2g-k),      e_0 = 1,

so ``e_1`` is the trace of Frobenius and ``N_1 = p + 1 - e_1``.  All
arithmetic is exact; the root-location check uses Sturm sequences over Q
evaluated at the quadratic irrationals +-2*sqrt(p).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import polynomials as P
from .errors import CorruptCountsError, InvalidCountsError, InvalidParameterError


@dataclass(frozen=True)
class WeilPolynomial:
    p: int
    g: int
    e: tuple[int, ...]

    @classmethod
    def from_descending(cls, p: int, g: int, coeffs) -> WeilPolynomial:
        """From the coefficients of f_p listed from x^(2g) down to x^0."""
        return cls(p, g, tuple((-1) ** k * int(c) for k, c in enumerate(coeffs)))

    @property
    def descending(self) -> list[int]:
        return [(-1) ** k * c for k, c in enumerate(self.e)]

    @property
    def ascending(self) -> list[int]:
        return self.descending[::-1]

    def satisfies_functional_equation(self) -> bool:
        g, p, e = self.g, self.p, self.e
        if len(e) != 2 * g + 1 or e[0] != 1:
            return False
        return all(e[2 * g - k] == p ** (g - k) * e[k] for k in range(g + 1))

    def real_weil_polynomial(self) -> list[int]:
        """h(t), ascending, with f_p(x) = x^g h(x + p/x).

        Uses x^m + (p/x)^m = T_m(x + p/x) where T_0 = 2, T_1 = t and
        T_{m+1} = t T_m - p T_{m-1}.
        """
        g, p = self.g, self.p
        c = self.descending
        T = [[2], [0, 1]]
        for m in range(1, g):
            T.append(P.sub(P.mul([0, 1], T[m]), P.scale(T[m - 1], p)))
        h = [c[g]]
        for k in range(g):
            h = P.add(h, P.scale(T[g - k], c[k]))
        return h

    def __str__(self) -> str:
        from .expr import render

        return render(self.ascending)


def _power_sums_from_e(e, n_max: int) -> list[int]:
    """Power sums s_1..s_{n_max} of the roots (index 0 unused)."""
    d = len(e) - 1
    s = [0] * (n_max + 1)
    for k in range(1, n_max + 1):
        if k <= d:
            acc = k * e[k]
            for i in range(1, k):
                acc -= (-1) ** (i - 1) * e[k - i] * s[i]
            s[k] = (-1) ** (k - 1) * acc
        else:
            s[k] = sum((-1) ** (i - 1) * e[i] * s[k - i] for i in range(1, d + 1))
    return s


def weil_bound_holds(p: int, g: int, n: int, count: int) -> bool:
    """(N_n - p^n - 1)^2 <= 4 g^2 p^n, the squared Hasse-Weil bound."""
    q = p**n
    return (count - q - 1) ** 2 <= 4 * g * g * q


def lpoly_from_counts(p: int, g: int, counts) -> WeilPolynomial:
    """Recover f_p from N_1 .. N_g via Newton's identities and the functional equation."""
    counts = [int(c) for c in counts]
    if g < 1 or len(counts) != g:
        raise InvalidParameterError(f"need exactly g = {g} counts, got {len(counts)}")
    for n, N in enumerate(counts, start=1):
        if not weil_bound_holds(p, g, n, N):
            raise InvalidCountsError(f"N_{n} = {N} violates the Weil bound over F_{p}^{n}")
    s = [0] + [p**n + 1 - N for n, N in enumerate(counts, start=1)]
    e = [1] + [0] * (2 * g)
    for k in range(1, g + 1):
        acc = sum((-1) ** (i - 1) * e[k - i] * s[i] for i in range(1, k + 1))
        if acc % k:
            raise CorruptCountsError(f"Newton step {k}: {acc} is not divisible by {k}")
        e[k] = acc // k
    for k in range(g):
        e[2 * g - k] = p ** (g - k) * e[k]
    W = WeilPolynomial(p, g, tuple(e))
    assert W.satisfies_functional_equation()
    return W


def predicted_count(W: WeilPolynomial, n: int) -> int:
    """N_n = p^n + 1 - s_n, with s_n from the Newton / linear recurrence."""
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    return W.p**n + 1 - _power_sums_from_e(W.e, n)[n]


# ---------------------------------------------------------------------------
# exact real-root location
# ---------------------------------------------------------------------------


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_at_sqrt(poly, D: int, sign: int) -> int:
    """Sign of poly(sign * sqrt(D)) for rational coefficients and D > 0.

    poly(t) = A(t^2) + t B(t^2), so the value is A(D) + sign*sqrt(D)*B(D).
    """
    a = P.evaluate(poly[0::2], D)
    b = sign * P.evaluate(poly[1::2], D)
    sa, sb = _sign(a), _sign(b)
    if sa == 0 or sb == 0 or sa == sb:
        return sa or sb
    # opposite signs: compare a^2 with b^2 D
    return sa * _sign(a * a - b * b * D)


def sturm_sequence(poly) -> list[list[Fraction]]:
    seq = [[Fraction(c) for c in P.trim(poly)]]
    d = P.derivative(seq[0])
    if not d:
        return seq
    seq.append(d)
    while True:
        r = P.divmod_q(seq[-2], seq[-1])[1]
        if not r:
            return seq
        seq.append([-c for c in r])


def _variations(signs) -> int:
    s = [x for x in signs if x]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def _distinct_roots_open(poly, D: int) -> int:
    """Distinct real roots in (-sqrt(D), sqrt(D)); endpoints must not be roots."""
    seq = sturm_sequence(poly)
    lo = _variations(_sign_at_sqrt(s, D, -1) for s in seq)
    hi = _variations(_sign_at_sqrt(s, D, 1) for s in seq)
    return lo - hi


def roots_in_closed_interval(poly, D: int) -> int:
    """Real roots of an integer polynomial in [-sqrt(D), sqrt(D)], with multiplicity."""
    h = [Fraction(c) for c in P.trim(poly)]
    r = isqrt(D)
    if r * r == D:
        endpoint_factors = [[-r, 1], [r, 1]]
    else:
        endpoint_factors = [[-D, 0, 1]]
    count = 0
    for fac in endpoint_factors:
        while P.degree(h) >= len(fac) - 1:
            quo, rem = P.divmod_q(h, fac)
            if rem:
                break
            h = quo
            count += len(fac) - 1
    while P.degree(h) > 0:
        count += _distinct_roots_open(h, D)
        h = P.gcd_q(h, P.derivative(h))
    return count


@dataclass(frozen=True)
class WeilCheck:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_weil(W: WeilPolynomial) -> WeilCheck:
    """Exact check that W is a genuine Weil polynomial.

    Requires the functional equation and that the real Weil polynomial has
    all ``g`` roots (with multiplicity) in ``[-2 sqrt(p), 2 sqrt(p)]``.
    """
    if W.g < 1 or len(W.e) != 2 * W.g + 1 or W.e[0] != 1:
        return WeilCheck(False, "shape")
    if not W.satisfies_functional_equation():
        return WeilCheck(False, "functional-equation")
    h = W.real_weil_polynomial()
    if roots_in_closed_interval(h, 4 * W.p) != W.g:
        return WeilCheck(False, "root-location")
    return WeilCheck(True)


def is_ordinary(W: WeilPolynomial) -> bool:
    """p does not divide the middle coefficient e_g."""
    return W.e[W.g] % W.p != 0
