"""Arithmetic in F_p and F_{p^n} for odd p.

Elements of ``F_{p^n} = F_p[t]/(m(t))`` are coefficient tuples of length
``n`` (ascending powers of the generator ``t``) with entries in ``[0, p)``.
Two layers are provided:

* :class:`FieldElement`, an immutable scalar with the usual operators.
* ``*_array`` methods on :class:`FiniteField` that act on whole batches of
  elements stored as ``(m, n)`` int64 arrays.  Point counting goes through
  these; the scalar layer is the reference they are tested against.

Polynomials over F_p (used for moduli, reductions and gcds) are plain
ascending coefficient lists, normalized mod p with no trailing zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ._arith import is_prime, prime_factors
from .errors import InvalidParameterError

# ---------------------------------------------------------------------------
# polynomials over F_p
# ---------------------------------------------------------------------------


def fp_trim(a, p: int) -> list[int]:
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def fp_sub(a, b, p: int) -> list[int]:
    n = max(len(a), len(b))
    return fp_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)], p)


def fp_mul(a, b, p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return fp_trim(out, p)


def fp_divmod(a, b, p: int) -> tuple[list[int], list[int]]:
    a, b = fp_trim(a, p), fp_trim(b, p)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] * inv % p
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] = (a[i + shift] - c * y) % p
        while a and a[-1] == 0:
            a.pop()
    return fp_trim(q, p), a


def fp_mod(a, b, p: int) -> list[int]:
    return fp_divmod(a, b, p)[1]


def fp_gcd(a, b, p: int) -> list[int]:
    """Monic gcd over F_p."""
    a, b = fp_trim(a, p), fp_trim(b, p)
    while b:
        a, b = b, fp_mod(a, b, p)
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def fp_derivative(a, p: int) -> list[int]:
    return fp_trim([i * c for i, c in enumerate(a)][1:], p)


def fp_powmod(a, e: int, m, p: int) -> list[int]:
    result = [1]
    base = fp_mod(a, m, p)
    while e:
        if e & 1:
            result = fp_mod(fp_mul(result, base, p), m, p)
        base = fp_mod(fp_mul(base, base, p), m, p)
        e >>= 1
    return fp_mod(result, m, p)


def is_irreducible(poly, p: int) -> bool:
    """Rabin's test: is the monic ``poly`` irreducible over F_p?

    ``poly`` has degree ``d`` and is irreducible iff ``x^(p^d) = x`` modulo
    ``poly`` and ``gcd(x^(p^(d/r)) - x, poly) = 1`` for each prime ``r | d``.
    """
    f = fp_trim(poly, p)
    d = len(f) - 1
    if d < 1 or f[-1] != 1:
        raise InvalidParameterError(f"is_irreducible needs a monic polynomial of degree >= 1, got {poly}")
    if d == 1:
        return True
    x = [0, 1]

    def frobenius_iterate(k: int) -> list[int]:
        h = x
        for _ in range(k):
            h = fp_powmod(h, p, f, p)
        return h

    if fp_sub(frobenius_iterate(d), x, p):
        return False
    for r in prime_factors(d):
        g = fp_gcd(fp_sub(frobenius_iterate(d // r), x, p), f, p)
        if len(g) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# fields and elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiniteField:
    """The field F_p[t]/(modulus) with ``q = p**n`` elements.

    For ``n = 1`` the modulus is ``t`` and elements are residues mod p.
    """

    p: int
    n: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 3 or not is_prime(self.p):
            raise InvalidParameterError(f"p must be an odd prime, got {self.p}")
        if self.n < 1:
            raise InvalidParameterError(f"extension degree must be >= 1, got {self.n}")
        m = tuple(fp_trim(self.modulus, self.p))
        if len(m) != self.n + 1 or m[-1] != 1:
            raise InvalidParameterError(f"modulus must be monic of degree {self.n}")
        if not is_irreducible(m, self.p):
            raise InvalidParameterError(f"modulus {m} is reducible over F_{self.p}")
        object.__setattr__(self, "modulus", m)

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, n={self.n}, modulus={self.modulus})"

    @property
    def q(self) -> int:
        return self.p**self.n

    # -- scalar layer -----------------------------------------------------

    def element(self, coeffs) -> FieldElement:
        """Element from a coefficient sequence (reduced mod the modulus)."""
        c = fp_mod(list(coeffs), list(self.modulus), self.p) if len(coeffs) > self.n else fp_trim(coeffs, self.p)
        return FieldElement(self, tuple(c) + (0,) * (self.n - len(c)))

    def __call__(self, value: int) -> FieldElement:
        """Image of an integer in the prime subfield."""
        return FieldElement(self, (value % self.p,) + (0,) * (self.n - 1))

    @property
    def zero(self) -> FieldElement:
        return self(0)

    @property
    def one(self) -> FieldElement:
        return self(1)

    def from_index(self, m: int) -> FieldElement:
        digits = []
        for _ in range(self.n):
            m, r = divmod(m, self.p)
            digits.append(r)
        return FieldElement(self, tuple(digits))

    def enumerate(self):
        """All q elements; constant term varies fastest."""
        for m in range(self.q):
            yield self.from_index(m)

    # -- vectorized layer -------------------------------------------------

    @cached_property
    def _powers_of_p(self) -> np.ndarray:
        return np.array([self.p**i for i in range(self.n)], dtype=np.int64)

    def index_array(self, start: int = 0, stop: int | None = None) -> np.ndarray:
        """Elements with indices in ``[start, stop)`` as an ``(m, n)`` array."""
        stop = self.q if stop is None else stop
        idx = np.arange(start, stop, dtype=np.int64)
        return (idx[:, None] // self._powers_of_p[None, :]) % self.p

    def constant_array(self, value: int, size: int) -> np.ndarray:
        out = np.zeros((size, self.n), dtype=np.int64)
        out[:, 0] = value % self.p
        return out

    def mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        n, p = self.n, self.p
        if n == 1:
            return a * b % p
        prod = np.zeros((a.shape[0], 2 * n - 1), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                prod[:, i + j] += a[:, i] * b[:, j]
        prod %= p
        for k in range(2 * n - 2, n - 1, -1):
            top = prod[:, k]
            for i in range(n):
                if self.modulus[i]:
                    prod[:, k - n + i] -= top * self.modulus[i]
            prod[:, k - n : k] %= p
        return prod[:, :n] % p

    def pow_array(self, a: np.ndarray, e: int) -> np.ndarray:
        result = self.constant_array(1, a.shape[0])
        base = a
        while e:
            if e & 1:
                result = self.mul_array(result, base)
            e >>= 1
            if e:
                base = self.mul_array(base, base)
        return result

    def poly_eval_array(self, coeffs, xs: np.ndarray) -> np.ndarray:
        """Evaluate an integer polynomial (ascending) at every row of ``xs``."""
        acc = self.constant_array(coeffs[-1], xs.shape[0])
        for c in reversed(coeffs[:-1]):
            acc = self.mul_array(acc, xs)
            acc[:, 0] = (acc[:, 0] + c) % self.p
        return acc

    def character_array(self, a: np.ndarray) -> np.ndarray:
        """Quadratic character of each row, by exponentiation to (q-1)/2."""
        r = self.pow_array(a, (self.q - 1) // 2)
        is_zero = ~a.any(axis=1)
        higher_zero = ~r[:, 1:].any(axis=1)
        plus = higher_zero & (r[:, 0] == 1)
        minus = higher_zero & (r[:, 0] == self.p - 1)
        if not np.all(plus | minus | is_zero):
            raise ArithmeticError("Euler criterion returned a value other than +-1")
        return np.where(is_zero, 0, np.where(plus, 1, -1)).astype(np.int64)


@dataclass(frozen=True, eq=True)
class FieldElement:
    field: FiniteField
    coeffs: tuple[int, ...]

    def __repr__(self) -> str:
        if self.field.n == 1:
            return f"{self.coeffs[0]} (mod {self.field.p})"
        return f"FieldElement({list(self.coeffs)} in F_{self.field.p}^{self.field.n})"

    def _check(self, other) -> FieldElement:
        if isinstance(other, int):
            return self.field(other)
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise TypeError("operands belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        prod = fp_mul(list(self.coeffs), list(other.coeffs), self.field.p)
        return self.field.element(prod)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not self

    def inverse(self):
        if not self:
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def index(self) -> int:
        return sum(c * self.field.p**i for i, c in enumerate(self.coeffs))


def make_extension(p: int, n: int) -> FiniteField:
    """F_{p^n} with the first monic irreducible modulus of degree ``n``.

    Candidates ``t^n + c_{n-1} t^{n-1} + ... + c_0`` are scanned with the
    constant term varying fastest, i.e. in increasing order of
    ``sum(c_i * p**i)``.
    """
    if not isinstance(p, int) or p < 3 or not is_prime(p):
        raise InvalidParameterError(f"p must be an odd prime, got {p}")
    if not isinstance(n, int) or n < 1:
        raise InvalidParameterError(f"extension degree must be >= 1, got {n}")
    for m in range(p**n):
        low = []
        for _ in range(n):
            m, r = divmod(m, p)
            low.append(r)
        candidate = low + [1]
        if is_irreducible(candidate, p):
            return FiniteField(p, n, tuple(candidate))
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def quadratic_character(a: FieldElement) -> int:
    """-1, 0 or 1 according to whether ``a`` is a non-square, zero or a nonzero square."""
    if not a:
        return 0
    r = a ** ((a.field.q - 1) // 2)
    if r == a.field.one:
        return 1
    if r == -a.field.one:
        return -1
    raise ArithmeticError(f"Euler criterion gave {r}")


def enumerate_field(field: FiniteField):
    return field.enumerate()
