"""Dense univariate polynomials over Z and Q.

A polynomial is a list of coefficients in ascending order of degree,
``[a_0, a_1, ..., a_d]``.  Normalized lists have a nonzero last entry;
the zero polynomial is ``[]``.  Coefficients are Python ``int`` or
``fractions.Fraction``, so everything is exact and unbounded.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a) -> int:
    """Degree of ``a``; the zero polynomial has degree -1."""
    return len(trim(a)) - 1


def add(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def sub(a, b):
    return add(a, [-c for c in b])


def scale(a, c):
    return trim([c * x for x in a])


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def power(a, e: int):
    result = [1]
    base = trim(a)
    while e:
        if e & 1:
            result = mul(result, base)
        base = mul(base, base)
        e >>= 1
    return result


def derivative(a):
    return trim([i * c for i, c in enumerate(a)][1:])


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def divmod_q(a, b):
    """Quotient and remainder over Q.  ``b`` must be nonzero."""
    a = [Fraction(c) for c in trim(a)]
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lc = Fraction(b[-1])
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lc
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] -= c * y
        a = trim(a)
    return trim(q), a


def monic(a):
    a = trim(a)
    lc = Fraction(a[-1])
    return [Fraction(c) / lc for c in a]


def gcd_q(a, b):
    """Monic gcd over Q (``[]`` if both inputs are zero)."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_q(a, b)[1]
    return monic(a) if a else []


def is_squarefree_q(a) -> bool:
    return degree(gcd_q(a, derivative(a))) == 0


def content(a) -> int:
    return reduce(gcd, (int(c) for c in a), 0)


def primitive(a):
    """Scale a rational polynomial to integer content 1, positive leading coefficient."""
    a = [Fraction(c) for c in trim(a)]
    if not a:
        return []
    den = reduce(lcm, (c.denominator for c in a), 1)
    ints = [int(c * den) for c in a]
    g = content(ints)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]
