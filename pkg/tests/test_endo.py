from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from picardrank.endo import (
    bareiss_determinant,
    discriminant_gcd,
    is_absolutely_simple,
    is_irreducible_over_Q,
    minpoly_power,
    poly_discriminant,
    resultant,
    simplicity_exponents,
    sylvester_matrix,
)
from picardrank.errors import (
    InvalidDiscriminantError,
    InvalidInputError,
    InvalidWeilError,
    UnsupportedDegreeError,
)
from picardrank.lpoly import WeilPolynomial

X, Y = sympy.symbols("x y")

# sympy.discriminant on the published f_5, f_13
D5 = 2278400
D13 = 33502053


def to_sympy(coeffs, var=X):
    return sum(c * var**i for i, c in enumerate(coeffs))


def rational_det(matrix):
    """Plain Gaussian elimination over Fractions."""
    M = [[Fraction(v) for v in row] for row in matrix]
    n, det = len(M), Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            det = -det
        det *= M[k][k]
        for i in range(k + 1, n):
            r = M[i][k] / M[k][k]
            M[i] = [a - r * b for a, b in zip(M[i], M[k])]
    return det


def twist(W):
    return WeilPolynomial(W.p, W.g, tuple((-1) ** k * c for k, c in enumerate(W.e)))


X4_PLUS_25 = WeilPolynomial.from_descending(5, 2, [1, 0, 0, 0, 25])


class TestDiscriminant:
    def test_quadratic(self):
        assert poly_discriminant([1, 0, 1]) == -4

    def test_paper_polynomials(self, f5, f13):
        assert sympy.discriminant(to_sympy(f5.ascending), X) == D5
        assert sympy.discriminant(to_sympy(f13.ascending), X) == D13
        assert poly_discriminant(f5.ascending) == D5
        assert poly_discriminant(f13.ascending) == D13
        assert gcd(D5, D13) == 1

    def test_repeated_root(self):
        # (x - 1)^2 (x^2 + 1)
        assert poly_discriminant([1, -2, 2, -2, 1]) == 0

    def test_sylvester_shape(self):
        assert sylvester_matrix([1, 0, 1], [0, 2]) == [[1, 0, 1], [2, 0, 0], [0, 2, 0]]

    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.integers(-9, 9), min_size=3, max_size=6))
    def test_matches_sympy(self, coeffs):
        assume(coeffs[-1] != 0)
        assert poly_discriminant(coeffs) == sympy.discriminant(to_sympy(coeffs), X)

    @settings(max_examples=80, deadline=None)
    @given(
        st.lists(st.integers(-7, 7), min_size=2, max_size=5),
        st.lists(st.integers(-7, 7), min_size=2, max_size=5),
    )
    def test_fraction_free_matches_rational(self, f, g):
        assume(f[-1] != 0 and g[-1] != 0)
        S = sylvester_matrix(f, g)
        assert resultant(f, g) == rational_det(S)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=n, max_size=n)))
    def test_bareiss_matches_rational(self, M):
        assert bareiss_determinant(M) == rational_det(M)


class TestIrreducible:
    def test_examples(self, f5):
        assert is_irreducible_over_Q(f5.ascending)
        assert is_irreducible_over_Q([25, 0, 0, 0, 1])
        assert not is_irreducible_over_Q([2, 0, 3, 0, 1])

    def test_errors(self):
        with pytest.raises(UnsupportedDegreeError):
            is_irreducible_over_Q([1, 0, 0, 0, 0, 1])
        with pytest.raises(InvalidInputError):
            is_irreducible_over_Q([1, 0, 2])

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.integers(-12, 12), min_size=2, max_size=4))
    def test_matches_sympy_factorization(self, low):
        f = low + [1]
        expected = sympy.Poly(to_sympy(f), X).is_irreducible
        assert is_irreducible_over_Q(f) == expected

    @pytest.mark.parametrize(
        "a, b",
        [([1, 1, 1], [2, 0, 1]), ([-3, 4, 1], [5, -1, 1]), ([6, 0, 1], [6, 0, 1]), ([0, 3, 1], [7, 2, 1])],
    )
    def test_products_of_quadratics(self, a, b):
        f = [int(c) for c in reversed(sympy.Poly(sympy.expand(to_sympy(a) * to_sympy(b)), X).all_coeffs())]
        assert not is_irreducible_over_Q(f)


class TestMinpoly:
    def test_examples(self, f5):
        assert minpoly_power(f5.ascending, 1) == f5.ascending
        assert minpoly_power([1, 0, 1], 2) == [1, 1]
        assert minpoly_power([25, 0, 0, 0, 1], 8) == [-625, 1]

    def test_not_squarefree(self):
        with pytest.raises(InvalidInputError):
            minpoly_power([1, -2, 1], 2)

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6, 8, 10, 12])
    @pytest.mark.parametrize("coeffs", [[25, -10, 3, -2, 1], [169, 91, 35, 7, 1], [25, 0, 0, 0, 1], [2, 0, 3, 0, 1]])
    def test_divides_resultant(self, coeffs, d):
        m = minpoly_power(coeffs, d)
        res = sympy.Poly(sympy.resultant(to_sympy(coeffs, Y), X - Y**d, Y), X)
        assert sympy.Poly(to_sympy(m), X).degree() >= 1
        assert sympy.rem(res, sympy.Poly(to_sympy(m), X)).is_zero
        assert sympy.Poly(to_sympy(m), X).is_primitive
        assert m[-1] > 0

    @pytest.mark.parametrize("d", range(1, 13))
    def test_degree_divides_for_irreducible(self, f13, d):
        assert 4 % (len(minpoly_power(f13.ascending, d)) - 1) == 0


class TestSimplicity:
    def test_exponent_set(self):
        brute = [d for d in range(1, 200) if sum(1 for k in range(1, d + 1) if gcd(k, d) == 1) <= 4]
        assert simplicity_exponents(2) == brute == [1, 2, 3, 4, 5, 6, 8, 10, 12]

    def test_paper_polynomials(self, f5, f13):
        assert is_absolutely_simple(f5)
        assert is_absolutely_simple(f13)

    def test_x4_plus_25_not_absolutely_simple(self):
        result = is_absolutely_simple(X4_PLUS_25)
        assert not result
        # pi^2 satisfies y^2 + 25 = 0, so the degree already drops at d = 2
        assert minpoly_power([25, 0, 0, 0, 1], 2) == [25, 0, 1]
        assert result.witness == 2

    def test_reducible_witness(self):
        # (x^2 + 5)(x^2 - 2x + 5)
        W = WeilPolynomial.from_descending(5, 2, [1, -2, 10, -10, 25])
        assert is_absolutely_simple(W).witness == "reducible"

    def test_twist_invariance(self, f5, f13):
        for W in (f5, f13, X4_PLUS_25):
            assert is_absolutely_simple(W) == is_absolutely_simple(twist(W))

    def test_invalid_weil(self):
        with pytest.raises(InvalidWeilError):
            is_absolutely_simple(WeilPolynomial.from_descending(5, 2, [1, 0, 0, 0, 1]))


class TestDiscriminantGcd:
    def test_examples(self):
        assert discriminant_gcd(-4, 9) == 1
        assert discriminant_gcd(12, 18) == 6
        assert discriminant_gcd(D5, D13) == 1

    def test_zero(self):
        with pytest.raises(InvalidDiscriminantError):
            discriminant_gcd(0, 5)
