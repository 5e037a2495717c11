# Absolute simplicity and discriminants of Frobenius polynomials.
#
# Run: python demos/03_absolute_simplicity.py

from picardrank import (
    WeilPolynomial,
    discriminant_gcd,
    is_absolutely_simple,
    is_irreducible_over_Q,
    minpoly_power,
    poly_discriminant,
)
from picardrank.endo import simplicity_exponents

f5 = WeilPolynomial.from_descending(5, 2, [1, -2, 3, -10, 25])
f13 = WeilPolynomial.from_descending(13, 2, [1, 7, 35, 91, 169])

# Q(pi^d) must equal Q(pi) for every d with phi(d) <= 2g.
print("exponents checked for g = 2:", simplicity_exponents(2))
for W in (f5, f13):
    degrees = [len(minpoly_power(W.ascending, d)) - 1 for d in simplicity_exponents(2)]
    print(f"p = {W.p}: irreducible {is_irreducible_over_Q(W.ascending)}, deg Q(pi^d) = {degrees}")
    print("   absolutely simple:", is_absolutely_simple(W))

# A Weil polynomial that splits over an extension: pi^4 = -25 is rational.
W = WeilPolynomial.from_descending(5, 2, [1, 0, 0, 0, 25])
print("x^4 + 25:", is_absolutely_simple(W))
for d in (2, 4, 8):
    print(f"   minimal polynomial of pi^{d}:", minpoly_power(W.ascending, d))

# Coprime discriminants leave Q as the only common subfield.
d5, d13 = poly_discriminant(f5.ascending), poly_discriminant(f13.ascending)
print("disc f_5 =", d5, " disc f_13 =", d13, " gcd =", discriminant_gcd(d5, d13))
