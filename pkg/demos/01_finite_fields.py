# Finite fields F_{p^n} and the quadratic character.
#
# Run: python demos/01_finite_fields.py

from picardrank import make_extension, quadratic_character, is_irreducible

# F_25 is built on the first irreducible quadratic found when scanning
# t^2 + c_1 t + c_0 with c_0 varying fastest.  x^2 + 1 fails because -1 = 2^2
# is a square mod 5, so the scan stops at x^2 + 2.
F = make_extension(5, 2)
print(F)
print("x^2 + 1 irreducible over F_5?", is_irreducible([1, 0, 1], 5))
print("x^2 + 2 irreducible over F_5?", is_irreducible([2, 0, 1], 5))

# Elements are coefficient tuples in the generator t.
t = F.element([0, 1])
print("t^2 =", t * t)  # -2 = 3
print("t^24 =", t**24)  # Fermat: the multiplicative group has order 24

# chi(a) is a^((q-1)/2): +1 on nonzero squares, -1 on non-squares.
chars = [quadratic_character(a) for a in F.enumerate()]
print("squares in F_25*:", chars.count(1), "non-squares:", chars.count(-1))

# Every element of F_5 is a square in F_25.
print("chi on the prime subfield:", [quadratic_character(F(i)) for i in range(5)])

# Batched arithmetic for counting: whole fields as (q, n) integer arrays.
xs = F.index_array()
print("batched characters agree:", list(F.character_array(xs)) == chars)
