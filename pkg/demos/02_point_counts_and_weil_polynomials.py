# Point counts on y^2 = f(x) and the characteristic polynomial of Frobenius.
#
# Run: python demos/02_point_counts_and_weil_polynomials.py

from picardrank import (
    HyperellipticCurve,
    count_points,
    has_good_reduction,
    lpoly_from_counts,
    parse_polynomial,
    predicted_count,
    validate_weil,
)

f = parse_polynomial("x^2*(x-1)^2*(x^2+1)+3")
C = HyperellipticCurve(tuple(f))
print("f =", f, " genus", C.genus)

# Mod 3 the constant term disappears and f acquires square factors.
for p in (3, 5, 7, 11, 13):
    print(f"good reduction at {p}:", has_good_reduction(C, p))

# For genus 2, N_1 and N_2 determine the Frobenius polynomial.
for p in (5, 13):
    N = [count_points(C, p, n) for n in (1, 2)]
    W = lpoly_from_counts(p, C.genus, N)
    print(f"p = {p}: N_1, N_2 = {N}  f_p = {W}")
    print("   real Weil polynomial h(t) =", W.real_weil_polynomial(), " valid:", bool(validate_weil(W)))

    # The polynomial predicts every later count; check two against brute force.
    for n in (3, 4):
        print(f"   N_{n}: predicted {predicted_count(W, n)}, counted {count_points(C, p, n)}")
