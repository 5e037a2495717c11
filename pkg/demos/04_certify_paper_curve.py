# End-to-end certificate for y^2 = x^2 (x-1)^2 (x^2+1) + 3.
#
# Run: python demos/04_certify_paper_curve.py
# The same result from the shell:
#   picardrank certify --curve "x^2*(x-1)^2*(x^2+1)+3" --primes 5,13 --out cert.json
#   picardrank verify --in cert.json

import dataclasses

from picardrank import HyperellipticCurve, certify_curve, parse_polynomial, verify_certificate
from picardrank.certfile import dumps

expr = "x^2*(x-1)^2*(x^2+1)+3"
C = HyperellipticCurve(tuple(parse_polynomial(expr)))

# Without --primes the search walks 3, 5, 7, ... : 7 gives a reducible f_7 and
# disc f_11 shares the factor 2 with disc f_5, so the first good pair is (5, 13).
cert = certify_curve(C, expression=expr)
print("primes used:", [pc.p for pc in cert.prime_certs])
print("End ring:", cert.end_ring.value, " NS rank:", cert.ns_rank, " theta generates:", cert.theta_generates)
for step in cert.deduction_log:
    print(f" - [{step.step}] {step.statement}")

# Verification recounts everything, including N_3 and N_4 at each prime.
print("verified:", verify_certificate(cert))
bad = dataclasses.replace(cert, disc_gcd=3)
print("tampered certificate:", verify_certificate(bad))

print(dumps(cert)[:400], "...")
