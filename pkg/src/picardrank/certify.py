"""Certification pipeline: End(J) = Z, Neron-Severi rank 1, theta generates NS.

The argument is one-sided.  Two good primes whose Frobenius polynomials
are absolutely simple and ordinary, with coprime discriminants, prove the
geometric endomorphism ring is Z; failure proves nothing, so the only
verdicts are ``TrivialZ`` and ``Inconclusive``.
"""

from __future__ import annotations

import itertools
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum

from ._arith import odd_primes
from .curve import DEFAULT_Q_CAP, HyperellipticCurve, count_points, has_good_reduction
from .endo import (
    SimplicityResult,
    discriminant_gcd,
    is_absolutely_simple,
    poly_discriminant,
)
from .errors import (
    BadReductionError,
    CertificationError,
    InvalidPairError,
    InvalidParameterError,
    PreconditionError,
    SearchExhaustedError,
)
from .lpoly import WeilPolynomial, is_ordinary, lpoly_from_counts, predicted_count, validate_weil


class EndRingVerdict(str, Enum):
    TRIVIAL_Z = "TrivialZ"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class DeductionStep:
    step: str
    statement: str
    anchor: str
    inputs: dict = field(default_factory=dict)


@dataclass(frozen=True)
class PrimeCertificate:
    p: int
    counts: tuple[int, ...]
    weil: WeilPolynomial
    weil_valid: bool
    ordinary: bool
    absolutely_simple: bool
    simplicity_witness: str | int | None
    discriminant: int

    def usable(self, relax_ordinary: bool = False) -> bool:
        return self.weil_valid and self.absolutely_simple and (self.ordinary or relax_ordinary)


@dataclass(frozen=True)
class Certificate:
    curve: HyperellipticCurve
    genus: int
    prime_certs: tuple[PrimeCertificate, ...]
    disc_gcd: int
    end_ring: EndRingVerdict
    ns_rank: int | None
    theta_generates: bool | None
    deduction_log: tuple[DeductionStep, ...]
    relax_ordinary: bool = False
    expression: str | None = None


@contextmanager
def _stage(name: str):
    try:
        yield
    except CertificationError as exc:
        if exc.stage is None:
            exc.stage = name
        raise


def certify_prime(curve: HyperellipticCurve, p: int, *, q_cap: int = DEFAULT_Q_CAP) -> PrimeCertificate:
    """Run counting, L-polynomial recovery and all per-prime checks at ``p``."""
    if not has_good_reduction(curve, p):
        raise BadReductionError(f"curve has bad reduction at p = {p}", stage="reduction")
    g = curve.genus
    with _stage("count"):
        counts = tuple(count_points(curve, p, n, q_cap=q_cap) for n in range(1, g + 1))
    with _stage("lpoly"):
        weil = lpoly_from_counts(p, g, counts)
    valid = bool(validate_weil(weil))
    with _stage("simplicity"):
        simple = is_absolutely_simple(weil) if valid else SimplicityResult(False, "invalid-weil")
    with _stage("discriminant"):
        disc = poly_discriminant(weil.ascending)
    return PrimeCertificate(
        p=p,
        counts=counts,
        weil=weil,
        weil_valid=valid,
        ordinary=is_ordinary(weil),
        absolutely_simple=simple.simple,
        simplicity_witness=simple.witness,
        discriminant=disc,
    )


def search_primes(
    curve: HyperellipticCurve,
    p_max: int,
    required: int = 2,
    *,
    q_cap: int = DEFAULT_Q_CAP,
    relax_ordinary: bool = False,
) -> list[PrimeCertificate]:
    """First ``required`` usable certificates (in prime order) with pairwise coprime discriminants."""
    if p_max < 3:
        raise InvalidParameterError("p_max must be >= 3")
    if required < 2:
        raise InvalidParameterError("at least two primes are required")
    partial: list[PrimeCertificate] = []
    usable: list[PrimeCertificate] = []
    for p in odd_primes(3, p_max):
        if not has_good_reduction(curve, p):
            continue
        cert = certify_prime(curve, p, q_cap=q_cap)
        partial.append(cert)
        if not cert.usable(relax_ordinary):
            continue
        for combo in itertools.combinations(usable, required - 1):
            chosen = (*combo, cert)
            if all(discriminant_gcd(a.discriminant, b.discriminant) == 1 for a, b in itertools.combinations(chosen, 2)):
                return list(chosen)
        usable.append(cert)
    raise SearchExhaustedError(
        f"no {required} primes <= {p_max} with usable certificates and coprime discriminants"
        f" (good primes tried: {[c.p for c in partial]})",
        partial,
    )


@dataclass(frozen=True)
class EndRingConclusion:
    verdict: EndRingVerdict
    disc_gcd: int
    steps: tuple[DeductionStep, ...]


def conclude_end_ring(
    c1: PrimeCertificate, c2: PrimeCertificate, *, relax_ordinary: bool = False
) -> EndRingConclusion:
    if c1.p == c2.p:
        raise InvalidPairError(f"both certificates are at p = {c1.p}")
    for c in (c1, c2):
        if not c.usable(relax_ordinary):
            raise PreconditionError(f"certificate at p = {c.p} is not usable")
    p1, p2 = c1.p, c2.p
    steps = [
        DeductionStep(
            "reduction-injects",
            f"For p in {{{p1}, {p2}}} the Jacobian has good reduction and reduction embeds "
            "Q (x) End(J over Qbar) into Q (x) End(J mod p over Fpbar).",
            "reduction-injectivity",
            {"primes": [str(p1), str(p2)]},
        )
    ]
    for c in (c1, c2):
        if c.ordinary:
            text = (
                f"J mod {c.p} is absolutely simple and ordinary, so Q (x) End(J mod {c.p} over Fpbar) "
                f"= Q[x]/(f_{c.p}) with f_{c.p} = {c.weil}."
            )
        else:
            text = (
                f"J mod {c.p} is absolutely simple but not ordinary; the endomorphism algebra may be "
                f"noncommutative and its identification with Q[x]/(f_{c.p}) is not established."
            )
        steps.append(
            DeductionStep(
                f"endomorphism-algebra-{c.p}",
                text,
                "endomorphism-algebra-of-absolutely-simple-reduction",
                {
                    "p": str(c.p),
                    "weil_coefficients": [str(a) for a in c.weil.descending],
                    "ordinary": c.ordinary,
                    "ordinary_required": not relax_ordinary,
                },
            )
        )
    gcd_value = discriminant_gcd(c1.discriminant, c2.discriminant)
    disc_inputs = {"disc_1": str(c1.discriminant), "disc_2": str(c2.discriminant), "gcd": str(gcd_value)}
    if gcd_value != 1:
        steps.append(
            DeductionStep(
                "discriminants-not-coprime",
                f"gcd(disc f_{p1}, disc f_{p2}) = {gcd_value} != 1; a common subfield cannot be ruled "
                "out by this criterion. No conclusion.",
                "discriminant-comparison",
                disc_inputs,
            )
        )
        return EndRingConclusion(EndRingVerdict.INCONCLUSIVE, gcd_value, tuple(steps))
    steps.append(
        DeductionStep(
            "common-subfield-is-Q",
            f"gcd(disc f_{p1}, disc f_{p2}) = 1. A field contained in both Q[x]/(f_{p1}) and "
            f"Q[x]/(f_{p2}) has discriminant dividing both, so it is unramified at every prime; "
            "by Minkowski, Q has no nontrivial unramified extension, so the common subfield is Q.",
            "Minkowski-no-unramified-extensions",
            disc_inputs,
        )
    )
    if not (c1.ordinary and c2.ordinary):
        steps.append(
            DeductionStep(
                "non-ordinary-warning",
                "Ordinariness was relaxed and at least one reduction is not ordinary; "
                "the verdict is downgraded.",
                "ordinariness-hypothesis",
                {"ordinary": [c1.ordinary, c2.ordinary]},
            )
        )
        return EndRingConclusion(EndRingVerdict.INCONCLUSIVE, gcd_value, tuple(steps))
    steps.append(
        DeductionStep(
            "end-ring-is-Z",
            "Q (x) End(J over Qbar) embeds in a field contained in both Q[x]/(f_p), hence equals Q; "
            "End(J over Qbar) is an order in Q containing Z, so End(J over Qbar) = Z.",
            "End-equals-Z",
        )
    )
    return EndRingConclusion(EndRingVerdict.TRIVIAL_Z, gcd_value, tuple(steps))


def theta_index_candidates(g: int) -> list[int]:
    """Integers n with n^g dividing 1, found by enumerating |n| <= 1."""
    # |n|^g <= 1 forces |n| <= 1 for g >= 1
    return [n for n in range(-1, 2) if n != 0 and 1 % (n**g) == 0]


def conclude_picard_rank(verdict: EndRingVerdict, g: int) -> tuple[int, bool, tuple[DeductionStep, ...]]:
    """From End = Z deduce rank NS = 1 and that theta generates NS."""
    if verdict != EndRingVerdict.TRIVIAL_Z:
        raise PreconditionError("Picard rank conclusion needs End(J over Qbar) = Z")
    if g < 1:
        raise InvalidParameterError("genus must be >= 1")
    candidates = theta_index_candidates(g)
    if candidates != [-1, 1]:
        raise AssertionError(f"theta index enumeration returned {candidates}")
    steps = (
        DeductionStep(
            "ns-rank-one",
            "NS(J over Qbar) is torsion-free and injects into End(J over Qbar) = Z, so it is "
            "infinite cyclic: the Picard rank is 1.",
            "NS-injects-into-End",
        ),
        DeductionStep(
            "theta-generates",
            f"Write theta = n*c for a generator c. Riemann-Roch gives theta^{g}/{g}! = 1, so "
            f"n^{g} * (c^{g}/{g}!) = 1 with c^{g}/{g}! an integer; n^{g} divides 1, hence "
            f"n in {{{', '.join(map(str, candidates))}}} and theta freely generates NS.",
            "theta-index-is-unit",
            {"genus": str(g), "n_candidates": [str(n) for n in candidates]},
        ),
    )
    return 1, True, steps


def certify_curve(
    curve: HyperellipticCurve,
    *,
    primes=None,
    p_max: int = 100,
    q_cap: int = DEFAULT_Q_CAP,
    relax_ordinary: bool = False,
    expression: str | None = None,
) -> Certificate:
    """Full pipeline.  ``primes`` pins the pair; otherwise search up to ``p_max``."""
    if primes is not None:
        primes = list(primes)
        if len(primes) != 2 or primes[0] == primes[1]:
            raise InvalidPairError(f"need two distinct primes, got {primes}")
        certs = [certify_prime(curve, p, q_cap=q_cap) for p in primes]
    else:
        certs = search_primes(curve, p_max, q_cap=q_cap, relax_ordinary=relax_ordinary)
    conclusion = conclude_end_ring(*certs, relax_ordinary=relax_ordinary)
    steps = list(conclusion.steps)
    ns_rank = theta = None
    if conclusion.verdict == EndRingVerdict.TRIVIAL_Z:
        ns_rank, theta, picard_steps = conclude_picard_rank(conclusion.verdict, curve.genus)
        steps.extend(picard_steps)
    return Certificate(
        curve=curve,
        genus=curve.genus,
        prime_certs=tuple(certs),
        disc_gcd=conclusion.disc_gcd,
        end_ring=conclusion.verdict,
        ns_rank=ns_rank,
        theta_generates=theta,
        deduction_log=tuple(steps),
        relax_ordinary=relax_ordinary,
        expression=expression,
    )


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    divergence: str | None = None

    def __bool__(self) -> bool:
        return self.ok


class _Divergence(Exception):
    pass


def _expect(cond: bool, what: str):
    if not cond:
        raise _Divergence(what)


def _verify_prime(curve: HyperellipticCurve, g: int, pc: PrimeCertificate, q_cap: int):
    p = pc.p
    _expect(has_good_reduction(curve, p), f"p={p}: bad reduction")
    _expect(len(pc.counts) == g, f"p={p}: expected {g} counts")
    recount = tuple(count_points(curve, p, n, q_cap=q_cap) for n in range(1, g + 1))
    _expect(recount == tuple(pc.counts), f"p={p}: counts {pc.counts} != recount {recount}")
    _expect(pc.weil.p == p and pc.weil.g == g, f"p={p}: Weil polynomial has wrong (p, g)")
    _expect(pc.weil.satisfies_functional_equation(), f"p={p}: functional equation fails")
    rebuilt = lpoly_from_counts(p, g, recount)
    _expect(rebuilt.e == tuple(pc.weil.e), f"p={p}: Weil polynomial does not match the counts")
    for n in range(g + 1, 2 * g + 1):
        N = count_points(curve, p, n, q_cap=q_cap)
        _expect(N == predicted_count(pc.weil, n), f"p={p}: N_{n} = {N} disagrees with prediction")
    valid = bool(validate_weil(pc.weil))
    _expect(valid == pc.weil_valid, f"p={p}: weil_valid flag")
    _expect(is_ordinary(pc.weil) == pc.ordinary, f"p={p}: ordinary flag")
    simple = is_absolutely_simple(pc.weil) if valid else SimplicityResult(False, "invalid-weil")
    _expect(simple.simple == pc.absolutely_simple, f"p={p}: absolutely_simple flag")
    _expect(simple.witness == pc.simplicity_witness, f"p={p}: simplicity witness")
    _expect(poly_discriminant(pc.weil.ascending) == pc.discriminant, f"p={p}: discriminant")


def verify_certificate(cert: Certificate, *, q_cap: int = DEFAULT_Q_CAP) -> VerificationReport:
    """Recompute every field of ``cert`` from the curve alone.

    Beyond recomputation, each prime is over-determined: N_{g+1} .. N_{2g}
    are counted directly and compared with the stored Weil polynomial.
    """
    try:
        curve, g = cert.curve, cert.curve.genus
        if cert.expression is not None:
            from .expr import parse_polynomial

            _expect(tuple(parse_polynomial(cert.expression)) == curve.f_coeffs, "expression does not match coefficients")
        _expect(cert.genus == g, f"genus {cert.genus} != {g}")
        _expect(len(cert.prime_certs) == 2, "need exactly two prime certificates")
        c1, c2 = cert.prime_certs
        _expect(c1.p != c2.p, "primes are not distinct")
        for pc in cert.prime_certs:
            _verify_prime(curve, g, pc, q_cap)
            _expect(pc.usable(cert.relax_ordinary), f"p={pc.p}: certificate not usable")
        _expect(discriminant_gcd(c1.discriminant, c2.discriminant) == cert.disc_gcd, "disc_gcd")
        conclusion = conclude_end_ring(c1, c2, relax_ordinary=cert.relax_ordinary)
        _expect(conclusion.verdict == cert.end_ring, f"end_ring {cert.end_ring} != {conclusion.verdict}")
        steps = list(conclusion.steps)
        ns_rank = theta = None
        if conclusion.verdict == EndRingVerdict.TRIVIAL_Z:
            ns_rank, theta, extra = conclude_picard_rank(conclusion.verdict, g)
            steps.extend(extra)
        _expect(cert.ns_rank == ns_rank, "ns_rank")
        _expect(cert.theta_generates == theta, "theta_generates")
        _expect(tuple(cert.deduction_log) == tuple(steps), "deduction log differs from recomputation")
    except _Divergence as exc:
        return VerificationReport(False, str(exc))
    except (CertificationError, ValueError, TypeError, ArithmeticError) as exc:
        return VerificationReport(False, f"{type(exc).__name__}: {exc}")
    return VerificationReport(True)
