"""Command-line front end.

Exit codes: 0 success / verified, 1 inconclusive, 2 input error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import certfile
from .certify import EndRingVerdict, certify_curve, certify_prime, verify_certificate
from .curve import DEFAULT_Q_CAP, HyperellipticCurve, count_points, has_good_reduction
from .errors import (
    BadReductionError,
    CertificationError,
    InvalidPairError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    SearchExhaustedError,
)
from .expr import parse_polynomial, render
from .lpoly import lpoly_from_counts

EXIT_OK, EXIT_INCONCLUSIVE, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3


class InputError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise InputError(f"not a comma-separated integer list: {text!r}") from None


def _curve(args) -> tuple[HyperellipticCurve, str | None]:
    if (args.curve is None) == (args.coeffs is None):
        raise InputError("give exactly one of --curve and --coeffs")
    if args.curve is not None:
        coeffs = parse_polynomial(args.curve)
        expression = args.curve.replace("−", "-")
    else:
        coeffs = _int_list(args.coeffs)
        expression = None
    return HyperellipticCurve(tuple(coeffs)), expression


def _add_curve_args(sp: argparse.ArgumentParser):
    sp.add_argument("--curve", help='right-hand side f(x), e.g. "x^2*(x-1)^2*(x^2+1)+3"')
    sp.add_argument("--coeffs", help="coefficients of f, ascending (constant term first), comma-separated")
    sp.add_argument("--q-cap", type=int, default=DEFAULT_Q_CAP, help="largest field size enumerated")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="picardrank",
        description="Certify End(J) = Z and Neron-Severi rank 1 for Jacobians of y^2 = f(x) over Q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("certify", help="run the full pipeline and write a certificate")
    _add_curve_args(sp)
    sp.add_argument("--primes", help="comma-separated pair of primes (disables the search)")
    sp.add_argument("--p-max", type=int, default=100, help="search bound for automatic prime selection")
    sp.add_argument("--out", help="certificate path (stdout if omitted)")
    sp.add_argument("--relax-ordinary", action="store_true", help="accept non-ordinary reductions as usable")

    sp = sub.add_parser("count", help="number of F_{p^n}-points")
    _add_curve_args(sp)
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--n", type=int, default=1)

    sp = sub.add_parser("lpoly", help="characteristic polynomial of Frobenius at one prime")
    _add_curve_args(sp)
    sp.add_argument("--prime", type=int, required=True)

    sp = sub.add_parser("verify", help="re-check an existing certificate file")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--q-cap", type=int, default=DEFAULT_Q_CAP)
    return parser


def _cmd_certify(args) -> int:
    curve, expression = _curve(args)
    primes = _int_list(args.primes) if args.primes else None
    try:
        cert = certify_curve(
            curve,
            primes=primes,
            p_max=args.p_max,
            q_cap=args.q_cap,
            relax_ordinary=args.relax_ordinary,
            expression=expression,
        )
    except SearchExhaustedError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except PreconditionError as exc:
        if isinstance(exc, BadReductionError):
            raise
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    if args.out:
        certfile.write_certificate(cert, args.out)
    else:
        sys.stdout.write(certfile.dumps(cert))
    for pc in cert.prime_certs:
        print(f"p = {pc.p}: f_p = {pc.weil}", file=sys.stderr)
    print(f"End(J over Qbar): {cert.end_ring.value}", file=sys.stderr)
    return EXIT_OK if cert.end_ring == EndRingVerdict.TRIVIAL_Z else EXIT_INCONCLUSIVE


def _cmd_count(args) -> int:
    curve, _ = _curve(args)
    print(count_points(curve, args.prime, args.n, q_cap=args.q_cap))
    return EXIT_OK


def _cmd_lpoly(args) -> int:
    curve, _ = _curve(args)
    if not has_good_reduction(curve, args.prime):
        raise BadReductionError(f"curve has bad reduction at p = {args.prime}")
    pc = certify_prime(curve, args.prime, q_cap=args.q_cap)
    W = lpoly_from_counts(pc.p, curve.genus, pc.counts)
    print(
        json.dumps(
            {
                "p": str(pc.p),
                "counts": [str(n) for n in pc.counts],
                "weil_polynomial": render(W.ascending),
                "weil_coefficients": [str(c) for c in W.descending],
                "weil_valid": pc.weil_valid,
                "ordinary": pc.ordinary,
                "absolutely_simple": pc.absolutely_simple,
                "simplicity_witness": None if pc.simplicity_witness is None else str(pc.simplicity_witness),
                "discriminant": str(pc.discriminant),
            },
            indent=2,
        )
    )
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        with open(args.infile, encoding="utf-8") as fh:
            text = fh.read()
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read certificate: {exc}") from None
    try:
        cert = certfile.certificate_from_dict(data)
    except certfile.CertificateFormatError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    report = verify_certificate(cert, q_cap=args.q_cap)
    if not report:
        print(f"verification failed: {report.divergence}", file=sys.stderr)
        return EXIT_VERIFY
    print(f"verified: End(J over Qbar) {cert.end_ring.value}", file=sys.stderr)
    return EXIT_OK if cert.end_ring == EndRingVerdict.TRIVIAL_Z else EXIT_INCONCLUSIVE


_COMMANDS = {"certify": _cmd_certify, "count": _cmd_count, "lpoly": _cmd_lpoly, "verify": _cmd_verify}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return _COMMANDS[args.command](args)
    except (InputError, ParseError, InvalidPairError, ResourceLimitError, BadReductionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CertificationError as exc:
        # remaining domain errors are input problems (bad curve, bad parameters)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
