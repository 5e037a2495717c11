"""JSON certificate files.

Every integer is written as a decimal string so that large discriminants
survive any JSON reader.  Weil polynomials are stored as their
coefficients from x^(2g) down to x^0.
"""

from __future__ import annotations

import json
import os
import tempfile

from .certify import Certificate, DeductionStep, EndRingVerdict, PrimeCertificate
from .curve import HyperellipticCurve
from .errors import CertificationError
from .lpoly import WeilPolynomial

SCHEMA_VERSION = "1"


class CertificateFormatError(CertificationError, ValueError):
    pass


def _int(value, what: str) -> int:
    if not isinstance(value, str):
        raise CertificateFormatError(f"{what}: expected a decimal string, got {value!r}")
    try:
        return int(value, 10)
    except ValueError:
        raise CertificateFormatError(f"{what}: {value!r} is not a decimal integer") from None


def _bool(value, what: str) -> bool:
    if not isinstance(value, bool):
        raise CertificateFormatError(f"{what}: expected a boolean, got {value!r}")
    return value


def certificate_to_dict(cert: Certificate) -> dict:
    primes = []
    for pc in cert.prime_certs:
        witness = pc.simplicity_witness
        primes.append(
            {
                "p": str(pc.p),
                "counts": [str(n) for n in pc.counts],
                "weil_coefficients": [str(c) for c in pc.weil.descending],
                "weil_valid": pc.weil_valid,
                "ordinary": pc.ordinary,
                "absolutely_simple": pc.absolutely_simple,
                "simplicity_witness": None if witness is None else str(witness),
                "discriminant": str(pc.discriminant),
            }
        )
    return {
        "schema_version": SCHEMA_VERSION,
        "curve": {
            "expression": cert.expression,
            "coefficients": [str(c) for c in cert.curve.f_coeffs],
            "genus": str(cert.genus),
        },
        "relax_ordinary": cert.relax_ordinary,
        "primes": primes,
        "disc_gcd": str(cert.disc_gcd),
        "end_ring": cert.end_ring.value,
        "ns_rank": None if cert.ns_rank is None else str(cert.ns_rank),
        "theta_generates": cert.theta_generates,
        "deduction_log": [
            {"step": s.step, "statement": s.statement, "anchor": s.anchor, "inputs": s.inputs}
            for s in cert.deduction_log
        ],
    }


def _witness(value):
    if value is None:
        return None
    if isinstance(value, str) and value.isdigit():
        return int(value)
    return value


def certificate_from_dict(data: dict) -> Certificate:
    """Inverse of :func:`certificate_to_dict`.  Raises CertificateFormatError."""
    try:
        if data.get("schema_version") != SCHEMA_VERSION:
            raise CertificateFormatError(f"unsupported schema_version {data.get('schema_version')!r}")
        c = data["curve"]
        coeffs = [_int(x, "curve.coefficients") for x in c["coefficients"]]
        genus = _int(c["genus"], "curve.genus")
        curve = HyperellipticCurve(tuple(coeffs))
        prime_certs = []
        for entry in data["primes"]:
            p = _int(entry["p"], "p")
            prime_certs.append(
                PrimeCertificate(
                    p=p,
                    counts=tuple(_int(n, "counts") for n in entry["counts"]),
                    weil=WeilPolynomial.from_descending(
                        p, genus, [_int(x, "weil_coefficients") for x in entry["weil_coefficients"]]
                    ),
                    weil_valid=_bool(entry["weil_valid"], "weil_valid"),
                    ordinary=_bool(entry["ordinary"], "ordinary"),
                    absolutely_simple=_bool(entry["absolutely_simple"], "absolutely_simple"),
                    simplicity_witness=_witness(entry.get("simplicity_witness")),
                    discriminant=_int(entry["discriminant"], "discriminant"),
                )
            )
        ns_rank = data["ns_rank"]
        theta = data["theta_generates"]
        return Certificate(
            curve=curve,
            genus=genus,
            prime_certs=tuple(prime_certs),
            disc_gcd=_int(data["disc_gcd"], "disc_gcd"),
            end_ring=EndRingVerdict(data["end_ring"]),
            ns_rank=None if ns_rank is None else _int(ns_rank, "ns_rank"),
            theta_generates=None if theta is None else _bool(theta, "theta_generates"),
            deduction_log=tuple(
                DeductionStep(s["step"], s["statement"], s["anchor"], s.get("inputs", {}))
                for s in data["deduction_log"]
            ),
            relax_ordinary=_bool(data.get("relax_ordinary", False), "relax_ordinary"),
            expression=c.get("expression"),
        )
    except CertificateFormatError:
        raise
    except (KeyError, TypeError, ValueError, CertificationError) as exc:
        raise CertificateFormatError(f"malformed certificate: {type(exc).__name__}: {exc}") from exc


def dumps(cert: Certificate) -> str:
    return json.dumps(certificate_to_dict(cert), indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Certificate:
    return certificate_from_dict(json.loads(text))


def write_certificate(cert: Certificate, path) -> None:
    """Write atomically: temp file in the target directory, then rename."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".cert-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(dumps(cert))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_certificate(path) -> Certificate:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
