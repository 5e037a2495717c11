"""Exception hierarchy.

Everything raised deliberately by the package derives from
:class:`CertificationError`, so callers (the CLI in particular) can map
failures onto exit codes without catching unrelated bugs.
"""


class CertificationError(Exception):
    """Base class. ``stage`` names the pipeline step that failed, if known."""

    stage: str | None = None

    def __init__(self, message: str = "", stage: str | None = None):
        super().__init__(message)
        if stage is not None:
            self.stage = stage

    def __str__(self) -> str:
        msg = super().__str__()
        return f"[{self.stage}] {msg}" if self.stage else msg


class InvalidParameterError(CertificationError, ValueError):
    pass


class SingularCurveError(CertificationError, ValueError):
    pass


class UnsupportedGenusError(CertificationError, ValueError):
    pass


class UnsupportedDegreeError(CertificationError, ValueError):
    pass


class InvalidInputError(CertificationError, ValueError):
    pass


class PreconditionError(CertificationError):
    pass


class BadReductionError(PreconditionError):
    pass


class ResourceLimitError(CertificationError):
    pass


class CorruptCountsError(CertificationError):
    """Newton's identities produced a non-integral coefficient."""


class InvalidCountsError(CertificationError, ValueError):
    pass


class InvalidWeilError(PreconditionError):
    pass


class InvalidDiscriminantError(CertificationError, ValueError):
    pass


class InvalidPairError(CertificationError, ValueError):
    pass


class SearchExhaustedError(CertificationError):
    def __init__(self, message: str, partial=()):
        super().__init__(message)
        self.partial = list(partial)


class ParseError(CertificationError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
