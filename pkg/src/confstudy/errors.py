"""Exception hierarchy.

Every mathematical precondition failure derives from :class:`ConfStudyError`
and carries a short machine-readable ``code`` that the CLI reports.
"""


class ConfStudyError(Exception):
    code = "ConfStudyError"

    def __init__(self, detail="", **info):
        super().__init__(detail)
        self.detail = detail
        self.info = info


class SchemaError(ConfStudyError):
    """Malformed JSON input (CLI exit code 1)."""

    code = "SchemaError"


class NotAVector(ConfStudyError):
    code = "NotAVector"


class ZeroVector(ConfStudyError):
    code = "ZeroVector"


class NotEven(ConfStudyError):
    code = "NotEven"


class InvalidParams(ConfStudyError):
    code = "InvalidParams"


class NotOnStudy(ConfStudyError):
    code = "NotOnStudy"


class NotALine(ConfStudyError):
    code = "NotALine"


class ZeroDirection(ConfStudyError):
    code = "ZeroDirection"


class DegenerateBlade(ConfStudyError):
    code = "DegenerateBlade"


class NormalizeAtInfinity(ConfStudyError):
    code = "NormalizeAtInfinity"


class NotRotorPolynomial(ConfStudyError):
    code = "NotRotorPolynomial"


class UnfactorableOverRationals(ConfStudyError):
    code = "UnfactorableOverRationals"


class NoFactorization(ConfStudyError):
    code = "NoFactorization"
