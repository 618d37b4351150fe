"""
Error taxonomy for karyx.

Every error carries the process exit code the CLI reports for it, so the
command layer can translate failures in one place.
"""

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_PRECONDITION = 4
EXIT_VERIFICATION_FAILED = 5


class KaryxError(Exception):
    """Base class for all karyx errors"""

    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class UsageError(KaryxError):
    """Bad command line or settings"""

    exit_code = EXIT_USAGE


class InputError(KaryxError, ValueError):
    """Unreadable or schema-invalid input file"""

    exit_code = EXIT_INPUT


class PreconditionError(KaryxError, ValueError):
    """A mathematical precondition of an operation does not hold"""

    exit_code = EXIT_PRECONDITION
