"""The error family. Every failure carries the exit code the CLI should return.

0 is success and is never raised; 2 means a checked identity failed; 3 means the inputs
themselves were unusable.
"""

from __future__ import annotations

EXIT_VERIFY = 2
EXIT_PARAMS = 3


class CycloBrauerError(RuntimeError):
    """A cyclobrauer failure carrying an exit code."""

    def __init__(self, message: str, exit_code: int = EXIT_VERIFY):
        super().__init__(message)
        self.exit_code = exit_code


class VerificationError(CycloBrauerError):
    """An identity that must hold did not (relation residual, certificate, count)."""

    def __init__(self, message: str):
        super().__init__(message, exit_code=EXIT_VERIFY)


class ParameterError(CycloBrauerError):
    """Bad input: sizes, ranges, non-admissible or atypical parameters, size guards."""

    def __init__(self, message: str):
        super().__init__(message, exit_code=EXIT_PARAMS)
