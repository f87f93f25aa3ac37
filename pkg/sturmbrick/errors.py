from typing import Optional


class SturmbrickError(Exception):
    """Base class for every error raised on malformed input."""


class WordError(SturmbrickError, ValueError):
    pass


class SlopeError(WordError):
    pass


class AlgebraError(SturmbrickError, ValueError):
    def __init__(self, message: str, violations: Optional[list] = None):
        super().__init__(message)
        self.violations = list(violations or [])


class StringError(AlgebraError):
    pass


class SpecError(SturmbrickError, ValueError):
    pass
