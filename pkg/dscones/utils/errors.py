"""
Exception hierarchy for dscones.

Every error carries the process exit code the CLI reports for it, the same
way an HTTP layer carries a status code. Library code only raises; the
mapping to exit codes happens once, in dscones.main.
"""


class DsConesError(Exception):
     """Base class for all library errors (evaluation precondition by default)."""
     exit_code: int = 4

     def __init__(self, message: str):
          super().__init__(message)
          self.message = message


class DimensionMismatchError(DsConesError):
     """Operands live in spaces of different dimension."""


class NotPositiveDefiniteError(DsConesError):
     """A gram matrix failed the leading-principal-minor test."""


class PreconditionError(DsConesError):
     """A documented precondition of an operation was violated."""


class NotRegularError(PreconditionError):
     """A point was required to be regular, R-regular or R-dual-regular."""


class GenericityError(PreconditionError):
     """Recursive genericity validation rejected the input."""


class OrbitError(PreconditionError):
     """lambda is not in the W-orbit required by the operation."""


class UnsupportedSystemError(DsConesError):
     """Unknown Cartan type, invalid Cartan matrix or rank above RANK_LIMIT."""
     exit_code = 2


class MathPreconditionError(DsConesError):
     """The request is mathematically unsupported for this system (e.g. -1 not in W)."""
     exit_code = 3
