"""
Exception hierarchy for jkpencil.

Every error raised by the library derives from JKPencilError. The CLI maps
each family to a stable exit code (see EXIT_CODES).
"""


class JKPencilError(Exception):
    """Base class for all jkpencil errors."""

    exit_code: int = 1


class InputError(JKPencilError, ValueError):
    """Unparsable text, JSON or block specification."""

    exit_code = 2


class StructuralError(JKPencilError, ValueError):
    """A structural precondition fails: shape, skew-symmetry, parity, invertibility."""

    exit_code = 3


class PreconditionError(JKPencilError, ValueError):
    """A module-level precondition fails (not bi-isotropic, not in kernel, ...)."""

    exit_code = 4


class RationalEigenvalueRequired(PreconditionError):
    """An explicit eigenvector was requested at a non-rational eigenvalue."""


class InternalInconsistency(JKPencilError, RuntimeError):
    """A bookkeeping identity or postcondition that theory guarantees was violated."""

    exit_code = 1


EXIT_CODES = {
    "ok": 0,
    "internal": InternalInconsistency.exit_code,
    "input": InputError.exit_code,
    "structural": StructuralError.exit_code,
    "check_failed": PreconditionError.exit_code,
}
