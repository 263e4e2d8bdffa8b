"""Exception taxonomy shared by all modules."""


class LparamsError(Exception):
    """Base class for all library errors."""


class InputError(LparamsError):
    """Malformed textual or structured input (CLI exit code 2)."""


class InvalidCartan(LparamsError):
    """Pairing matrix of a candidate datum is not finite type."""


class RankMismatch(LparamsError):
    """Explicit root/coroot input with inconsistent shapes."""


class NotBasedAut(LparamsError):
    """Matrix does not permute the simple roots of the datum."""


class DatumMismatch(LparamsError):
    """Operands built over different root data."""


class ContextMismatch(LparamsError):
    """Operands built over different torus or L-group contexts."""


class NoRoots(LparamsError):
    """Operation needs a root but the datum has none."""


class InvalidParam(LparamsError):
    """Structurally broken parameter data."""


class ValidityC(InvalidParam):
    """w * theta0(w) != e, so int(phi(j)) is not an involution."""


class ValidityIntegrality(InvalidParam):
    """lambda - theta(lambda) is not an integer vector."""


class ValidityE(InvalidParam):
    """phi(j)^2 != phi(-1) in the torus."""


class NotInvolution(LparamsError):
    """An automorphism required to square to the identity does not."""


class PreconditionViolated(LparamsError):
    """Documented operation precondition does not hold."""


class NormalizationRequired(LparamsError):
    """Parameter is not in the position the operation needs.

    Carries a witness root when raised by levi_of.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DimensionMismatch(LparamsError):
    """Vectors or representations of incompatible sizes."""
