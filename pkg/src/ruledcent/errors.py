"""Exception and warning types shared across the package."""


class RuledCentError(Exception):
    """Base class for all errors raised by this package."""


class BelowNormalization(RuledCentError):
    """The symplectic parameter is below the normalized range."""


class ParityMismatch(RuledCentError):
    """The bundle index parity does not match the surface kind."""


class TrivialGroup(RuledCentError):
    """The cyclic group order is less than 2."""


class NotEffective(RuledCentError):
    """The parameter tuple does not define an effective action."""


class NotInvertible(RuledCentError):
    """Requested reparametrization needs a unit that does not exist."""


class NotHamiltonian(RuledCentError):
    """No Hamiltonian torus with the requested index exists for this form."""


class NotApplicable(RuledCentError):
    """The requested move is undefined on this parameter triple."""


class NoSolution(RuledCentError):
    """The defining congruence of a move has no solution."""


class UnresolvedClass(RuledCentError):
    """The classification declines this input; downstream data is undefined."""


class OutOfRegime(RuledCentError):
    """The extension computation is only valid inside its stated regime.

    ``code`` is a stable machine-readable tag so callers can map the
    failure to a classification reason.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class EffectivenessWarning(UserWarning):
    """gcd(a, b) > 1 while gcd(a, b, n) = 1: effective for the cyclic group
    but not liftable to an effective circle with the same parameters."""
