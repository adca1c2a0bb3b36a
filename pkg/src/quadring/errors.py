"""Exception types shared across the package.

Domain errors (bad ring parameters, incompatible windows, coprimality
failures) derive from DomainError so the CLI can map them all to one exit
status.  CapExceeded is separate: it is retryable, not a usage mistake.
"""


class QuadringError(Exception):
    """Base class for all package-specific errors."""


class DomainError(QuadringError, ValueError):
    """Invalid mathematical input (wrong ring, bad window, non-coprime class)."""


class NotSquarefreeError(DomainError):
    pass


class DegenerateDError(DomainError):
    """d in {0, 1} does not define a quadratic ring."""


class RingMismatchError(DomainError):
    """Operands belong to different rings."""


class UnsupportedRingError(DomainError):
    """Operation only defined for a specific ring (usually d = -1)."""


class ImaginaryRingError(DomainError):
    """Operation requires a real ring (d > 0)."""


class RealRingError(DomainError):
    """Operation requires an imaginary ring (d < 0)."""


class NotPrimeError(DomainError):
    pass


class PreconditionError(DomainError):
    """A stated precondition was violated (e.g. inert prime passed to a
    norm-equation solver)."""


class NotCoprimeError(DomainError):
    pass


class WindowTooWideError(DomainError):
    """Ratio window wider than the square of the fundamental unit."""


class NonPositiveWindowError(DomainError):
    pass


class UnsupportedRealRingError(DomainError):
    """Real ring outside the audited class-number table and no override given."""


class ZeroElementError(DomainError):
    pass


class ZeroOrUnitError(DomainError):
    pass


class BothZeroError(DomainError):
    pass


class DegenerateRegionError(DomainError):
    """Empty or zero-width target region."""


class EmptyAfterReductionError(DegenerateRegionError):
    """Target region became empty after canonicalization."""


class ZeroTargetError(DomainError):
    """0 is not a quotient of nonzero primes; no sector can contain it."""


class CapExceededError(QuadringError):
    """Search exhausted the norm cap without finding a witness.

    Retryable: raise the cap and run again.
    """

    def __init__(self, cap, examined):
        super().__init__(
            f"no witness with numerator norm <= {cap} (examined {examined} candidates)"
        )
        self.cap = cap
        self.examined = examined


class PrecisionError(QuadringError):
    """Adaptive-precision comparison failed to separate two quantities.

    Mathematically unreachable for the comparisons this package performs;
    raised instead of ever returning an unproven verdict.
    """
