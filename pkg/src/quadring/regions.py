"""Target regions: annular sectors of the complex plane and intervals of the
real line (the latter double as conjugate-ratio windows in real rings)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .angles import FULL_TURN, ZERO, Angle, cmp_angle, cmp_element_arg
from .errors import DegenerateRegionError, NonPositiveWindowError
from .rings import QuadInt


def as_angle(x) -> Angle:
    if isinstance(x, Angle):
        return x
    return Angle(Fraction(x))


@dataclass(frozen=True)
class AnnularSector:
    """{z : psi1 <= arg z <= psi2, r < |z| < R}; boundary openness is chosen
    per operation (counting uses [psi1, psi2), searches use the open sector).

    Angles satisfy 0 <= psi1 < psi2 <= 2*pi.  R may be None for "no outer
    bound".  Radii are compared through their squares, exactly.
    """

    psi1: Angle
    psi2: Angle
    r: Fraction = Fraction(0)
    R: Fraction | None = None

    def __post_init__(self):
        if cmp_angle(self.psi1, ZERO) < 0 or cmp_angle(self.psi2, FULL_TURN) > 0:
            raise DegenerateRegionError("sector angles must lie in [0, 2*pi]")
        if cmp_angle(self.psi1, self.psi2) >= 0:
            raise DegenerateRegionError("sector needs psi1 < psi2")
        if self.r < 0 or (self.R is not None and self.R <= self.r):
            raise DegenerateRegionError("sector needs 0 <= r < R")

    @staticmethod
    def of(psi1, psi2, r=0, R=None) -> "AnnularSector":
        return AnnularSector(
            as_angle(psi1), as_angle(psi2), Fraction(r), None if R is None else Fraction(R)
        )

    @property
    def width(self) -> Angle:
        return self.psi2 - self.psi1

    def contains_arg_counting(self, alpha: QuadInt) -> bool:
        """arg(alpha) in [psi1, psi2), the half-open counting convention."""
        return cmp_element_arg(alpha, self.psi1) >= 0 and cmp_element_arg(alpha, self.psi2) < 0

    def contains_arg_open(self, alpha: QuadInt) -> bool:
        """arg(alpha) strictly inside (psi1, psi2)."""
        return cmp_element_arg(alpha, self.psi1) > 0 and cmp_element_arg(alpha, self.psi2) < 0

    def norm_in_annulus_counting(self, n: int) -> bool:
        """r^2 < n <= R^2 (used by stream filters)."""
        if n <= self.r * self.r:
            return False
        return self.R is None or n <= self.R * self.R

    def describe(self) -> dict:
        return {
            "kind": "annular_sector",
            "psi1": str(self.psi1),
            "psi2": str(self.psi2),
            "r": str(self.r),
            "R": None if self.R is None else str(self.R),
        }


@dataclass(frozen=True)
class RealInterval:
    """(a, b) on the real line; as a conjugate-ratio window the counting
    convention is a < ratio <= b and both endpoints must be positive."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        if self.a >= self.b:
            raise DegenerateRegionError("interval needs a < b")

    @staticmethod
    def of(a, b) -> "RealInterval":
        return RealInterval(Fraction(a), Fraction(b))

    def require_positive(self) -> None:
        if self.a <= 0:
            raise NonPositiveWindowError("ratio window needs 0 < a < b")

    def describe(self) -> dict:
        return {"kind": "real_interval", "a": str(self.a), "b": str(self.b)}


Region = AnnularSector | RealInterval
