"""Per-ring constants of the counting laws: unit count g, fundamental unit
eta, class number h, and the generalized Euler phi."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from pathlib import Path

from .errors import UnsupportedRealRingError
from .gaussian import euler_phi_gaussian  # re-exported: lives with Z[i] machinery
from .rings import QuadInt, RingDescriptor
from .units import fundamental_unit, smallest_tp_unit, tp_ratio_scale, unit_count

__all__ = [
    "RingInvariants",
    "class_number",
    "euler_phi_gaussian",
    "fundamental_unit",
    "load_class_number_overrides",
    "reduced_forms",
    "ring_invariants",
    "smallest_tp_unit",
    "tp_ratio_scale",
    "unit_count",
]

# Audited class numbers of the supported real rings; every entry is validated
# by the Minkowski-bound enumeration in the test suite and can be overridden
# through a config file for rings outside this table.
REAL_CLASS_NUMBERS: dict[int, int] = {2: 1, 3: 1, 5: 1, 6: 1, 7: 1, 11: 1, 13: 1}


def reduced_forms(disc: int) -> list[tuple[int, int, int]]:
    """Reduced primitive binary quadratic forms (A, B, C) of negative
    discriminant: |B| <= A <= C, B >= 0 whenever |B| = A or A = C."""
    if disc >= 0 or disc % 4 not in (0, 1):
        raise ValueError("need a negative discriminant = 0 or 1 mod 4")
    forms = []
    amax = isqrt(-disc // 3)
    for a in range(1, amax + 1):
        for b in range(-a, a + 1):
            if (b - disc) % 2:
                continue
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if (abs(b) == a or a == c) and b < 0:
                continue
            if gcd(gcd(a, abs(b)), c) != 1:
                continue
            forms.append((a, b, c))
    return forms


def load_class_number_overrides(path: str | Path) -> dict[int, int]:
    """Parse `h.<d> = <integer>` lines; '#' starts a comment."""
    overrides: dict[int, int] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            key, value = line.split("=", 1)
            key = key.strip()
            if not key.startswith("h."):
                raise ValueError
            d = int(key[2:])
            h = int(value.strip())
            if h < 1:
                raise ValueError
        except ValueError:
            raise ValueError(f"{path}:{lineno}: expected 'h.<d> = <positive integer>'")
        overrides[d] = h
    return overrides


def class_number(ring: RingDescriptor, overrides: dict[int, int] | None = None) -> int:
    """Class number: exact form count for d < 0; audited table (or override)
    for the supported real rings."""
    if ring.d < 0:
        return len(reduced_forms(ring.discriminant))
    if overrides and ring.d in overrides:
        return overrides[ring.d]
    if ring.d in REAL_CLASS_NUMBERS:
        return REAL_CLASS_NUMBERS[ring.d]
    raise UnsupportedRealRingError(
        f"no audited class number for d={ring.d}; supply a config override"
    )


@dataclass(frozen=True)
class RingInvariants:
    """g, eta, h and the ratio scale, bundled for reporting."""

    ring: RingDescriptor
    g: int | None  # None encodes the infinite unit group of a real ring
    eta: QuadInt | None
    eta_norm: int | None
    h: int
    tp_scale: QuadInt | None

    @property
    def unit_group_finite(self) -> bool:
        return self.g is not None


def ring_invariants(ring: RingDescriptor, overrides: dict[int, int] | None = None) -> RingInvariants:
    h = class_number(ring, overrides)
    if ring.is_imaginary:
        return RingInvariants(ring, unit_count(ring), None, None, h, None)
    eta = fundamental_unit(ring)
    return RingInvariants(ring, None, eta, eta.norm(), h, tp_ratio_scale(ring))


def minkowski_bound(ring: RingDescriptor) -> Fraction:
    """Rational upper bound on the Minkowski constant of the ring: every
    ideal class contains an ideal of norm at most this value.  Used by the
    table-audit fixture, not by production paths."""
    disc = abs(ring.discriminant)
    root_up = Fraction(isqrt(disc * 10**12) + 1, 10**6)
    if ring.is_imaginary:
        return Fraction(2) * root_up / Fraction(314159, 100000)  # (2/pi) sqrt|disc|
    return root_up / 2
