"""Exact angle comparisons for imaginary quadratic embeddings.

Angles are kept symbolic as `rad + pi_mult * pi` with rational rad and
pi_mult; an element's argument is never materialized as a float when a
verdict depends on it.  Comparisons are decided by:

  * pure integer sign tests whenever a tie is possible (axes, diagonals,
    pi/3-family rays, and rational multiples of pi up to denominator 48 via
    a power test), and
  * rigorous interval refinement (mpmath.iv, doubling precision) when
    equality is impossible, so the verdict is always proven.

Ties between arg(alpha) and rad + pi_mult*pi with rad != 0 cannot occur:
tan(arg(alpha)) is algebraic while tan of a nonzero rational plus a rational
multiple of pi is transcendental.  Ties at rational multiples of pi require
tan(pi_mult * pi) to be 0, infinite, or a pure rational multiple of
sqrt(|d|), which pins the denominator to {1,2,3,4,6}; denominators up to 48
are still checked exactly by the power test as defense in depth.
"""

from __future__ import annotations

import threading
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from math import atan2, sqrt

from mpmath import iv, mp

from .errors import PrecisionError
from .rings import QuadInt

_MAX_PREC = 1 << 13
_POWER_TEST_MAX_DEN = 48

# iv.prec is context-global state; hold the lock across each refinement so
# interval verdicts stay deterministic under threaded counting.
_IV_LOCK = threading.RLock()


@contextmanager
def _iv_prec(prec: int):
    with _IV_LOCK:
        old = iv.prec
        iv.prec = prec
        try:
            yield
        finally:
            iv.prec = old


@dataclass(frozen=True)
class Angle:
    """The angle rad + pi_mult * pi, both parts exact rationals."""

    rad: Fraction = Fraction(0)
    pi_mult: Fraction = Fraction(0)

    @staticmethod
    def of(rad=0, pi_mult=0) -> "Angle":
        return Angle(Fraction(rad), Fraction(pi_mult))

    def __add__(self, other: "Angle") -> "Angle":
        return Angle(self.rad + other.rad, self.pi_mult + other.pi_mult)

    def __sub__(self, other: "Angle") -> "Angle":
        return Angle(self.rad - other.rad, self.pi_mult - other.pi_mult)

    def __neg__(self) -> "Angle":
        return Angle(-self.rad, -self.pi_mult)

    def scaled(self, q) -> "Angle":
        q = Fraction(q)
        return Angle(self.rad * q, self.pi_mult * q)

    @property
    def is_zero(self) -> bool:
        return self.rad == 0 and self.pi_mult == 0

    def to_float(self) -> float:
        return float(self.rad) + float(self.pi_mult) * 3.141592653589793

    def __str__(self) -> str:
        if self.pi_mult == 0:
            return str(self.rad)
        if self.rad == 0:
            return f"{self.pi_mult}*pi"
        return f"{self.rad}+{self.pi_mult}*pi"


ZERO = Angle()
FULL_TURN = Angle.of(0, 2)


def _iv_fraction(q: Fraction, _ctx=iv):
    return _ctx.mpf(q.numerator) / q.denominator


def _iv_angle(angle: Angle):
    return _iv_fraction(angle.rad) + iv.pi * _iv_fraction(angle.pi_mult)


def angle_sign(angle: Angle) -> int:
    """Exact sign of rad + pi_mult * pi.

    Zero only when both parts vanish (pi is irrational), so interval
    refinement always terminates on the mixed case.
    """
    if angle.pi_mult == 0:
        q = angle.rad
        return (q > 0) - (q < 0)
    if angle.rad == 0:
        q = angle.pi_mult
        return (q > 0) - (q < 0)
    prec = 64
    while prec <= _MAX_PREC:
        with _iv_prec(prec):
            x = _iv_angle(angle)
            if x > 0:
                return 1
            if x < 0:
                return -1
        prec *= 2
    raise PrecisionError(f"could not separate {angle} from zero")


def cmp_angle(a: Angle, b: Angle) -> int:
    return angle_sign(a - b)


def angle_floor_div(angle: Angle, divisor: Angle) -> int:
    """floor(angle / divisor) for a positive rational-multiple-of-pi divisor.

    Used to locate the fundamental wedge; divisor.rad must be 0.
    """
    if divisor.rad != 0 or divisor.pi_mult <= 0:
        raise ValueError("divisor must be a positive multiple of pi")
    const = angle.pi_mult / divisor.pi_mult  # exact part
    coeff = angle.rad / divisor.pi_mult  # coefficient of 1/pi
    if coeff == 0:
        num, den = const.numerator, const.denominator
        return num // den
    # const + coeff/pi is never an integer when coeff != 0
    prec = 64
    while prec <= _MAX_PREC:
        with _iv_prec(prec):
            x = _iv_fraction(const) + _iv_fraction(coeff) / iv.pi
            lo, hi = int(mp.floor(x.a)), int(mp.floor(x.b))
            if lo == hi:
                return lo
        prec *= 2
    raise PrecisionError(f"could not resolve floor of {angle} / {divisor}")


def normalize_angle(angle: Angle) -> tuple[int, Angle]:
    """(k, reduced) with angle = reduced + 2*pi*k and reduced in [0, 2*pi)."""
    k = angle_floor_div(angle, FULL_TURN)
    return k, Angle(angle.rad, angle.pi_mult - 2 * k)


# -- element argument machinery ----------------------------------------------


def _axis_marker(alpha: QuadInt) -> int | None:
    """Even marker 0/2/4/6 when alpha lies on an embedding axis, else None."""
    if alpha.v == 0:
        return 0 if alpha.u > 0 else 4
    if alpha.u == 0:
        return 2 if alpha.v > 0 else 6
    return None


def _quadrant_marker(alpha: QuadInt) -> int:
    """Markers: even = axes (0, pi/2, pi, 3pi/2), odd = open quadrants."""
    ax = _axis_marker(alpha)
    if ax is not None:
        return ax
    if alpha.u > 0 and alpha.v > 0:
        return 1
    if alpha.u < 0 and alpha.v > 0:
        return 3
    if alpha.u < 0 and alpha.v < 0:
        return 5
    return 7


def _angle_marker(t: Angle) -> int:
    """Marker of a normalized angle in [0, 2*pi] against the quarter grid.

    2*pi itself gets marker 8 so that every element argument, which lives in
    [0, 2*pi), compares strictly below a full-turn upper bound.
    """
    for k in range(5):
        c = cmp_angle(t, Angle.of(0, Fraction(k, 2)))
        if c == 0:
            return 2 * k
        if c < 0:
            return 2 * k - 1
    raise ValueError(f"angle {t} not in [0, 2*pi]")


def cmp_element_args(a: QuadInt, b: QuadInt) -> int:
    """Compare arg(a) with arg(b) in [0, 2*pi), exactly (d < 0 embedding)."""
    qa, qb = _quadrant_marker(a), _quadrant_marker(b)
    if qa != qb:
        return -1 if qa < qb else 1
    if qa % 2 == 0:
        return 0  # same axis
    # same open quadrant: cross(a, b) = |a||b| sin(arg b - arg a), so a
    # positive cross product means arg(a) < arg(b)
    cross = a.u * b.v - a.v * b.u
    return (cross < 0) - (cross > 0)


def _tan_squared_of_pi_multiple(b: Fraction) -> tuple[int, Fraction] | None:
    """(sign, tan^2) of tan(b*pi) for b with denominator in {3, 4, 6}, given
    that b*pi lies strictly inside a quadrant.  None when not in the table."""
    frac = b % 1
    table = {
        Fraction(1, 4): (1, Fraction(1)),
        Fraction(3, 4): (-1, Fraction(1)),
        Fraction(1, 3): (1, Fraction(3)),
        Fraction(2, 3): (-1, Fraction(3)),
        Fraction(1, 6): (1, Fraction(1, 3)),
        Fraction(5, 6): (-1, Fraction(1, 3)),
    }
    return table.get(frac)


def _element_on_pi_ray(alpha: QuadInt, b: Fraction) -> int | None:
    """If arg(alpha) is exactly a rational multiple of pi, return the exact
    three-way comparison against b*pi (b normalized to [0, 2)); else None.

    Power test: arg(alpha) = k*pi/n forces alpha^(2n) onto the positive real
    axis; the converse pins arg(alpha) to the grid pi/n, after which the
    comparison is exact rational arithmetic.
    """
    n = b.denominator
    if n > _POWER_TEST_MAX_DEN:
        return None
    beta = alpha ** (2 * n)
    if beta.v != 0 or beta.u <= 0:
        return None
    # arg(alpha) = k*pi/n exactly; recover k from a float (grid spacing
    # pi/n >= pi/48 dwarfs double rounding error at desk coordinate sizes)
    d = abs(alpha.ring.d)
    approx = atan2(alpha.v * sqrt(d), alpha.u) % 6.283185307179586
    k = round(approx * n / 3.141592653589793)
    grid = Fraction(k, n) % 2
    # confirm: alpha^(2n/gcd) ... the power test already certifies membership
    return (grid > b) - (grid < b)


def cmp_element_arg(alpha: QuadInt, t: Angle) -> int:
    """Compare arg(alpha) (in [0, 2*pi)) with the angle t (in [0, 2*pi]).

    alpha must be a nonzero element of an imaginary ring; the verdict is
    exact.
    """
    if alpha.ring.d >= 0:
        raise ValueError("element argument comparisons need an imaginary ring")
    if alpha.is_zero:
        raise ValueError("zero element has no argument")
    me = _quadrant_marker(alpha)
    mt = _angle_marker(t)
    if me != mt:
        return -1 if me < mt else 1
    if me % 2 == 0:
        return 0  # both exactly on the same axis
    # same open quadrant
    D = -alpha.ring.d
    if t.rad == 0:
        b = t.pi_mult % 2
        tab = _tan_squared_of_pi_multiple(b)
        if tab is not None:
            # tan is strictly increasing inside any quadrant
            tsign, tsq = tab
            ssign = 1 if (alpha.u > 0) == (alpha.v > 0) else -1
            if ssign != tsign:
                return -1 if ssign < tsign else 1
            lhs = alpha.v * alpha.v * D * tsq.denominator
            rhs = alpha.u * alpha.u * tsq.numerator
            if lhs == rhs:
                return 0
            slope_cmp = 1 if lhs > rhs else -1  # |slope| vs |tan t|
            return slope_cmp if ssign > 0 else -slope_cmp
        exact = _element_on_pi_ray(alpha, b)
        if exact is not None:
            return exact
    # No tie is possible now; refine until the intervals separate.
    prec = 64
    while prec <= _MAX_PREC:
        with _iv_prec(prec):
            x = iv.mpf(alpha.u) / 2
            y = iv.sqrt(iv.mpf(D)) * alpha.v / 2
            arg = iv.atan2(y, x)
            if alpha.v < 0:
                arg += 2 * iv.pi
            tv = _iv_angle(t)
            if arg < tv:
                return -1
            if arg > tv:
                return 1
        prec *= 2
    raise PrecisionError(f"could not separate arg({alpha}) from {t}")


def element_arg_float(alpha: QuadInt) -> float:
    """Float argument in [0, 2*pi); search heuristics only."""
    d = abs(alpha.ring.d)
    return atan2(alpha.v * sqrt(d), alpha.u) % 6.283185307179586
