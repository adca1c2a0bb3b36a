"""Unit groups: the finite unit lists of imaginary rings and fundamental
units of real rings via the continued fraction of sqrt(d)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .errors import ImaginaryRingError, RealRingError
from .rings import QuadInt, RingDescriptor


def unit_count(ring: RingDescriptor) -> int:
    """Number of units of an imaginary quadratic ring: 4 for d=-1, 6 for
    d=-3, otherwise 2."""
    if ring.d > 0:
        raise RealRingError("real quadratic rings have infinitely many units")
    if ring.d == -1:
        return 4
    if ring.d == -3:
        return 6
    return 2


@lru_cache(maxsize=None)
def imaginary_units(ring: RingDescriptor) -> tuple[QuadInt, ...]:
    """All units, ordered by increasing argument starting at 1."""
    if ring.d == -1:
        i = ring.element(0, 1)
        return (ring.one, i, -ring.one, -i)
    if ring.d == -3:
        w = ring.half(1, 1)  # primitive sixth root of unity
        out = [ring.one]
        for _ in range(5):
            out.append(out[-1] * w)
        return tuple(out)
    if ring.d < 0:
        return (ring.one, -ring.one)
    raise RealRingError("imaginary_units needs d < 0")


def rotation_unit(ring: RingDescriptor) -> QuadInt:
    """The unit of smallest positive argument (angle 2*pi/g)."""
    return imaginary_units(ring)[1]


def _pell_minimal(d: int) -> tuple[int, int]:
    """Minimal x, y > 0 with x^2 - d*y^2 = +-1, via the continued fraction
    of sqrt(d)."""
    a0 = isqrt(d)
    m, q, a = 0, 1, a0
    p_prev, p_cur = 1, a0
    q_prev, q_cur = 0, 1
    while True:
        m = a * q - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        if q == 1:
            return p_cur, q_cur
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev


@lru_cache(maxsize=None)
def fundamental_unit(ring: RingDescriptor) -> QuadInt:
    """The smallest unit eta > 1 of the ring of integers (d > 0).

    The Pell minimum from the continued fraction covers Z[sqrt(d)]; for
    d = 1 mod 4 a strictly smaller half-integer unit (u, v odd with
    u^2 - d v^2 = +-4) may exist, and then its cube is the Pell unit, so a
    short odd-v scan below the Pell solution finds it.
    """
    d = ring.d
    if d < 0:
        raise ImaginaryRingError("imaginary rings have no fundamental unit")
    x, y = _pell_minimal(d)
    if ring.is_half_basis:
        v = 1
        while v <= y:
            for s in (-4, 4):  # smaller |u| first: minimal value at this v
                uu = d * v * v + s
                if uu > 0:
                    u = isqrt(uu)
                    if u * u == uu and (u - v) % 2 == 0 and u % 2 == 1:
                        return ring.half(u, v)
            v += 2
    return ring.element(x, y)


@lru_cache(maxsize=None)
def smallest_tp_unit(ring: RingDescriptor) -> QuadInt:
    """Smallest totally positive unit > 1: eta when N(eta) = 1, else eta^2."""
    eta = fundamental_unit(ring)
    return eta if eta.norm() == 1 else eta * eta


@lru_cache(maxsize=None)
def tp_ratio_scale(ring: RingDescriptor) -> QuadInt:
    """Factor by which alpha'/alpha changes under multiplication by the
    smallest totally positive unit sigma: sigma'/sigma = (sigma')^2 since
    N(sigma) = 1.  Equals eta^-2 or eta^-4 according to N(eta)."""
    sigma = smallest_tp_unit(ring)
    c = sigma.conjugate()
    return c * c


def eta_upper_bound(ring: RingDescriptor) -> Fraction:
    """A rational upper bound on the fundamental unit's value."""
    eta = fundamental_unit(ring)
    root_up = Fraction(isqrt(ring.d) + 1)
    return Fraction(eta.u, 2) + Fraction(eta.v, 2) * root_up


def value_lower_bound(alpha: QuadInt, digits: int = 12) -> Fraction:
    """A rational lower bound on the real embedding of alpha (d > 0)."""
    scale = 10**digits
    root_dn = Fraction(isqrt(alpha.ring.d * scale * scale), scale)
    root_up = root_dn + Fraction(1, scale)
    lo = Fraction(alpha.u, 2) + Fraction(alpha.v, 2) * (root_dn if alpha.v >= 0 else root_up)
    return lo
