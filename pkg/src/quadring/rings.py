"""Exact arithmetic in the ring of integers of Q(sqrt(d)).

Every element is stored in half-coordinates: alpha = (u + v*sqrt(d)) / 2 with
u = v mod 2.  When d is not 1 mod 4 the ring is Z[sqrt(d)] and u, v are both
even; when d = 1 mod 4 odd pairs are allowed as well.  One representation
covers both integral bases and makes divisibility checks uniform.

All arithmetic is exact on Python integers.  Floating point never decides
anything in this module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .errors import (
    BothZeroError,
    DegenerateDError,
    ImaginaryRingError,
    NotSquarefreeError,
    RingMismatchError,
    UnsupportedRingError,
    ZeroElementError,
)
from .intmath import squarefree


@dataclass(frozen=True)
class RingDescriptor:
    """The ring of integers of Q(sqrt(d)) for a squarefree d not in {0, 1}."""

    d: int

    @property
    def is_half_basis(self) -> bool:
        """True when the integral basis is {1, (1+sqrt(d))/2}."""
        return self.d % 4 == 1

    @property
    def basis_mode(self) -> str:
        return "half" if self.is_half_basis else "standard"

    @property
    def is_imaginary(self) -> bool:
        return self.d < 0

    @property
    def signature(self) -> str:
        return "imaginary" if self.d < 0 else "real"

    @property
    def discriminant(self) -> int:
        return self.d if self.is_half_basis else 4 * self.d

    def element(self, a: int, b: int = 0) -> "QuadInt":
        """The element a + b*sqrt(d) with integer coordinates."""
        return QuadInt(2 * a, 2 * b, self)

    def half(self, u: int, v: int) -> "QuadInt":
        """The element (u + v*sqrt(d)) / 2; u and v must have equal parity."""
        return QuadInt(u, v, self)

    @property
    def zero(self) -> "QuadInt":
        return QuadInt(0, 0, self)

    @property
    def one(self) -> "QuadInt":
        return QuadInt(2, 0, self)

    def __repr__(self) -> str:
        return f"RingDescriptor(d={self.d})"


@lru_cache(maxsize=None)
def make_ring(d: int) -> RingDescriptor:
    """Validate d and return the ring descriptor for Q(sqrt(d))."""
    if d in (0, 1):
        raise DegenerateDError(f"d = {d} does not define a quadratic field")
    if not squarefree(d):
        raise NotSquarefreeError(f"d = {d} is not squarefree")
    return RingDescriptor(d)


@dataclass(frozen=True)
class QuadInt:
    """(u + v*sqrt(d)) / 2 with u = v mod 2; exact and immutable."""

    u: int
    v: int
    ring: RingDescriptor

    def __post_init__(self):
        if (self.u - self.v) % 2 != 0:
            raise ValueError(f"half-coordinates need equal parity: ({self.u}, {self.v})")
        if not self.ring.is_half_basis and (self.u % 2 or self.v % 2):
            raise ValueError(
                f"ring d={self.ring.d} uses the standard basis; coordinates must be even"
            )

    # -- arithmetic ---------------------------------------------------------

    def _same_ring(self, other: "QuadInt") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"mixing rings d={self.ring.d} and d={other.ring.d}")

    def __add__(self, other: "QuadInt") -> "QuadInt":
        self._same_ring(other)
        return QuadInt(self.u + other.u, self.v + other.v, self.ring)

    def __sub__(self, other: "QuadInt") -> "QuadInt":
        self._same_ring(other)
        return QuadInt(self.u - other.u, self.v - other.v, self.ring)

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.u, -self.v, self.ring)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadInt(self.u * other, self.v * other, self.ring)
        self._same_ring(other)
        d = self.ring.d
        uu = self.u * other.u + d * self.v * other.v
        vv = self.u * other.v + self.v * other.u
        # closure: uu and vv are always even for valid operands
        return QuadInt(uu // 2, vv // 2, self.ring)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QuadInt":
        if n < 0:
            inv = self.inverse()
            if inv is None:
                raise ZeroElementError("negative power of a non-unit")
            return inv ** (-n)
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "QuadInt":
        return QuadInt(self.u, -self.v, self.ring)

    def norm(self) -> int:
        """N(alpha) = alpha * conjugate(alpha) = (u^2 - d v^2) / 4, exact."""
        return (self.u * self.u - self.ring.d * self.v * self.v) // 4

    def abs_norm(self) -> int:
        return abs(self.norm())

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    @property
    def is_unit(self) -> bool:
        return self.abs_norm() == 1

    @property
    def is_rational(self) -> bool:
        return self.v == 0

    def inverse(self) -> "QuadInt | None":
        """Multiplicative inverse when self is a unit, else None."""
        n = self.norm()
        if abs(n) != 1:
            return None
        c = self.conjugate()
        return c if n == 1 else -c

    def sign_real(self) -> int:
        """Sign of the real embedding (u + v*sqrt(d))/2; requires d > 0.

        Decided exactly: for mixed-sign coordinates compare u^2 with d v^2.
        """
        if self.ring.d < 0:
            raise ImaginaryRingError("sign_real needs a real ring")
        u, v, d = self.u, self.v, self.ring.d
        if u == 0 and v == 0:
            return 0
        if u >= 0 and v >= 0:
            return 1
        if u <= 0 and v <= 0:
            return -1
        lhs, rhs = u * u, d * v * v
        if u > 0:  # v < 0: positive iff u > |v| sqrt(d)
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1  # u < 0, v > 0

    def is_totally_positive(self) -> bool:
        """alpha > 0 and conjugate(alpha) > 0 in the real embeddings (d > 0)."""
        return self.sign_real() > 0 and self.conjugate().sign_real() > 0

    def compare_real(self, other: "QuadInt") -> int:
        self._same_ring(other)
        return (self - other).sign_real()

    # -- display ------------------------------------------------------------

    def __str__(self) -> str:
        return format_element(self)

    def coords(self) -> tuple[Fraction, Fraction]:
        """(a, b) with alpha = a + b*sqrt(d) as exact fractions."""
        return Fraction(self.u, 2), Fraction(self.v, 2)


def try_divide(beta: QuadInt, alpha: QuadInt) -> QuadInt | None:
    """Exact quotient q with q*alpha = beta, or None when alpha does not
    divide beta in the ring.  Raises on division by zero."""
    if alpha.is_zero:
        raise ZeroDivisionError("division by the zero element")
    beta._same_ring(alpha)
    n = alpha.norm()
    prod = beta * alpha.conjugate()  # = q * N(alpha) if divisible
    if prod.u % n or prod.v % n:
        return None
    u, v = prod.u // n, prod.v // n
    if (u - v) % 2:
        return None
    if not beta.ring.is_half_basis and (u % 2 or v % 2):
        return None
    return QuadInt(u, v, beta.ring)


def divides(alpha: QuadInt, beta: QuadInt) -> bool:
    return try_divide(beta, alpha) is not None


def congruent_mod(alpha: QuadInt, beta: QuadInt, gamma: QuadInt) -> bool:
    """alpha = beta mod gamma, i.e. gamma | (beta - alpha)."""
    if gamma.is_zero:
        raise ZeroDivisionError("zero modulus")
    return try_divide(beta - alpha, gamma) is not None


@dataclass(frozen=True)
class CongruenceClass:
    """residue mod modulus; modulus nonzero and not a unit."""

    residue: QuadInt
    modulus: QuadInt

    def __post_init__(self):
        self.residue._same_ring(self.modulus)
        if self.modulus.is_zero:
            raise ZeroElementError("zero modulus")
        if self.modulus.is_unit:
            raise ValueError("modulus must not be a unit")

    def contains(self, alpha: QuadInt) -> bool:
        return congruent_mod(alpha, self.residue, self.modulus)


# -- Euclidean gcd in Z[i] ---------------------------------------------------


def _round_half_away(num: int, den: int) -> int:
    """Round num/den to the nearest integer, ties away from zero; den > 0."""
    if num >= 0:
        return (2 * num + den) // (2 * den)
    return -((-2 * num + den) // (2 * den))


def first_quadrant_associate(alpha: QuadInt) -> QuadInt:
    """The associate of a nonzero Gaussian integer with argument in [0, pi/2),
    i.e. u > 0 and v >= 0."""
    if alpha.ring.d != -1:
        raise UnsupportedRingError("quadrant normalization is specific to Z[i]")
    if alpha.is_zero:
        raise ZeroElementError("zero has no associates")
    u, v = alpha.u, alpha.v
    for _ in range(4):
        if u > 0 and v >= 0:
            return QuadInt(u, v, alpha.ring)
        u, v = -v, u  # multiply by i
    raise AssertionError("unreachable")


def gaussian_gcd(alpha: QuadInt, beta: QuadInt) -> QuadInt:
    """gcd in Z[i] by Euclidean descent with nearest-lattice-point quotients,
    normalized to the associate with argument in [0, pi/2)."""
    if alpha.ring.d != -1 or beta.ring.d != -1:
        raise UnsupportedRingError("gcd implemented for Z[i] only")
    if alpha.is_zero and beta.is_zero:
        raise BothZeroError("gcd(0, 0) is undefined")
    a, b = alpha, beta
    while not b.is_zero:
        n = b.norm()
        prod = a * b.conjugate()
        q = QuadInt(2 * _round_half_away(prod.u // 2, n), 2 * _round_half_away(prod.v // 2, n), a.ring)
        a, b = b, a - q * b
    return first_quadrant_associate(a)


# -- canonical text form ------------------------------------------------------

_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-]?)\s*
        (?:
            (?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*(?P<root1>sqrt\(\s*(?P<d1>-?\d+)\s*\)|i))?
          | (?P<root2>sqrt\(\s*(?P<d2>-?\d+)\s*\)|i)
        )\s*""",
    re.VERBOSE,
)


def format_element(alpha: QuadInt) -> str:
    """Canonical text: `a+b*sqrt(d)` with a, b exact fractions; zero terms
    dropped, `0` for the zero element."""
    a, b = alpha.coords()
    d = alpha.ring.d
    parts = []
    if a != 0 or b == 0:
        parts.append(str(a))
    if b != 0:
        sign = "-" if b < 0 else ("+" if parts else "")
        parts.append(f"{sign}{abs(b)}*sqrt({d})")
    return "".join(parts)


def parse_element(text: str, ring: RingDescriptor | None = None) -> QuadInt:
    """Parse the canonical grammar; `i` is an alias for sqrt(-1).

    The ring is inferred from the sqrt(d) token when present; a plain
    rational needs an explicit ring.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty element text")
    a = Fraction(0)
    b = Fraction(0)
    seen_d: int | None = None
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse element text: {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("sign") == "" and not first:
            raise ValueError(f"missing sign between terms in {text!r}")
        root = m.group("root1") or m.group("root2")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if root is None:
            a += sign * coef
        else:
            dtok = m.group("d1") or m.group("d2")
            dval = -1 if root == "i" else int(dtok)
            if seen_d is not None and dval != seen_d:
                raise ValueError(f"conflicting radicands in {text!r}")
            seen_d = dval
            b += sign * coef
        pos = m.end()
        first = False
    if seen_d is not None:
        inferred = make_ring(seen_d)
        if ring is not None and ring != inferred:
            raise RingMismatchError(f"text names sqrt({seen_d}) but ring has d={ring.d}")
        ring = inferred
    if ring is None:
        raise ValueError(f"no radicand in {text!r}; pass the ring explicitly")
    u, v = 2 * a, 2 * b
    if u.denominator != 1 or v.denominator != 1:
        raise ValueError(f"{text!r} is not integral in the ring of d={ring.d}")
    return QuadInt(int(u), int(v), ring)
