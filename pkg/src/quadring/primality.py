"""Primality in quadratic rings: splitting of rational primes, norm-equation
solvers, and the prime-element decision."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import (
    NotPrimeError,
    PreconditionError,
    UnsupportedRingError,
    ZeroElementError,
)
from .intmath import cornacchia, cornacchia_4p, is_rational_prime
from .rings import QuadInt, RingDescriptor, first_quadrant_associate, try_divide
from .units import eta_upper_bound

SPLIT = "split"
INERT = "inert"
RAMIFIED = "ramified"


@dataclass(frozen=True)
class PrimeElement:
    """A verified prime element with its classification data."""

    element: QuadInt
    absolute_norm: int
    kind: str
    rational_prime: int


def splitting_type(p: int, ring: RingDescriptor) -> str:
    """How the rational prime p behaves in the ring: ramified iff p divides
    the discriminant, otherwise split/inert by the quadratic character of the
    discriminant mod p (disc mod 8 decides p = 2)."""
    if not is_rational_prime(p):
        raise NotPrimeError(f"{p} is not a rational prime")
    disc = ring.discriminant
    if disc % p == 0:
        return RAMIFIED
    if p == 2:
        return SPLIT if disc % 8 == 1 else INERT
    return SPLIT if pow(disc % p, (p - 1) // 2, p) == 1 else INERT


def _imaginary_small_search(p: int, ring: RingDescriptor) -> QuadInt | None:
    """Exhaustive lattice search for |N| = p in an imaginary ring; used for
    p = 2 and ramified primes where Cornacchia's preconditions fail."""
    D = -ring.d
    vmax = isqrt(4 * p // D) + 1
    step = 1 if ring.is_half_basis else 2
    for v in range(0, vmax + 1, step):
        rem = 4 * p - D * v * v
        if rem < 0:
            continue
        u = isqrt(rem)
        if u * u == rem and (u - v) % 2 == 0:
            return ring.half(u, v)
    return None


def solve_norm_equation(p: int, ring: RingDescriptor) -> QuadInt | None:
    """An element of absolute norm p, or None when no such element exists
    (possible only when the class number exceeds 1).

    Inert primes violate the precondition.  Imaginary rings use Cornacchia
    (complete for prime p, so None is a proof); real rings use the bounded
    search whose window bound is proved in solve_norm_equation_exhaustive.
    """
    kind = splitting_type(p, ring)
    if kind == INERT:
        raise PreconditionError(f"{p} is inert in d={ring.d}; no element has norm +-{p}")
    if ring.is_imaginary:
        D = -ring.d
        if p == 2 or kind == RAMIFIED:
            return _imaginary_small_search(p, ring)
        if ring.is_half_basis:
            sol = cornacchia_4p(D, p)
            if sol is None:
                return None
            u, v = sol
            return ring.half(u, v)
        sol = cornacchia(D, p)
        if sol is None:
            return None
        x, y = sol
        return ring.element(x, y)
    return solve_norm_equation_exhaustive(p, ring)


def solve_norm_equation_exhaustive(p: int, ring: RingDescriptor) -> QuadInt | None:
    """Reference bounded search; completeness argument:

    Imaginary: |N| = (u^2 + |d| v^2)/4 = p forces |d| v^2 <= 4p.

    Real: if any element of absolute norm p exists, some associate has real
    embedding alpha in [sqrt(p), eta*sqrt(p)); its conjugate then satisfies
    |alpha'| = p/alpha <= sqrt(p), so 0 <= v*sqrt(d) = alpha - alpha' <
    (eta + 1)*sqrt(p).  Scanning 0 <= v <= (eta+1)*sqrt(p/d) with both norm
    signs is therefore exhaustive and None is a theorem, not a timeout.
    """
    if splitting_type(p, ring) == INERT:
        raise PreconditionError(f"{p} is inert in d={ring.d}")
    d = ring.d
    if d < 0:
        return _imaginary_small_search(p, ring)
    bound = (eta_upper_bound(ring) + 1) * (isqrt(p) + 1)
    vmax = int(bound / isqrt(d)) + 2
    for v in range(vmax + 1):
        for target in (d * v * v + 4 * p, d * v * v - 4 * p):
            if target <= 0:
                continue
            u = isqrt(target)
            if u * u != target or (u - v) % 2:
                continue
            if not ring.is_half_basis and (u % 2 or v % 2):
                continue
            return ring.half(u, v)
    return None


def is_prime_element(alpha: QuadInt) -> bool:
    """True iff alpha is a prime element of its ring.

    An element of prime absolute norm generates a prime ideal in any order of
    class number >= 1, hence is prime; the only other prime elements are
    associates of inert rational primes (absolute norm p^2).  Irreducible but
    non-prime elements of non-UFD rings are rejected by this norm criterion.
    """
    if alpha.is_zero or alpha.is_unit:
        return False
    n = alpha.abs_norm()
    if is_rational_prime(n):
        return True
    p = isqrt(n)
    if p * p != n or not is_rational_prime(p):
        return False
    if splitting_type(p, alpha.ring) != INERT:
        return False
    q = try_divide(alpha, alpha.ring.element(p))
    return q is not None and q.is_unit


def classify_prime(alpha: QuadInt) -> PrimeElement:
    """Wrap a prime element with its splitting data; raises if not prime."""
    if not is_prime_element(alpha):
        raise ValueError(f"{alpha} is not a prime element")
    n = alpha.abs_norm()
    if is_rational_prime(n):
        p = n
        kind = splitting_type(p, alpha.ring)
    else:
        p = isqrt(n)
        kind = INERT
    return PrimeElement(alpha, n, kind, p)


def factor_gaussian(gamma: QuadInt) -> tuple[QuadInt, list[tuple[PrimeElement, int]]]:
    """Factor a nonzero Gaussian integer as unit * product(pi_i^e_i) with the
    primes normalized to argument in [0, pi/2); exact by construction."""
    ring = gamma.ring
    if ring.d != -1:
        raise UnsupportedRingError("factorization implemented for Z[i] only")
    if gamma.is_zero:
        raise ZeroElementError("cannot factor zero")
    from .intmath import factor_int

    rest = gamma
    factors: list[tuple[PrimeElement, int]] = []
    n = gamma.abs_norm()
    for p in sorted(factor_int(n)):
        kind = splitting_type(p, ring)
        if kind == INERT:
            pi_candidates = [ring.element(p)]
        else:
            pi0 = first_quadrant_associate(solve_norm_equation(p, ring))
            conj = first_quadrant_associate(pi0.conjugate())
            pi_candidates = [pi0] if conj == pi0 else sorted(
                [pi0, conj], key=lambda t: (t.u, t.v)
            )
        for pi in pi_candidates:
            e = 0
            while True:
                q = try_divide(rest, pi)
                if q is None:
                    break
                rest = q
                e += 1
            if e:
                factors.append((classify_prime(pi), e))
    if not rest.is_unit:
        raise AssertionError(f"factorization left non-unit cofactor {rest}")
    return rest, factors
