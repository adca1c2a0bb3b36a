"""Z[i]-specific machinery: residue systems modulo a Gaussian integer and the
generalized Euler phi."""

from __future__ import annotations

from .errors import UnsupportedRingError, ZeroElementError, ZeroOrUnitError
from .primality import factor_gaussian
from .rings import QuadInt, make_ring

ZI = make_ring(-1)


def _check_zi(gamma: QuadInt) -> None:
    if gamma.ring.d != -1:
        raise UnsupportedRingError("operation implemented for Z[i] only")


def residue_box(gamma: QuadInt) -> tuple[int, int, int]:
    """Hermite form of the lattice gamma * Z[i]: returns (L, M, k) such that
    the lattice is spanned by (L, 0) and (k, M) in integer coordinates, so
    {x + y*i : 0 <= x < L, 0 <= y < M} is a complete residue system."""
    _check_zi(gamma)
    if gamma.is_zero:
        raise ZeroElementError("zero modulus has no residue system")
    a, b = gamma.u // 2, gamma.v // 2
    # lattice basis: gamma -> (a, b), i*gamma -> (-b, a)
    v1, v2 = (a, b), (-b, a)
    while v2[1]:
        q = v1[1] // v2[1]
        v1, v2 = v2, (v1[0] - q * v2[0], v1[1] - q * v2[1])
    L = abs(v2[0])
    k, M = v1
    if M < 0:
        k, M = -k, -M
    k %= L
    assert L * M == gamma.abs_norm()
    return L, M, k


def reduce_mod(alpha: QuadInt, gamma: QuadInt) -> QuadInt:
    """Canonical representative of alpha modulo gamma inside the residue box."""
    _check_zi(alpha)
    L, M, k = residue_box(gamma)
    x, y = alpha.u // 2, alpha.v // 2
    t = y // M
    x, y = x - t * k, y - t * M
    x %= L
    return ZI.element(x, y)


def residue_system(gamma: QuadInt) -> list[QuadInt]:
    """A complete residue system modulo gamma, |N(gamma)| elements."""
    L, M, _ = residue_box(gamma)
    return [ZI.element(x, y) for x in range(L) for y in range(M)]


def euler_phi_gaussian(gamma: QuadInt) -> int:
    """Number of invertible residue classes modulo gamma:
    |N| * product over prime divisors of (1 - 1/|N(pi)|), exact."""
    _check_zi(gamma)
    if gamma.is_zero or gamma.is_unit:
        raise ZeroOrUnitError("phi needs a nonzero non-unit modulus")
    _, factors = factor_gaussian(gamma)
    phi = 1
    for pe, e in factors:
        q = pe.absolute_norm
        phi *= q ** (e - 1) * (q - 1)
    return phi
