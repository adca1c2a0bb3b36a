"""Integer number-theory primitives: deterministic primality, modular square
roots, Cornacchia solvers, and a cached segmented sieve.

Everything here is exact integer arithmetic.  The Miller-Rabin witness set is
deterministic for n < 3.3 * 10**14; inputs beyond that bound raise rather than
fall back to a probabilistic answer.
"""

from __future__ import annotations

import threading
from bisect import bisect_left, bisect_right
from math import isqrt

# No composite below 3,317,044,064,679,887,385,961,981 passes all of these
# bases; we stay far under that but keep a conservative advertised bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MR_DETERMINISTIC_BOUND = 330_000_000_000_000

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_rational_prime(n: int) -> bool:
    """Deterministic primality test for |n| within the desk-scale bound."""
    if n < 2:
        return False
    if n > MR_DETERMINISTIC_BOUND:
        raise ValueError(f"primality test not deterministic beyond {MR_DETERMINISTIC_BOUND}")
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def squarefree(n: int) -> bool:
    """True iff |n| is squarefree (0 is not)."""
    n = abs(n)
    if n == 0:
        return False
    if n % 4 == 0:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return False
        else:
            f += 1
    return True


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by trial division with an early primality
    short-circuit.  Adequate at desk scale."""
    if n < 1:
        raise ValueError("factor_int needs n >= 1")
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 41
    while n > 1:
        if is_rational_prime(n):
            out[n] = out.get(n, 0) + 1
            break
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 2
    return out


def sqrt_mod_prime(a: int, p: int) -> int | None:
    """A square root of a modulo an odd prime p, or None if a is a nonresidue.

    Tonelli-Shanks with a deterministic nonresidue scan; returns the root in
    [0, p), the smaller of the pair.
    """
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


def cornacchia(D: int, p: int) -> tuple[int, int] | None:
    """Solve x^2 + D*y^2 = p for an odd prime p with p not dividing D, D >= 1.

    Returns (x, y) with x, y >= 0, or None when no solution exists.  Complete:
    for prime p every solution is primitive, so the Euclidean descent finds
    one whenever one exists.
    """
    r = sqrt_mod_prime(-D % p, p)
    if r is None:
        return None
    for r0 in {r, p - r}:
        a, b = p, r0
        limit = isqrt(p)
        while b > limit:
            a, b = b, a % b
        rem = p - b * b
        if rem >= 0 and D and rem % D == 0:
            y2 = rem // D
            y = isqrt(y2)
            if y * y == y2:
                return (b, y)
    return None


def cornacchia_4p(D: int, p: int) -> tuple[int, int] | None:
    """Solve x^2 + D*y^2 = 4p with x = y mod 2, for odd prime p, p not
    dividing D, and D = 3 mod 4.

    This is the half-integer variant used for rings with d = 1 mod 4.
    """
    r = sqrt_mod_prime(-D % p, p)
    if r is None:
        return None
    if r % 2 == 0:
        r = p - r  # odd root: then r^2 = -D mod 4 as well, so mod 4p
    for r0 in {r, 2 * p - r}:
        a, b = 2 * p, r0
        limit = isqrt(4 * p)
        while b > limit:
            a, b = b, a % b
        rem = 4 * p - b * b
        if rem >= 0 and rem % D == 0:
            y2 = rem // D
            y = isqrt(y2)
            if y * y == y2 and (b - y) % 2 == 0:
                return (b, y)
    return None


class _SieveCache:
    """Grow-only sieve shared by the whole process; thread-safe."""

    def __init__(self):
        self._lock = threading.Lock()
        self._limit = 0
        self._flags = bytearray(b"\x00")
        self._primes: list[int] = []

    def ensure(self, limit: int) -> None:
        if limit <= self._limit:
            return
        with self._lock:
            if limit <= self._limit:
                return
            limit = max(limit, 2 * self._limit, 1 << 16)
            flags = bytearray(b"\x01") * (limit + 1)
            flags[0:2] = b"\x00\x00"
            for p in range(2, isqrt(limit) + 1):
                if flags[p]:
                    start = p * p
                    flags[start :: p] = b"\x00" * ((limit - start) // p + 1)
            self._flags = flags
            self._primes = [i for i, f in enumerate(flags) if f]
            self._limit = limit

    def is_prime(self, n: int) -> bool:
        if n <= self._limit:
            return bool(self._flags[n]) if n >= 0 else False
        return is_rational_prime(n)

    def primes_up_to(self, limit: int) -> list[int]:
        self.ensure(limit)
        return self._primes[: bisect_right(self._primes, limit)]

    def primes_in_range(self, lo: int, hi: int) -> list[int]:
        """Primes p with lo <= p <= hi.

        Served from the cached sieve when it already covers hi, otherwise by
        a throwaway segmented sieve so narrow windows far out never force a
        huge allocation.
        """
        if hi < lo:
            return []
        if hi <= self._limit or hi <= 1 << 22:
            self.ensure(hi)
            i = bisect_left(self._primes, lo)
            j = bisect_right(self._primes, hi)
            return self._primes[i:j]
        lo = max(lo, 2)
        span = hi - lo
        if span > 1 << 26:
            raise ValueError(f"refusing a segmented sieve over {span} integers")
        self.ensure(isqrt(hi) + 1)
        flags = bytearray(b"\x01") * (span + 1)
        for p in self._primes:
            if p * p > hi:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            flags[start - lo :: p] = b"\x00" * ((hi - start) // p + 1)
        return [lo + i for i, f in enumerate(flags) if f]


SIEVE = _SieveCache()


def primes_up_to(limit: int) -> list[int]:
    return SIEVE.primes_up_to(limit)


def count_primes_up_to(limit: int) -> int:
    return len(SIEVE.primes_up_to(limit))
