"""Prime-element streams and the empirical counting functions.

Enumeration is organized per rational prime: one norm-equation solve per
prime (cached), then the finitely many associates/conjugates are emitted or
filtered.  Counts are exact integers; parallel counting splits the prime
range into chunks whose partial sums reproduce the sequential result
exactly.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import isqrt
from typing import Iterator

from .angles import Angle
from .errors import (
    ImaginaryRingError,
    NotCoprimeError,
    RealRingError,
    UnsupportedRingError,
    WindowTooWideError,
    ZeroElementError,
)
from .gaussian import ZI
from .intmath import SIEVE
from .primality import INERT, PrimeElement, solve_norm_equation, splitting_type
from .regions import AnnularSector, RealInterval, Region
from .rings import CongruenceClass, QuadInt, RingDescriptor, gaussian_gcd
from .units import fundamental_unit, imaginary_units, smallest_tp_unit

# -- cached norm-equation solutions ------------------------------------------

_solution_lock = threading.Lock()
_solutions: dict[tuple[int, int], tuple[int, int] | None] = {}


def norm_solution(ring: RingDescriptor, p: int) -> QuadInt | None:
    """Cached element of absolute norm p (p split or ramified), or None."""
    key = (ring.d, p)
    try:
        cached = _solutions[key]
    except KeyError:
        sol = solve_norm_equation(p, ring)
        cached = None if sol is None else (sol.u, sol.v)
        with _solution_lock:
            _solutions.setdefault(key, cached)
    return None if cached is None else ring.half(*cached)


# -- imaginary rings -----------------------------------------------------------


def _exact_prime_sqrt(n: int) -> int | None:
    p = isqrt(n)
    if p * p == n and SIEVE.is_prime(p):
        return p
    return None


def elements_of_prime_norm(ring: RingDescriptor, n: int) -> tuple[str, int, list[QuadInt]]:
    """All prime elements of absolute norm n in an imaginary ring, sorted by
    coordinates; empty when the prime ideals above the relevant rational
    prime are non-principal.  Returns (kind, p, elements)."""
    units = imaginary_units(ring)
    if SIEVE.is_prime(n):
        kind = splitting_type(n, ring)
        if kind == INERT:
            return kind, n, []
        alpha = norm_solution(ring, n)
        if alpha is None:
            return kind, n, []
        seen = set()
        out = []
        for gen in (alpha, alpha.conjugate()):
            for u in units:
                el = gen * u
                if (el.u, el.v) not in seen:
                    seen.add((el.u, el.v))
                    out.append(el)
        out.sort(key=lambda e: (e.u, e.v))
        return kind, n, out
    p = _exact_prime_sqrt(n)
    if p is None or splitting_type(p, ring) != INERT:
        return "", 0, []
    base = ring.element(p)
    out = sorted((base * u for u in units), key=lambda e: (e.u, e.v))
    return INERT, p, out


def _norm_grid(lo: int, hi: int) -> Iterator[int]:
    """Candidate norms in [lo, hi]: rational primes and squares of rational
    primes, ascending."""
    primes = SIEVE.primes_in_range(lo, hi)
    squares = [p * p for p in SIEVE.primes_in_range(2, isqrt(hi)) if p * p >= lo]
    i = j = 0
    while i < len(primes) or j < len(squares):
        if j >= len(squares) or (i < len(primes) and primes[i] < squares[j]):
            yield primes[i]
            i += 1
        else:
            yield squares[j]
            j += 1


def _congruence_check(congruence: CongruenceClass | None, ring: RingDescriptor) -> None:
    if congruence is None:
        return
    if ring.d != -1 or congruence.modulus.ring.d != -1:
        raise UnsupportedRingError("congruence filters are defined for Z[i] only")
    if not gaussian_gcd(congruence.residue, congruence.modulus).is_unit:
        raise NotCoprimeError(
            f"residue {congruence.residue} shares a factor with modulus {congruence.modulus}"
        )


def prime_stream(
    ring: RingDescriptor,
    max_norm: int,
    region: Region | None = None,
    congruence: CongruenceClass | None = None,
) -> Iterator[PrimeElement]:
    """Every prime element with absolute norm <= max_norm passing the
    filters, each associate separately, ordered by (norm, u, v).

    Imaginary rings accept an AnnularSector filter (angles half-open
    [psi1, psi2), annulus r^2 < N <= R^2) and, for d = -1, a congruence
    filter.  Real rings require a RealInterval ratio window and emit the
    totally positive associates whose conjugate ratio lies in (a, b].
    """
    if max_norm < 2:
        return
    _congruence_check(congruence, ring)
    SIEVE.ensure(max_norm)
    if ring.is_imaginary:
        sector = None
        if region is not None:
            if not isinstance(region, AnnularSector):
                raise UnsupportedRingError("imaginary rings filter by annular sector")
            sector = region
        for n in _norm_grid(2, max_norm):
            if sector is not None and not sector.norm_in_annulus_counting(n):
                continue
            kind, p, elements = elements_of_prime_norm(ring, n)
            for el in elements:
                if sector is not None and not sector.contains_arg_counting(el):
                    continue
                if congruence is not None and not congruence.contains(el):
                    continue
                yield PrimeElement(el, n, kind, p)
    else:
        if congruence is not None:
            raise UnsupportedRingError("congruence filters are defined for Z[i] only")
        if not isinstance(region, RealInterval):
            raise RealRingError("real-ring streams need a RealInterval ratio window")
        region.require_positive()
        yield from _real_stream(ring, 2, max_norm, region.a, region.b)


# -- real rings ----------------------------------------------------------------


def _ratio_cmp(beta: QuadInt, q: Fraction) -> int:
    """Sign of beta'/beta - q for totally positive beta, exact."""
    diff = beta.conjugate() * q.denominator - beta * q.numerator
    return diff.sign_real()


def tp_associates_in_ratio_window(beta: QuadInt, a: Fraction, b: Fraction) -> list[QuadInt]:
    """Totally positive associates of beta with conjugate ratio in (a, b],
    ascending by ratio; finite because associate ratios form a geometric
    progression with factor (sigma')^2 < 1.

    When N(beta) < 0 and N(eta) = -1 one factor of eta flips the sign;
    when N(eta) = +1 no associate has positive norm and the list is empty.
    """
    ring = beta.ring
    if beta.is_zero:
        raise ZeroElementError("zero has no associates")
    eta = fundamental_unit(ring)
    if beta.norm() < 0:
        if eta.norm() == -1:
            beta = beta * eta
        else:
            return []
    if beta.sign_real() < 0:
        beta = -beta
    sigma = smallest_tp_unit(ring)
    sigma_inv = sigma.conjugate()  # N(sigma) = 1, so sigma' is the inverse

    def walk(value: QuadInt, direction: QuadInt, stop) -> QuadInt:
        for _ in range(100_000):
            if stop(value):
                return value
            value = value * direction
        raise AssertionError("ratio walk failed to terminate")

    # smallest-ratio associate with ratio > a
    beta = walk(beta, sigma_inv, lambda e: _ratio_cmp(e, a) > 0)
    beta = walk(beta, sigma, lambda e: _ratio_cmp(e * sigma, a) <= 0)
    out = []
    current = beta
    while _ratio_cmp(current, b) <= 0:
        out.append(current)
        current = current * sigma_inv
    return out


def _real_families(ring: RingDescriptor, p: int, kind: str) -> list[QuadInt]:
    alpha = norm_solution(ring, p)
    if alpha is None:
        return []
    if kind == "ramified":
        return [alpha]
    return [alpha, alpha.conjugate()]


def _real_stream(
    ring: RingDescriptor, lo: int, hi: int, a: Fraction, b: Fraction
) -> Iterator[PrimeElement]:
    for n in _norm_grid(lo, hi):
        if SIEVE.is_prime(n):
            kind = splitting_type(n, ring)
            if kind == INERT:
                continue
            gens = _real_families(ring, n, kind)
            p = n
        else:
            p = _exact_prime_sqrt(n)
            if p is None or splitting_type(p, ring) != INERT:
                continue
            gens = [ring.element(p)]
            kind = INERT
        hits: list[QuadInt] = []
        seen = set()
        for gen in gens:
            for el in tp_associates_in_ratio_window(gen, a, b):
                if (el.u, el.v) not in seen:
                    seen.add((el.u, el.v))
                    hits.append(el)
        hits.sort(key=lambda e: (e.u, e.v))
        for el in hits:
            yield PrimeElement(el, n, kind, p)


# -- counting -------------------------------------------------------------------


def _chunked(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    width = max(1, (hi - lo + 1) // parts)
    out = []
    start = lo
    while start <= hi:
        end = min(hi, start + width - 1)
        out.append((start, end))
        start = end + 1
    return out


def _parallel_sum(fn, lo: int, hi: int, threads: int) -> int:
    if threads <= 1 or hi - lo < 1000:
        return fn(lo, hi)
    chunks = _chunked(lo, hi, threads * 4)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return sum(pool.map(lambda c: fn(*c), chunks))


def count_sector(
    ring: RingDescriptor,
    x: int,
    psi1: Angle | Fraction | int,
    psi2: Angle | Fraction | int,
    threads: int = 1,
) -> int:
    """Prime elements with N <= x and arg in [psi1, psi2), exactly."""
    if not ring.is_imaginary:
        raise RealRingError("sector counting needs an imaginary ring; use count_ratio")
    sector = AnnularSector.of(psi1, psi2)
    SIEVE.ensure(x)

    def count_range(lo: int, hi: int) -> int:
        total = 0
        for n in _norm_grid(lo, hi):
            _, _, elements = elements_of_prime_norm(ring, n)
            total += sum(1 for el in elements if sector.contains_arg_counting(el))
        return total

    return _parallel_sum(count_range, 2, x, threads)


def count_sector_congruence(
    x: int,
    psi1: Angle | Fraction | int,
    psi2: Angle | Fraction | int,
    congruence: CongruenceClass,
    threads: int = 1,
) -> int:
    """Gaussian primes in the congruence class with N <= x and arg in
    [psi1, psi2)."""
    _congruence_check(congruence, ZI)
    sector = AnnularSector.of(psi1, psi2)
    SIEVE.ensure(x)

    def count_range(lo: int, hi: int) -> int:
        total = 0
        for n in _norm_grid(lo, hi):
            _, _, elements = elements_of_prime_norm(ZI, n)
            total += sum(
                1
                for el in elements
                if sector.contains_arg_counting(el) and congruence.contains(el)
            )
        return total

    return _parallel_sum(count_range, 2, x, threads)


def count_ratio(
    ring: RingDescriptor,
    x: int,
    a: Fraction | int,
    b: Fraction | int,
    threads: int = 1,
) -> int:
    """Totally positive primes with norm <= x and conjugate ratio in (a, b].

    The window must satisfy 0 < a < b and b/a < eta^2 (each associate family
    then contributes at most one element)."""
    if ring.is_imaginary:
        raise ImaginaryRingError("ratio counting needs a real ring; use count_sector")
    a, b = Fraction(a), Fraction(b)
    window = RealInterval(a, b)
    window.require_positive()
    eta = fundamental_unit(ring)
    eta_sq = eta * eta
    # window too wide iff eta^2 <= b/a, i.e. a*eta^2 - b <= 0 (scaled to integers)
    diff = eta_sq * (a.numerator * b.denominator) - ring.one * (b.numerator * a.denominator)
    if diff.sign_real() <= 0:
        raise WindowTooWideError(f"window ({a}, {b}] is at least eta^2 wide")
    SIEVE.ensure(x)

    def count_range(lo: int, hi: int) -> int:
        return sum(1 for _ in _real_stream(ring, lo, hi, a, b))

    return _parallel_sum(count_range, 2, x, threads)


def totally_positive_check(alpha: QuadInt) -> bool:
    """Exact total positivity (d > 0): alpha > 0 and alpha' > 0."""
    if alpha.ring.is_imaginary:
        raise ImaginaryRingError("total positivity concerns real rings")
    return alpha.is_totally_positive()


def stream_csv_lines(stream: Iterator[PrimeElement]) -> Iterator[str]:
    """CSV serialization: header then `norm,u,v,kind,rational_prime` rows."""
    yield "norm,u,v,kind,rational_prime"
    for pe in stream:
        yield f"{pe.absolute_norm},{pe.element.u},{pe.element.v},{pe.kind},{pe.rational_prime}"


def associates_in_window(alpha: QuadInt, window: Region) -> list[QuadInt]:
    """Associates of alpha inside the window: unit multiples with argument in
    [psi1, psi2) for imaginary rings; totally positive associates with
    conjugate ratio in (a, b] for real rings."""
    if alpha.is_zero:
        raise ZeroElementError("zero has no associates")
    if alpha.ring.is_imaginary:
        if not isinstance(window, AnnularSector):
            raise UnsupportedRingError("imaginary rings take a sector window")
        out = [
            el
            for el in (alpha * u for u in imaginary_units(alpha.ring))
            if window.contains_arg_counting(el)
        ]
        out.sort(key=lambda e: (e.u, e.v))
        return out
    if not isinstance(window, RealInterval):
        raise RealRingError("real rings take a ratio window")
    window.require_positive()
    out = tp_associates_in_ratio_window(alpha, window.a, window.b)
    out.sort(key=lambda e: (e.u, e.v))
    return out
