"""Constructive density searches: find explicit quotients of prime elements
inside a target sector or interval.

The sector search follows the existence proof it implements: enumerate
numerator candidates pi1 strictly inside the (canonicalized) sector by
increasing norm; for each, look for a denominator pi2 whose norm lies in
(N1/R^2, N1/r^2) and whose argument lies in (0, xi) with
xi = min(psi2 - arg pi1, arg pi1 - psi1).  Angle conditions are decided
through exact product comparisons - arg pi2 < psi2 - arg pi1 iff
arg(pi1*pi2) < psi2, and arg pi2 < arg pi1 - psi1 iff arg(pi1*conj(pi2)) >
psi1 - so no angle is ever a float in a verdict.  Fast float bands with a
generous margin only short-circuit candidates far from every boundary.

The interval search enumerates all candidate coordinates with conjugate
ratio inside the window under a staged norm cap, which is equivalent to
scanning totally positive primes by increasing norm but stays feasible for
very narrow windows.

Every returned witness is re-verified from scratch by exact arithmetic
against the original region; the transcript of those sign tests ships with
the witness.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .angles import Angle, cmp_element_arg, cmp_element_args, element_arg_float
from .enumeration import elements_of_prime_norm, norm_solution
from .errors import (
    CapExceededError,
    DegenerateRegionError,
    DomainError,
    EmptyAfterReductionError,
    ImaginaryRingError,
    NotCoprimeError,
    RealRingError,
    UnsupportedRingError,
    ZeroTargetError,
)
from .intmath import SIEVE, is_rational_prime
from .primality import INERT, PrimeElement, classify_prime, is_prime_element, splitting_type
from .regions import AnnularSector, RealInterval, Region
from .rings import CongruenceClass, QuadInt, RingDescriptor, format_element, gaussian_gcd
from .units import fundamental_unit, rotation_unit, unit_count, value_lower_bound

DEFAULT_CAP = 10_000_000
_ARG_MARGIN = 1e-8


@dataclass(frozen=True)
class QuotientWitness:
    """An explicit prime pair whose quotient lies strictly inside the target."""

    numerator: PrimeElement
    denominator: PrimeElement
    ring: RingDescriptor
    target: Region
    search_cost: int
    congruences: tuple[CongruenceClass, CongruenceClass] | None = None

    def quotient_float(self) -> complex | float:
        num, den = self.numerator.element, self.denominator.element
        d = self.ring.d
        if d < 0:
            s = math.sqrt(-d)
            a = complex(num.u / 2, num.v / 2 * s)
            b = complex(den.u / 2, den.v / 2 * s)
            return a / b
        s = math.sqrt(d)
        return (num.u / 2 + num.v / 2 * s) / (den.u / 2 + den.v / 2 * s)


# -- exact helpers --------------------------------------------------------------


def _surd_sign(p: Fraction, q: Fraction, d: int) -> int:
    """Sign of p + q*sqrt(d) for rational p, q and squarefree d > 1."""
    if q == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return 1 if q > 0 else -1
    if p > 0 and q > 0:
        return 1
    if p < 0 and q < 0:
        return -1
    lhs, rhs = p * p, q * q * d
    if p > 0:
        return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
    return 1 if rhs > lhs else (-1 if rhs < lhs else 0)


def _norm_ratio_inside(n1: int, n2: int, sector: AnnularSector) -> tuple[bool, bool]:
    """(above r^2, below R^2) for the quotient modulus, exact."""
    above = n1 > n2 * sector.r * sector.r
    below = sector.R is None or n1 < n2 * sector.R * sector.R
    return above, below


# -- witness verification --------------------------------------------------------


def verify_witness(w: QuotientWitness) -> list[dict]:
    """Re-verify a witness by exact arithmetic; returns the transcript of the
    sign tests performed.  Raises AssertionError on any failed check, so a
    returned transcript is a proof sketch."""
    t: list[dict] = []

    def check(name: str, ok: bool, detail: str) -> None:
        t.append({"check": name, "detail": detail, "ok": bool(ok)})
        if not ok:
            raise AssertionError(f"witness verification failed at {name}: {detail}")

    num, den = w.numerator.element, w.denominator.element
    check("numerator_prime", is_prime_element(num), format_element(num))
    check("denominator_prime", is_prime_element(den), format_element(den))
    if isinstance(w.target, AnnularSector):
        a = num * den.conjugate()  # arg(a) = arg(num/den); |num/den|^2 = N1/N2
        n1, n2 = num.abs_norm(), den.abs_norm()
        above, below = _norm_ratio_inside(n1, n2, w.target)
        check("modulus_above_r", above, f"N1/N2 = {n1}/{n2} vs r^2 = {w.target.r}^2")
        check(
            "modulus_below_R",
            below,
            f"N1/N2 = {n1}/{n2} vs R^2 = {w.target.R}^2" if w.target.R is not None else "R = inf",
        )
        check(
            "arg_above_psi1",
            cmp_element_arg(a, w.target.psi1) > 0,
            f"arg({format_element(a)}) > {w.target.psi1}",
        )
        check(
            "arg_below_psi2",
            cmp_element_arg(a, w.target.psi2) < 0,
            f"arg({format_element(a)}) < {w.target.psi2}",
        )
    else:
        interval = w.target
        dpos = den if den.sign_real() > 0 else -den
        npos = num if den.sign_real() > 0 else -num
        lo = npos * interval.a.denominator - dpos * interval.a.numerator
        hi = dpos * interval.b.numerator - npos * interval.b.denominator
        check(
            "quotient_above_a",
            lo.sign_real() > 0,
            f"{format_element(num)}/{format_element(den)} > {interval.a}",
        )
        check(
            "quotient_below_b",
            hi.sign_real() > 0,
            f"{format_element(num)}/{format_element(den)} < {interval.b}",
        )
    if w.congruences is not None:
        c1, c2 = w.congruences
        check(
            "numerator_congruence",
            c1.contains(num),
            f"{format_element(num)} = {format_element(c1.residue)} mod {format_element(c1.modulus)}",
        )
        check(
            "denominator_congruence",
            c2.contains(den),
            f"{format_element(den)} = {format_element(c2.residue)} mod {format_element(c2.modulus)}",
        )
    return t


def witness_json(w: QuotientWitness, indent: int | None = 2) -> str:
    transcript = verify_witness(w)
    payload = {
        "d": w.ring.d,
        "numerator": {
            "element": format_element(w.numerator.element),
            "norm": w.numerator.element.norm(),
            "kind": w.numerator.kind,
            "rational_prime": w.numerator.rational_prime,
        },
        "denominator": {
            "element": format_element(w.denominator.element),
            "norm": w.denominator.element.norm(),
            "kind": w.denominator.kind,
            "rational_prime": w.denominator.rational_prime,
        },
        "target": w.target.describe(),
        "search_cost": w.search_cost,
        "verification": transcript,
    }
    return json.dumps(payload, indent=indent) + "\n"


# -- canonicalization -------------------------------------------------------------


def canonicalize_sector(
    ring: RingDescriptor, sector: AnnularSector
) -> list[tuple[AnnularSector, QuadInt]]:
    """Rotate the sector into the fundamental wedge [0, 2*pi/g), splitting at
    wedge boundaries; each piece carries the unit that maps a witness found
    in the piece back into the original sector."""
    g = unit_count(ring)
    wedge = Angle.of(0, Fraction(2, g))
    rot = rotation_unit(ring)
    from .angles import angle_floor_div

    k = angle_floor_div(sector.psi1, wedge)
    psi1 = sector.psi1 - wedge.scaled(k)
    psi2 = sector.psi2 - wedge.scaled(k)
    pieces: list[tuple[AnnularSector, QuadInt]] = []
    from .angles import cmp_angle

    while True:
        if cmp_angle(psi2, wedge) <= 0:
            pieces.append((AnnularSector(psi1, psi2, sector.r, sector.R), rot**k))
            return pieces
        pieces.append((AnnularSector(psi1, wedge, sector.r, sector.R), rot**k))
        k += 1
        psi1 = Angle.of(0)
        psi2 = psi2 - wedge
        if len(pieces) > g + 2:  # width <= 2*pi bounds the piece count
            raise AssertionError("sector splitting failed to terminate")


def canonicalize_interval(
    ring: RingDescriptor, interval: RealInterval
) -> tuple[RealInterval, int]:
    """Reduce a real target interval to 0 < a < b with b/a < eta^2.

    Negative intervals are mirrored (sign -1 recorded for the numerator);
    intervals containing 0 shrink to a positive sub-interval; windows at
    least eta^2 wide shrink using a rational lower bound of eta^2 standing
    in for the exact midpoint device, which keeps the endpoints rational.
    """
    a, b = interval.a, interval.b
    sign = 1
    if b <= 0:
        a, b, sign = -b, -a, -1
    if a >= b:
        raise EmptyAfterReductionError("interval degenerate after reduction")
    eta = fundamental_unit(ring)
    eta_sq = eta * eta
    r_dn = value_lower_bound(eta_sq)  # rational, 1 < r_dn < eta^2
    if r_dn <= 1:
        raise AssertionError("lower bound of eta^2 must exceed 1")
    if a <= 0:
        if b <= 0:
            raise EmptyAfterReductionError("no positive part to search")
        a = b / r_dn
    else:
        # too-wide window: b/a >= eta^2 iff a*eta^2 <= b
        wide = _surd_sign(
            Fraction(eta_sq.u, 2) * a - b, Fraction(eta_sq.v, 2) * a, ring.d
        ) <= 0
        if wide:
            b = a * (1 + r_dn) / 2
    return RealInterval(a, b), sign


def canonicalize_target(ring: RingDescriptor, region: Region):
    """Spec-level entry point dispatching on the region kind."""
    if isinstance(region, AnnularSector):
        if not ring.is_imaginary:
            raise RealRingError("sector targets belong to imaginary rings")
        return canonicalize_sector(ring, region)
    if not isinstance(region, RealInterval):
        raise DomainError(f"unknown region {region!r}")
    if ring.is_imaginary:
        raise ImaginaryRingError("interval targets belong to real rings")
    reduced, sign = canonicalize_interval(ring, region)
    return [(reduced, ring.one if sign > 0 else -ring.one)]


# -- sector search ----------------------------------------------------------------


def _piece_float_bounds(piece: AnnularSector) -> tuple[float, float]:
    return piece.psi1.to_float(), piece.psi2.to_float()


def _inside_piece(rho: QuadInt, piece: AnnularSector, lo_f: float, hi_f: float) -> bool:
    """Strict interior test with a certified float fast path."""
    af = element_arg_float(rho)
    if lo_f + _ARG_MARGIN < af < hi_f - _ARG_MARGIN:
        return True
    if af < lo_f - _ARG_MARGIN or af > hi_f + _ARG_MARGIN:
        return False
    return piece.contains_arg_open(rho)


def _pi2_window(n1: int, piece: AnnularSector) -> tuple[int, int]:
    """Integer norm bounds for pi2: n1/R^2 < N2 < n1/r^2, both strict."""
    r2 = piece.r * piece.r
    lo = 2
    if piece.R is not None:
        q = Fraction(n1) / (piece.R * piece.R)
        lo = max(2, q.numerator // q.denominator + 1)
    q = Fraction(n1) / r2
    hi = (q.numerator + q.denominator - 1) // q.denominator - 1
    return lo, hi


def _sector_candidates(ring: RingDescriptor, lo: int, hi: int):
    """(norm, elements) over the prime-norm grid in [lo, hi], ascending."""
    if hi < lo:
        return
    primes = SIEVE.primes_in_range(lo, hi)
    squares = [p * p for p in SIEVE.primes_in_range(2, isqrt(hi)) if p * p >= lo]
    i = j = 0
    while i < len(primes) or j < len(squares):
        if j >= len(squares) or (i < len(primes) and primes[i] < squares[j]):
            n = primes[i]
            i += 1
        else:
            n = squares[j]
            j += 1
        _, _, elements = elements_of_prime_norm(ring, n)
        if elements:
            yield n, elements


def _blocked_sector_candidates(ring: RingDescriptor, cap: int):
    """Like _sector_candidates(ring, 2, cap) but sieving in geometrically
    growing blocks, so searches that succeed early never pay for the cap."""
    lo = 2
    size = 1 << 14
    while lo <= cap:
        hi = min(cap, lo + size - 1)
        yield from _sector_candidates(ring, lo, hi)
        lo = hi + 1
        size = min(size * 2, 1 << 21)


def _sector_search(
    ring: RingDescriptor,
    sector: AnnularSector,
    cap: int,
    cong1: CongruenceClass | None,
    cong2: CongruenceClass | None,
) -> QuotientWitness:
    """Enumerate numerator candidates pi1 by increasing norm; for each, scan
    the annulus norm window for a pi2 whose quotient lands strictly inside
    the sector.

    The quotient membership is tested directly on arg(pi1 * conj(pi2)) rather
    than through the proof's device of pinning arg(pi2) into (0, xi): that
    restriction is a counting trick, not an algorithmic necessity, and near
    the positive real axis lattice angles are quantized (the smallest
    positive argument at norm N is about 1/sqrt(N)), which would push the
    required numerator norm far beyond any workable cap for narrow
    large-modulus targets.  Searching the full circle keeps every verdict
    identical - witnesses are still verified against the open sector by
    exact arithmetic - and finds the minimal admissible numerator.
    """
    if sector.r <= 0 or sector.R is None:
        raise DegenerateRegionError("sector search needs 0 < r < R < infinity")
    lo_f, hi_f = _piece_float_bounds(sector)
    cost = 0
    for n1, elements in _blocked_sector_candidates(ring, cap):
        lo2, hi2 = _pi2_window(n1, sector)
        if hi2 < lo2:
            cost += len(elements)
            continue
        for rho in elements:
            cost += 1
            if cong1 is not None and not cong1.contains(rho):
                continue
            sigma, extra = _find_pi2(ring, rho, lo2, hi2, cong2, lo_f, hi_f, sector)
            cost += extra
            if sigma is None:
                continue  # advance to the next pi1 candidate by norm
            witness = QuotientWitness(
                classify_prime(rho),
                classify_prime(sigma),
                ring,
                sector,
                cost,
                (cong1, cong2) if cong1 is not None else None,
            )
            verify_witness(witness)
            return witness
    raise CapExceededError(cap, cost)


def _find_pi2(
    ring: RingDescriptor,
    rho: QuadInt,
    lo2: int,
    hi2: int,
    cong2: CongruenceClass | None,
    lo_f: float,
    hi_f: float,
    sector: AnnularSector,
) -> tuple[QuadInt | None, int]:
    """First pi2 (by norm, then coordinates) with norm in the open annulus
    window and quotient argument strictly inside the sector; returns
    (pi2 or None, examined count)."""
    rho_f = element_arg_float(rho)
    two_pi = 6.283185307179586
    examined = 0
    for _, elements in _sector_candidates(ring, lo2, hi2):
        for sigma in elements:
            examined += 1
            # float band: arg(rho) - arg(sigma) mod 2*pi inside (psi1, psi2)
            diff = (rho_f - element_arg_float(sigma)) % two_pi
            if not (lo_f - _ARG_MARGIN < diff < hi_f + _ARG_MARGIN):
                if not (lo_f < _ARG_MARGIN and diff > two_pi - _ARG_MARGIN):
                    continue  # certainly outside; near misses fall through
            if not _quotient_in_sector(rho, sigma, sector):
                continue
            if cong2 is not None and not cong2.contains(sigma):
                continue
            return sigma, examined
    return None, examined


def _quotient_in_sector(rho: QuadInt, sigma: QuadInt, sector: AnnularSector) -> bool:
    """Exact: psi1 < arg(rho/sigma) < psi2, via the integral representative
    rho * conj(sigma) whose argument equals the quotient's."""
    a = rho * sigma.conjugate()
    if a.is_zero:
        return False
    return cmp_element_arg(a, sector.psi1) > 0 and cmp_element_arg(a, sector.psi2) < 0


def find_quotient_sector(
    ring: RingDescriptor, sector: AnnularSector, cap: int = DEFAULT_CAP
) -> QuotientWitness:
    """A quotient of two prime elements strictly inside the open sector,
    found by enumerating numerator candidates by increasing norm;
    CapExceeded when no numerator of norm <= cap works."""
    if not ring.is_imaginary:
        raise RealRingError("sector search needs an imaginary ring")
    return _sector_search(ring, sector, cap, None, None)


def find_quotient_sector_congruent(
    sector: AnnularSector,
    class1: CongruenceClass,
    class2: CongruenceClass,
    cap: int = DEFAULT_CAP,
) -> QuotientWitness:
    """Sector witness with pi1, pi2 in prescribed coprime congruence classes
    of Z[i].  No unit rotation is applied: unit multiplication does not
    respect congruence classes, so the original sector is searched directly.
    """
    ring = class1.modulus.ring
    if ring.d != -1:
        raise UnsupportedRingError("congruence search lives in Z[i]")
    for cls in (class1, class2):
        if not gaussian_gcd(cls.residue, cls.modulus).is_unit:
            raise NotCoprimeError(f"class {cls} is not invertible")
    return _sector_search(ring, sector, cap, class1, class2)


# -- interval search ---------------------------------------------------------------


def _sqrt_up(q: Fraction) -> Fraction:
    n = q.numerator * q.denominator
    return Fraction(isqrt(n) + 1, q.denominator)


def _sqrt_dn(q: Fraction) -> Fraction:
    n = q.numerator * q.denominator
    return Fraction(isqrt(n), q.denominator)


def _interval_scan(
    ring: RingDescriptor, a: Fraction, b: Fraction, cap: int
) -> tuple[tuple[int, int, int] | None, int]:
    """Complete scan for totally positive prime elements with conjugate ratio
    strictly inside (a, b) and norm <= cap; returns (min (N, u, v), examined).

    Coordinates are enumerated directly: u = alpha + alpha' <
    sqrt(N)(1/sqrt(a) + sqrt(b)), and for each u the ratio window pins v to a
    short integer range computed from rational bounds on 1/sqrt(d); every
    candidate is then accepted or rejected by exact sign tests only.
    """
    d = ring.d
    scale = 10**12
    root_dn = Fraction(isqrt(d * scale * scale), scale)
    root_up = root_dn + Fraction(1, scale)
    # ratio < b  <=>  v > u * (1-b)/((1+b) sqrt(d));  ratio > a symmetric.
    # Round both coefficients outward over the sqrt(d) enclosure so the
    # integer v range is a certain superset; membership of each candidate is
    # then decided by exact sign tests.
    c_lo = min((1 - b) / ((1 + b) * root_up), (1 - b) / ((1 + b) * root_dn))
    c_hi = max((1 - a) / ((1 + a) * root_up), (1 - a) / ((1 + a) * root_dn))
    u_up = _sqrt_up(Fraction(cap)) * (1 / _sqrt_dn(a) + _sqrt_up(b))
    umax = u_up.numerator // u_up.denominator + 2
    an, ad = a.numerator, a.denominator
    bn, bd = b.numerator, b.denominator
    lo_n, lo_d = c_lo.numerator, c_lo.denominator
    hi_n, hi_d = c_hi.numerator, c_hi.denominator
    step = 1 if ring.is_half_basis else 2
    best: tuple[int, int, int] | None = None
    examined = 0
    for u in range(step, umax + 1, step):
        v_lo = -(-u * lo_n // lo_d) - 2  # ceil then slack
        v_hi = u * hi_n // hi_d + 2
        for v in range(v_lo, v_hi + 1):
            if (u - v) % 2:
                continue
            if step == 2 and v % 2:
                continue
            n4 = u * u - d * v * v
            if n4 <= 0 or n4 % 4:
                continue
            n = n4 // 4
            if n > cap:
                continue
            # exact ratio window: alpha' - a*alpha > 0 and b*alpha - alpha' > 0
            if _surd_sign(Fraction(u * (ad - an)), Fraction(-v * (ad + an)), d) <= 0:
                continue
            if _surd_sign(Fraction(u * (bn - bd)), Fraction(v * (bn + bd)), d) <= 0:
                continue
            examined += 1
            if best is not None and (n, u, v) >= best:
                continue
            alpha = ring.half(u, v)
            if is_prime_element(alpha):
                best = (n, u, v)
    return best, examined


def find_quotient_interval(
    ring: RingDescriptor, interval: RealInterval, cap: int = DEFAULT_CAP
) -> QuotientWitness:
    """A witness of the form conj(pi)/pi (sign-adjusted) strictly inside the
    open interval: pi is the minimal totally positive prime, by (norm, u, v),
    whose conjugate ratio falls in the canonicalized window."""
    if ring.is_imaginary:
        raise ImaginaryRingError("interval search needs a real ring")
    window, sign = canonicalize_interval(ring, interval)
    a, b = window.a, window.b
    total = 0
    stage = 1000
    stages = []
    while stage < cap:
        stages.append(stage)
        stage *= 8
    stages.append(cap)
    for stage_cap in stages:
        best, examined = _interval_scan(ring, a, b, stage_cap)
        total += examined
        if best is not None:
            _, u, v = best
            pi = ring.half(u, v)
            num = pi.conjugate() * sign
            witness = QuotientWitness(
                classify_prime(num), classify_prime(pi), ring, interval, total
            )
            verify_witness(witness)
            return witness
    raise CapExceededError(cap, total)


def inert_rational_fallback(
    ring: RingDescriptor, interval: RealInterval, cap: int = DEFAULT_CAP
) -> QuotientWitness:
    """Quotient p1/p2 of rational primes both inert in the ring, inside the
    open interval.  Inert rational primes are prime elements, so this is an
    independent route to interval witnesses that never uses non-rational
    primes.  Search order: p2 ascending, p1 located by bisection into the
    prime table."""
    if ring.is_imaginary:
        raise ImaginaryRingError("the inert fallback applies to real rings")
    a, b = interval.a, interval.b
    if a <= 0:
        raise DomainError("fallback needs a positive interval")
    pmax = isqrt(cap)
    primes = SIEVE.primes_up_to(max(pmax, int(b * pmax) + 1))
    from bisect import bisect_left, bisect_right

    examined = 0
    for p2 in primes:
        if p2 * p2 > cap:
            break
        examined += 1
        if splitting_type(p2, ring) != INERT:
            continue
        # open bounds: a*p2 < p1 < b*p2
        lo = bisect_right(primes, a * p2)
        hi = bisect_left(primes, b * p2)
        for p1 in primes[lo:hi]:
            if p1 * p1 > cap:
                break
            examined += 1
            if not (a * p2 < p1 < b * p2):
                continue
            if splitting_type(p1, ring) == INERT:
                witness = QuotientWitness(
                    classify_prime(ring.element(p1)),
                    classify_prime(ring.element(p2)),
                    ring,
                    interval,
                    examined,
                )
                verify_witness(witness)
                return witness
    raise CapExceededError(cap, examined)


# -- epsilon-ball approximation -----------------------------------------------------


def _frac_from_float(x: float, places: int = 12) -> Fraction:
    return Fraction(format(x, f".{places}f"))


def approximate(
    ring: RingDescriptor,
    target,
    eps: Fraction,
    cap: int = DEFAULT_CAP,
) -> QuotientWitness:
    """A witness within eps of the target: the epsilon ball is converted to a
    sector (imaginary rings; target is a rational coordinate pair) or an
    interval (real rings; target rational or a ring element), the matching
    finder runs, and the distance bound is re-checked exactly."""
    eps = Fraction(eps)
    if eps <= 0:
        raise DomainError("eps must be positive")
    if ring.is_imaginary:
        return _approximate_complex(ring, target, eps, cap)
    return _approximate_real(ring, target, eps, cap)


def _approximate_complex(ring, target, eps, cap) -> QuotientWitness:
    tx, ty = Fraction(target[0]), Fraction(target[1])
    if tx == 0 and ty == 0:
        raise ZeroTargetError("cannot approximate 0 by quotients of primes")
    m_f = math.hypot(float(tx), float(ty))
    ang_f = math.atan2(float(ty), float(tx)) % (2 * math.pi)
    shrink = 0.45
    for _ in range(40):
        dr = float(eps) * shrink
        dth = float(eps) * shrink / m_f
        lo = max(0.0, ang_f - dth)
        hi = min(2 * math.pi, ang_f + dth)
        r = max(m_f * 0.25, m_f - dr)
        R = m_f + dr
        try:
            sector = AnnularSector.of(
                _frac_from_float(lo), _frac_from_float(hi), _frac_from_float(r), _frac_from_float(R)
            )
        except DegenerateRegionError:
            shrink /= 2
            continue
        witness = find_quotient_sector(ring, sector, cap)
        if _ball_check_complex(witness, tx, ty, eps):
            return witness
        shrink /= 2
    raise AssertionError("ball containment kept failing; shrink loop exhausted")


def _ball_check_complex(w: QuotientWitness, tx: Fraction, ty: Fraction, eps: Fraction) -> bool:
    """|num/den - t|^2 < eps^2, decided exactly in Q(sqrt(D))."""
    num, den = w.numerator.element, w.denominator.element
    D = -w.ring.d
    n2 = den.abs_norm()
    a = num * den.conjugate()  # quotient = a / n2
    x = Fraction(a.u, 2 * n2)
    y = Fraction(a.v, 2 * n2)  # times sqrt(D)
    # |w - t|^2 = (x - tx)^2 + y^2 D + ty^2 - 2 y ty sqrt(D)
    p = (x - tx) ** 2 + y * y * D + ty * ty - eps * eps
    q = -2 * y * ty
    return _surd_sign(p, q, D) < 0


def _approximate_real(ring, target, eps, cap) -> QuotientWitness:
    if isinstance(target, QuadInt):
        if target.ring != ring:
            raise DomainError("target element belongs to a different ring")
        interval = _rational_window_around(target, eps)
    else:
        t = Fraction(target)
        interval = RealInterval(t - eps, t + eps)
    witness = find_quotient_interval(ring, interval, cap)
    _ball_check_real(witness, target, eps)
    return witness


def _rational_window_around(t: QuadInt, eps: Fraction) -> RealInterval:
    """Rational a < t < b with (a, b) inside (t - eps, t + eps), exactly."""
    d = t.ring.d
    tf = (t.u + t.v * math.sqrt(d)) / 2
    delta = eps * Fraction(9, 10)
    for places in (9, 12, 15, 18, 24):
        a = _frac_from_float(tf - float(delta), places)
        b = _frac_from_float(tf + float(delta), places)
        #  t - eps < a < t < b < t + eps, each a surd sign test
        ok = (
            _surd_sign(a - Fraction(t.u, 2) + eps, -Fraction(t.v, 2), d) > 0
            and _surd_sign(Fraction(t.u, 2) - a, Fraction(t.v, 2), d) > 0
            and _surd_sign(b - Fraction(t.u, 2), -Fraction(t.v, 2), d) > 0
            and _surd_sign(Fraction(t.u, 2) + eps - b, Fraction(t.v, 2), d) > 0
        )
        if ok and a < b:
            return RealInterval(a, b)
    raise AssertionError("could not pin a rational window around the target")


def _ball_check_real(w: QuotientWitness, target, eps: Fraction) -> None:
    num, den = w.numerator.element, w.denominator.element
    ring = w.ring
    dpos = den if den.sign_real() > 0 else -den
    npos = num if den.sign_real() > 0 else -num
    if isinstance(target, QuadInt):
        tlo = target * eps.denominator - ring.one * eps.numerator  # (t - eps) * den(eps)
        thi = target * eps.denominator + ring.one * eps.numerator
        lo = npos * eps.denominator - dpos * tlo
        hi = dpos * thi - npos * eps.denominator
    else:
        t = Fraction(target)
        lo_q, hi_q = t - eps, t + eps
        lo = npos * lo_q.denominator - dpos * lo_q.numerator
        hi = dpos * hi_q.numerator - npos * hi_q.denominator
    if lo.sign_real() <= 0 or hi.sign_real() <= 0:
        raise AssertionError("witness fell outside the epsilon ball")
