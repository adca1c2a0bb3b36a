"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Criteria 4 and 7 contain sub-clauses that are infeasible as stated (measured
and documented in the test messages); they are implemented faithfully and
left to fail rather than loosened.
"""

import math
import random
import shutil
import subprocess
import sys
import time
from fractions import Fraction
from math import isqrt

import pytest

from quadring import (
    AnnularSector,
    CapExceededError,
    CongruenceClass,
    RealInterval,
    approximate,
    class_number,
    count_ratio,
    count_sector,
    count_sector_congruence,
    euler_phi_gaussian,
    find_quotient_sector_congruent,
    fundamental_unit,
    inert_rational_fallback,
    is_prime_element,
    make_ring,
    try_divide,
    verify_witness,
)
from quadring.angles import Angle
from quadring.gaussian import residue_system
from quadring.intmath import SIEVE, squarefree
from quadring.rings import gaussian_gcd

ZI = make_ring(-1)
FULL = (Angle.of(0), Angle.of(0, 2))


def report(criterion: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")


def gaussian_prime_count_oracle(x: int) -> int:
    """Exhaustive lattice enumeration using only the classification of
    Gaussian primes: a + b*i is prime iff a^2 + b^2 is a rational prime, or
    it is an associate of a rational prime p = 3 mod 4."""
    SIEVE.ensure(x)
    count = 0
    amax = isqrt(x)
    for a in range(-amax, amax + 1):
        for b in range(-amax, amax + 1):
            n = a * a + b * b
            if n < 2 or n > x:
                continue
            if SIEVE.is_prime(n):
                count += 1
            elif (a == 0 or b == 0):
                p = abs(a) or abs(b)
                if p % 4 == 3 and SIEVE.is_prime(p):
                    count += 1
    return count


def test_criterion_1_gaussian_main_term_fit():
    x = 10**5
    t0 = time.monotonic()
    empirical = count_sector(ZI, x, *FULL)
    elapsed = time.monotonic() - t0
    assert empirical == gaussian_prime_count_oracle(x)
    predicted = 4 * x / math.log(x)
    ratio5 = empirical / predicted
    ratio3 = count_sector(ZI, 10**3, *FULL) / (4 * 10**3 / math.log(10**3))
    ok = 0.90 <= ratio5 <= 1.25 and abs(ratio5 - 1) < abs(ratio3 - 1) and elapsed < 10
    report(1, ok, f"ratio(1e5)={ratio5:.4f}, ratio(1e3)={ratio3:.4f}, {elapsed:.1f}s")
    assert 0.90 <= ratio5 <= 1.25
    assert abs(ratio5 - 1) < abs(ratio3 - 1)
    assert elapsed < 10


def test_criterion_2_angular_equidistribution():
    x = 10**5
    wedges = [
        count_sector(ZI, x, Angle.of(0, Fraction(k, 4)), Angle.of(0, Fraction(k + 1, 4)))
        for k in range(8)
    ]
    spread = max(wedges) / min(wedges)
    pairs_equal = all(wedges[k] == wedges[(k + 2) % 8] for k in range(8))
    ok = spread <= 1.10 and pairs_equal
    report(2, ok, f"wedges={wedges}, max/min={spread:.4f}")
    assert spread <= 1.10
    assert pairs_equal
    assert sum(wedges) == count_sector(ZI, x, *FULL)


def test_criterion_3_congruence_equidistribution():
    t0 = time.monotonic()
    x = 10**5
    gamma = ZI.element(3)
    phi = euler_phi_gaussian(gamma)
    brute = sum(1 for r in residue_system(gamma) if gaussian_gcd(r, gamma).is_unit)
    assert phi == brute == 8
    classes = [r for r in residue_system(gamma) if gaussian_gcd(r, gamma).is_unit]
    counts = [
        count_sector_congruence(x, *FULL, CongruenceClass(r, gamma)) for r in classes
    ]
    spread = (max(counts) - min(counts)) / min(counts)
    total = count_sector(ZI, x, *FULL)
    # prime elements dividing gamma with norm <= x: the four associates of 3
    associates_of_3 = (ZI.element(3), ZI.element(-3), ZI.element(0, 3), ZI.element(0, -3))
    dividing = sum(1 for e in associates_of_3 if try_divide(gamma, e) is not None)
    assert dividing == 4
    exact_sum = sum(counts) + dividing == total
    elapsed = time.monotonic() - t0
    ok = spread <= 0.15 and exact_sum and elapsed < 30
    report(3, ok, f"phi=8, counts={counts}, spread={spread:.4f}, sum_exact={exact_sum}, {elapsed:.1f}s")
    assert spread <= 0.15
    assert exact_sum
    assert elapsed < 30


def test_criterion_4_real_ratio_law():
    """The ratio membership holds; the trend clause is infeasible as stated:
    the exact counts (verified against an independent lattice oracle) give
    ratio(1e3) = 1.0640 and ratio(1e5) = 1.0977, so |ratio(1e5) - 1| is NOT
    smaller.  The criterion is implemented faithfully and fails honestly."""
    t0 = time.monotonic()
    r2 = make_ring(2)
    eta2 = (1 + math.sqrt(2)) ** 2
    ratios = {}
    for x in (10**3, 10**4, 10**5):
        predicted = math.log(3) / (2 * math.log(eta2)) * x / math.log(x)
        ratios[x] = count_ratio(r2, x, 1, 3) / predicted
    elapsed = time.monotonic() - t0
    in_range = 0.70 <= ratios[10**5] <= 1.30
    trend = abs(ratios[10**5] - 1) < abs(ratios[10**3] - 1)
    ok = in_range and trend and elapsed < 60
    report(4, ok, f"ratios={{1e3: {ratios[10**3]:.4f}, 1e4: {ratios[10**4]:.4f}, 1e5: {ratios[10**5]:.4f}}}, {elapsed:.1f}s")
    assert in_range
    assert elapsed < 60
    assert trend, (
        "trend clause infeasible as stated: ratio(1e3) happens to sit closer "
        f"to 1 than ratio(1e5) ({ratios[10**3]:.4f} vs {ratios[10**5]:.4f}); "
        "counts cross-checked against an independent lattice-scan oracle"
    )


def _seeded_disks(seed: int, count: int):
    rnd = random.Random(seed)
    disks = []
    while len(disks) < count:
        m = 0.11 + 9.78 * rnd.random()
        ang = rnd.uniform(0.01, 2 * math.pi - 0.01)
        tx = Fraction(format(m * math.cos(ang), ".12f"))
        ty = Fraction(format(m * math.sin(ang), ".12f"))
        if tx == 0 and ty == 0:
            continue
        disks.append((tx, ty))
    return disks


@pytest.mark.parametrize("d", [-1, -2, -3, -7, -11])
def test_criterion_5_density_witnesses_complex(d):
    ring = make_ring(d)
    eps = Fraction(1, 20)
    worst = 0.0
    for tx, ty in _seeded_disks(1000 + d, 100):
        t0 = time.monotonic()
        w = approximate(ring, (tx, ty), eps, cap=10**7)
        elapsed = time.monotonic() - t0
        worst = max(worst, elapsed)
        transcript = verify_witness(w)  # exact strict-interior + primality
        assert all(entry["ok"] for entry in transcript)
        assert is_prime_element(w.numerator.element)
        assert is_prime_element(w.denominator.element)
        assert elapsed < 5, (d, float(tx), float(ty), elapsed)
    report(5, True, f"d={d}: 100 witnesses, worst {worst:.2f}s/witness")


def test_criterion_6_congruence_density_witnesses():
    rnd = random.Random(424242)
    one_mod_opp = CongruenceClass(ZI.element(1), ZI.element(1, 1))
    one_mod3 = CongruenceClass(ZI.element(1), ZI.element(3))
    two_mod3 = CongruenceClass(ZI.element(2), ZI.element(3))
    n_ok = 0
    for k in range(20):
        m = 0.3 + 2.4 * rnd.random()
        ang = rnd.uniform(0.02, 2 * math.pi - 0.12)
        width = rnd.uniform(0.05, 0.1)
        sector = AnnularSector.of(
            Fraction(format(ang, ".9f")),
            Fraction(format(ang + width, ".9f")),
            Fraction(format(m * 0.95, ".9f")),
            Fraction(format(m * 1.05, ".9f")),
        )
        for c1, c2 in ((one_mod_opp, one_mod_opp), (one_mod3, two_mod3)):
            w = find_quotient_sector_congruent(sector, c1, c2, cap=10**7)
            transcript = verify_witness(w)
            assert all(entry["ok"] for entry in transcript)
            n_ok += 1
    report(6, True, f"{n_ok} congruence witnesses, all exact-verified")
    assert n_ok == 40


def test_criterion_7_density_witnesses_real():
    """Targets 1000 are infeasible at cap 1e7: the complete coordinate scan
    (independently cross-checked) shows the minimal witness norm for d = 2 is
    14,954,297 > 1e7, and d = 3, 5 have none below the cap either.  The
    remaining 12 cases pass; the criterion is reported honestly."""
    eps = Fraction(1, 1000)
    failures = []
    fallback_checked = 0
    for d in (2, 3, 5):
        ring = make_ring(d)
        targets = {
            "sqrt2": ring.element(0, 1),
            "golden": Fraction(16180339887, 10**10),
            "pi": Fraction(314159, 100000),
            "small": Fraction(1, 1000),
            "large": Fraction(1000),
        }
        for name, target in targets.items():
            try:
                w = approximate(ring, target, eps, cap=10**7)
            except CapExceededError:
                failures.append((d, name))
                continue
            transcript = verify_witness(w)
            assert all(entry["ok"] for entry in transcript)
            num, den = w.numerator.element, w.denominator.element
            assert num == den.conjugate() or num == -den.conjugate()  # pi'/pi form
            if name in ("sqrt2", "golden"):  # inside (0.3, 3.0)
                if isinstance(target, Fraction):
                    window = RealInterval(target - eps, target + eps)
                else:
                    window = RealInterval(Fraction(14135, 10**4), Fraction(14149, 10**4))
                fb = inert_rational_fallback(ring, window, cap=10**7)
                verify_witness(fb)
                fallback_checked += 1
    ok = not failures
    report(
        7,
        ok,
        f"{15 - len(failures)}/15 witnesses, fallback agreements={fallback_checked}, "
        f"failures={failures}",
    )
    assert fallback_checked == 6
    assert not failures, (
        "target 1000 with eps 1e-3 admits no conjugate-ratio witness of norm "
        "<= 1e7 in any of d=2,3,5 (minimal d=2 witness norm is 14954297); "
        "infeasible as stated at cap 1e7"
    )


def test_criterion_8_invariants():
    expected_units = {2: (2, 2), 3: (4, 2), 5: (1, 1), 13: (3, 1)}
    for d, coords in expected_units.items():
        ring = make_ring(d)
        eta = fundamental_unit(ring)
        assert (eta.u, eta.v) == coords
        # minimality by brute-force Pell scan below eta
        for v in range(1, eta.v + 1):
            for s in (-4, 4):
                uu = d * v * v + s
                if uu <= 0:
                    continue
                u = isqrt(uu)
                if u * u == uu and (u - v) % 2 == 0:
                    if not ring.is_half_basis and (u % 2 or v % 2):
                        continue
                    assert (u + v * math.sqrt(d)) >= (eta.u + eta.v * math.sqrt(d)) - 1e-9
    ones = [d for d in range(-200, 0) if squarefree(d) and class_number(make_ring(d)) == 1]
    ok = sorted(ones) == [-163, -67, -43, -19, -11, -7, -3, -2, -1]
    report(8, ok, f"units confirmed minimal; h=1 rings in [-200,-1]: {sorted(ones)}")
    assert ok


def _associate_reps(ring, bound):
    reps = {}
    if ring.is_imaginary:
        D = -ring.d
        vmax = isqrt(4 * bound // D) + 1
        umax = isqrt(4 * bound) + 2
        for v in range(0, vmax + 1):
            for u in range(-umax, umax + 1):
                if v == 0 and u <= 0:
                    continue
                if (u - v) % 2:
                    continue
                if not ring.is_half_basis and (u % 2 or v % 2):
                    continue
                e = ring.half(u, v)
                n = e.abs_norm()
                if 2 <= n <= bound:
                    reps.setdefault(n, []).append(e)
    else:
        from quadring.units import eta_upper_bound

        vb = int((eta_upper_bound(ring) + 1) * (isqrt(bound) + 1)) + 2
        for v in range(0, vb + 1):
            for sign in (1, -1):
                for n in range(2, bound + 1):
                    uu = ring.d * v * v + sign * 4 * n
                    if uu <= 0:
                        continue
                    u = isqrt(uu)
                    if u * u != uu or (u - v) % 2:
                        continue
                    if not ring.is_half_basis and (u % 2 or v % 2):
                        continue
                    reps.setdefault(n, []).append(ring.half(u, v))
    return reps


def test_criterion_9_oracle_equivalence():
    t0 = time.monotonic()
    for d in (-1, -2, 2, 5):
        ring = make_ring(d)
        reps = _associate_reps(ring, 300)
        for n, elems in sorted(reps.items()):
            for alpha in elems:
                reducible = False
                for m in range(2, n):
                    if n % m:
                        continue
                    for delta in reps.get(m, ()):
                        q = try_divide(alpha, delta)
                        if q is not None and not q.is_unit:
                            reducible = True
                            break
                    if reducible:
                        break
                assert is_prime_element(alpha) == (not reducible), (d, alpha)
    phi_checked = 0
    for x in range(-14, 15):
        for y in range(0, 15):
            gamma = ZI.element(x, y)
            if gamma.is_zero or gamma.is_unit or gamma.abs_norm() > 200:
                continue
            brute = sum(1 for r in residue_system(gamma) if gaussian_gcd(r, gamma).is_unit)
            assert euler_phi_gaussian(gamma) == brute
            phi_checked += 1
    elapsed = time.monotonic() - t0
    ok = elapsed < 60
    report(9, ok, f"irreducibility oracle over |N|<=300 in 4 rings; {phi_checked} phi moduli; {elapsed:.1f}s")
    assert elapsed < 60


def _run_cli(args):
    exe = shutil.which("quadring")
    cmd = [exe] + args if exe else [sys.executable, "-m", "quadring.cli"] + args
    proc = subprocess.run(cmd, capture_output=True, timeout=300)
    assert proc.returncode == 0, proc.stderr.decode()
    return proc.stdout


def test_criterion_10_cli_determinism():
    verify_args = ["verify", "--law", "gaussian_sector", "--d", "-1", "--xs", "1e3,1e4,1e5"]
    outputs = {_run_cli(verify_args + ["--threads", t]) for t in ("1", "8", "1")}
    find_args = ["find", "--d", "-1", "--sector", "0.1:0.2", "--r", "0.9", "--R", "1.1"]
    find_outputs = {_run_cli(find_args) for _ in range(3)}
    ok = len(outputs) == 1 and len(find_outputs) == 1
    report(10, ok, "verify and find outputs byte-identical across runs and thread counts")
    assert ok
