import pytest

from quadring import (
    factor_gaussian,
    format_element,
    is_prime_element,
    make_ring,
    solve_norm_equation,
    splitting_type,
    try_divide,
)
from quadring.errors import NotPrimeError, PreconditionError, UnsupportedRingError
from quadring.primality import INERT, RAMIFIED, SPLIT, classify_prime, solve_norm_equation_exhaustive
from quadring.units import imaginary_units

from conftest import random_element


def test_splitting_examples(zi):
    assert splitting_type(3, zi) == INERT
    assert splitting_type(5, zi) == SPLIT
    assert splitting_type(2, zi) == RAMIFIED
    with pytest.raises(NotPrimeError):
        splitting_type(6, zi)


def test_splitting_matches_solvability_oracle():
    """p splits iff the discriminant is a nonzero square mod p (brute force)."""
    for d in (-1, -2, -3, -7, -11, -5, 2, 3, 5, 13):
        ring = make_ring(d)
        disc = ring.discriminant
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43):
            kind = splitting_type(p, ring)
            if disc % p == 0:
                assert kind == RAMIFIED
            elif p == 2:
                # odd disc: 2 splits iff x^2 = disc mod 8 has an odd solution
                solvable = any(z * z % 8 == disc % 8 for z in (1, 3, 5, 7))
                assert kind == (SPLIT if solvable else INERT)
            else:
                solvable = any(z * z % p == disc % p for z in range(p))
                assert kind == (SPLIT if solvable else INERT)


def test_solve_norm_equation_examples(zi):
    sol = solve_norm_equation(5, zi)
    assert sol.abs_norm() == 5
    assert solve_norm_equation(2, make_ring(-5)) is None
    sol = solve_norm_equation(7, make_ring(2))
    assert abs(sol.norm()) == 7
    with pytest.raises(PreconditionError):
        solve_norm_equation(3, zi)


def test_solve_norm_equation_sound_and_complete():
    """Cornacchia path agrees with the exhaustive bounded search on existence
    for every rational prime below 600 (the dual-route check)."""
    from quadring.intmath import primes_up_to

    for d in (-1, -2, -3, -7, -11, -5, -6, 2, 3, 5, 6, 13):
        ring = make_ring(d)
        for p in primes_up_to(600):
            if splitting_type(p, ring) == INERT:
                continue
            fast = solve_norm_equation(p, ring)
            slow = solve_norm_equation_exhaustive(p, ring)
            assert (fast is None) == (slow is None), (d, p)
            for sol in (fast, slow):
                if sol is not None:
                    assert sol.abs_norm() == p
                    assert is_prime_element(sol)


def test_norm_minus_p_solutions_are_found():
    # d=3, p=11: only norm -11 is represented; the solver must still find it
    sol = solve_norm_equation(11, make_ring(3))
    assert sol is not None and sol.norm() == -11


def test_is_prime_element_examples(zi):
    assert is_prime_element(zi.element(3))
    assert not is_prime_element(zi.element(2))
    assert not is_prime_element(make_ring(-5).element(1, 1))  # irreducible, not prime
    assert not is_prime_element(zi.one)
    assert not is_prime_element(zi.zero)


def _irreducible_by_trial_division(alpha, reps_by_norm):
    n = alpha.abs_norm()
    if n <= 1:
        return False
    for m in range(2, n):
        if n % m:
            continue
        for delta in reps_by_norm.get(m, ()):
            q = try_divide(alpha, delta)
            if q is not None and not q.is_unit:
                return True  # found a proper factorization
    return None


def _norm_reps(ring, bound):
    """One representative per associate class for every |norm| <= bound."""
    reps = {}
    if ring.is_imaginary:
        from math import isqrt

        D = -ring.d
        vmax = isqrt(4 * bound // D) + 1
        umax = isqrt(4 * bound) + 2
        for v in range(0, vmax + 1):
            # v >= 0 with u of either sign covers one associate of every
            # class even when the only units are +-1
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
        from math import isqrt

        from quadring.units import eta_upper_bound

        vb = int((eta_upper_bound(ring) + 1) * (isqrt(bound) + 1)) + 2
        for v in range(0, vb + 1):
            for sign in (1, -1):
                target_base = ring.d * v * v
                for n in range(2, bound + 1):
                    uu = target_base + sign * 4 * n
                    if uu <= 0:
                        continue
                    u = isqrt(uu)
                    if u * u != uu or (u - v) % 2:
                        continue
                    if not ring.is_half_basis and (u % 2 or v % 2):
                        continue
                    reps.setdefault(n, []).append(ring.half(u, v))
    return reps


def test_prime_element_matches_irreducibility_small():
    """Module-scale version of the oracle equivalence (full range is in the
    acceptance suite)."""
    bound = 120
    for d in (-1, -2, 2, 5):
        ring = make_ring(d)
        reps = _norm_reps(ring, bound)
        for n, elems in reps.items():
            for alpha in elems:
                reducible = _irreducible_by_trial_division(alpha, reps)
                expected = reducible is None  # no proper divisor found
                assert is_prime_element(alpha) == expected, (d, format_element(alpha))


def test_conjugate_and_associate_primality(rng, zi):
    for d in (-1, -3, 2, 5):
        ring = make_ring(d)
        found = 0
        while found < 10:
            a = random_element(rng, ring, bound=12)
            if not is_prime_element(a):
                continue
            found += 1
            assert is_prime_element(a.conjugate())
            assert is_prime_element(-a)
            if ring.is_imaginary:
                for u in imaginary_units(ring):
                    assert is_prime_element(a * u)
            else:
                from quadring.units import fundamental_unit

                eta = fundamental_unit(ring)
                assert is_prime_element(a * eta)
                assert is_prime_element(a * eta.inverse())


def test_factor_gaussian_examples(zi):
    unit, factors = factor_gaussian(zi.element(2))
    assert unit == zi.element(0, -1)
    assert len(factors) == 1 and factors[0][1] == 2
    assert factors[0][0].element == zi.element(1, 1)

    unit, factors = factor_gaussian(zi.element(5))
    assert sorted(pe.absolute_norm for pe, _ in factors) == [5, 5]

    unit, factors = factor_gaussian(zi.element(1, 1))
    assert factors == [(factors[0][0], 1)] and factors[0][0].element == zi.element(1, 1)
    with pytest.raises(UnsupportedRingError):
        factor_gaussian(make_ring(2).element(6))


def test_factor_gaussian_roundtrip(rng, zi):
    for _ in range(50):
        g = random_element(rng, zi, bound=20)
        if g.is_zero:
            continue
        unit, factors = factor_gaussian(g)
        prod = unit
        for pe, e in factors:
            assert is_prime_element(pe.element)
            # primes normalized to the first quadrant
            assert pe.element.u > 0 and pe.element.v >= 0
            prod = prod * pe.element**e
        assert prod == g


def test_classify_prime(zi):
    pe = classify_prime(zi.element(3))
    assert pe.kind == INERT and pe.rational_prime == 3 and pe.absolute_norm == 9
    pe = classify_prime(zi.element(2, 1))
    assert pe.kind == SPLIT and pe.rational_prime == 5 and pe.absolute_norm == 5
