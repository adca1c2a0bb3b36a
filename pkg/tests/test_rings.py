import math
from fractions import Fraction

import pytest

from quadring import (
    congruent_mod,
    format_element,
    gaussian_gcd,
    make_ring,
    parse_element,
    try_divide,
)
from quadring.errors import (
    BothZeroError,
    DegenerateDError,
    NotSquarefreeError,
    RingMismatchError,
    UnsupportedRingError,
)

from conftest import random_element

RINGS = [-1, -3, 2, 5]


def test_make_ring_gaussian():
    ring = make_ring(-1)
    assert ring.basis_mode == "standard"
    assert ring.signature == "imaginary"
    assert ring.discriminant == -4


def test_make_ring_half_basis():
    ring = make_ring(5)
    assert ring.basis_mode == "half"
    assert ring.discriminant == 5


def test_make_ring_rejects_bad_d():
    with pytest.raises(NotSquarefreeError):
        make_ring(12)
    with pytest.raises(NotSquarefreeError):
        make_ring(-4)
    for d in (0, 1):
        with pytest.raises(DegenerateDError):
            make_ring(d)


def test_basis_mode_matches_residue():
    for d in (-11, -7, -3, -2, -1, 2, 3, 5, 6, 7, 13):
        ring = make_ring(d)
        assert ring.is_half_basis == (d % 4 == 1)
        assert ring.discriminant % 4 in (0, 1)


def test_multiplication_examples(zi):
    a = zi.element(1, 1)
    assert a * zi.element(1, -1) == zi.element(2)
    r5 = make_ring(5)
    phi = r5.half(1, 1)
    assert phi * r5.half(1, -1) == -r5.one
    assert a + zi.zero == a


def test_ring_mismatch_raises(zi, r2):
    with pytest.raises(RingMismatchError):
        zi.element(1) + r2.element(1)
    with pytest.raises(RingMismatchError):
        zi.element(1) * r2.element(1)


def test_parity_invariants_enforced(zi):
    with pytest.raises(ValueError):
        zi.half(1, 0)  # odd coordinates illegal in a standard-basis ring
    with pytest.raises(ValueError):
        make_ring(5).half(1, 2)  # mixed parity never allowed


def test_conjugate_examples(r2):
    a = r2.element(3, 2)
    assert format_element(a.conjugate()) == "3-2*sqrt(2)"
    assert a.conjugate().conjugate() == a


def test_conjugation_is_ring_homomorphism(rng):
    for d in RINGS:
        ring = make_ring(d)
        for _ in range(150):
            a = random_element(rng, ring)
            b = random_element(rng, ring)
            assert (a + b).conjugate() == a.conjugate() + b.conjugate()
            assert (a * b).conjugate() == a.conjugate() * b.conjugate()
            assert a.conjugate().conjugate() == a
    # conjugation fixes rational integers
    assert make_ring(7).element(9).conjugate() == make_ring(7).element(9)


def test_norm_examples(zi):
    assert zi.element(1, 1).norm() == 2
    assert make_ring(5).half(1, 1).norm() == -1


def test_norm_is_squared_modulus_for_imaginary(rng):
    for d in (-1, -2, -7):
        ring = make_ring(d)
        for _ in range(60):
            a = random_element(rng, ring, bound=20)
            z = complex(a.u / 2, a.v / 2 * math.sqrt(-d))
            assert abs(a.norm() - abs(z) ** 2) < 1e-6 * max(1, a.norm())


def test_norm_multiplicative(rng):
    for d in RINGS:
        ring = make_ring(d)
        for _ in range(150):
            a = random_element(rng, ring)
            b = random_element(rng, ring)
            assert (a * b).norm() == a.norm() * b.norm()
            assert (a.norm() == 0) == a.is_zero


def test_try_divide_examples(zi):
    two = zi.element(2)
    onei = zi.element(1, 1)
    assert try_divide(two, onei) == zi.element(1, -1)
    assert try_divide(onei, zi.element(3)) is None
    a = zi.element(4, 7)
    assert try_divide(a, a) == zi.one
    with pytest.raises(ZeroDivisionError):
        try_divide(a, zi.zero)


def test_try_divide_sound(rng):
    for d in RINGS:
        ring = make_ring(d)
        for _ in range(200):
            a = random_element(rng, ring, bound=20)
            b = random_element(rng, ring, bound=20)
            if a.is_zero:
                continue
            q = try_divide(b, a)
            if q is not None:
                assert q * a == b


def test_congruences(zi):
    assert congruent_mod(zi.element(5), zi.element(1), zi.element(2))
    a = zi.element(4, 1)
    assert congruent_mod(a, a, zi.element(3, 1))
    # 4+i = 1 mod (1+i) since (3+i)/(1+i) = 2-i
    assert congruent_mod(zi.element(4, 1), zi.element(1), zi.element(1, 1))


def test_congruence_is_compatible_equivalence(rng, zi):
    gamma = zi.element(3, 1)
    elems = [random_element(rng, zi, bound=15) for _ in range(24)]
    for a in elems[:8]:
        assert congruent_mod(a, a, gamma)
    for a in elems[:8]:
        for b in elems[8:16]:
            if congruent_mod(a, b, gamma):
                assert congruent_mod(b, a, gamma)
                for c in elems[16:]:
                    if congruent_mod(b, c, gamma):
                        assert congruent_mod(a, c, gamma)
                    # compatibility with + and *
                    assert congruent_mod(a + c, b + c, gamma)
                    assert congruent_mod(a * c, b * c, gamma)


def test_gaussian_gcd_examples(zi):
    assert gaussian_gcd(zi.element(2), zi.element(1, 1)) == zi.element(1, 1)
    assert gaussian_gcd(zi.element(3), zi.element(5)) == zi.one
    # gcd with zero normalizes the other argument into [0, pi/2)
    assert gaussian_gcd(zi.element(0, -7), zi.zero) == zi.element(7)
    with pytest.raises(BothZeroError):
        gaussian_gcd(zi.zero, zi.zero)
    with pytest.raises(UnsupportedRingError):
        r = make_ring(2)
        gaussian_gcd(r.element(2), r.element(3))


def test_gaussian_gcd_divides_and_is_maximal(rng, zi):
    # brute-force divisor table for norms <= 100
    divisors = []
    for x in range(-10, 11):
        for y in range(-10, 11):
            e = zi.element(x, y)
            if not e.is_zero and not e.is_unit and e.norm() <= 100:
                divisors.append(e)
    for _ in range(40):
        a = random_element(rng, zi, bound=6)
        b = random_element(rng, zi, bound=6)
        if a.is_zero and b.is_zero:
            continue
        g = gaussian_gcd(a, b)
        assert try_divide(a, g) is not None
        assert try_divide(b, g) is not None
        for delta in divisors:
            if try_divide(a, delta) is not None and try_divide(b, delta) is not None:
                assert try_divide(g, delta) is not None


def test_format_and_parse_roundtrip(rng):
    for d in RINGS:
        ring = make_ring(d)
        for _ in range(60):
            a = random_element(rng, ring, bound=30)
            assert parse_element(format_element(a), ring) == a


def test_parse_grammar(zi):
    assert parse_element("1/2+1/2*sqrt(5)") == make_ring(5).half(1, 1)
    assert parse_element("2+i") == zi.element(2, 1)
    assert parse_element("1-2*i") == zi.element(1, -2)
    assert parse_element("-i") == zi.element(0, -1)
    assert parse_element("7", zi) == zi.element(7)
    with pytest.raises(ValueError):
        parse_element("7")  # no radicand, no ring
    with pytest.raises(ValueError):
        parse_element("1/3+i")  # not integral
    with pytest.raises(ValueError):
        parse_element("sqrt(2)+sqrt(3)")


def test_sign_real(r2):
    assert r2.element(1, 1).sign_real() == 1
    assert r2.element(1, -1).sign_real() == -1  # 1 - sqrt(2) < 0
    assert r2.element(3, -2).sign_real() == 1  # 3 > 2*sqrt(2)
    assert r2.zero.sign_real() == 0
    assert r2.element(0, -3).sign_real() == -1
