"""Scalar tower: Laurent polynomials, rational functions, eighth roots."""

import random
from fractions import Fraction

import pytest

from tanglekit.ring import LaurentPoly, RatFunc, Zeta8, eval_zeta8

A = LaurentPoly.variable()
DELTA = -(A ** 2) - LaurentPoly.monomial(-2)


def random_poly(rng, span=4, terms=4):
    coeffs = {}
    for _ in range(rng.randint(0, terms)):
        coeffs[rng.randint(-span, span)] = Fraction(
            rng.randint(-6, 6), rng.randint(1, 4)
        )
    return LaurentPoly(coeffs)


# ---------------------------------------------------------------------------
# LaurentPoly
# ---------------------------------------------------------------------------

def test_loop_value_square():
    assert str(DELTA * DELTA) == "A^4 + 2 + A^-4"


def test_str_formatting():
    assert str(LaurentPoly.zero()) == "0"
    assert str(LaurentPoly.one()) == "1"
    p = -(A ** 3) + 2 + LaurentPoly.monomial(-2)
    assert str(p) == "-A^3 + 2 + A^-2"
    assert str(LaurentPoly.monomial(2, Fraction(3, 2))) == "3/2*A^2"
    assert str(A) == "A"
    assert str(-A) == "-A"
    assert str(DELTA) == "-A^2 - A^-2"


def test_pow_and_shift():
    assert A ** 0 == LaurentPoly.one()
    assert (A + 1) ** 2 == A ** 2 + 2 * A + 1
    assert A.shift(-3) == LaurentPoly.monomial(-2)
    with pytest.raises(ValueError):
        A ** -1


def test_invert_variable():
    p = 3 * A ** 2 - LaurentPoly.monomial(-1, 5)
    q = p.invert_variable()
    assert q == 3 * LaurentPoly.monomial(-2) - 5 * A
    assert q.invert_variable() == p


def test_ring_axioms_random():
    rng = random.Random(20260814)
    for _ in range(60):
        p, q, r = (random_poly(rng) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p * q == q * p


def test_content():
    p = LaurentPoly({2: Fraction(6), -1: Fraction(4)})
    assert p.content() == 2
    p = LaurentPoly({0: Fraction(1, 2), 3: Fraction(3, 4)})
    assert p.content() == Fraction(1, 4)


# ---------------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------------

def test_normalize_monomial_cancellation():
    r = RatFunc.normalized(A ** 2, A)
    assert r == RatFunc.from_laurent(A)
    assert str(r) == "A"


def test_normalize_common_factor():
    r = RatFunc.normalized(DELTA * A ** 3, DELTA)
    assert r == RatFunc.from_laurent(A ** 3)


def test_normalize_zero_numerator():
    r = RatFunc.normalized(LaurentPoly.zero(), DELTA)
    assert r.is_zero
    assert r == RatFunc.zero()


def test_normalize_denominator_shape():
    # 1/delta: denominator becomes an ordinary integer-primitive
    # polynomial with positive constant term.
    r = RatFunc.one() / RatFunc.from_laurent(DELTA)
    assert r.den.min_exp() == 0
    assert r.den.coeffs[0] > 0
    assert str(r) == "(-A^2)/(A^4 + 1)"


def test_same_value_same_representative():
    rng = random.Random(99)
    for _ in range(40):
        p = random_poly(rng)
        q = random_poly(rng)
        r = random_poly(rng)
        if q.is_zero or r.is_zero:
            continue
        a = RatFunc.normalized(p * r, q * r)
        b = RatFunc.normalized(p, q)
        assert a == b


def test_field_operations():
    x = RatFunc.normalized(A + 1, A - 1)
    y = RatFunc.normalized(LaurentPoly.one(), A)
    assert (x + y) - y == x
    assert (x * y) / y == x
    assert x * x.inverse() == RatFunc.one()
    with pytest.raises(ZeroDivisionError):
        x / RatFunc.zero()


def test_as_laurent():
    assert RatFunc.from_laurent(A ** 2).as_laurent() == A ** 2
    with pytest.raises(ValueError):
        (RatFunc.one() / RatFunc.from_laurent(A + 1)).as_laurent()


# ---------------------------------------------------------------------------
# Zeta8
# ---------------------------------------------------------------------------

def test_defining_relation():
    assert eval_zeta8(A ** 4) == Zeta8.of(-1)
    assert eval_zeta8(LaurentPoly.one()) == Zeta8.one()


def test_loop_value_vanishes():
    # A^2 maps to i and A^-2 to -i, so delta maps to zero.
    assert eval_zeta8(DELTA).is_zero


def test_negative_exponents():
    # A^-1 = -A^3 in the quotient.
    assert eval_zeta8(LaurentPoly.monomial(-1)) == -Zeta8.generator_power(3)


def test_homomorphism_random():
    rng = random.Random(7)
    for _ in range(60):
        p, q = random_poly(rng), random_poly(rng)
        assert eval_zeta8(p + q) == eval_zeta8(p) + eval_zeta8(q)
        assert eval_zeta8(p * q) == eval_zeta8(p) * eval_zeta8(q)


def test_inverse():
    rng = random.Random(13)
    found = 0
    while found < 20:
        z = Zeta8.of(
            rng.randint(-3, 3), rng.randint(-3, 3),
            rng.randint(-3, 3), rng.randint(-3, 3),
        )
        if z.is_zero:
            continue
        found += 1
        assert z * z.inverse() == Zeta8.one()
    with pytest.raises(ZeroDivisionError):
        Zeta8.zero().inverse()


def test_as_rational():
    assert Zeta8.of(Fraction(3, 2)).as_rational() == Fraction(3, 2)
    assert Zeta8.of(1, 1).as_rational() is None
