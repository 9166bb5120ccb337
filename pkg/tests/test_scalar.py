"""Exact arithmetic in Q(t, u)."""

import random

import pytest

from qaw.scalar import (
    HALF,
    MAX_EXPONENT,
    ONE,
    Q,
    T,
    U,
    ZERO,
    Rat,
    Scalar,
    as_scalar,
    rational,
    tpow,
    upow,
)

GAMMA = (U - U ** -1) / (tpow(2) - tpow(-2))


def rand_scalar(rng, deg=4, with_u=True, nonzero=False):
    """Random Laurent polynomial, degree <= deg, coefficients in [-9, 9]."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, 6)):
            i = rng.randint(-deg, deg)
            j = rng.randint(-2, 2) if with_u else 0
            terms[(i, j)] = terms.get((i, j), 0) + rng.randint(-9, 9)
        s = Scalar.from_terms(terms)
        if not (nonzero and s.is_zero):
            return s


def test_inverse_pair():
    assert T * T ** -1 == ONE
    assert (T * T.inverse()).is_one


def test_difference_of_squares():
    left = (tpow(2) - tpow(-2)) * (tpow(2) + tpow(-2))
    assert left == tpow(4) - tpow(-4)


def test_long_division():
    num = ONE - tpow(4)
    den = ONE - tpow(2)
    quotient = ONE + tpow(2)
    # oracle: the claimed quotient re-multiplies to the numerator
    assert quotient * den == num
    assert num / den == quotient


def test_division_leaves_reduced_fractions():
    s = ONE / (ONE - U)
    assert not s.is_laurent
    assert s * (ONE - U) == ONE


def test_from_terms_merges_and_drops_zeros():
    s = Scalar.from_terms([((1, 0), 2), ((1, 0), -2), ((0, 0), 3)])
    assert s == rational(3)
    assert Scalar.from_terms({}) == ZERO


def test_exponent_guard():
    with pytest.raises(OverflowError):
        Scalar.from_terms({(MAX_EXPONENT + 1, 0): 1})


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        T * 0.5  # pytest: disable


def test_canonical_idempotence():
    rng = random.Random(1)
    for _ in range(50):
        a = rand_scalar(rng) / rand_scalar(rng, nonzero=True)
        num = {(i, j): c for i, j, c in a.numerator_terms()}
        den = {(i, j): c for i, j, c in a.denominator_terms()}
        again = Scalar.from_terms(num, den)
        assert {(i, j): c for i, j, c in again.numerator_terms()} == num
        assert {(i, j): c for i, j, c in again.denominator_terms()} == den
        # a common factor of 7/3 must normalise away entirely
        scaled = Scalar.from_terms(
            {(i, j): c * Rat(7, 3) for i, j, c in a.numerator_terms()},
            {(i, j): c * Rat(7, 3) for i, j, c in a.denominator_terms()},
        )
        assert scaled == a


def test_canonical_form_shape():
    rng = random.Random(2)
    for _ in range(50):
        a = rand_scalar(rng) / rand_scalar(rng, nonzero=True)
        if a.is_zero:
            continue
        nmins = [min(i for i, _, _ in a.numerator_terms()), min(j for _, j, _ in a.numerator_terms())]
        dmins = [min(i for i, _, _ in a.denominator_terms()), min(j for _, j, _ in a.denominator_terms())]
        assert min(nmins[0], dmins[0]) == 0
        assert min(nmins[1], dmins[1]) == 0
        lead = max(a.denominator_terms(), key=lambda t: (t[0], t[1]))
        assert lead[2] == 1


def test_field_axioms():
    rng = random.Random(3)
    for _ in range(40):
        a = rand_scalar(rng)
        b = rand_scalar(rng)
        c = rand_scalar(rng, nonzero=True)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == ZERO
        assert c * c.inverse() == ONE
        # denominators with u in them exercise the bivariate gcd
        f = a / c
        g = b / c
        assert (f + g) * c == a + b


def test_pow():
    assert T ** 4 == Q
    assert (T + U) ** 0 == ONE
    s = (ONE + tpow(2)) ** 3
    assert s == (ONE + tpow(2)) * (ONE + tpow(2)) * (ONE + tpow(2))
    assert (tpow(2)) ** -2 == tpow(-4)
    assert (ONE - U) ** -1 * (ONE - U) == ONE


def test_shift_definition():
    assert U.shift_n(1) == U * tpow(2)
    assert (U + U ** -1).shift_n(-1) == U * tpow(-2) + U ** -1 * tpow(2)
    assert T.shift_n(5) == T


def test_shift_roundtrip_and_morphism():
    rng = random.Random(4)
    for _ in range(30):
        a = rand_scalar(rng)
        b = rand_scalar(rng, nonzero=True)
        assert a.shift_n(1).shift_n(-1) == a
        assert (a * b).shift_n(2) == a.shift_n(2) * b.shift_n(2)
        assert (a + b).shift_n(-3) == a.shift_n(-3) + b.shift_n(-3)
        assert (a / b).shift_n(1) == a.shift_n(1) / b.shift_n(1)


def test_instantiate_examples():
    assert U.instantiate_n(0) == ONE
    assert U.instantiate_n(2) == tpow(4)
    assert GAMMA.instantiate_n(1) == ONE
    # the negative-index convention needs n = -1 to make sense too
    assert U.instantiate_n(-1) == tpow(-2)


def test_shift_then_instantiate():
    rng = random.Random(5)
    for _ in range(30):
        a = rand_scalar(rng)
        for k, n in ((1, 3), (-2, 5), (4, 0), (-1, 1)):
            assert a.shift_n(k).instantiate_n(n) == a.instantiate_n(n + k)


def test_instantiate_clears_u():
    s = (U - upow(2)) / (ONE + U)
    inst = s.instantiate_n(3)
    assert not inst.has_u
    with pytest.raises(ZeroDivisionError):
        (ONE / (ONE - U)).instantiate_n(0)


def test_eval_examples():
    assert T.evaluate(0.25) == pytest.approx(0.7071067811865476, abs=1e-15)
    alpha = (tpow(2) + tpow(-2)) * HALF
    assert alpha.evaluate(0.25) == pytest.approx(1.25, abs=1e-15)
    assert ONE.evaluate(0.9) == 1.0
    assert U.evaluate(0.5, n=2) == pytest.approx(0.5, abs=1e-15)


def test_eval_guards():
    with pytest.raises(ValueError):
        T.evaluate(1.5)
    with pytest.raises(ValueError):
        U.evaluate(0.5)
    with pytest.raises(ZeroDivisionError):
        (ONE / (ONE - U)).evaluate(0.5, n=0)


def test_eval_commutes_with_arithmetic():
    rng = random.Random(6)
    q0 = 0.37
    for _ in range(30):
        a = rand_scalar(rng)
        b = rand_scalar(rng, nonzero=True)
        n = rng.randint(0, 6)
        va, vb = a.evaluate(q0, n), b.evaluate(q0, n)
        if abs(vb) < 1e-6:
            continue
        assert (a + b).evaluate(q0, n) == pytest.approx(va + vb, rel=1e-12, abs=1e-12)
        assert (a * b).evaluate(q0, n) == pytest.approx(va * vb, rel=1e-12, abs=1e-12)
        assert (a / b).evaluate(q0, n) == pytest.approx(va / vb, rel=1e-12, abs=1e-12)


def test_as_scalar_coercion():
    assert as_scalar(3) == rational(3)
    assert as_scalar(Rat(1, 2)) == HALF
    assert as_scalar(T) is T
    with pytest.raises(TypeError):
        as_scalar(0.5)


def test_rational_queries():
    assert rational(6, 4).as_rational() == Rat(3, 2)
    assert ZERO.as_rational() == 0
    assert not T.is_rational
    with pytest.raises(ValueError):
        T.as_rational()
    assert (U / U).is_one
    assert T.is_laurent and not (ONE / (ONE + T)).is_laurent
    assert U.has_u and not T.has_u


def test_laurent_terms_iteration():
    s = tpow(2) * upow(-1) + rational(3)
    terms = list(s.laurent_terms())
    assert terms == [(2, -1, 1), (0, 0, 3)]
    with pytest.raises(ValueError):
        list((ONE / (ONE + T)).laurent_terms())


def test_parse_render_roundtrip():
    rng = random.Random(7)
    for _ in range(25):
        a = rand_scalar(rng) / rand_scalar(rng, nonzero=True)
        assert Scalar.parse(a.render()) == a
    assert Scalar.parse("(1/2)*t^2*u^-1 + 1") == HALF * tpow(2) * upow(-1) + ONE
