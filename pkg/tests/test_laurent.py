from fractions import Fraction

import pytest

from qdfs.laurent import LaurentPoly


def test_zero_coefficients_dropped():
    p = LaurentPoly({2: 0, 1: 3, -1: 0})
    assert p == LaurentPoly({1: 3})
    assert LaurentPoly({0: 0}).is_zero
    assert not LaurentPoly()


def test_constructors():
    assert LaurentPoly.zero().is_zero
    assert LaurentPoly.one() == 1
    assert LaurentPoly.mu() == LaurentPoly({1: 1})
    assert LaurentPoly.mu(-2, 5) == LaurentPoly({-2: 5})
    assert LaurentPoly.rational(Fraction(1, 3)).coefficient(0) == Fraction(1, 3)


def test_arithmetic():
    mu = LaurentPoly.mu()
    one = LaurentPoly.one()
    assert (one + mu) * (one - mu) == one - mu**2
    assert mu * mu == LaurentPoly({2: 1})
    assert LaurentPoly.mu(-1) * mu == one
    assert -(mu - one) == one - mu
    assert 2 + mu == LaurentPoly({0: 2, 1: 1})
    assert 1 - mu == LaurentPoly({0: 1, 1: -1})
    assert 3 * mu == LaurentPoly({1: 3})


def test_pow_rejects_negative_and_noninteger():
    with pytest.raises(ValueError):
        LaurentPoly.mu() ** -1
    with pytest.raises(ValueError):
        LaurentPoly.mu() ** 1.5
    assert LaurentPoly.mu() ** 0 == 1


def test_substitute_exact():
    p = LaurentPoly({-2: 1, 1: 2})
    assert p.substitute(Fraction(1, 2)) == Fraction(5)
    assert LaurentPoly({3: Fraction(1, 7)}).substitute(7) == Fraction(49)


def test_substitute_negative_power_at_zero():
    with pytest.raises(ZeroDivisionError):
        LaurentPoly.mu(-1).substitute(0)
    assert LaurentPoly.mu(2).substitute(0) == 0


def test_evaluate_float():
    p = LaurentPoly({-1: 1, 2: 3})
    assert p.evaluate(0.5) == pytest.approx(2.0 + 0.75)


def test_hash_consistency():
    a = LaurentPoly({1: 2, 0: 0})
    b = LaurentPoly({1: 2})
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1


def test_str_forms():
    assert str(LaurentPoly.zero()) == "0"
    assert str(LaurentPoly.mu(2, -1)) == "-mu^2"
    assert str(LaurentPoly({0: 1, 2: -1})) == "1 - mu^2"
