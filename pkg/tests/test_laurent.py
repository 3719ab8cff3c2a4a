from fractions import Fraction

from heckesat.laurent import Laurent, QuadExt


def test_zero_and_one():
    assert Laurent.zero().is_zero()
    assert not Laurent.one().is_zero()
    assert Laurent.one() + Laurent.zero() == Laurent.one()


def test_normalization_drops_zero_coeffs():
    x = Laurent({3: 1}) - Laurent({3: 1})
    assert x.is_zero()
    assert x.coeffs == {}


def test_fraction_demotion():
    x = Laurent({0: Fraction(4, 2)})
    assert x.coeffs[0] == 2
    assert isinstance(x.coeffs[0], int)


def test_arithmetic():
    v = Laurent.v_power(1)
    assert v * v == Laurent.v_power(2)
    assert (v + Laurent.one()) * (v - Laurent.one()) == Laurent({2: 1, 0: -1})
    assert v ** 3 == Laurent.v_power(3)
    assert 2 * v == Laurent.v_power(1, 2)


def test_negative_exponents():
    vinv = Laurent.v_power(-1)
    assert vinv * Laurent.v_power(1) == Laurent.one()


def test_is_integral():
    assert Laurent({1: 3, -2: -7}).is_integral()
    assert not Laurent({0: Fraction(1, 2)}).is_integral()


def test_eval_quad_positive_and_negative():
    # v**2 -> p, v**3 -> p*v, v**-1 -> v/p
    x = Laurent({2: 1})
    q = x.eval_quad(5)
    assert q == QuadExt(5, 0, 5)
    q = Laurent({3: 1}).eval_quad(5)
    assert q == QuadExt(0, 5, 5)
    q = Laurent({-1: 1}).eval_quad(5)
    assert q == QuadExt(0, Fraction(1, 5), 5)


def test_eval_quad_identity_two_v_inverse():
    # at p = 2: 2/v = v
    assert Laurent({-1: 2}).eval_quad(2) == Laurent({1: 1}).eval_quad(2)


def test_pairs_roundtrip():
    x = Laurent({-2: Fraction(1, 3), 5: 7})
    assert Laurent.from_pairs(x.to_pairs()) == x


def test_quadext_field_ops():
    a = QuadExt(1, 2, 3)   # 1 + 2*sqrt(3)
    b = QuadExt(0, 1, 3)
    assert a * b == QuadExt(6, 1, 3)
    assert a + b == QuadExt(1, 3, 3)
    assert a - a == QuadExt(0, 0, 3)
    assert (a * b).is_rational() is False
    assert QuadExt(7, 0, 3) == 7


def test_quadext_mixed_primes_rejected():
    import pytest
    with pytest.raises(ValueError):
        QuadExt(1, 1, 2) + QuadExt(1, 1, 3)
