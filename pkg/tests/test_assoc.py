from fractions import Fraction

import pytest

from leglog import assoc
from leglog.assoc import (
    BracketSign,
    LogFreePart,
    Sign,
    WRep,
    canonical_total_num,
    neg_order_part,
    neg_order_part_reflected,
    w_nm,
    w_nm_overflow,
)
from leglog.bromwich import bromwich_r
from leglog.exact import factorial
from leglog.polys import Poly, legendre_deriv

F = Fraction


def test_canonical_total_num_examples():
    p = LogFreePart(Poly([1]), Sign.PLUS, 1, Poly([0, 1]))
    assert canonical_total_num(p) == Poly([1, 2])
    assert canonical_total_num(LogFreePart.build(Poly(), Sign.PLUS, 3, Poly())) == Poly()


def test_build_reduces_numerator():
    p = LogFreePart.build(Poly([1]), Sign.PLUS, 1, Poly([0, 1]))
    assert p.poly == Poly([2]) and p.pole_num == Poly([-1])
    assert canonical_total_num(p) == Poly([1, 2])
    q = LogFreePart.build(Poly([1]), Sign.MINUS, 0, Poly([0, 1]))
    assert q.pole_num == Poly() and q.poly == Poly([1, 1])


def test_logfree_arithmetic_and_derivative():
    a = LogFreePart.build(Poly([1]), Sign.PLUS, 1, Poly([2]))
    b = LogFreePart.build(Poly([0, 1]), Sign.PLUS, 2, Poly([1, 1]))
    x = F(5, 3)
    assert (a + b)(x) == a(x) + b(x)
    assert (a - b)(x) == a(x) - b(x)
    # d/dz [2/(z+1)] = -2/(z+1)^2
    assert a.derivative() == LogFreePart.build(Poly(), Sign.PLUS, 2, Poly([-2]))


def test_mixed_pole_locations_rejected():
    a = LogFreePart.build(Poly(), Sign.PLUS, 1, Poly([1]))
    b = LogFreePart.build(Poly(), Sign.MINUS, 1, Poly([1]))
    with pytest.raises(ValueError):
        a + b


def test_neg_order_examples():
    assert neg_order_part(0, 1) == LogFreePart(Poly(), Sign.PLUS, 1, Poly([1]))
    # 1/2 + (z-1)/6 over (z+1)^2
    expected = LogFreePart.build(Poly(), Sign.PLUS, 2, Poly([F(1, 2) - F(1, 6), F(1, 6)]))
    assert neg_order_part(1, 2) == expected
    with pytest.raises(ValueError):
        neg_order_part(3, 0)


def test_neg_order_relation_n2_m1():
    scaled = neg_order_part(2, 1).scale(F(factorial(3), factorial(1)))
    assert canonical_total_num(scaled) == Poly([1, 1]) * Poly([0, 3])


@pytest.mark.parametrize("n", range(9))
def test_neg_order_proportional_to_positive_order(n):
    for m in range(1, n + 1):
        scaled = neg_order_part(n, m).scale(F(factorial(n + m), factorial(n - m)))
        assert canonical_total_num(scaled) == Poly([1, 1]) ** m * legendre_deriv(n, m)


def test_reflected_neg_order_is_substitution():
    # value at z equals N(-z)/(z-1)^m where N/(z+1)^m is the unreflected part
    for n, m in [(0, 1), (2, 3), (4, 2)]:
        plain, refl = neg_order_part(n, m), neg_order_part_reflected(n, m)
        x = F(7, 3)
        assert refl(x) == canonical_total_num(plain)(-x) / (x - 1) ** m


def test_w11_hand_value():
    w = w_nm(1, 1, WRep.W25)
    assert canonical_total_num(w) == Poly([1, 2])
    assert w(F(3)) == 1 + F(3, 4)


def test_w11_across_reps():
    ref = w_nm(1, 1, WRep.W25)
    for rep in WRep:
        assert w_nm(1, 1, rep) == ref


@pytest.mark.parametrize("n", range(13))
def test_w_reps_agree(n):
    for m in range(n + 1):
        ref = w_nm(n, m, WRep.W25)
        assert ref.pole_order == m and ref.pole_sign is Sign.PLUS
        for rep in WRep:
            assert w_nm(n, m, rep) == ref, (n, m, rep)


@pytest.mark.parametrize("n", range(13))
def test_w_reduces_to_bromwich(n):
    for rep in WRep:
        w = w_nm(n, 0, rep)
        assert w.pole_order == 0 and w.poly == bromwich_r(n)


def test_w29_flipped_bracket_disagrees():
    assert w_nm(3, 1, WRep.W29, BracketSign.FLIPPED) != w_nm(3, 1, WRep.W25)


def test_gamma_vanishes_before_stripping():
    for n in range(8):
        for m in range(n + 1):
            for rep in WRep:
                entire, pole = assoc._W_BUILDERS[rep](n, m, BracketSign.PRINTED)
                raw = LogFreePart.build(entire, Sign.PLUS, m, pole)
                assert raw.gamma_is_zero()


def test_w_rejects_overflow():
    with pytest.raises(ValueError):
        w_nm(1, 2)


def test_overflow_examples():
    assert w_nm_overflow(0, 1) == LogFreePart(Poly(), Sign.PLUS, 1, Poly([1]))
    assert canonical_total_num(w_nm_overflow(1, 2)) == Poly([2, 1])
    assert w_nm_overflow(0, 2) == LogFreePart(Poly(), Sign.PLUS, 2, Poly([-1]))
    with pytest.raises(ValueError):
        w_nm_overflow(2, 2)
