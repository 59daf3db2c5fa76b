import cmath
import math
import random
from fractions import Fraction as F

import mpmath
import pytest

from hypercongr.numgamma import (
    PoleAtNonpositiveInteger,
    dixon_3f2_check,
    duplication_residual,
    gamma_complex,
    liuconj2_product,
    liuconj3_product,
    psip_chain_check,
    ramanujan_check,
    reflection_residual,
)

mpmath.mp.dps = 30


def rel(a, b):
    return abs(a - b) / abs(b)


def test_gamma_examples():
    assert rel(gamma_complex(1), 1) < 1e-14
    assert rel(gamma_complex(5), 24) < 1e-13
    assert rel(gamma_complex(0.5), math.sqrt(math.pi)) < 1e-13
    for z in (0, -1, -7):
        with pytest.raises(PoleAtNonpositiveInteger):
            gamma_complex(z)


def test_gamma_against_mpmath():
    rng = random.Random(2024)
    worst = 0.0
    for _ in range(400):
        z = complex(rng.uniform(-30, 50), rng.uniform(-30, 30))
        if abs(z) > 50 or (abs(z.imag) < 1e-3 and abs(z.real - round(z.real)) < 1e-3):
            continue
        worst = max(worst, rel(gamma_complex(z), complex(mpmath.gamma(z))))
    assert worst <= 1e-12


def test_functional_equation_samples():
    rng = random.Random(11)
    n = 0
    while n < 100:
        r = rng.uniform(0.5, 20)
        theta = rng.uniform(-math.pi, math.pi)
        z = cmath.rect(r, theta)
        if abs(z.imag) < 1e-3 and z.real < 0.5:
            continue
        assert rel(gamma_complex(z + 1), z * gamma_complex(z)) <= 1e-11
        n += 1


def test_reflection_examples():
    assert reflection_residual(0.5) <= 1e-12
    assert reflection_residual(0.25) <= 1e-10
    assert rel(gamma_complex(0.25) * gamma_complex(0.75), math.pi * math.sqrt(2)) < 1e-13
    with pytest.raises(PoleAtNonpositiveInteger):
        reflection_residual(2)


def test_duplication_examples():
    assert duplication_residual(0.5) <= 1e-12
    assert duplication_residual(1 + 1.75j) <= 1e-10
    with pytest.raises(PoleAtNonpositiveInteger):
        duplication_residual(0)


def test_dixon_examples():
    assert dixon_3f2_check(-2, 2, F(5, 2), 1e-10) <= 1e-10
    assert dixon_3f2_check(F(1, 2), 2, 3, 1e-8) <= 1e-8
    with pytest.raises(PoleAtNonpositiveInteger):
        dixon_3f2_check(F(1, 2), 2, -1)
    with pytest.raises(ValueError):
        dixon_3f2_check(F(1, 2), 1, 2)


def test_dixon_terminating_against_mpmath():
    # independent: mpmath's hyp3f2 for the left side
    a, c, d = -3, F(7, 4), F(5, 3)
    mf = lambda q: mpmath.mpf(q.numerator) / q.denominator
    b, e = 1 - a, 2 * c + 1 - d
    ma, mb, mc, md, me = mpmath.mpf(a), mpmath.mpf(b), mf(c), mf(d), mf(e)
    lhs = mpmath.hyp3f2(ma, mb, mc, md, me, 1)
    rhs = (mpmath.pi * mpmath.gamma(md) * mpmath.gamma(me)
           / (2 ** (2 * mc - 1) * mpmath.gamma((ma + md) / 2) * mpmath.gamma((ma + me) / 2)
              * mpmath.gamma((mb + md) / 2) * mpmath.gamma((mb + me) / 2)))
    assert abs(lhs - rhs) / abs(rhs) < 1e-20
    assert dixon_3f2_check(a, c, d) <= 1e-12


def test_ramanujan_examples():
    s0, target, r0 = ramanujan_check(0)
    assert s0 == 1
    assert abs(target - 2 / float(mpmath.gamma(0.75)) ** 4) < 1e-13
    assert abs(r0 - 0.113) < 1e-3
    s1, _, _ = ramanujan_check(1)
    assert s1 == 27 / 32
    assert s1 < target < s0


def test_ramanujan_residual_decreases_on_even_n():
    residuals = [ramanujan_check(n)[2] for n in (0, 2, 4, 10, 50, 200, 1000, 5000)]
    assert all(b < a for a, b in zip(residuals, residuals[1:]))


def test_ramanujan_at_two_hundred_thousand():
    assert ramanujan_check(200_000)[2] <= 1e-6


def test_products_against_direct_definitions():
    p = 7
    assert liuconj2_product(p) == (1 + F(49, 16)) * F(49, 16)
    assert liuconj3_product(p) == (F(1, 4) + F(49, 16)) * (F(9, 4) + F(49, 16))


@pytest.mark.parametrize("p", [7, 11, 19, 23, 43])
def test_psip_chain(p):
    assert psip_chain_check(p) <= 1e-8


def test_psip_preconditions():
    for p in (4, 5, 13, 9):
        with pytest.raises(ValueError):
            psip_chain_check(p)
