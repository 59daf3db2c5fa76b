from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hypercongr.exact import GaussianRational as G, PowerSeries, to_rational, valuation_rational
from hypercongr.hyper import (
    HypergeometricSpec,
    PoleInLowerParameter,
    PrefactorPole,
    WrongResidueClass,
    evaluate_truncated,
    phi_series,
    phi_terms,
    pochhammer,
    psi_series,
    psi_value,
    vanhamme_lhs,
    vanhamme_lhs_mod,
    vanhamme_spec,
    whipple_terminating,
)
from hypercongr.padic import PAdicContext, reduce_rational

S7 = F(914095, 1048576)
PRIMES = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def direct_sum(p):
    """Oracle: each term written out as explicit products, no recurrences."""
    total = F(0)
    for k in range((p - 1) // 2 + 1):
        num = F(1)
        den = F(1)
        for j in range(k):
            num *= (F(5, 4) + j) * (F(1, 2) + j) ** 5
            den *= (F(1, 4) + j) * (1 + j) ** 4 * (j + 1)
        total += num / den * (-1) ** k
    return total


def test_pochhammer_examples():
    assert pochhammer(F(7, 3), 0) == 1
    assert pochhammer(G(1, 1), 0) == 1
    assert pochhammer(F(1, 2), 3) == F(15, 8)
    assert pochhammer(F(5, 4), 2) / pochhammer(F(1, 4), 2) == 9


def test_term_ratio_identity():
    for k in range(31):
        assert pochhammer(F(5, 4), k) / pochhammer(F(1, 4), k) == 4 * k + 1


def test_s7_pinned():
    assert direct_sum(7) == S7
    assert vanhamme_lhs(7) == S7
    assert evaluate_truncated(vanhamme_spec(7)) == S7
    assert 914095 == 7**3 * 2665 and 2665 % 7
    assert valuation_rational(vanhamme_lhs(7), 7) == 3


@pytest.mark.parametrize("p", PRIMES)
def test_vanhamme_lhs_matches_oracle_and_generic(p):
    assert vanhamme_lhs(p) == direct_sum(p) == evaluate_truncated(vanhamme_spec(p))


def test_evaluate_truncated_trivial_cases():
    assert evaluate_truncated(HypergeometricSpec([F(1, 3), 2], [F(1, 5)], 7, 0)) == 1
    assert evaluate_truncated(HypergeometricSpec([0, F(1, 2)], [3], 5, 6)) == 1


def test_pole_detection():
    with pytest.raises(PoleInLowerParameter) as info:
        evaluate_truncated(HypergeometricSpec([1, 1], [-2], 1, 5))
    assert info.value.term == 3
    # pole just beyond the truncation is fine
    evaluate_truncated(HypergeometricSpec([1, 1], [-2], 1, 2))
    with pytest.raises(ValueError):
        HypergeometricSpec([1, 2], [], 1, 3)


@pytest.mark.parametrize("p", [p for p in PRIMES if p <= 50])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_modular_path_matches_exact(p, k):
    ctx = PAdicContext(p, k)
    assert vanhamme_lhs_mod(p, ctx) == reduce_rational(vanhamme_lhs(p), ctx)


def test_vanhamme_mod_examples():
    assert vanhamme_lhs_mod(11, PAdicContext(11, 3)).residue == 0
    assert vanhamme_lhs_mod(5, PAdicContext(5, 1)).residue == 0
    with pytest.raises(ValueError):
        vanhamme_lhs_mod(7, PAdicContext(11, 1))


def test_psi_value_examples():
    for p in (7, 11, 13):
        assert psi_value(0, p) == vanhamme_lhs(p)
    psi7 = psi_value(7, 7)
    assert psi7.im == 0
    assert valuation_rational(psi7.re - S7, 7) >= 5


@settings(max_examples=40, deadline=None)
@given(
    st.fractions(min_value=-20, max_value=20, max_denominator=9),
    st.sampled_from([5, 7, 11, 13]),
)
def test_psi_is_real_for_rational_x(x, p):
    try:
        value = psi_value(x, p)
    except PoleInLowerParameter:
        return
    assert value.im == 0


def test_psi_series_examples():
    s = psi_series(7, 8)
    assert len(s) == 9
    for n in (1, 2, 3, 5, 6, 7):
        assert s[n] == 0
    assert s[0] == S7
    assert valuation_rational(to_rational(s[4]), 7) >= 1


def test_psi_series_matches_values():
    # Psi(t) = sum a_n t^(4n): check the x^4 coefficient against a finite-difference in t^4
    p = 7
    s = psi_series(p, 8)
    a0, a1, a2 = (to_rational(s[n]) for n in (0, 4, 8))
    # for tiny t the series through t^8 matches up to O(t^12)
    t = F(1, 1000)
    diff = to_rational(psi_value(t, p)) - (a0 + a1 * t**4 + a2 * t**8)
    assert abs(diff) < F(1, 10**30)


@pytest.mark.parametrize("p", [7, 11, 19, 23])
def test_phi_series_vanishes(p):
    assert phi_series(p, 8).is_zero()


def test_phi_terms_are_individually_nonzero():
    terms = phi_terms(7, 8)
    assert len(terms) == 4
    assert all(not t.is_zero() for t in terms)
    total = terms[0]
    for t in terms[1:]:
        total = total + t
    assert total.is_zero()


@pytest.mark.parametrize("p", [7, 11, 19, 23])
def test_coefficient_congruence_and_integrality(p):
    psi = psi_series(p, 8)
    phi = phi_series(p, 8)
    for n in range(9):
        diff = to_rational(psi[n] - phi[n])
        v = valuation_rational(to_rational(psi[n]), p)
        assert v >= 0
        if n >= 1:
            assert valuation_rational(diff, p) >= 1


def test_series_rejects_bad_arguments():
    with pytest.raises(WrongResidueClass):
        psi_series(13, 8)
    with pytest.raises(ValueError):
        psi_series(7, 7)
    with pytest.raises(ValueError):
        phi_series(7, 6)


def test_whipple_examples():
    assert whipple_terminating(F(1, 2), F(1, 3), F(1, 5), F(1, 7), 0) == (1, 1)
    lhs, rhs = whipple_terminating(F(1, 2), F(1, 3), F(1, 5), F(1, 7), 3)
    assert lhs == rhs
    with pytest.raises(PrefactorPole):
        whipple_terminating(F(1, 2), F(1, 3), F(1, 5), F(3, 2), 2)


def test_whipple_against_independent_sums():
    # both sides written out by hand for one configuration
    a, b, c, d, n = F(1, 2), F(1, 3), F(1, 5), F(1, 7), 3
    e = -n
    lhs = sum(
        pochhammer(a / 2 + 1, k) * pochhammer(a, k) * pochhammer(b, k) * pochhammer(c, k)
        * pochhammer(d, k) * pochhammer(e, k)
        / (pochhammer(a / 2, k) * pochhammer(1 + a - b, k) * pochhammer(1 + a - c, k)
           * pochhammer(1 + a - d, k) * pochhammer(1 + a - e, k) * pochhammer(1, k))
        * (-1) ** k
        for k in range(n + 1)
    )
    rhs = pochhammer(1 + a, n) / pochhammer(1 + a - d, n) * sum(
        pochhammer(1 + a - b - c, k) * pochhammer(d, k) * pochhammer(e, k)
        / (pochhammer(1 + a - b, k) * pochhammer(1 + a - c, k) * pochhammer(1, k))
        for k in range(n + 1)
    )
    assert whipple_terminating(a, b, c, d, n) == (lhs, rhs)


def test_evaluate_with_power_series_parameters():
    # 1F0-like check: sum_k (x)_k / k! truncated, compared coefficientwise with (1-1)^... via direct poly math
    x = PowerSeries.linear(0, 1, 3)
    spec = HypergeometricSpec([x, 1], [1], 1, 2)
    # 1 + x + x(x+1)/2 = 1 + 3x/2 + x^2/2
    assert evaluate_truncated(spec) == PowerSeries([1, F(3, 2), F(1, 2), 0])
