import warnings

import pytest
from hypothesis import given, strategies as st

from hypercongr.hyper import WrongResidueClass
from hypercongr.padic import PAdicContext, PAdicInt
from hypercongr.verify import (
    CongruenceReport,
    EmptyRangeWarning,
    SuiteRequest,
    reports_from_json,
    reports_to_json,
    run_key_steps,
    run_suite,
    verify_exact_path,
    verify_key_steps,
    verify_liu_mod_p4,
    verify_swisher,
    verify_theorem1,
    verify_vanhamme,
)


def test_vanhamme_examples():
    r7 = verify_vanhamme(7)
    assert r7.passed and r7.difference_valuation >= 3
    assert r7.lhs_valuation == 3
    assert verify_vanhamme(5).passed
    assert verify_vanhamme(13).passed


def test_swisher_examples():
    assert verify_swisher(5).passed
    assert verify_swisher(13).passed
    with pytest.raises(WrongResidueClass):
        verify_swisher(7)


def test_liu_examples():
    assert verify_liu_mod_p4(7).passed
    assert verify_liu_mod_p4(11).passed
    with pytest.raises(WrongResidueClass):
        verify_liu_mod_p4(13)


@pytest.mark.parametrize("p", [7, 11, 19])
def test_theorem1_examples(p):
    r = verify_theorem1(p)
    assert r.passed and r.at_cap and r.difference_valuation == 5
    assert r.lhs_valuation == 3


@pytest.mark.parametrize("p", [7, 11, 19, 23, 31, 43, 47])
def test_threshold_monotonicity(p):
    assert verify_theorem1(p).passed
    assert verify_liu_mod_p4(p).passed
    assert verify_vanhamme(p).passed


@pytest.mark.parametrize("suite,primes", [
    ("vanhamme", [5, 7, 11, 13, 17, 29, 43]),
    ("swisher", [5, 13, 17]),
    ("liu4", [7, 11, 19, 43, 47]),
    ("theorem1", [7, 11, 19, 43, 47]),
])
def test_exact_and_modular_lhs_agree(suite, primes):
    from hypercongr.verify import SUITES

    for p in primes:
        fast = SUITES[suite](p)
        slow = verify_exact_path(p, suite)
        assert fast.lhs_residue == slow.lhs_residue
        assert fast.passed == slow.passed


def test_run_suite_theorem1_small_range():
    reports = run_suite(SuiteRequest("theorem1", 7, 100))
    assert [r.prime for r in reports] == [7, 11, 19, 23, 31, 43, 47, 59, 67, 71, 79, 83]
    assert all(r.passed for r in reports)


def test_run_suite_empty_range_warns():
    with pytest.warns(EmptyRangeWarning):
        assert run_suite(SuiteRequest("swisher", 6, 6)) == []


def test_run_suite_is_deterministic_and_parallel_safe():
    req = SuiteRequest("vanhamme", 5, 60)
    a = reports_to_json(run_suite(req))
    b = reports_to_json(run_suite(req))
    c = reports_to_json(run_suite(SuiteRequest("vanhamme", 5, 60, parallelism=3)))
    assert a == b == c


def test_suite_request_validation():
    for args in [("theorem1", 3, 10), ("nope", 7, 10), ("theorem1", 7, 10, 0)]:
        with pytest.raises(ValueError):
            SuiteRequest(*args)


def test_serialization_schema():
    d = verify_theorem1(7).to_dict()
    assert set(d) == {
        "prime", "suite", "required_power", "lhs_residue", "rhs_residue",
        "difference_valuation", "at_cap", "pass", "lhs_valuation",
    }
    assert isinstance(d["lhs_residue"], str) and isinstance(d["rhs_residue"], str)
    timed = verify_theorem1(7).to_dict(include_timing=True)
    assert isinstance(timed["elapsed_ms"], float)


@st.composite
def reports(draw):
    p = draw(st.sampled_from([5, 7, 11, 13]))
    k = draw(st.integers(1, 5))
    ctx = PAdicContext(p, k)
    lhs = PAdicInt(ctx, draw(st.integers(0, ctx.modulus - 1)))
    rhs = PAdicInt(ctx, draw(st.integers(0, ctx.modulus - 1)))
    diff = lhs - rhs
    return CongruenceReport(
        prime=p, suite=draw(st.sampled_from(["vanhamme", "swisher", "liu4", "theorem1"])),
        required_power=k, lhs_residue=lhs, rhs_residue=rhs,
        difference_valuation=diff.valuation(), at_cap=diff.at_cap,
        passed=diff.valuation() >= k, lhs_valuation=lhs.valuation(),
        elapsed=draw(st.none() | st.integers(0, 10**6).map(lambda ms: ms / 1000)),
    )


@given(st.lists(reports(), max_size=5), st.booleans())
def test_serialization_round_trip(items, timing):
    text = reports_to_json(items, include_timing=timing)
    back = reports_from_json(text)
    assert back == items
    assert reports_to_json(back, include_timing=timing) == text


@pytest.mark.parametrize("p", [7, 11])
def test_key_steps_all_pass(p):
    steps = verify_key_steps(p)
    names = [s.step for s in steps]
    assert names[:8] == [
        "phi_vanishes", "psi_x4_structure", "a1_divisible_by_p", "psi_p_equiv_psi_0",
        "gamma_p_half_shift", "gamma_p_quarter_shift", "liuconj1_mod_p5", "products_to_gamma_p",
    ]
    assert names[-1] == "psip_numeric"
    assert all(s.passed for s in steps), [s for s in steps if not s.passed]


def test_key_steps_wrong_class():
    with pytest.raises(WrongResidueClass):
        verify_key_steps(13)


def test_run_key_steps_sorted():
    steps = run_key_steps(SuiteRequest("steps", 7, 11, parallelism=2))
    assert [s.prime for s in steps] == [7] * 11 + [11] * 11
