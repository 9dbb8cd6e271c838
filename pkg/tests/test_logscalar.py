import cmath
import math

import numpy as np
from hypothesis import given
from hypothesis import strategies as st
from pytest import approx, mark, raises

from flatbeltrami.errors import DomainError
from flatbeltrami.logscalar import (
    ONE,
    ZERO,
    LogComplex,
    lc_add,
    lc_div,
    lc_mul,
    lc_neg,
    lc_norm_pair,
    lc_pow_int,
    lc_sub,
    lc_relative_difference,
    log_sum_exp,
    wrap_phase,
)

moderate = st.complex_numbers(min_magnitude=1e-6, max_magnitude=1e6, allow_nan=False, allow_infinity=False)
log_mags = st.floats(min_value=-1e6, max_value=1e6)
phases = st.floats(min_value=-50.0, max_value=50.0)


def test_zero_is_canonical():
    z = LogComplex(float("-inf"), 2.5)
    assert z.is_zero
    assert z.phase == 0.0
    assert z == ZERO
    assert z.to_complex() == 0j


@mark.parametrize("bad", (float("nan"), float("inf")))
def test_rejects_invalid_log_magnitude(bad):
    with raises(DomainError):
        LogComplex(bad, 0.0)


def test_rejects_infinite_phase():
    with raises(DomainError):
        LogComplex(0.0, float("inf"))


def test_magnitude_out_of_range():
    with raises(DomainError):
        LogComplex(800.0).magnitude()


@given(phases)
def test_wrap_phase_lands_in_half_open_interval(theta):
    wrapped = wrap_phase(theta)
    assert -math.pi <= wrapped < math.pi
    assert cmath.rect(1.0, wrapped) == approx(cmath.rect(1.0, theta), abs=1e-12)


@mark.parametrize("value, phase", ((2.0, 0.0), (-2.0, -math.pi), (0.5, 0.0)))
def test_from_real(value, phase):
    z = LogComplex.from_real(value)
    assert z.log_mag == approx(math.log(abs(value)))
    assert z.phase == phase


def test_from_real_zero():
    assert LogComplex.from_real(0.0) is ZERO


def test_from_real_times_phase_negative_value_flips_phase():
    z = LogComplex.from_real_times_phase(-3.0, 0.25)
    assert z.to_complex() == approx(-3.0 * cmath.exp(0.25j))


def test_exact_phases_give_exact_cartesian_values():
    assert LogComplex.from_real(-1.0).to_complex() == -1 + 0j
    assert LogComplex(0.0, 0.5 * math.pi).to_complex() == 1j


@given(moderate, moderate)
def test_add_matches_complex_arithmetic(a, b):
    total = lc_add((LogComplex.from_complex(a), LogComplex.from_complex(b)))
    assert abs(total.to_complex() - (a + b)) <= 1e-12 * (abs(a) + abs(b))


@given(moderate, moderate)
def test_mul_and_div_match_complex_arithmetic(a, b):
    la, lb = LogComplex.from_complex(a), LogComplex.from_complex(b)
    assert lc_mul(la, lb).to_complex() == approx(a * b, rel=1e-12)
    assert lc_div(la, lb).to_complex() == approx(a / b, rel=1e-12)


@given(log_mags, phases)
def test_self_cancellation_is_negligible(log_mag, phase):
    x = LogComplex(log_mag, phase)
    diff = lc_add((x, lc_neg(x)))
    assert diff.is_zero or diff.log_mag - x.log_mag < math.log(1e-14)


def test_exact_cancellation_returns_canonical_zero():
    x = LogComplex(1.0e6, 0.0)
    assert lc_add((x, lc_neg(x))) is ZERO


@given(log_mags, phases)
def test_subtracting_a_value_from_itself_is_exactly_zero(log_mag, phase):
    x = LogComplex(log_mag, phase)
    assert lc_sub(x, x) is ZERO
    assert x - x is ZERO
    assert lc_add((x, x), signs=(1.0, -1.0)) is ZERO


def test_sub_at_a_generic_phase():
    a = LogComplex(10.0, 0.4)
    assert lc_sub(a, a) is ZERO
    assert lc_relative_difference(a, LogComplex(10.0, 0.4 + 1e-9)) == approx(1e-9, rel=1e-5)


@given(moderate, moderate)
def test_sub_matches_complex_arithmetic(a, b):
    la, lb = LogComplex.from_complex(a), LogComplex.from_complex(b)
    assert abs(lc_sub(la, lb).to_complex() - (a - b)) <= 1e-12 * (abs(a) + abs(b))


def test_signs_must_match_terms():
    with raises(DomainError):
        lc_add((ONE, ONE), signs=(1.0,))


def test_add_far_outside_binary64():
    big = LogComplex(1.0e6, 0.0)
    small = LogComplex(1.0e6 - 1.0, 0.0)
    total = big + small
    assert total.log_mag == approx(1.0e6 + math.log1p(math.exp(-1.0)), abs=1e-9)
    assert total.phase == 0.0


def test_add_needs_terms():
    with raises(DomainError):
        lc_add(())


def test_all_zero_sum():
    assert lc_add((ZERO, ZERO)) is ZERO


def test_division_by_zero():
    with raises(DomainError):
        lc_div(ONE, ZERO)


def test_pow_int():
    z = LogComplex(0.5, 0.3)
    cube = lc_pow_int(z, 3)
    assert cube.log_mag == 1.5
    assert cube.phase == approx(0.9)
    assert lc_pow_int(ZERO, 0) is ONE
    with raises(DomainError):
        lc_pow_int(ZERO, -1)


@given(st.lists(st.floats(min_value=-700.0, max_value=700.0), min_size=1, max_size=12))
def test_log_sum_exp_matches_numpy(values):
    assert log_sum_exp(values) == approx(float(np.logaddexp.reduce(values)), rel=1e-12, abs=1e-12)


def test_log_sum_exp_edge_cases():
    assert log_sum_exp([]) == float("-inf")
    assert log_sum_exp([float("-inf"), float("-inf")]) == float("-inf")
    assert log_sum_exp([1.0e6, 1.0e6]) == approx(1.0e6 + math.log(2.0))


def test_norm_pair():
    a, b = LogComplex.from_complex(3 + 0j), LogComplex.from_complex(4j)
    assert lc_norm_pair(a, b) == approx(math.log(25.0))
    assert lc_norm_pair(ZERO, b) == approx(math.log(16.0))
    assert lc_norm_pair(ZERO, ZERO) == float("-inf")


def test_relative_difference():
    a = LogComplex(10.0, 0.4)
    assert lc_relative_difference(a, a) == 0.0
    assert lc_relative_difference(ZERO, ZERO) == 0.0
    assert lc_relative_difference(a, ZERO) == approx(1.0)


@given(st.lists(moderate, min_size=1, max_size=8), st.randoms(use_true_random=False))
def test_add_is_permutation_invariant(values, rng):
    terms = [LogComplex.from_complex(v) for v in values]
    shuffled = list(terms)
    rng.shuffle(shuffled)
    bound = 1e-12 * sum(abs(v) for v in values)
    assert abs(lc_add(terms).to_complex() - lc_add(shuffled).to_complex()) <= bound


@given(moderate, moderate, moderate)
def test_mul_is_associative_and_commutative(a, b, c):
    la, lb, lc = (LogComplex.from_complex(v) for v in (a, b, c))
    assert lc_mul(la, lb).to_complex() == approx(lc_mul(lb, la).to_complex(), rel=1e-14)
    left = lc_mul(lc_mul(la, lb), lc).to_complex()
    right = lc_mul(la, lc_mul(lb, lc)).to_complex()
    assert left == approx(right, rel=1e-12)
