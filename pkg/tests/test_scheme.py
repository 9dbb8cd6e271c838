import math

from hypothesis import given
from hypothesis import strategies as st
from pytest import approx, mark, raises

from flatbeltrami.errors import DomainError
from flatbeltrami.scheme import (
    ORIGIN,
    Scheme,
    SchemeKind,
    annulus_of,
    balance_sequence,
    criterion_ratio_test,
    eq44_check,
    hypothesis_ratio,
    scaled_relative_gap,
    smoothness_criterion,
    tabulate_criterion,
)


def test_rosay_sequences(rosay):
    assert rosay.radius(1) == 1.0
    assert rosay.radius(3) == 0.25
    assert rosay.degree(7) == 7
    assert rosay.delta_r(3) == 0.125
    assert rosay.log_F(4) == approx(8.0 * math.log(2.0))
    assert rosay.fudge(5) == approx(math.sqrt(2.0))


def test_loglog_sequences(loglog):
    assert loglog.radius(1) == approx(1.0 / math.log(2.0))
    assert loglog.degree(5) == 25
    assert loglog.log_F(1) == 0.0
    assert loglog.log_F(2) == approx(2.0 * math.log(math.log(4.0)))
    assert loglog.relative_gap(3) == approx(math.log(5.0 / 4.0) / math.log(5.0))
    assert loglog.fudge(3) == approx(math.log(5.0))


def test_extended_index_for_degree_and_amplitude(rosay, loglog):
    assert rosay.degree(0) == 0
    assert loglog.log_F(0) == 0.0
    with raises(DomainError):
        rosay.radius(0)
    with raises(DomainError):
        loglog.degree(-1)


@mark.parametrize("n", (1, 2, 5, 20, 100))
def test_rosay_amplitude_recursion(rosay, n):
    assert rosay.log_F(n + 1) - rosay.log_F(n) == approx((n + 0.5) * math.log(2.0))


@mark.parametrize("n", (2, 5, 17, 64))
def test_loglog_amplitude_closed_product(loglog, n):
    expected = math.fsum((2 * m - 2) * math.log(math.log(m + 2)) for m in range(2, n + 1))
    assert loglog.log_F(n) == approx(expected, rel=1e-12)


def test_loglog_cache_fills_out_of_order():
    s = Scheme(SchemeKind.LOGLOG)
    high = s.log_F(50)
    low = s.log_F(10)
    fresh = Scheme(SchemeKind.LOGLOG)
    assert fresh.log_F(10) == low
    assert fresh.log_F(50) == high


def test_radii_strictly_decrease(rosay, loglog):
    for s in (rosay, loglog):
        radii = [s.radius(n) for n in range(1, 200)]
        assert all(b < a for a, b in zip(radii, radii[1:]))
        assert all(s.delta_r(n) > 0.0 for n in range(1, 200))


def test_log_radius_far_out(rosay, loglog):
    assert rosay.log_radius(10 ** 6) == approx((1 - 10 ** 6) * math.log(2.0))
    assert loglog.log_radius(10 ** 12) == approx(-math.log(math.log(10 ** 12 + 1)))


@mark.parametrize(
    "kind, r, n",
    (
        (SchemeKind.ROSAY, 0.4, 2),
        (SchemeKind.ROSAY, 0.5, 1),
        (SchemeKind.ROSAY, 0.25, 2),
        (SchemeKind.ROSAY, 1.0, 1),
        (SchemeKind.LOGLOG, 1.0, 1),
        (SchemeKind.LOGLOG, 0.5, 6),
    ),
)
def test_annulus_of_examples(kind, r, n):
    assert annulus_of(Scheme(kind), math.log(r)) == n


def test_annulus_of_origin_and_outside(rosay):
    assert annulus_of(rosay, float("-inf")) is ORIGIN
    with raises(DomainError):
        annulus_of(rosay, math.log(1.5))
    with raises(DomainError):
        annulus_of(rosay, float("nan"))


@given(st.floats(min_value=-300.0, max_value=0.0))
def test_rosay_annulus_contains_point(log_abs_z):
    s = Scheme(SchemeKind.ROSAY)
    n = annulus_of(s, log_abs_z)
    assert s.log_radius(n + 1) <= log_abs_z <= s.log_radius(n)


@given(st.floats(min_value=math.log(0.2), max_value=math.log(1.4)))
def test_loglog_annulus_contains_point(log_abs_z):
    s = Scheme(SchemeKind.LOGLOG)
    n = annulus_of(s, log_abs_z)
    assert s.log_radius(n + 1) <= log_abs_z <= s.log_radius(n)


def test_annulus_and_midpoint(loglog):
    a = loglog.annulus(7)
    assert a.r_outer == approx(loglog.radius(7), rel=1e-14)
    assert a.r_inner == approx(loglog.radius(8), rel=1e-14)
    assert a.delta_r == approx(loglog.delta_r(7), rel=1e-14)
    assert loglog.midpoint(7) == approx(0.5 * (a.r_inner + a.r_outer))


def test_rosay_geometry_far_below_binary64(rosay):
    # r_1200 = 2^{-1199} underflows, its logarithm does not
    a = rosay.annulus(1200)
    assert a.log_r_inner == approx(-1200 * math.log(2.0), rel=1e-14)
    assert a.log_delta_r == approx(a.log_r_inner, rel=1e-14)
    assert rosay.log_midpoint(1200) == approx(a.log_r_inner + math.log(1.5), rel=1e-14)
    assert annulus_of(rosay, rosay.log_midpoint(1200)) == 1200


def test_criterion_values(rosay):
    assert smoothness_criterion(rosay, 1, 0) == approx(2.0 * math.log(2.0))
    # k = 1 at n = 4: ln F(5) + ln 5 + (5 − 4)·ln r₄ − ln ½
    expected = 12.5 * math.log(2.0) + math.log(5.0) - 3.0 * math.log(2.0) + math.log(2.0)
    assert smoothness_criterion(rosay, 4, 1) == approx(expected)


def test_criterion_regime(rosay):
    with raises(DomainError):
        smoothness_criterion(rosay, 2, 1)
    with raises(DomainError):
        smoothness_criterion(rosay, 10, -1)
    table = tabulate_criterion(rosay, [2, 3, 4], 1)
    assert table[2] is None and table[3] is None
    assert table[4] == approx(smoothness_criterion(rosay, 4, 1))


def test_criterion_ratio_test_sign(loglog):
    assert criterion_ratio_test(loglog, 100, 3) < 0.0
    assert criterion_ratio_test(loglog, 100, 3) == approx(
        smoothness_criterion(loglog, 101, 3) - smoothness_criterion(loglog, 100, 3)
    )


def test_hypothesis_ratio(rosay, loglog):
    assert all(hypothesis_ratio(rosay, n) == 1.0 for n in range(1, 50))
    assert hypothesis_ratio(loglog, 1) > 2.0
    assert all(1.0 < hypothesis_ratio(loglog, n) <= 2.0 for n in range(3, 300))


def test_scaled_relative_gap(rosay, loglog):
    gap, scaled = scaled_relative_gap(loglog, 10 ** 6)
    assert gap == approx(loglog.relative_gap(10 ** 6))
    assert scaled == approx(1.0, abs=1e-5)
    with raises(DomainError):
        scaled_relative_gap(rosay, 5)
    assert eq44_check(loglog, 25) == scaled_relative_gap(loglog, 25)
    assert all(0.9 <= eq44_check(loglog, n)[1] <= 1.1 for n in range(20, 2000))
    with raises(DomainError):
        eq44_check(rosay, 25)


@mark.parametrize("n", (1, 2, 10, 40))
def test_rosay_balance_is_three(rosay, n):
    assert balance_sequence(rosay, n) == approx(3.0, rel=1e-12)


def test_loglog_balance_bounded(loglog):
    values = [balance_sequence(loglog, n) for n in range(2, 400)]
    assert all(math.isfinite(v) and v > 0.0 for v in values)
    assert max(values[len(values) // 2:]) <= max(values[: len(values) // 2])


def test_invalid_construction():
    with raises(ValueError):
        Scheme("spiral")
    with raises(DomainError):
        Scheme(SchemeKind.ROSAY, n_min=0)
