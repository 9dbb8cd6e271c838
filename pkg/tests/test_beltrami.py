import cmath
import math

from pytest import approx, mark, raises

from flatbeltrami.beltrami import (
    QMatrix,
    active_q_entry,
    beltrami_residual,
    dq22_dzbar,
    dq22_fd,
    frobenius_identity_error,
    q_matrix,
    term_diagnostics,
    term_dominance,
)
from flatbeltrami.config import RADIUS_FRACTIONS
from flatbeltrami.errors import DomainError
from flatbeltrami.logscalar import LogComplex
from flatbeltrami.mapping import log_ratio, u_jet
from flatbeltrami.scheme import Scheme, SchemeKind
from flatbeltrami.verify.base import sample_grid


def point_in(s, n, fraction, theta=0.0):
    return LogComplex(math.log(s.annulus(n).radius_at(fraction)), theta)


def test_zero_matrix():
    q = QMatrix.zero()
    assert all(entry.is_zero for entry in q.entries().values())
    assert q.log_frobenius_sq == float("-inf")


def test_monomial_row_vanishes(rosay):
    even = q_matrix(u_jet(rosay, point_in(rosay, 4, 0.5, 0.3)))
    assert even.q11.is_zero and even.q12.is_zero
    assert not even.q22.is_zero
    odd = q_matrix(u_jet(rosay, point_in(rosay, 5, 0.5, 0.3)))
    assert odd.q21.is_zero and odd.q22.is_zero
    assert not odd.q11.is_zero


@mark.parametrize(
    "kind, n, fraction, theta",
    ((SchemeKind.ROSAY, 3, 0.5, 0.2), (SchemeKind.ROSAY, 8, 0.4, 1.9), (SchemeKind.LOGLOG, 30, 0.55, -2.0), (SchemeKind.LOGLOG, 61, 0.5, 0.6)),
)
def test_beltrami_identities(kind, n, fraction, theta):
    s = Scheme(kind)
    jet = u_jet(s, point_in(s, n, fraction, theta), n=n)
    q = q_matrix(jet)
    assert beltrami_residual(jet, q) < 1e-10
    assert frobenius_identity_error(jet, q) < 1e-10
    assert 0.5 * q.log_frobenius_sq == approx(log_ratio(jet), abs=1e-10)


@mark.parametrize("kind, n_range", ((SchemeKind.ROSAY, range(2, 61)), (SchemeKind.LOGLOG, range(4, 201))))
def test_identities_hold_on_the_whole_sample_grid(kind, n_range):
    s = Scheme(kind)
    worst_residual = worst_frobenius = 0.0
    for n in n_range:
        for point in sample_grid(s, n, 8, RADIUS_FRACTIONS):
            jet = u_jet(s, point.z, n=n)
            q = q_matrix(jet)
            worst_residual = max(worst_residual, beltrami_residual(jet, q))
            worst_frobenius = max(worst_frobenius, frobenius_identity_error(jet, q))
    assert worst_residual < 1e-10
    assert worst_frobenius < 1e-10


def test_q_entry_indexing(rosay):
    q = q_matrix(u_jet(rosay, point_in(rosay, 2, 0.5, 0.3)))
    assert q.entry(2, 2) is q.q22
    assert set(q.entries()) == {"q11", "q12", "q21", "q22"}


def test_collar_is_exactly_flat(loglog):
    jet = u_jet(loglog, point_in(loglog, 12, 0.1, 0.5), n=12)
    q = q_matrix(jet)
    assert all(entry.is_zero for entry in q.entries().values())
    assert beltrami_residual(jet, q) == 0.0
    assert frobenius_identity_error(jet, q) == 0.0
    d = dq22_dzbar(jet)
    assert d.total.is_zero and d.term1.is_zero and d.term2.is_zero and d.term3.is_zero


@mark.parametrize(
    "kind, n, fraction, theta",
    (
        (SchemeKind.ROSAY, 2, 0.45, 0.4),
        (SchemeKind.ROSAY, 3, 0.55, 1.3),
        (SchemeKind.ROSAY, 6, 0.5, -0.7),
        (SchemeKind.LOGLOG, 4, 0.5, 0.9),
    ),
)
def test_dq22_matches_finite_differences(kind, n, fraction, theta):
    s = Scheme(kind)
    z = point_in(s, n, fraction, theta)
    exact = dq22_dzbar(u_jet(s, z, n=n)).total.to_complex()
    approx_value = dq22_fd(s, n, z.to_complex())
    assert abs(approx_value - exact) <= 1e-3 * abs(exact)


def test_dq22_split_adds_up(rosay):
    d = dq22_dzbar(u_jet(rosay, point_in(rosay, 4, 0.5, 0.25)))
    combined = d.term1.to_complex() + d.term2.to_complex() - d.term3.to_complex()
    assert d.total.to_complex() == approx(combined, rel=1e-12, abs=1e-12 * abs(d.term3.to_complex()))


def test_active_entry_follows_parity(rosay):
    even = u_jet(rosay, point_in(rosay, 2, 0.5))
    odd = u_jet(rosay, point_in(rosay, 3, 0.5))
    assert active_q_entry(even, q_matrix(even)) == q_matrix(even).q22
    assert active_q_entry(odd, q_matrix(odd)) == q_matrix(odd).q11


def test_term_analysis_preconditions(rosay, loglog):
    with raises(DomainError):
        term_dominance(rosay, 10)
    with raises(DomainError):
        term_dominance(loglog, 11)
    with raises(DomainError):
        term_diagnostics(loglog, 13)


def test_term_dominance_at_large_index(loglog):
    dom = term_dominance(loglog, 200)
    assert dom.x == approx(loglog.midpoint(200))
    assert dom.dominant
    assert dom.margin_over_term1 > 0.0 and dom.margin_over_term2 > 0.0


def test_term_diagnostics(loglog):
    diag = term_diagnostics(loglog, 40)
    for value in (diag.zbar_blend, diag.z_blend, diag.zzbar_blend, diag.reduced_zz_blend, diag.zbarzbar_blend):
        assert math.isfinite(value) and value > 0.0
