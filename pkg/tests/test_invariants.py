import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fivefib.certificates import BoundCertificate
from fivefib.invariants import (
    DomainError,
    FibrationConfig,
    InfeasibleConfigError,
    adjoint_square,
    euler_number_ef,
    g5_slack,
    h0_adjoint_twice,
    mvt5_check,
    mvt_check,
    mvt_scan,
    rf,
    ttz_check,
)


def _rf_by_points(c):
    # each A_mu point absorbs 1+mu nodes and contributes 1/(1+mu); the rest count 1
    free = c.e_f - sum(1 + mu for mu in c.chains)
    return Fraction(free) + sum(Fraction(1, 1 + mu) for mu in c.chains)


def mvt_oracle(c, e):
    lhs = Fraction(e * e) * (c.K2 - (2 * c.g - 2) * (6 * c.g_B - 6 + c.s - Fraction(c.s, e)))
    return lhs, 3 * _rf_by_points(c)


@pytest.mark.parametrize(
    "g,K2,gb,expected",
    [(6, -16, 0, 48), (12, -34, 0, 90), (4, -10, 0, 34)],
)
def test_e_f(g, K2, gb, expected):
    assert euler_number_ef(FibrationConfig(g, K2, g_B=gb)) == expected


def test_e_f_over_elliptic_base_is_euler_number():
    c = FibrationConfig(2, -7, g_B=1)
    assert euler_number_ef(c) == c.euler == 19
    assert FibrationConfig(2, 0, g_B=1, euler_override=36).e_f == 36


def test_rf_values():
    assert rf(FibrationConfig(6, -16)) == 48
    assert rf(FibrationConfig(12, -34, chains=(6,))) == 83 + Fraction(1, 7)
    assert rf(FibrationConfig(8, -21, chains=(1, 1))) == 58
    assert FibrationConfig(8, -21).e_f == 61


def test_overfull_chains_rejected():
    with pytest.raises(InfeasibleConfigError):
        FibrationConfig(2, 8, chains=(3, 4))
    with pytest.raises(DomainError):
        FibrationConfig(1, 0)
    with pytest.raises(DomainError):
        FibrationConfig(4, -10, chains=(0,))


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 20), st.integers(-70, 0), st.lists(st.integers(1, 12), max_size=6))
def test_rf_bounded_by_ef(g, K2, chains):
    try:
        c = FibrationConfig(g, K2, chains=chains)
    except InfeasibleConfigError:
        return
    assert rf(c) == _rf_by_points(c)
    assert rf(c) <= c.e_f
    assert (rf(c) == c.e_f) == (not chains)


def test_chains_are_a_multiset():
    assert FibrationConfig(8, -21, chains=(2, 1)) == FibrationConfig(8, -21, chains=(1, 2))


def test_ttz_examples():
    cert = ttz_check(FibrationConfig(6, -16))
    assert cert.slack == 0 and cert.holds
    # e_f = 20 with one A_1 chain is the equality case
    c = FibrationConfig(2, -4, chains=(1,))
    assert c.e_f == 20
    cert = ttz_check(c)
    assert cert.lhs == Fraction(37, 2) == cert.rhs


@settings(max_examples=200, deadline=None)
@given(st.integers(4, 17), st.lists(st.integers(1, 10), max_size=4))
def test_ttz_oracle(g, chains):
    try:
        c = FibrationConfig(g, 2 - 3 * g, chains=chains)
    except InfeasibleConfigError:
        return
    cert = ttz_check(c)
    assert cert.lhs == _rf_by_points(c)
    assert cert.rhs == c.e_f - sum(chains) - Fraction(len(chains), 2)
    # 1/(1+mu) <= 1/2 always, so the inequality cannot fail
    assert cert.holds


def test_mvt_g12_refutation():
    c = FibrationConfig(12, -34, chains=(6,))
    cert = mvt_check(c, 5)
    assert cert.lhs == 250
    assert cert.rhs == 249 + Fraction(3, 7)
    assert cert.slack == Fraction(-4, 7)
    assert not cert.holds


def test_mvt_g4_holds():
    cert = mvt_check(FibrationConfig(4, -10), 5)
    assert (cert.lhs, cert.rhs) == (50, 102)
    assert cert.holds


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 12), st.integers(-60, 0), st.integers(0, 3), st.integers(0, 9), st.integers(2, 40))
def test_mvt_oracle(g, K2, gb, s, e):
    try:
        c = FibrationConfig(g, K2, g_B=gb, s=s)
    except InfeasibleConfigError:
        return
    cert = mvt_check(c, e)
    assert (cert.lhs, cert.rhs) == mvt_oracle(c, e)
    if c.K2 <= (2 * g - 2) * (6 * gb - 6 + s - Fraction(s, e)):
        assert cert.lhs <= 0 and cert.holds


def test_mvt_needs_e_at_least_two():
    with pytest.raises(DomainError):
        mvt_check(FibrationConfig(6, -16), 1)


def test_scan():
    scan = mvt_scan(FibrationConfig(12, -34, chains=(6,)), 10)
    assert 5 in scan.failures
    assert not scan.all_hold
    assert len(scan.certificates) == 9
    assert mvt_scan(FibrationConfig(6, -16), 50).all_hold
    assert len(mvt_scan(FibrationConfig(6, -16), 2).certificates) == 1
    with pytest.raises(DomainError):
        mvt_scan(FibrationConfig(6, -16), 1)


def test_scan_binding_is_argmin():
    scan = mvt_scan(FibrationConfig(12, -34, chains=(6,)), 40)
    slacks = [cert.slack for cert in scan.certificates]
    assert scan.binding.slack == min(slacks)
    assert scan.binding_e == 2 + slacks.index(min(slacks))


@pytest.mark.parametrize("g,K2", [(4, -10), (9, -25), (12, -34), (17, -49), (10, -27)])
def test_mvt_agrees_with_s5_form(g, K2):
    c = FibrationConfig(g, K2)
    for e in range(2, 101):
        general, special = mvt_check(c, e), mvt5_check(c, e)
        assert general.lhs == special.lhs
        assert general.rhs == special.rhs


def test_mvt5_domain():
    with pytest.raises(DomainError):
        mvt5_check(FibrationConfig(4, -10, s=6), 5)


@pytest.mark.parametrize("g,K2,slack", [(17, -49, 0), (18, -52, -1), (10, -27, 0), (11, -30, -1)])
def test_g5_slack(g, K2, slack):
    assert g5_slack(FibrationConfig(g, K2)) == slack


def test_g5_domain():
    with pytest.raises(DomainError):
        g5_slack(FibrationConfig(4, -10, g_B=1))
    with pytest.raises(DomainError):
        g5_slack(FibrationConfig(4, -10, s=4))


def test_g5_is_mvt_at_five():
    # 25 (K^2 + 12(g-1)) <= 3 r_f rearranges to 4 * G5 slack
    for g in range(2, 21):
        for K2 in range(-3 * g - 8, -3 * g + 8):
            for chains in ((), (1,), (2,), (1, 1), (6,), (3, 2)):
                try:
                    c = FibrationConfig(g, K2, chains=chains)
                except InfeasibleConfigError:
                    continue
                m = mvt_check(c, 5)
                assert m.slack == 4 * g5_slack(c)
                if m.holds:
                    assert g5_slack(c) >= 0


@pytest.mark.parametrize("g", range(2, 20))
def test_adjoint_square(g):
    assert adjoint_square(g, 4 - 4 * g) == 0
    assert adjoint_square(g, 2 - 3 * g) == g - 2
    assert adjoint_square(g, 3 - 3 * g) == g - 1


@pytest.mark.parametrize("g", range(4, 20))
def test_h0_adjoint_twice(g):
    assert h0_adjoint_twice(g, 2 - 3 * g) == 0
    assert h0_adjoint_twice(g, 3 - 3 * g) == 1


def test_h0_domain():
    assert h0_adjoint_twice(4, -9) == 1
    with pytest.raises(DomainError):
        h0_adjoint_twice(4, -12)
    with pytest.raises(DomainError):
        adjoint_square(1, 0)


@settings(max_examples=100, deadline=None)
@given(st.integers(4, 17), st.lists(st.integers(1, 8), max_size=3), st.integers(2, 30))
def test_certificate_round_trip(g, chains, e):
    try:
        c = FibrationConfig(g, 2 - 3 * g, chains=chains)
    except InfeasibleConfigError:
        return
    for cert in (mvt_check(c, e), ttz_check(c), mvt5_check(c, e)):
        again = BoundCertificate.from_dict(json.loads(json.dumps(cert.to_dict())))
        assert again == cert
        assert again.slack == cert.slack
        assert again.revalidate()


def test_to_dict():
    c = FibrationConfig(8, -21, chains=(2, 1))
    assert c.to_dict() == {"g": 8, "K2": -21, "g_B": 0, "s": 5, "chains": [1, 2]}
