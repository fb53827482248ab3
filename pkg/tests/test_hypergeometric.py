import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypagm.errors import DomainError, NoRoot
from hypagm.hypergeometric import (
    beta_closed_form,
    beta_cuberoot_closed_form,
    closed_forms,
    hyp2f1,
    hyp2f1_complement,
    modular_ratio,
    solve_modular,
)
from hypagm.oracle import trigonal_sheet1

T, TT = 1 / 3, 2 / 3
# mpmath at 30 digits
FROZEN_2F1 = [
    ((T, TT, 1.0, 0.3), 1.0807822091865561665),
    ((T, TT, 1.0, 0.97), 1.8832087165164351608),
    ((T, TT, 1.0, -5.0), 0.64656897201942293225),
    ((T, T, 1.0, -0.5), 0.95400241168117174344),
    ((TT, TT, 1.0, -30.0), 0.18885495838978169254),
    ((TT, 1.0, 4 / 3, -2.0), 0.56516553316061706456),
    ((TT, 1.0, 4 / 3, 0.999), 16.671779870179851744),
]

# sheet-1 trigonal integrals from the quadrature oracle: alpha_tilde -> (I1..I4, J1..J4)
FROZEN_TRIGONAL = {
    0.5: ((0.8787661016231031, 0.30022309055597407, 0.12403420217280896, -0.6035573567608105),
          (-0.8787661016231036, 0.6175300953300917, -0.7547318994502941, 1.2414595804988293)),
    1.0: ((1.4021821053254544, 0.8833193751427242, 0.7010910526627269, -1.1129126745223055),
          (-1.4021821053254548, 0.8833193751427246, -0.7010910526627272, 1.1129126745223057)),
    2.0: ((0.8787661016231035, 0.6175300953300915, 0.7547318994502938, -1.2414595804988293),
          (-0.8787661016231032, 0.30022309055597407, -0.124034202172809, 0.6035573567608106)),
}


@pytest.mark.parametrize("args,ref", FROZEN_2F1)
def test_hyp2f1_frozen(args, ref):
    assert abs(hyp2f1(*args) - ref) <= 1e-14 * abs(ref)


def test_hyp2f1_domain():
    with pytest.raises(DomainError):
        hyp2f1(T, TT, 1.0, 1.0)
    with pytest.raises(DomainError):
        hyp2f1(T, TT, -1.0, 0.5)
    assert hyp2f1(T, TT, 1.0, 0.0) == 1.0


def test_complement_consistent():
    for s in (0.5, 0.1, 1e-3, 1e-8):
        assert hyp2f1_complement(T, TT, 1.0, s) == pytest.approx(hyp2f1(T, TT, 1.0, 1 - s), rel=1e-9 if s < 1e-6 else 1e-13)


def test_ratio_increasing():
    ts = np.linspace(0.01, 0.99, 25)
    R = [modular_ratio(t) for t in ts]
    assert np.all(np.diff(R) > 0)
    assert modular_ratio(0.5) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("at", sorted(FROZEN_TRIGONAL))
def test_closed_forms_vs_frozen_oracle(at):
    cf = closed_forms(at)
    I, J = FROZEN_TRIGONAL[at]
    np.testing.assert_allclose(cf.I, I, atol=1e-13)
    np.testing.assert_allclose(cf.J, J, atol=1e-13)


def test_closed_forms_vs_live_oracle():
    at = 1.3
    b = at**-3 - at**3
    cf = closed_forms(at)
    live = [trigonal_sheet1(0, 2, at, b), trigonal_sheet1(1, 2, at, b), trigonal_sheet1(2, 2, at, b), trigonal_sheet1(0, 1, at, b)]
    np.testing.assert_allclose(np.real(live), cf.I, atol=1e-10)


@settings(max_examples=60, deadline=None)
@given(st.floats(0.2, 5.0))
def test_identities_property(at):
    cf = closed_forms(at)
    I, J = cf.v_ordering()
    assert abs(I[1] + J[1]) <= 1e-12 * max(1, abs(I[1]))
    assert abs(I[3] - J[3] - I[1]) <= 1e-12 * max(1, abs(I[1]))
    assert abs(I[0] / J[0] + I[2] / J[2]) <= 1e-12 * max(1, abs(I[0] / J[0]))
    assert cf.b == pytest.approx((1 - 2 * cf.t) / math.sqrt(cf.t * (1 - cf.t)), rel=1e-10, abs=1e-12)


def test_closed_forms_domain():
    with pytest.raises(DomainError):
        closed_forms(0.0)


def test_solve_modular_symmetry():
    t2, b2 = solve_modular(2)
    th, bh = solve_modular("1/2")
    assert t2 + th == pytest.approx(1.0, abs=1e-15)
    assert b2 == pytest.approx(-bh, rel=1e-14)


def test_solve_modular_errors():
    with pytest.raises(NoRoot):
        solve_modular(0)
    with pytest.raises(NoRoot):
        solve_modular(-1)


def test_beta_closed_form_cube():
    t, _ = solve_modular(0.5)
    c = beta_cuberoot_closed_form(1, 1, t)
    assert beta_closed_form(1, 1, t) == pytest.approx(c**3, rel=1e-15)
    with pytest.raises(DomainError):
        beta_cuberoot_closed_form(1, 1, 1.0)
