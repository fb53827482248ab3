import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypagm.core import QuadTriple
from hypagm.errors import DomainError
from hypagm.oracle import segment_integral
from hypagm.richelot import (
    LABEL_INDEX,
    LABELS,
    RichelotState,
    canonical_integrals,
    consecutive_integrals,
    correspondence_images,
    gap_integrals,
    mobius_relabel,
    real_integral_table,
    richelot_step,
    run_agm,
    uvw_roots,
)


def oracle_table(r, S):
    """Straight segments between consecutive roots, summed along the real axis."""
    seg = [segment_integral(r, S, r[k], r[k + 1]) for k in range(5)]
    return {lab: sum(seg[i:j]) for lab, (i, j) in LABEL_INDEX.items()}


def test_canonical_vs_oracle(real_sextic):
    for _ in range(5):
        r = real_sextic()
        for S in ((1.0,), (0.0, 1.0), (0.3, -1.2)):
            Ia, Ib, Ic = canonical_integrals(r, S)
            for val, (i, j) in zip((Ia, Ib, Ic), ((0, 1), (2, 3), (4, 5))):
                assert abs(val - segment_integral(r, S, r[i], r[j])) < 1e-10


def test_sum_identity(real_sextic):
    r = real_sextic()
    assert abs(sum(canonical_integrals(r))) < 1e-12


def test_steps_few(real_sextic):
    for _ in range(20):
        _, _, steps = run_agm(real_sextic())
        assert steps <= 8


def test_richelot_step_interlaces():
    s = RichelotState((0.0, 1.0, 2.0, 3.0, 4.0, 5.0))
    n = richelot_step(s)
    a, a1, b, b1, c, c1 = s.roots
    v, w, w1, u, u1, v1 = n.roots
    assert a <= v <= w <= a1 <= b <= w1 <= u <= b1 <= c <= u1 <= v1 <= c1
    assert n.step == 1 and len(n.history) == 1


def test_run_agm_limits_between_pairs():
    r = np.arange(6.0)
    (al, be, ga), T, steps = run_agm(r)
    assert 0 < al < 1 and 2 < be < 3 and 4 < ga < 5
    assert T > 0


def test_unordered_rejected():
    with pytest.raises(DomainError):
        run_agm([0, 2, 1, 3, 4, 5])


def test_uvw_roots_are_bracket_roots():
    r = np.arange(6.0)
    (u, u1, v, v1, w, w1), D, t = uvw_roots(r)
    from hypagm.core import uvw_polys
    from numpy.polynomial import polynomial as P

    U, V, W = uvw_polys(QuadTriple.from_roots(r))
    for poly, roots in ((U, (u, u1)), (V, (v, v1)), (W, (w, w1))):
        assert np.max(np.abs(P.polyval(np.array(roots), poly))) < 1e-12


def test_mobius_ordering_and_roundtrip(real_sextic):
    r = real_sextic()
    rec = mobius_relabel(r)
    assert np.all(np.diff(rec.sorted_images) > 0)
    np.testing.assert_allclose(rec.inverse(rec.forward(r)), r, rtol=1e-13)
    assert rec.prod_images < 0



def test_gap_integrals_vs_oracle(real_sextic):
    for _ in range(5):
        r = real_sextic()
        for S in ((1.0,), (0.0, 1.0)):
            Jab, Jbc = gap_integrals(r, S)
            assert abs(Jab - segment_integral(r, S, r[1], r[2])) < 1e-10
            assert abs(Jbc - segment_integral(r, S, r[3], r[4])) < 1e-10


def test_real_table_vs_oracle(real_sextic):
    r = real_sextic()
    tab = real_integral_table(r, (0.5, 1.0))
    ref = oracle_table(r, (0.5, 1.0))
    for lab in LABELS:
        assert abs(tab[lab] - ref[lab]) < 1e-10
    assert tab.as_array().shape == (7,)
    assert consecutive_integrals(r).shape == (5,)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(-4, 4), min_size=6, max_size=6, unique=True))
def test_correspondence_abscissas(roots):
    r = np.sort(roots)
    if np.min(np.diff(r)) < 1e-2:
        return
    t = QuadTriple.from_roots(r)
    for i, j in ((0, 1),):
        za = correspondence_images(t, r[i])
        zb = correspondence_images(t, r[j])
        assert np.max(np.abs(za - zb)) <= 1e-10 * max(1.0, np.max(np.abs(za)))
