import numpy as np
import pytest

from hypagm.complex_richelot import (
    CASE_TABLES,
    Case,
    classify,
    full_integral_table,
    oracle_integral_table,
)
from hypagm.curve import CurveFamily, richelot_labels
from hypagm.errors import DomainError
from hypagm.richelot import LABELS


def labels(a, g):
    return richelot_labels(CurveFamily(a, g))


@pytest.mark.parametrize("a,expected", [(1.0, Case.CASE2), (2.0, Case.CASE2), (-1.0, Case.CASE1), (-2.0, Case.CASE1)])
def test_case_by_sign_of_a(a, expected):
    oc = classify(labels(a, 1.0))
    assert oc.tag is expected
    assert not oc.degenerate


def test_a_zero_is_degenerate():
    oc = classify(labels(0.0, 5 * 2**0.5))
    assert oc.degenerate


def test_case_tables_shape():
    for M in CASE_TABLES.values():
        assert M.shape == (7, 5)
        assert np.all(np.abs(M * 2 - np.round(M * 2)) == 0)  # half-integers


def test_bad_pairing_rejected():
    r = labels(1.0, 1.0)
    with pytest.raises(DomainError):
        classify(r[[1, 0, 2, 3, 4, 5]])
    with pytest.raises(DomainError):
        classify(r[[2, 3, 0, 1, 4, 5]])


@pytest.mark.parametrize("a,g", [(1.0, 1.0), (-0.5, 2.0), (0.7, -3.0), (-2.0, -0.5)])
def test_table_vs_oracle(a, g):
    r = labels(a, g)
    for S in ((1.0, 0.0), (0.0, 1.0)):
        agm = full_integral_table(r, S)
        ref = oracle_integral_table(r, S)
        for lab in LABELS:
            assert abs(agm[lab] - ref[lab]) < 1e-9, lab


def test_multiple_numerators():
    r = labels(1.5, 0.5)
    t1, t2 = full_integral_table(r, np.eye(2))
    assert abs(t1["aa'"] - full_integral_table(r, (1.0, 0.0))["aa'"]) < 1e-15
    assert t2.numerator[1] == 1


def test_degenerate_fallback_uses_oracle():
    r = labels(0.0, 5 * 2**0.5)
    t = full_integral_table(r, (1.0,))
    ref = oracle_integral_table(r, (1.0,))
    np.testing.assert_allclose(t.as_array(), ref.as_array(), atol=1e-13)
