from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hmclass.errors import HMError
from hmclass.milnor import (
    EMData,
    euler_delta_direct,
    euler_delta_iterated,
    example_2_8,
    example_2_8_em_data,
    hyperplane_correction_series,
    milnor_class_direct,
    milnor_class_iterated,
    verify_identity_2_7_1,
)
from hmclass.projspace import HomologyClass, ci_euler


def em(n, m, r, coeffs):
    return EMData(n, m, HomologyClass(n, coeffs), r)


@st.composite
def em_data(draw):
    n = draw(st.integers(1, 6))
    r = draw(st.integers(0, n - 1))
    m = draw(st.integers(1, 8))
    coeffs = draw(st.lists(st.integers(-20, 20), min_size=r + 1, max_size=r + 1))
    return em(n, m, r, coeffs)


class TestIterated:
    def test_isolated(self):
        d = em(3, 5, 0, [7])
        assert milnor_class_iterated(d) == d.em_class

    def test_m_one_matches_direct(self):
        d = em(3, 1, 2, [1, 2, 3])
        assert milnor_class_iterated(d) == milnor_class_direct(d)

    def test_elliptic_quartic_curve(self):
        d = em(3, 4, 1, [0, -4])
        out = milnor_class_iterated(d)
        assert out.degree_zero() == 16
        assert out == milnor_class_direct(d)

    def test_support_exceeded(self):
        with pytest.raises(HMError, match="EM class exceeds declared singular dimension"):
            milnor_class_iterated(em(3, 2, 0, [0, 1]))

    def test_stratified_needs_m_at_least_two(self):
        d = em(3, 1, 1, [0, 1])
        milnor_class_iterated(d)
        with pytest.raises(HMError):
            milnor_class_iterated(d, stratified=True)

    def test_correction_series_empty_sum(self):
        assert hyperplane_correction_series(5, 0, 4).coeffs == (1, 0, 0, 0, 0)

    @given(em_data())
    def test_equals_direct(self, d):
        assert milnor_class_iterated(d) == milnor_class_direct(d)


class TestDirect:
    def test_examples(self):
        assert milnor_class_direct(em(2, 3, 0, [1])) == HomologyClass.point(2)
        assert milnor_class_direct(em(2, 2, 1, [0, 1])) == HomologyClass(2, [-2, 1])
        assert milnor_class_direct(em(2, 2, 1, [])).is_zero()


class TestIdentity:
    @pytest.mark.parametrize("m,order", [(2, 10), (1, 10), (5, 20), (12, 30)])
    def test_holds(self, m, order):
        assert verify_identity_2_7_1(m, order)

    def test_bad_order(self):
        with pytest.raises(HMError):
            verify_identity_2_7_1(2, 0)


class TestDeltas:
    def test_iterated(self):
        assert euler_delta_iterated([3], 4) == 3
        assert euler_delta_iterated([0, 4], 4) == -16
        with pytest.raises(HMError):
            euler_delta_iterated([], 2)

    def test_direct(self):
        assert euler_delta_direct(0, -16) == 16
        assert euler_delta_direct(5, 5) == 0
        assert euler_delta_direct(5, 2) == 3


class TestExample28:
    def test_reference_instance(self):
        r = example_2_8(3, 2, 2, 2, 2)
        assert (r.em_value, r.delta_iterated, r.delta_direct, r.chi_smooth, r.chi_X) == (-1, 16, 16, 24, 8)
        assert r.to_json()["chi_X"] == "8"

    def test_other_instances(self):
        r = example_2_8(3, 2, 3, 3, 2)
        assert r.m == 6 and r.delta_iterated == r.delta_direct
        r = example_2_8(4, 2, 2, 2, 2)
        assert r.delta_iterated == r.delta_direct

    def test_chi_x_from_ci(self):
        r = example_2_8(4, 3, 2, 2, 3)
        assert r.chi_X == ci_euler(4, [6]) - r.delta_direct

    def test_degree_mismatch(self):
        with pytest.raises(HMError, match="degree mismatch"):
            example_2_8(3, 2, 3, 2, 2)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_degree_zero_consistency(self, n):
        for a1, a2, b1, b2 in [(2, 2, 2, 2), (2, 4, 4, 2), (3, 2, 2, 3)]:
            if a1 * b1 != a2 * b2:
                continue
            d = example_2_8_em_data(n, a1, a2, b1, b2)
            r = example_2_8(n, a1, a2, b1, b2)
            assert milnor_class_direct(d).degree_zero() == r.delta_direct
            assert milnor_class_iterated(d) == milnor_class_direct(d)


def test_emdata_validation():
    with pytest.raises(HMError):
        EMData(2, 0, HomologyClass(2), 0)
    with pytest.raises(HMError):
        EMData(2, 2, HomologyClass(2), 2)
    with pytest.raises(HMError):
        EMData(2, 2, HomologyClass(3), 0)
