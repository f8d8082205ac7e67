import itertools
from fractions import Fraction
from math import prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hmclass.errors import HMError
from hmclass.rings import FracExpPoly
from hmclass.spectrum import (
    ResolutionData,
    Spectrum,
    brieskorn_pham,
    check_symmetry,
    classify,
    lct_from_resolution,
    lct_from_spectrum,
    max_exponent,
    milnor_number,
    min_exponent,
    monodromy_beta,
    rational_after_cover,
    sp_power,
    ts_product,
)

F = Fraction
bp_lists = st.lists(st.integers(2, 6), min_size=1, max_size=4)


def bp_oracle(exponents):
    """Spectrum of sum x_i^a_i by brute force over the monomial basis of the Jacobian ring."""
    out = {}
    for ks in itertools.product(*(range(1, a) for a in exponents)):
        alpha = sum(F(k, a) for k, a in zip(ks, exponents))
        out[alpha] = out.get(alpha, 0) + 1
    return FracExpPoly(out)


class TestBuildingBlocks:
    def test_sp_power(self):
        assert sp_power(2).poly == FracExpPoly({F(1, 2): 1})
        assert sp_power(3).poly == FracExpPoly({F(1, 3): 1, F(2, 3): 1})
        assert sp_power(6).poly == FracExpPoly({F(k, 6): 1 for k in range(1, 6)})
        assert sp_power(1, allow_smooth=True).mu == 0
        with pytest.raises(HMError):
            sp_power(1)

    def test_products(self):
        node = ts_product(sp_power(2), sp_power(2))
        assert node.poly == FracExpPoly({1: 1}) and node.num_vars == 2
        cusp = ts_product(sp_power(2), sp_power(3))
        assert cusp.poly == FracExpPoly({F(5, 6): 1, F(7, 6): 1})
        assert ts_product(cusp, Spectrum.empty(1)).poly.is_zero()

    def test_brieskorn_pham(self):
        assert brieskorn_pham([2, 2, 2]).poly == FracExpPoly({F(3, 2): 1})
        e12 = brieskorn_pham([2, 3, 7])
        assert e12.mu == 12 and min_exponent(e12) == F(41, 42)
        assert len(e12.poly) == 12
        assert brieskorn_pham([3, 3]).poly == FracExpPoly({F(2, 3): 1, 1: 2, F(4, 3): 1})
        with pytest.raises(HMError):
            brieskorn_pham([])
        with pytest.raises(HMError):
            brieskorn_pham([1, 3])

    @given(bp_lists)
    def test_against_monomial_basis(self, exponents):
        assert brieskorn_pham(exponents).poly == bp_oracle(exponents)

    @given(bp_lists)
    def test_milnor_number(self, exponents):
        assert milnor_number(brieskorn_pham(exponents)) == prod(a - 1 for a in exponents)

    @given(bp_lists)
    def test_symmetry(self, exponents):
        assert check_symmetry(brieskorn_pham(exponents))

    @given(bp_lists, bp_lists)
    def test_min_exponent_additive(self, a, b):
        f, g = brieskorn_pham(a), brieskorn_pham(b)
        assert min_exponent(ts_product(f, g)) == min_exponent(f) + min_exponent(g)

    def test_symmetry_fails_on_artificial(self):
        assert not check_symmetry(Spectrum(FracExpPoly({F(1, 2): 1}), 2))

    def test_extremes(self):
        cusp = brieskorn_pham([2, 3])
        assert (min_exponent(cusp), max_exponent(cusp)) == (F(5, 6), F(7, 6))
        assert min_exponent(sp_power(2)) == max_exponent(sp_power(2)) == F(1, 2)
        with pytest.raises(HMError):
            min_exponent(Spectrum.empty())

    def test_validation(self):
        with pytest.raises(HMError):
            Spectrum(FracExpPoly({F(3, 2): 1}), 1)
        with pytest.raises(HMError):
            Spectrum(FracExpPoly({F(1, 2): -1}), 1)
        with pytest.raises(HMError):
            Spectrum(FracExpPoly(), 1)


class TestCriteria:
    def test_classify(self):
        assert classify(brieskorn_pham([2, 2])).du_bois
        assert classify(brieskorn_pham([2, 2])).insignificant
        assert not classify(brieskorn_pham([2, 3])).du_bois
        assert classify(brieskorn_pham([2, 2, 2])).du_bois

    def test_rational_after_cover(self):
        assert rational_after_cover(brieskorn_pham([2, 2]), 2)
        assert not rational_after_cover(brieskorn_pham([2, 3]), 6)
        # cusp eigenvalues e(5/6), e(7/6) = e(1/6): beta = 1/6 forbids m = 2
        with pytest.raises(HMError, match="base-change condition"):
            rational_after_cover(brieskorn_pham([2, 3]), 2)
        assert not rational_after_cover(brieskorn_pham([2, 3]), 7)
        assert rational_after_cover(brieskorn_pham([2, 2, 2]), 3)

    def test_beta(self):
        assert monodromy_beta(brieskorn_pham([2, 3])) == F(1, 6)
        assert monodromy_beta(brieskorn_pham([2, 2])) == 1

    def test_lct(self):
        assert lct_from_spectrum(brieskorn_pham([2, 3])) == F(5, 6)
        assert lct_from_spectrum(brieskorn_pham([2, 2])) == 1
        assert lct_from_spectrum(brieskorn_pham([2, 2, 2])) == 1

    def test_lct_resolution(self):
        assert lct_from_resolution(ResolutionData([(4, 6)])) == F(5, 6)
        assert lct_from_resolution(ResolutionData([(0, 1)])) == 1
        assert lct_from_resolution(ResolutionData([(1, 3), (2, 2)])) == F(2, 3)
        assert ResolutionData.parse("4/6, 1/3").pairs == ((4, 6), (1, 3))
        with pytest.raises(HMError):
            lct_from_resolution(ResolutionData([]))
        with pytest.raises(HMError):
            ResolutionData.parse("4:6")

    @pytest.mark.parametrize("a,b", [(2, 3), (2, 5), (3, 4), (3, 5), (2, 7)])
    def test_lct_weighted_blowup(self, a, b):
        # weights (b, a) on x^a + y^b: nu = a + b - 1, mult = ab
        r = ResolutionData([(a + b - 1, a * b)])
        assert lct_from_resolution(r) == lct_from_spectrum(brieskorn_pham([a, b]))
