from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hmclass.errors import HMError
from hmclass.projspace import HomologyClass, YClass, ci_chi_y_virtual
from hmclass.rings import FracExpPoly, YPoly
from hmclass.spectral import (
    GradedSpectralClass,
    IsolatedHypersurfaceModel,
    assemble_formula_2,
    chi_y,
    du_bois_detector,
    germ_lct,
    germ_m_zero,
    hm_y_class,
    int_part_map,
    jumping_coefficients,
    localized_point_class,
    m_zero,
    point_spectral_class,
    theorem1_multiplier,
    theorem4_point_check,
)
from hmclass.spectrum import Spectrum, brieskorn_pham, classify, sp_power

F = Fraction
Y = YPoly.gen()
node, cusp = brieskorn_pham([2, 2]), brieskorn_pham([2, 3])


def cubic(*germs):
    return IsolatedHypersurfaceModel.from_brieskorn_pham(2, 3, germs)


class TestIntPart:
    def test_examples(self):
        assert int_part_map(FracExpPoly({F(5, 6): 1})) == YPoly({0: 1})
        assert int_part_map(FracExpPoly({F(3, 2): 1})) == -Y
        for m in range(2, 8):
            assert int_part_map(sp_power(m).poly) == YPoly({0: m - 1})


class TestLocalized:
    def test_examples(self):
        assert localized_point_class(node) == FracExpPoly({1: -1})
        assert localized_point_class(cusp) == FracExpPoly({F(5, 6): -1, F(7, 6): -1})
        assert localized_point_class(brieskorn_pham([2, 2, 2])) == FracExpPoly({F(3, 2): 1})

    def test_asymmetric_rejected(self):
        with pytest.raises(HMError, match="Sp/Sp′ ambiguity"):
            localized_point_class(Spectrum(FracExpPoly({F(1, 2): 1}), 2))


class TestHypersurfaces:
    def test_nodal_cubic(self):
        # H^0 of type (0,0), weight-0 H^1 of type (0,0), H^2 of type (1,1)
        oracle = YPoly({0: 1}) - YPoly({0: 1}) - Y
        model = cubic([2, 2])
        assert hm_y_class(model) == Y
        assert chi_y(model) == oracle == -Y
        assert chi_y(model).evaluate(-1) == 1

    def test_cuspidal_cubic(self):
        model = cubic([2, 3])
        assert hm_y_class(model) == Y - 1
        assert chi_y(model) == 1 - Y
        assert chi_y(model).evaluate(-1) == 2

    def test_smooth(self):
        model = cubic()
        assert hm_y_class(model).is_zero()
        assert chi_y(model) == ci_chi_y_virtual(2, [3])

    def test_cayley_cubic_surface(self):
        # four A1 points on a cubic surface: chi = 9 - 4
        model = IsolatedHypersurfaceModel.from_brieskorn_pham(3, 3, [[2, 2, 2]] * 4)
        assert chi_y(model).evaluate(-1) == 5

    def test_germ_dimension_checked(self):
        with pytest.raises(HMError):
            IsolatedHypersurfaceModel.from_brieskorn_pham(3, 3, [[2, 2]])

    def test_json(self):
        model = IsolatedHypersurfaceModel.from_json({"n": 2, "m": 3, "germs": [[2, 3]]})
        assert model.germs == (cusp,)
        with pytest.raises(HMError):
            IsolatedHypersurfaceModel.from_json({"m": 3})


class TestDetectors:
    def test_m_zero(self):
        assert germ_m_zero(node) == 0
        assert germ_m_zero(cusp) == -1
        assert germ_m_zero(brieskorn_pham([2, 3, 7])) == 1
        assert m_zero(cubic([2, 2], [2, 3])) == ([0, -1], -1)

    def test_du_bois(self):
        assert du_bois_detector(cubic([2, 2]))
        assert not du_bois_detector(cubic([2, 3]))

    @given(st.lists(st.integers(2, 6), min_size=1, max_size=4))
    def test_detector_matches_exponent_criterion(self, exponents):
        g = brieskorn_pham(exponents)
        assert (germ_m_zero(g) == 0) == classify(g).du_bois

    def test_jumping(self):
        assert jumping_coefficients(cusp) == {F(5, 6)}
        assert jumping_coefficients(node) == frozenset()
        assert jumping_coefficients(brieskorn_pham([2, 3, 7])) == {F(41, 42)}
        assert germ_lct(cusp) == F(5, 6)
        assert germ_lct(node) == 1


class TestJoins:
    def test_examples(self):
        assert theorem4_point_check(node, node)
        assert theorem4_point_check(cusp, sp_power(2))
        assert theorem4_point_check(cusp, Spectrum.empty(1))

    @given(
        st.lists(st.integers(2, 5), min_size=1, max_size=3),
        st.lists(st.integers(2, 5), min_size=1, max_size=2),
    )
    def test_sign_law(self, a, b):
        assert theorem4_point_check(brieskorn_pham(a), brieskorn_pham(b))


class TestAssembly:
    def test_multiplier(self):
        assert theorem1_multiplier(2, 1) == FracExpPoly({F(1, 2): -1})
        assert theorem1_multiplier(7, 0) == FracExpPoly({0: 1})
        assert theorem1_multiplier(3, 2) == FracExpPoly({F(2, 3): 1, 1: 2, F(4, 3): 1})

    def test_single_point_classes(self):
        model = cubic([2, 2], [2, 3])
        out = assemble_formula_2([point_spectral_class(model)], 3)
        assert out.dimension_poly(0) == hm_y_class(model)

    def test_zero(self):
        assert assemble_formula_2([GradedSpectralClass(2)] * 3, 4).is_zero()

    def test_higher_j(self):
        c1 = GradedSpectralClass(2, {F(1, 2): HomologyClass.linear(1, 2)})
        out = assemble_formula_2([GradedSpectralClass(2), c1], 2)
        # ỹ^(1/2) * (-ỹ^(1/2)) = -ỹ, and int part sends -ỹ^1 to y
        assert out == YClass(2, {1: HomologyClass.linear(1, 2)})

    def test_dims_checked(self):
        with pytest.raises(HMError):
            assemble_formula_2([GradedSpectralClass(2), GradedSpectralClass(3)], 2)
        with pytest.raises(HMError):
            assemble_formula_2([], 2)
