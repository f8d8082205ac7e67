import itertools
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hmclass.arrangement import (
    Arrangement,
    arrangement_class,
    arrangement_euler,
    build_lattice,
    complement_class,
    lattice,
    rref,
)
from hmclass.errors import HMError
from hmclass.projspace import ci_chi_y_virtual
from hmclass.rings import YPoly


def generic_lines(k):
    # points on the moment curve give lines in general position
    return Arrangement(2, [(1, t, t * t) for t in range(1, k + 1)])


def concurrent_lines(k):
    return Arrangement(2, [(1, t, 0) for t in range(k)])


def euler_by_subsets(a):
    """Inclusion-exclusion: chi of a union from chi of all intersections."""
    import sympy

    n = a.ambient_dim
    total = 0
    for size in range(1, len(a) + 1):
        for s in itertools.combinations(a.forms, size):
            rank = sympy.Matrix(s).rank()
            if rank <= n:
                total += (-1) ** (size + 1) * (n - rank + 1)
    return total


class TestLattice:
    def test_counts(self):
        codims = [z.codim for z in build_lattice(generic_lines(3))]
        assert codims == [1, 1, 1, 2, 2, 2]
        codims = [z.codim for z in build_lattice(concurrent_lines(3))]
        assert codims == [1, 1, 1, 2]
        assert len(build_lattice(Arrangement(3, [(0, 0, 0, 1)]))) == 1

    def test_moebius(self):
        flats = lattice(concurrent_lines(3))
        assert [z.moebius for z in flats] == [-1, -1, -1, 2]
        assert [z.multiplicity for z in flats] == [1, 1, 1, 2]
        flats = lattice(generic_lines(2))
        assert flats[-1].moebius == 1 and flats[-1].multiplicity == 1

    def test_validation(self):
        with pytest.raises(HMError, match="repeated hyperplane"):
            Arrangement(2, [(1, 2, 3), (2, 4, 6)])
        with pytest.raises(HMError):
            Arrangement(2, [])
        with pytest.raises(HMError):
            Arrangement(2, [(0, 0, 0)])
        with pytest.raises(HMError):
            Arrangement(2, [(1, 0)])

    def test_rref(self):
        assert rref([(2, 4), (1, 2)]) == ((1, 2),)
        assert rref([]) == ()


class TestClasses:
    def test_single_hyperplane(self):
        a = Arrangement(3, [(1, 0, 0, 0)])
        assert arrangement_class(a).coeffs == (3, 3, 1, 0)
        assert arrangement_euler(a) == 3
        assert arrangement_class(a, "hirzebruch").dimension_poly(0) == YPoly({0: 1, 1: -1, 2: 1})

    def test_lines(self):
        assert arrangement_class(generic_lines(3)).degree_zero() == 3
        for k in range(1, 8):
            assert arrangement_class(concurrent_lines(k)).degree_zero() == k + 1
        assert arrangement_euler(concurrent_lines(3)) == 4

    @pytest.mark.parametrize("k", range(1, 11))
    def test_generic_lines(self, k):
        assert arrangement_euler(generic_lines(k)) == 2 * k - comb(k, 2)

    def test_triangle_hirzebruch(self):
        # three P^1 glued at three points: chi_y = 3(1 - y) - 3
        t = arrangement_class(generic_lines(3), "hirzebruch")
        assert t.dimension_poly(0) == YPoly({1: -3})

    def test_generic_quadruple_matches_nothing_weird(self):
        a = generic_lines(4)
        assert all(z.multiplicity == 1 for z in lattice(a))

    def test_complement(self):
        assert complement_class(Arrangement(2, [(1, 0, 0)])).degree_zero() == 1
        assert complement_class(generic_lines(3)).degree_zero() == 0

    def test_modes(self):
        with pytest.raises(HMError):
            arrangement_class(generic_lines(2), "todd")

    def test_smooth_hyperplane_matches_ci(self):
        a = Arrangement(4, [(1, 2, 3, 4, 5)])
        t = arrangement_class(a, "hirzebruch")
        assert t.dimension_poly(0) == ci_chi_y_virtual(4, [1])


forms3 = st.lists(
    st.tuples(*[st.integers(-2, 2)] * 4).filter(any), min_size=1, max_size=6, unique_by=lambda f: rref([f])
)


@settings(max_examples=60, deadline=None)
@given(forms3)
def test_euler_against_inclusion_exclusion(forms):
    a = Arrangement(3, forms)
    assert arrangement_euler(a) == euler_by_subsets(a)
    assert all(z.multiplicity > 0 for z in lattice(a))
