from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from smoothpoly.appendix import appendix_fans, appendix_polygons, appendix_polytopes3
from smoothpoly.classify import hirzebruch_fan, p2_fan
from smoothpoly.cones import (
    Fan,
    RationalCone,
    box_points,
    fan_is_complete,
    fan_is_smooth,
    gorenstein_data,
    hilbert_basis,
    is_simplicial,
    is_smooth,
    is_unimodular,
    is_very_ample,
    multiplicity,
    nib_lattice_points,
    polytope_multiplicity,
)
from smoothpoly.fixtures import bruns_polytope, reeve_simplex
from smoothpoly.polytope import LatticePolytope, dilate, normal_fan, tangent_cone

from oracles import brute_hilbert_basis_simplicial, cube, leibniz_det, two_dim_cones


def bruns_cone(k):
    return RationalCone([(0, -1, 0), (0, 0, 1), (1, -1, 0), (1, 0, k)])


def reeve_cone(k):
    return RationalCone([(1, 0, 0), (0, 1, 0), (1, 1, k)])


def test_simplicial():
    assert is_simplicial(RationalCone([(1, 0), (0, 1)]))
    assert not is_simplicial(bruns_cone(3))
    assert is_simplicial(reeve_cone(5))


def test_unimodular():
    for d in (1, 2, 3, 4):
        assert is_unimodular(RationalCone([tuple(int(i == j) for j in range(d)) for i in range(d)]))
    assert all(not is_unimodular(reeve_cone(k)) for k in range(2, 8))
    assert not is_unimodular(RationalCone([(1, 0), (1, 2)]))


def test_generators_are_primitive_extreme_rays():
    c = RationalCone([(2, 0), (0, 3), (1, 1), (4, 0)])
    assert c.generators == ((0, 1), (1, 0))


def test_gorenstein():
    g = gorenstein_data(RationalCone([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert g.height == (1, 1, 1) and g.index == 1 and g.is_gorenstein
    g = gorenstein_data(RationalCone([(1, 0), (1, 2)]))
    assert g.height == (1, 0) and g.index == 1 and g.is_gorenstein
    assert gorenstein_data(bruns_cone(1)) is not None
    for k in range(2, 8):
        assert gorenstein_data(bruns_cone(k)) is None


def test_gorenstein_index_above_one():
    g = gorenstein_data(RationalCone([(2, 1), (1, 2)]))
    assert g.height == (Fraction(1, 3), Fraction(1, 3)) and g.index == 3 and not g.is_gorenstein


def test_nib_points():
    assert sorted(nib_lattice_points(RationalCone([(1, 0), (0, 1)]))) == [(0, 0), (0, 1), (1, 0)]
    assert sorted(nib_lattice_points(RationalCone([(1, 0), (1, 2)]))) == [(0, 0), (1, 0), (1, 1), (1, 2)]
    assert len(nib_lattice_points(RationalCone([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))) == 4


def test_multiplicity():
    assert multiplicity(RationalCone([(1, 0), (0, 1)])) == 1
    for k in range(1, 9):
        assert multiplicity(reeve_cone(k)) == k
        assert polytope_multiplicity(bruns_polytope(k)) == k + 1
        # the tangent cone at the origin of the Reeve simplex has multiplicity k,
        # its normal cones go up to k^2
        assert multiplicity(tangent_cone(reeve_simplex(k), (0, 0, 0))) == k
        assert polytope_multiplicity(reeve_simplex(k)) == k * k


def test_polytope_multiplicity_smooth():
    for p in appendix_polygons()[::5] + appendix_polytopes3()[::5]:
        assert polytope_multiplicity(p) == 1


def test_box_points():
    assert box_points(RationalCone([(1, 0), (0, 1)])) == [(0, 0)]
    assert sorted(box_points(RationalCone([(1, 0), (1, 2)]))) == [(0, 0), (1, 1)]
    assert len(box_points(reeve_cone(2))) == 2


@pytest.mark.parametrize("k", range(1, 7))
def test_box_point_count_is_multiplicity(k):
    assert len(box_points(reeve_cone(k))) == k


def test_hilbert_examples():
    assert hilbert_basis(RationalCone([(1, 0, 0), (0, 1, 0), (0, 0, 1)])) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert hilbert_basis(RationalCone([(1, 0), (1, 2)])) == [(1, 0), (1, 1), (1, 2)]
    assert hilbert_basis(reeve_cone(2)) == [(0, 1, 0), (1, 0, 0), (1, 1, 1), (1, 1, 2)]


def test_hilbert_non_simplicial():
    # the cone over a unit square is generated by its four rays
    c = RationalCone([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])
    assert hilbert_basis(c) == sorted(c.generators)
    # with a doubled square the midpoints become irreducible
    c = RationalCone([(0, 0, 1), (2, 0, 1), (0, 2, 1), (2, 2, 1)])
    assert len(hilbert_basis(c)) == 9


def test_hilbert_not_pointed():
    with pytest.raises(ValueError, match="not pointed"):
        hilbert_basis(RationalCone([(1, 0), (-1, 0), (0, 1)]))


vec3 = st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4))


@given(st.lists(vec3, min_size=3, max_size=3))
def test_hilbert_matches_oracle_3d(gens):
    d = leibniz_det(gens)
    if d == 0 or abs(d) > 30:
        return
    c = RationalCone(gens)
    basis = hilbert_basis(c)
    assert basis == brute_hilbert_basis_simplicial(list(c.generators))
    assert all(c.contains(h) for h in basis)


def test_very_ample():
    for k in range(2, 7):
        assert not is_very_ample(reeve_simplex(k))
        assert is_very_ample(dilate(reeve_simplex(k), 2))
    for k in range(1, 6):
        assert is_very_ample(bruns_polytope(k))


def test_smooth():
    assert is_smooth(reeve_simplex(1))
    for k in range(2, 6):
        assert not is_smooth(reeve_simplex(k))
        assert not is_smooth(bruns_polytope(k))
    assert not is_smooth(bruns_polytope(1))


def test_fans():
    assert fan_is_complete(p2_fan()) and fan_is_smooth(p2_fan())
    for a in range(0, 12):
        assert fan_is_complete(hirzebruch_fan(a)) and fan_is_smooth(hirzebruch_fan(a))
    partial = Fan(p2_fan().rays, p2_fan().cones[:2])
    assert not fan_is_complete(partial)


def test_fan_3d():
    assert all(fan_is_complete(f) and fan_is_smooth(f) for f in appendix_fans())
    f = normal_fan(LatticePolytope(cube(3)))
    assert fan_is_complete(Fan(f.rays, f.cones))
    assert not fan_is_complete(Fan(f.rays, f.cones[1:]))


def test_fan_validation():
    with pytest.raises(ValueError, match="duplicate"):
        Fan([(1, 0), (1, 0)], [(0, 1)])
    with pytest.raises(ValueError, match="out of range"):
        Fan([(1, 0), (0, 1)], [(0, 2)])


def test_non_smooth_fan():
    f = Fan([(1, 0), (1, 2), (-1, -1)], [(0, 1), (1, 2), (0, 2)])
    assert fan_is_complete(f) and not fan_is_smooth(f)


def test_two_dim_representatives_cover_multiplicities():
    cones = two_dim_cones(20)
    assert {leibniz_det(g) for g in cones} == set(range(1, 21))
