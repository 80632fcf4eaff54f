import random
from fractions import Fraction

import pytest

from troplimits.errors import ChartError, FaceError, FanMapError, NonAdditiveError
from troplimits.polyhedral import (affine_line_fan, affine_space_fan, is_face, make_cone, orthant, product_fan,
                                   projective_line_fan, projective_plane_fan, torus_fan, zero_cone)
from troplimits.scalars import INF, padic
from troplimits.tropspace import (ExtendedPoint, TropMap, as_monoid_hom, eval_monomial, hom_to_point,
                                  quotient_coordinates, trop_map_apply, trop_map_apply_dual)

from sampling import random_point

A2 = affine_space_fan(2)
RAY1 = make_cone([(1, 0)], 2)


def test_representative_is_reduced_modulo_the_stratum_span():
    p = ExtendedPoint(A2, A2.index(RAY1), [7, 3])
    assert p.rep == (0, 3)
    assert p == ExtendedPoint(A2, A2.index(RAY1), [-2, 3])
    assert p.coordinates() == (INF, 3)


def test_eval_monomial_on_boundary_and_torus():
    p = ExtendedPoint(A2, A2.index(RAY1), [0, 3])
    assert eval_monomial(p, None, (0, 1)) == 3
    assert eval_monomial(p, None, (1, 2)) is INF
    assert eval_monomial(p, orthant(2), (0, 2), Fraction(4), padic(2)) == 8
    with pytest.raises(ChartError):
        eval_monomial(p, orthant(2), (-1, 0))
    q = ExtendedPoint.torus(A2, [1, 2])
    assert eval_monomial(q, orthant(2), (1, 1)) == 3
    with pytest.raises(FaceError):
        eval_monomial(p, make_cone([(0, 1)], 2), (0, 1))


def test_non_additive_table_is_rejected():
    with pytest.raises(NonAdditiveError):
        hom_to_point(A2, orthant(2), {(1, 0): Fraction(1), (0, 1): Fraction(2), (1, 1): Fraction(4)})
    with pytest.raises(ChartError):
        hom_to_point(A2, orthant(2), {(1, 0): Fraction(1)})


@pytest.mark.parametrize("fan", [A2, projective_plane_fan(), product_fan(projective_line_fan(), affine_line_fan())])
def test_hom_round_trip_on_every_chart(fan):
    rng = random.Random(3)
    for _ in range(40):
        p = random_point(fan, rng)
        for sigma in fan:
            if is_face(p.cone, sigma):
                assert hom_to_point(fan, sigma, as_monoid_hom(p, sigma)) == p


def test_quotient_coordinates():
    p = ExtendedPoint(A2, A2.index(RAY1), [5, -3])
    assert quotient_coordinates(RAY1, p.rep) == (-3,)


def test_map_to_incompatible_fan_is_rejected():
    with pytest.raises(FanMapError):
        TropMap(((1, 0), (0, 1)), projective_plane_fan(), A2)


def test_projection_sends_boundary_to_boundary():
    src = product_fan(affine_line_fan(), affine_line_fan())
    m = TropMap.coordinate_projection(src, affine_line_fan(), [1])
    p = ExtendedPoint(src, src.index(make_cone([(0, 1)], 2)), [4, 0])
    img = trop_map_apply(m, p)
    assert img.cone == make_cone([(1,)], 1)
    assert trop_map_apply_dual(m, p) == img
    p = ExtendedPoint(src, src.index(make_cone([(1, 0)], 2)), [0, 4])
    assert trop_map_apply(m, p) == ExtendedPoint.torus(affine_line_fan(), [4])


def test_shift_and_composition():
    src = projective_plane_fan()
    m1 = TropMap(((1, 0), (0, 1)), src, src, (Fraction(1), Fraction(-2)))
    m2 = TropMap(((1, 0), (0, 1)), src, src, (Fraction(1, 2), Fraction(0)))
    rng = random.Random(5)
    for _ in range(30):
        p = random_point(src, rng)
        assert trop_map_apply(m2, trop_map_apply(m1, p)) == trop_map_apply(m2.compose(m1), p)
        assert trop_map_apply_dual(m1, p) == trop_map_apply(m1, p)


def test_torus_map_to_rank_zero():
    m = TropMap((), torus_fan(2), torus_fan(0))
    p = ExtendedPoint.torus(torus_fan(2), [1, 1])
    assert trop_map_apply(m, p).rep == ()
    assert zero_cone(0) in m.target
