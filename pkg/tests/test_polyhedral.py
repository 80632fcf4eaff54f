import random

import pytest
from hypothesis import given, strategies as st

from troplimits.errors import ConeError
from troplimits.polyhedral import (affine_line_fan, cone, dual_cone, faces, fan_map_compatible,
                                   fan_of_cones, fan_validate, hilbert_basis, is_face, make_cone,
                                   minimal_face_containing, monoid, orthant, product_fan,
                                   projective_line_fan, projective_plane_fan, torus_fan, validate,
                                   zero_cone)

from oracles import cross, dual_rays_2d, hilbert_basis_2d

vec = st.tuples(st.integers(-5, 5), st.integers(-5, 5))
plane_cones = st.tuples(vec, vec).filter(lambda ab: cross(*ab) != 0)


def test_dual_of_reference_cone():
    sigma = make_cone([(2, -1), (0, 1)])
    assert dual_cone(sigma) == make_cone([(1, 0), (1, 2)])
    assert hilbert_basis(dual_cone(sigma)).generators == ((1, 0), (1, 1), (1, 2))
    assert monoid(sigma).generators == ((1, 0), (1, 1), (1, 2))


def test_faces_of_plane_cone():
    sigma = make_cone([(2, -1), (0, 1)])
    fs = faces(sigma)
    assert len(fs) == 4
    assert zero_cone(2) in fs and sigma in fs
    assert is_face(make_cone([(0, 1)]), sigma)
    assert not is_face(make_cone([(1, 0)], 2), sigma)


def test_dual_of_full_space_is_zero():
    whole = make_cone([(1, 0), (-1, 0), (0, 1), (0, -1)])
    assert dual_cone(whole) == zero_cone(2)
    assert dual_cone(zero_cone(2)) == whole


def test_cone_with_lineality():
    half = make_cone([(1, 0), (-1, 0), (0, 1)])
    assert not half.is_pointed
    assert half.dim == 2
    assert dual_cone(half) == make_cone([(0, 1)], 2)
    assert sorted(hilbert_basis(half).generators) == [(-1, 0), (0, 1), (1, 0)]


@given(plane_cones)
def test_dual_matches_brute_force_normals(ab):
    rays = dual_rays_2d(list(ab), R=10)
    assert sorted(dual_cone(make_cone(list(ab))).generators) == rays


@given(plane_cones)
def test_double_dual(ab):
    sigma = make_cone(list(ab))
    assert dual_cone(dual_cone(sigma)) == sigma


@given(plane_cones)
def test_hilbert_basis_matches_enumeration(ab):
    assert sorted(hilbert_basis(make_cone(list(ab))).generators) == hilbert_basis_2d(list(ab))


def test_hilbert_basis_3d_orthant_and_simplex():
    assert sorted(hilbert_basis(orthant(3)).generators) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    C = make_cone([(1, 0, 0), (0, 1, 0), (1, 1, 2)])
    hb = set(hilbert_basis(C).generators)
    assert {(1, 0, 0), (0, 1, 0), (1, 1, 2), (1, 1, 1)} == hb


def test_minimal_face_and_contains():
    sigma = orthant(2)
    assert minimal_face_containing(sigma, (0, 3)) == make_cone([(0, 1)], 2)
    assert minimal_face_containing(sigma, (1, 3)) == sigma
    with pytest.raises(ConeError):
        minimal_face_containing(sigma, (-1, 0))


def test_projective_plane_fan():
    P2 = projective_plane_fan()
    assert len(P2) == 7
    assert validate(P2).valid
    assert P2[0] == zero_cone(2)


def test_product_of_projective_line_and_plane_has_21_cones():
    F = product_fan(projective_line_fan(), projective_plane_fan())
    assert len(F) == 3 * 7
    assert validate(F).valid


def test_fan_validate_reports_problems():
    a = make_cone([(1, 0), (0, 1)])
    b = make_cone([(1, 1), (-1, 1)])
    rep = fan_validate(2, [a, b] + faces(a) + faces(b))
    assert not rep.valid and rep.bad_pairs
    rep = fan_validate(2, [a])
    assert not rep.valid and len(rep.missing_faces) == 3


def test_stratum_of():
    P2 = projective_plane_fan()
    assert P2[P2.stratum_of((0, 0))] == zero_cone(2)
    assert P2[P2.stratum_of((2, 0))] == make_cone([(1, 0)], 2)
    assert P2[P2.stratum_of((-1, -2))].dim == 2


def test_fan_map_compatibility():
    P2 = projective_plane_fan()
    ok, _ = fan_map_compatible([[1, 0], [0, 1]], P2, fan_of_cones(2, [[(1, 0), (0, 1)]]))
    assert not ok
    # no linear map carries every cone of P^2 into a cone of P^1
    ok, _ = fan_map_compatible([[1, 1]], P2, projective_line_fan())
    assert not ok
    P1xP1 = product_fan(projective_line_fan(), projective_line_fan())
    ok, assign = fan_map_compatible([[1, 0]], P1xP1, projective_line_fan())
    assert ok
    assert all(a is not None for a in assign)
    ok, _ = fan_map_compatible([[1, 0]], P2, affine_line_fan())
    assert not ok
    ok, _ = fan_map_compatible([[1, 0]], torus_fan(2), torus_fan(1))
    assert ok


def test_fan_equality_ignores_listing_order():
    gens = [[(1, 0)], [(0, 1)], [(-1, -1)]]
    a = fan_of_cones(2, gens)
    b = fan_of_cones(2, list(reversed(gens)))
    assert a == b and a.cones == b.cones


def test_random_cones_hilbert_batch():
    rng = random.Random(7)
    done = 0
    while done < 50:
        a = (rng.randint(-5, 5), rng.randint(-5, 5))
        b = (rng.randint(-5, 5), rng.randint(-5, 5))
        if cross(a, b) == 0:
            continue
        assert sorted(hilbert_basis(cone((a, b), 2)).generators) == hilbert_basis_2d([a, b])
        done += 1
