from fractions import Fraction
from itertools import product

from hypothesis import given, strategies as st

from troplimits.complexes import Cell, PolyhedralComplex, feasible, merge_cells, point_cell, ray_cell

from oracles import grid

coef = st.integers(-3, 3)
rows = st.lists(st.tuples(st.tuples(coef, coef), st.integers(-4, 4)), min_size=1, max_size=4)


def brute_feasible(ineqs, strict):
    """Grid scan with step 1/2; a hit proves feasibility, a miss proves nothing."""
    pts = [Fraction(n, 12) for n in range(-12 * 12, 12 * 12 + 1, 1)]
    for w in product(pts[::6], repeat=2):
        if all(a[0] * w[0] + a[1] * w[1] <= b for a, b in ineqs) and all(
                a[0] * w[0] + a[1] * w[1] < b for a, b in strict):
            return True
    return None


@given(rows, rows)
def test_feasibility_is_sound(ineqs, strict):
    ok = feasible([], ineqs, strict, nvars=2)
    found = brute_feasible(ineqs, strict)
    if found:
        assert ok
    if not ok:
        assert not found


def test_feasible_examples():
    assert feasible([((1, 1), 0)], [((1, 0), 0)], [((0, 1), 0)], nvars=2) is False
    assert feasible([((1, 1), 0)], [((1, 0), 0)], [], nvars=2) is True
    assert feasible([((0, 0), 1)], [], [], nvars=2) is False


def test_vrep_of_quadrant_and_strip():
    q = Cell(2, [], [((-1, 0), 0), ((0, -1), 0)])
    v, r, l = q.vrep
    assert v == [(0, 0)] and sorted(r) == [(0, 1), (1, 0)] and l == []
    strip = Cell(2, [], [((0, 1), 1), ((0, -1), 1)])
    v, r, l = strip.vrep
    assert len(l) == 1 and strip.dim == 2
    assert Cell(2, [], [((1, 0), -1), ((-1, 0), -1)]).is_empty()


def test_image_and_same_set():
    ray = ray_cell((1, 1), (-1, -1))
    img = ray.image([[1, 0]], [Fraction(1)])
    assert img.same_set(ray_cell((2,), (-1,)))
    assert ray.canonical().same_set(ray)
    empty = Cell(2, [], [((1, 0), -1), ((-1, 0), -1)])
    assert empty.image([[1, 1]]).is_empty()


def test_complex_contains_and_merge():
    cells = [point_cell((0, 0)), ray_cell((0, 0), (1, 0)), ray_cell((0, 0), (2, 0))]
    merged = merge_cells(cells)
    assert len(merged) == 2
    C = PolyhedralComplex(2, merged)
    assert C.contains((3, 0)) and not C.contains((3, 1))
    assert len(C.maximal_cells()) == 1


def test_grid_helper():
    g = grid()
    assert g[0] == -5 and g[-1] == 5 and Fraction(1, 3) in g and Fraction(1, 5) not in g
