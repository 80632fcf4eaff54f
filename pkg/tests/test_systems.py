from fractions import Fraction

import pytest

from troplimits import corpus
from troplimits.errors import EmbeddingError
from troplimits.polyhedral import make_cone
from troplimits.polynomials import LaurentPoly, RationalFunction
from troplimits.scalars import TRIVIAL
from troplimits.systems import (BaseChart, EmbeddingSystem, LimitStatus, SeparationFailure,
                                SeparationWitness, finite_stage_limit_check, graph_embedding,
                                induced_tuple, product_embedding, separate_points, star_witness,
                                surjectivity_probe, trop_image_of_valuation, verify_morphism)
from troplimits.tropspace import ExtendedPoint, trop_map_apply
from troplimits.tropvar import ASSERTED, KPoint, Weight

x, y = LaurentPoly.variables(2, TRIVIAL)


@pytest.fixture
def S():
    S = EmbeddingSystem(BaseChart(2, [x + y + 1], TRIVIAL, basis_flag=ASSERTED))
    S.register(KPoint((1, -2)))
    S.register(KPoint((-2, 1)))
    S.register(KPoint((Fraction(1, 2), Fraction(-3, 2))))
    return S


def test_register_rejects_points_off_the_curve(S):
    with pytest.raises(EmbeddingError):
        S.register(KPoint((1, 1)))
    with pytest.raises(EmbeddingError):
        S.register(KPoint((0, -1)))


def test_graph_embedding_relations(S):
    g, arrow = graph_embedding(S, "base", RationalFunction(x - 1))
    node = S.node(g)
    z = LaurentPoly.var(2, 3, TRIVIAL)
    X, Y = LaurentPoly.variables(3, TRIVIAL)[:2]
    assert node.ideal_gens == [X + Y + 1, z - X + 1]
    assert S.arrows[arrow].matrix == ((1, 0, 0), (0, 1, 0))
    g2, _ = graph_embedding(S, "base", RationalFunction(x, y))
    assert S.node(g2).ideal_gens[1] == z * Y - X
    g3, _ = graph_embedding(S, "base", RationalFunction(y))
    assert S.node(g3).ideal_gens[1] == z - Y


def test_graph_embedding_rejects_vanishing_denominator(S):
    with pytest.raises(EmbeddingError):
        graph_embedding(S, "base", RationalFunction(x, y + 2))
    with pytest.raises(EmbeddingError):
        graph_embedding(S, "base", RationalFunction(x - x))


def test_products(S):
    nid, a, b = product_embedding(S, "base", "base")
    assert nid == "base"
    assert S.arrows[a].matrix == ((1, 0), (0, 1))
    g1, _ = graph_embedding(S, "base", RationalFunction(x - 1))
    nid, a, b = product_embedding(S, "base", g1)
    assert nid == g1
    g2, _ = graph_embedding(S, "base", RationalFunction(y + 5))
    p, a, b = product_embedding(S, g1, g2)
    assert S.node(p).rank == 4
    assert S.arrows[a].matrix == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))
    assert S.arrows[b].matrix == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1))
    assert product_embedding(S, g2, g1)[0] != p


def test_images_of_the_worked_example(S):
    assert trop_image_of_valuation(S, "base", 0) == ExtendedPoint.torus(S.node("base").fan, [0, 0])
    g, _ = graph_embedding(S, "base", RationalFunction(x - 1))
    fan = S.node(g).fan
    z_ray = fan.index(make_cone([(0, 0, 1)], 3))
    assert trop_image_of_valuation(S, g, 0) == ExtendedPoint(fan, z_ray, [0, 0, 0])
    assert trop_image_of_valuation(S, g, 1) == ExtendedPoint.torus(fan, [0, 0, 0])


def test_weight_images(S):
    i = S.register(Weight((2, -1)))
    g, _ = graph_embedding(S, "base", RationalFunction(x - 1, y))
    assert trop_image_of_valuation(S, g, i).rep == (2, -1, 1)


def test_verify_morphism_detects_corruption(S):
    g1, a1 = graph_embedding(S, "base", RationalFunction(x - 1))
    g3, _ = graph_embedding(S, "base", RationalFunction(y - 3))
    assert verify_morphism(S, a1).ok
    bad = S.add_arrow(g1, g3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    rep = verify_morphism(S, bad)
    assert not rep.ok
    assert rep.failures[0]["valuation"] == 0
    assert rep.coordinate_failures


def test_separation_worked_example(S):
    w = separate_points(S, 0, 1, budget=5)
    assert isinstance(w, SeparationWitness) and w.source == "pool"
    assert w.function.same_as(RationalFunction(x - 1))
    a, b = w.images
    assert a != b and a.cone.dim == 1 and b.cone.dim == 0
    # now an existing node separates them
    w2 = separate_points(S, 0, 1)
    assert w2.source == "existing" and w2.node == w.node


def test_separation_preconditions(S):
    with pytest.raises(EmbeddingError):
        separate_points(S, 0, 0)
    with pytest.raises(EmbeddingError):
        separate_points(S, KPoint((Fraction(1), Fraction(-2))), 0)


def test_separation_by_base_node():
    S = corpus.conic(10)
    pts = S.kpoints()
    i, j = next((i, j) for i in range(10) for j in range(10)
                if trop_image_of_valuation(S, "base", pts[i]) != trop_image_of_valuation(S, "base", pts[j]))
    w = separate_points(S, pts[i], pts[j])
    assert w.node == "base" and w.source == "existing"


def test_separation_budget_exhaustion(S):
    w = separate_points(S, Weight((0, 0)), Weight((0, 1)), budget=0, search_existing=False)
    assert isinstance(w, SeparationFailure) and w.attempts == 0


def test_random_candidates_are_seeded(S):
    a = separate_points(S, Weight((0, 0)), Weight((-1, 0)), budget=5, seed=3, search_existing=False)
    S2 = EmbeddingSystem(BaseChart(2, [x + y + 1], TRIVIAL))
    b = separate_points(S2, Weight((0, 0)), Weight((-1, 0)), budget=5, seed=3, search_existing=False)
    assert a.source == b.source == "random"
    assert a.function == b.function


def test_star_witness(S):
    w = star_witness(S, RationalFunction(x))
    assert (w.node, w.exponent) == ("base", (1, 0))
    w = star_witness(S, RationalFunction(x - 1))
    assert w.created and w.exponent == (0, 0, 1)
    assert S.node(w.node).fan[w.chart] == make_cone([(0, 0, 1)], 3)
    again = star_witness(S, RationalFunction(x - 1))
    assert again.node == w.node and not again.created
    w = star_witness(S, RationalFunction(x - 1, y + 3))
    Y = LaurentPoly.var(1, 3, TRIVIAL)
    X = LaurentPoly.var(0, 3, TRIVIAL)
    z = LaurentPoly.var(2, 3, TRIVIAL)
    assert S.node(w.node).ideal_gens[-1] == z * (Y + 3) - (X - 1)


def test_limit_check_on_induced_and_shifted_tuples(S):
    g1, a1 = graph_embedding(S, "base", RationalFunction(x - 1))
    D = ["base", g1]
    for i in range(len(S.valuations)):
        res = finite_stage_limit_check(S, D, induced_tuple(S, D, i))
        assert res.status is LimitStatus.LIFTED
    t = induced_tuple(S, D, 1)
    p = t[g1]
    t[g1] = ExtendedPoint(p.fan, p.stratum, [p.rep[0] + 1, p.rep[1], p.rep[2]])
    res = finite_stage_limit_check(S, D, t)
    assert res.status is LimitStatus.INCOMPATIBLE and res.arrow == a1


def test_limit_check_single_node_hypersurface(S):
    fan = S.node("base").fan
    on = ExtendedPoint.torus(fan, [0, 3])
    off = ExtendedPoint.torus(fan, [1, 3])
    assert finite_stage_limit_check(S, ["base"], {"base": on}).status is LimitStatus.LIFTED
    assert finite_stage_limit_check(S, ["base"], {"base": off}).status is LimitStatus.OUT_OF_PREVARIETY


def test_limit_check_shared_coordinates_without_arrows():
    S = corpus.line(5)
    D = ["g1", "g2"]
    t = induced_tuple(S, D, 0)
    p = t["g2"]
    t["g2"] = ExtendedPoint(p.fan, p.stratum, [p.rep[0], p.rep[1] + 2, p.rep[2]])
    res = finite_stage_limit_check(S, D, t)
    assert res.status is LimitStatus.INCOMPATIBLE and res.arrow is None


def test_limit_check_rejects_wrong_fan(S):
    g1, _ = graph_embedding(S, "base", RationalFunction(x - 1))
    with pytest.raises(EmbeddingError):
        finite_stage_limit_check(S, [g1], {g1: ExtendedPoint.torus(S.node("base").fan, [0, 0])})


def test_probe():
    S = corpus.line(20)
    rep = surjectivity_probe(S, list(S.nodes)[:5], k=10)
    assert rep.total == 10 and rep.ok
    assert surjectivity_probe(S, [], k=10).total == 0
    bad = S.add_arrow("g1", "g3", [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    rep = surjectivity_probe(S, ["g1", "g3"], k=20)
    assert not rep.ok and rep.failures[0]["arrow"] == bad


def test_product_projection_property():
    S = corpus.tadic_line(30)
    for a, arr in enumerate(S.arrows):
        if S.node(arr.source).kind != "product":
            continue
        for eta in S.valuations:
            img = trop_image_of_valuation(S, arr.source, eta)
            assert trop_map_apply(arr.trop, img) == trop_image_of_valuation(S, arr.target, eta)
