"""Acceptance checks, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line (also repeated in the
terminal summary).  Arithmetic is exact throughout; there are no
tolerances.  Run directly with ``python tests/test_acceptance.py`` to get
just the lines.
"""
import json
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import grid, hilbert_basis_2d, min_twice  # noqa: E402
from sampling import random_point  # noqa: E402
from troplimits import codec, corpus  # noqa: E402
from troplimits.cli import run  # noqa: E402
from troplimits.complexes import PolyhedralComplex, point_cell, ray_cell  # noqa: E402
from troplimits.polyhedral import cone, hilbert_basis  # noqa: E402
from troplimits.polynomials import LaurentPoly  # noqa: E402
from troplimits.scalars import TRIVIAL  # noqa: E402
from troplimits.systems import (LimitStatus, SeparationWitness, finite_stage_limit_check,  # noqa: E402
                                induced_tuple, separate_points, surjectivity_probe, verify_morphism)
from troplimits.tropspace import ExtendedPoint, TropMap, trop_map_apply, trop_map_apply_dual  # noqa: E402
from troplimits.tropvar import (linear_tropical_basis, project_complex, trop_hypersurface,  # noqa: E402
                                trop_prevariety)

RESULTS: list[str] = []


def report(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def line_complex(vertex) -> PolyhedralComplex:
    v = tuple(Fraction(x) for x in vertex)
    return PolyhedralComplex(2, [point_cell(v), ray_cell(v, (1, 0)), ray_cell(v, (0, 1)), ray_cell(v, (-1, -1))])


def hyp_via_cli(tmp_path, poly_json) -> tuple[PolyhedralComplex, float]:
    src = tmp_path / "f.json"
    out = tmp_path / "c.json"
    src.write_text(json.dumps(poly_json))
    t0 = time.perf_counter()
    code = run(["trop", "hyp", str(src), "--out", str(out)])
    elapsed = time.perf_counter() - t0
    assert code == 0
    return codec.complex_from_json(json.loads(out.read_text())), elapsed


def grid_disagreements(C, terms, p=None) -> int:
    pts = grid(-5, 5, 4)
    return sum(C.contains((a, b)) != min_twice(terms, (a, b), p) for a in pts for b in pts)


def line_poly(c: str, field: str) -> dict:
    return {"field": field, "terms": [{"coeff": "1/1", "exp": [1, 0]}, {"coeff": "1/1", "exp": [0, 1]},
                                      {"coeff": c, "exp": [0, 0]}]}


def test_criterion_1_tropical_line(tmp_path):
    C, elapsed = hyp_via_cli(tmp_path, line_poly("1/1", "trivial"))
    shape = C.same_as(line_complex((0, 0))) and sum(c.dim == 1 for c in C.cells) == 3
    bad = grid_disagreements(C, [(1, (1, 0)), (1, (0, 1)), (1, (0, 0))])
    report(1, "tropical line x+y+1", shape and bad == 0 and elapsed < 1,
           f"three rays e1, e2, -e1-e2 from 0: {shape}; grid disagreements {bad}/3721; {elapsed:.3f}s")


def test_criterion_2_padic_vertex_shift(tmp_path):
    C, elapsed = hyp_via_cli(tmp_path, line_poly("2/1", "padic:2"))
    shape = C.same_as(line_complex((1, 1)))
    bad = grid_disagreements(C, [(1, (1, 0)), (1, (0, 1)), (2, (0, 0))], p=2)
    report(2, "2-adic line x+y+2", shape and bad == 0 and elapsed < 1,
           f"same rays from vertex (1,1): {shape}; grid disagreements {bad}/3721; {elapsed:.3f}s")


def test_criterion_3_hilbert_basis():
    t0 = time.perf_counter()
    ref = hilbert_basis(cone(((1, 0), (1, 2)), 2)).generators
    ok_ref = sorted(ref) == [(1, 0), (1, 1), (1, 2)] == hilbert_basis_2d([(1, 0), (1, 2)])
    rng = random.Random(2024)
    matched = 0
    for _ in range(50):
        while True:
            a = (rng.randint(-5, 5), rng.randint(-5, 5))
            b = (rng.randint(-5, 5), rng.randint(-5, 5))
            if a[0] * b[1] - a[1] * b[0] != 0:
                break
        matched += sorted(hilbert_basis(cone((a, b), 2)).generators) == hilbert_basis_2d([a, b])
    elapsed = time.perf_counter() - t0
    report(3, "Hilbert bases", ok_ref and matched == 50 and elapsed < 10,
           f"reference cone {ok_ref}; random cones matching enumeration {matched}/50; {elapsed:.2f}s")


@pytest.fixture(scope="module")
def systems():
    return {name: corpus.build(name, 100) for name in corpus.NAMES}


def test_criterion_4_diagram_commutativity(systems):
    checks = failures = 0
    shape = []
    for name, S in systems.items():
        shape.append(f"{name}: {len(S.nodes)} nodes, {len(S.arrows)} arrows, {len(S.kpoints())} K-points")
        for a in range(len(S.arrows)):
            rep = verify_morphism(S, a)
            checks += rep.checked
            failures += len(rep.failures) + len(rep.coordinate_failures)
    big_enough = all(len(S.nodes) >= 5 and len(S.kpoints()) >= 100 for S in systems.values())
    report(4, "diagram commutativity", failures == 0 and big_enough,
           f"{checks} exact checks, {failures} failures; " + "; ".join(shape))


def test_criterion_5_separation():
    stats = {}
    ok = True
    for name in corpus.NAMES:
        S = corpus.build(name, 40)
        pts = S.kpoints()
        pool_hits = differ = 0
        for k in range(20):
            a, b = pts[k], pts[(k * 7 + 3) % 40]
            if a == b:
                b = pts[(k + 20) % 40]
            w = separate_points(S, a, b, budget=5, search_existing=False)
            if isinstance(w, SeparationWitness) and w.source == "pool":
                pool_hits += 1
                differ += w.images[0] != w.images[1]
            full = separate_points(S, a, b, budget=5)
            ok &= isinstance(full, SeparationWitness) and full.images[0] != full.images[1]
        stats[name] = (pool_hits, differ)
        ok &= pool_hits == 20 and differ == 20
    detail = "; ".join(f"{n}: pool {h}/20, differing images {d}/20" for n, (h, d) in stats.items())
    report(5, "separation of K-points", ok, detail)


def _diagrams(S):
    ids = list(S.nodes)
    return [ids[:1], ["base", "g1"], ["g1", "g2", "p1"], ["base", "g2", "g3", "p2"], ids[:5]]


def test_criterion_6_finite_stage_surjectivity(systems):
    tallies = {}
    bad_clean = flagged = corrupted = 0
    for name, S in systems.items():
        pts = S.kpoints()
        for D in _diagrams(S):
            rep = surjectivity_probe(S, D, k=50)
            bad_clean += rep.tally["Incompatible"] + rep.tally["CompatibleOutOfPrevariety"]
            for key, v in rep.tally.items():
                tallies[key] = tallies.get(key, 0) + v
        rng = random.Random(name)
        for j in range(50):
            D = _diagrams(S)[1 + j % 4]
            t = induced_tuple(S, D, pts[j])
            victim = rng.choice(D)
            p = t[victim]
            rep_ = list(p.rep)
            rep_[rng.randrange(2)] += 1  # base coordinates are never on a boundary ray
            t[victim] = ExtendedPoint(p.fan, p.stratum, rep_)
            corrupted += 1
            flagged += finite_stage_limit_check(S, D, t).status is LimitStatus.INCOMPATIBLE
    report(6, "finite-stage surjectivity", bad_clean == 0 and flagged == corrupted,
           f"clean tuples {sum(tallies.values())} with tally {tallies}; corrupted flagged {flagged}/{corrupted}")


def test_criterion_7_functoriality(systems):
    rng = random.Random(77)
    compose_ok = dual_ok = total = 0
    maps = []
    for S in systems.values():
        by_source = {}
        for arr in S.arrows:
            by_source.setdefault(arr.source, []).append(arr)
        for arr in S.arrows:
            for nxt in by_source.get(arr.target, []):
                maps.append((arr.trop, nxt.trop))
    per_map = -(-200 // len(maps))
    for first, second in maps:
        fan = first.source
        for k in range(per_map):
            p = random_point(fan, rng, stratum=k % len(fan))
            total += 1
            direct = trop_map_apply(second.compose(first), p)
            compose_ok += direct == trop_map_apply(second, trop_map_apply(first, p))
            dual_ok += (trop_map_apply_dual(first, p) == trop_map_apply(first, p)
                        and trop_map_apply_dual(second.compose(first), p) == direct)
    report(7, "functoriality and primal/dual agreement",
           total >= 200 and compose_ok == total and dual_ok == total,
           f"{len(maps)} composable pairs; composition {compose_ok}/{total}; dual agreement {dual_ok}/{total}")


def test_criterion_8_projection_onto():
    S = corpus.line(0)
    node = S.node("g1")
    basis = linear_tropical_basis(node.ideal_gens)
    P = trop_prevariety(basis)
    m = TropMap.coordinate_projection(node.fan, S.node("base").fan, [0, 1])
    image = project_complex(P, m)
    x, y = LaurentPoly.variables(2, TRIVIAL)
    ok = image.same_as(trop_hypersurface(x + y + 1))
    report(8, "projection of the re-embedded line", ok,
           f"z = {node.extras[0].function.to_string()}; {len(P.cells)} cells upstairs; images match by mutual containment: {ok}")


def _cli(*args):
    r = subprocess.run([sys.executable, "-m", "troplimits", *args], capture_output=True, text=True)
    return r.returncode, r.stdout


def test_criterion_9_round_trip_and_determinism(tmp_path):
    S = corpus.line(6)
    sysfile = tmp_path / "s.json"
    sysfile.write_text(json.dumps(codec.system_to_json(S)))
    poly = tmp_path / "f.json"
    poly.write_text(json.dumps(line_poly("2/1", "padic:2")))
    conefile = tmp_path / "c.json"
    conefile.write_text(json.dumps({"rank": 2, "generators": [[2, -1], [0, 1]]}))
    fanfile = tmp_path / "fan.json"
    fanfile.write_text(json.dumps({"rank": 2, "cones": [{"generators": [[1, 0], [0, 1]]}, {"generators": [[-1, -1]]}]}))
    pt = tmp_path / "p.json"
    pt.write_text(json.dumps({"rep": ["1/1", "5/2"]}))
    commands = {
        "fan validate": ["fan", "validate", str(fanfile)],
        "fan dual": ["fan", "dual", str(conefile)],
        "fan hilbert": ["fan", "hilbert", str(conefile), "--dual"],
        "trop hyp": ["trop", "hyp", str(poly)],
        "trop eval": ["trop", "eval", str(poly), str(pt)],
        "trop member": ["trop", "member", str(poly), str(pt)],
        "system product": ["system", "product", str(sysfile), "g1", "g3"],
        "system graph": ["system", "graph", str(sysfile), "g1", str(poly)],
        "system separate": ["system", "separate", str(sysfile), "0", "1", "--no-existing", "--seed", "5"],
        "system probe": ["system", "probe", str(sysfile), "--k", "4"],
        "system verify": ["system", "verify", str(sysfile)],
    }
    graph_poly = tmp_path / "g.json"
    graph_poly.write_text(json.dumps(line_poly("3/1", "trivial")))
    commands["system graph"][-1] = str(graph_poly)
    identical = reparsed = 0
    for name, argv in commands.items():
        a, b = _cli(*argv), _cli(*argv)
        identical += a == b and a[0] == 0
        doc = json.loads(a[1])
        reparsed += _round_trips(name, doc)
    svg = _cli("render", "svg", str(tmp_path / "c.json"))
    hyp = tmp_path / "h.json"
    hyp.write_text(_cli(*commands["trop hyp"])[1])
    svg_a, svg_b = _cli("render", "svg", str(hyp)), _cli("render", "svg", str(hyp))
    identical += svg_a == svg_b and svg_a[0] == 0
    n = len(commands)
    report(9, "round trip and determinism", identical == n + 1 and reparsed == n and svg[0] == 2,
           f"byte-identical reruns {identical}/{n + 1}; artifacts re-parsing to equal values {reparsed}/{n}")


def _round_trips(name, doc) -> bool:
    same = json.loads(json.dumps(doc)) == doc
    if name == "trop hyp":
        C = codec.complex_from_json(doc)
        return same and codec.complex_to_json(C) == doc and codec.complex_from_json(codec.complex_to_json(C)) == C
    if name in ("fan dual",):
        c = codec.cone_from_json(doc)
        return same and codec.cone_to_json(c) == doc
    if "system" in doc:
        S = codec.system_from_json(doc["system"])
        ok = codec.system_to_json(S) == doc["system"] and codec.system_from_json(codec.system_to_json(S)) == S
        if "images" in doc:
            fan = S.node(doc["node"]["id"]).fan
            pts = [codec.point_from_json(p, fan) for p in doc["images"]]
            ok &= [codec.point_to_json(p) for p in pts] == doc["images"]
        return same and ok
    return same


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
