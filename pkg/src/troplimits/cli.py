"""Command-line front end.

Every command reads JSON documents, prints one JSON document (or SVG) and
exits with status 0 on success, 1 on a domain error and 2 on malformed
input.  Commands that extend an embedding system print the updated system
next to their result.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import codec
from .codec import At
from .errors import InputError, TropError
from .polyhedral import dual_cone, fan_validate, hilbert_basis, torus_fan
from .render import DEFAULT_WINDOW, parse_window, render_svg
from .scalars import FieldConfig
from .systems import (finite_stage_limit_check, graph_embedding, product_embedding,
                      separate_points, surjectivity_probe, trop_image_of_valuation, verify_morphism,
                      SeparationWitness)
from .tropspace import trop_map_apply, trop_map_apply_dual
from .tropvar import extended_membership, trop_eval, trop_hypersurface, tropicalize_poly

DEFAULT_SEED = 0
DEFAULT_BUDGET = 5


def _read(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as e:
        raise InputError(path, "/", f"cannot read: {e.strerror}") from None
    return codec.load_json_text(text, path), At(path)


def _field(args) -> FieldConfig | None:
    if args.field is None:
        return None
    try:
        return FieldConfig.parse(args.field)
    except TropError as e:
        raise InputError("<argv>", "--field", str(e)) from None


def _point_and_fan(args, n: int):
    obj, at = _read(args.point)
    fan = codec.fan_from_json(obj["fan"], at / "fan") if isinstance(obj, dict) and "fan" in obj else torus_fan(n)
    if fan.rank != n:
        raise (at / "fan").fail(f"fan rank {fan.rank} does not match {n} variables")
    return codec.point_from_json(obj, fan, at), fan


# ---------------------------------------------------------------------------
# fan


def cmd_fan_validate(args):
    obj, at = _read(args.fan)
    n, cones = codec.cone_list_from_json(obj, at)
    rep = fan_validate(n, cones)
    return {"valid": rep.valid,
            "missing_faces": [{"cone": i, "face": [list(g) for g in f.generators]} for i, f in rep.missing_faces],
            "bad_pairs": [list(p) for p in rep.bad_pairs]}


def cmd_fan_dual(args):
    obj, at = _read(args.cone)
    return codec.cone_to_json(dual_cone(codec.cone_from_json(obj, at)))


def cmd_fan_hilbert(args):
    obj, at = _read(args.cone)
    C = codec.cone_from_json(obj, at)
    if args.dual:
        C = dual_cone(C)
    return {"cone": codec.cone_to_json(C), "basis": [list(h) for h in hilbert_basis(C).generators]}


# ---------------------------------------------------------------------------
# trop


def cmd_trop_hyp(args):
    obj, at = _read(args.poly)
    f = codec.poly_from_json(obj, _field(args), at)
    return codec.complex_to_json(trop_hypersurface(f))


def cmd_trop_eval(args):
    obj, at = _read(args.poly)
    f = codec.poly_from_json(obj, _field(args), at)
    p, _ = _point_and_fan(args, f.nvars)
    value, count = trop_eval(tropicalize_poly(f), p, args.chart)
    return {"value": codec.extval_to_json(value), "attained": count}


def cmd_trop_member(args):
    obj, at = _read(args.ideal)
    gens, flag = codec.ideal_from_json(obj, _field(args), at)
    p, fan = _point_and_fan(args, gens[0].nvars)
    return {"membership": extended_membership(gens, fan, p, flag, args.chart).value}


def cmd_trop_map(args):
    obj, at = _read(args.map)
    m = codec.map_from_json(obj, at=at)
    pobj, pat = _read(args.point)
    p = codec.point_from_json(pobj, m.source, pat)
    image = trop_map_apply(m, p)
    return {"image": codec.point_to_json(image),
            "dual_agrees": trop_map_apply_dual(m, p) == image}


# ---------------------------------------------------------------------------
# system


def _system(args):
    obj, at = _read(args.system)
    if isinstance(obj, dict) and "base" not in obj and "system" in obj:
        # output of an earlier system command
        obj, at = obj["system"], at / "system"
    return codec.system_from_json(obj, at)


def _index(S, text: str, what: str) -> int:
    try:
        i = int(text)
    except ValueError:
        raise InputError("<argv>", what, f"expected a valuation index, got {text!r}") from None
    if not 0 <= i < len(S.valuations):
        raise InputError("<argv>", what, f"no registered valuation {i}")
    return i


def _node_text(S, nid):
    return S.node(nid).describe()


def cmd_system_product(args):
    S = _system(args)
    nid, ia, ib = product_embedding(S, args.a, args.b)
    return {"node": _node_text(S, nid), "arrows": [ia, ib], "system": codec.system_to_json(S)}


def cmd_system_graph(args):
    S = _system(args)
    obj, at = _read(args.function)
    f = codec.function_from_json(obj, S.field, at)
    nid, arrow = graph_embedding(S, args.node, f, args.factor)
    return {"node": _node_text(S, nid), "arrow": arrow, "system": codec.system_to_json(S)}


def cmd_system_separate(args):
    S = _system(args)
    i = _index(S, args.i, "i")
    j = _index(S, args.j, "j")
    res = separate_points(S, i, j, args.budget, args.seed, not args.no_existing)
    if isinstance(res, SeparationWitness):
        out = {"separated": True, "node": _node_text(S, res.node), "source": res.source,
               "attempts": res.attempts,
               "function": res.function.to_string(S.base.names) if res.function else None,
               "images": [codec.point_to_json(p) for p in res.images]}
    else:
        out = {"separated": False, "attempts": res.attempts, "reason": res.reason}
    out["system"] = codec.system_to_json(S)
    return out


def cmd_system_limit_check(args):
    S = _system(args)
    obj, at = _read(args.tuple)
    ids, points = codec.tuple_from_json(obj, S, at)
    res = finite_stage_limit_check(S, ids, points, not args.no_linear_basis)
    out = {"status": res.status.value, "arrow": res.arrow, "detail": res.detail}
    if res.product_point is not None:
        out["product_point"] = codec.point_to_json(res.product_point)
    return out


def _nodes_arg(S, text):
    if text is None:
        return list(S.nodes)
    ids = [x for x in text.split(",") if x]
    for nid in ids:
        if nid not in S.nodes:
            raise InputError("<argv>", "--nodes", f"no node {nid!r}")
    return ids


def cmd_system_probe(args):
    S = _system(args)
    D = _nodes_arg(S, args.nodes)
    rep = surjectivity_probe(S, D, args.k, not args.no_linear_basis)
    return {"nodes": D, "total": rep.total, "tally": rep.tally, "failures": rep.failures}


def cmd_system_verify(args):
    S = _system(args)
    reports = []
    for a in range(len(S.arrows)):
        r = verify_morphism(S, a)
        reports.append({
            "arrow": a, "source": S.arrows[a].source, "target": S.arrows[a].target,
            "checked": r.checked, "ok": r.ok,
            "failures": [{"valuation": f["valuation"], "expected": codec.point_to_json(f["expected"]),
                          "got": codec.point_to_json(f["got"])} for f in r.failures],
            "coordinate_failures": r.coordinate_failures,
        })
    return {"ok": all(r["ok"] for r in reports), "arrows": reports}


def cmd_system_image(args):
    S = _system(args)
    i = _index(S, args.i, "i")
    return {"node": args.node, "point": codec.point_to_json(trop_image_of_valuation(S, args.node, i))}


# ---------------------------------------------------------------------------
# render


def cmd_render_svg(args):
    obj, at = _read(args.complex)
    C = codec.complex_from_json(obj, at)
    if args.svg_window is None:
        window = DEFAULT_WINDOW
    else:
        try:
            window = parse_window(args.svg_window)
        except (ValueError, ZeroDivisionError) as e:
            raise InputError("<argv>", "--svg-window", str(e)) from None
    return render_svg(C, window)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="trivial | padic:<p> | tadic (for documents without a field)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"seed for randomized searches (default {DEFAULT_SEED})")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help=f"candidate budget (default {DEFAULT_BUDGET})")
    common.add_argument("--out", help="write the result here instead of standard output")
    common.add_argument("--svg-window", help="xmin,ymin,xmax,ymax for SVG output (default -5,-5,5,5)")

    parser = argparse.ArgumentParser(prog="troplimits", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    def leaf(sub, name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    fan = groups.add_parser("fan", help="cones and fans").add_subparsers(dest="cmd", required=True)
    leaf(fan, "validate", cmd_fan_validate, "check face closure and intersections").add_argument("fan")
    leaf(fan, "dual", cmd_fan_dual, "dual cone").add_argument("cone")
    p = leaf(fan, "hilbert", cmd_fan_hilbert, "Hilbert basis of a cone's lattice points")
    p.add_argument("cone")
    p.add_argument("--dual", action="store_true", help="use the dual cone (the chart's monoid)")

    trop = groups.add_parser("trop", help="tropical hypersurfaces and maps").add_subparsers(dest="cmd", required=True)
    leaf(trop, "hyp", cmd_trop_hyp, "tropical hypersurface of a polynomial").add_argument("poly")
    p = leaf(trop, "eval", cmd_trop_eval, "evaluate a tropicalized polynomial at a point")
    p.add_argument("poly")
    p.add_argument("point")
    p.add_argument("--chart", type=int, help="cone index of the chart (boundary points)")
    p = leaf(trop, "member", cmd_trop_member, "membership of an extended point")
    p.add_argument("ideal")
    p.add_argument("point")
    p.add_argument("--chart", type=int)
    p = leaf(trop, "map", cmd_trop_map, "apply a tropical map to an extended point")
    p.add_argument("map")
    p.add_argument("point")

    system = groups.add_parser("system", help="systems of embeddings").add_subparsers(dest="cmd", required=True)
    p = leaf(system, "product", cmd_system_product, "product of two nodes")
    p.add_argument("system")
    p.add_argument("a")
    p.add_argument("b")
    p = leaf(system, "graph", cmd_system_graph, "graph re-embedding along a rational function")
    p.add_argument("system")
    p.add_argument("node")
    p.add_argument("function")
    p.add_argument("--factor", choices=["A1", "P1"], default="A1")
    p = leaf(system, "separate", cmd_system_separate, "separate two registered valuations")
    p.add_argument("system")
    p.add_argument("i")
    p.add_argument("j")
    p.add_argument("--no-existing", action="store_true", help="skip the search over existing nodes")
    p = leaf(system, "limit-check", cmd_system_limit_check, "finite-stage limit check of a tuple")
    p.add_argument("system")
    p.add_argument("tuple")
    p.add_argument("--no-linear-basis", action="store_true")
    p = leaf(system, "probe", cmd_system_probe, "limit checks on K-point-induced tuples")
    p.add_argument("system")
    p.add_argument("--nodes", help="comma-separated node ids (default: all)")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--no-linear-basis", action="store_true")
    leaf(system, "verify", cmd_system_verify, "check every arrow on every registered valuation").add_argument("system")
    p = leaf(system, "image", cmd_system_image, "tropical image of a registered valuation")
    p.add_argument("system")
    p.add_argument("node")
    p.add_argument("i")

    render = groups.add_parser("render", help="pictures").add_subparsers(dest="cmd", required=True)
    leaf(render, "svg", cmd_render_svg, "SVG of a complex in the plane").add_argument("complex")
    return parser


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        result = args.func(args)
    except InputError as e:
        print(json.dumps({"error": {"type": "InputError", "path": str(e.path), "field": e.field,
                                    "message": e.message}}), file=sys.stderr)
        return 2
    except TropError as e:
        print(json.dumps({"error": {"type": type(e).__name__, "message": str(e)}}), file=sys.stderr)
        return 1
    text = result if isinstance(result, str) else json.dumps(result, indent=2) + "\n"
    _emit(text, args.out)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
