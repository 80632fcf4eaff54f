"""JSON encoding and decoding of every object the command line reads or writes.

Rationals are strings ``"num/den"``; ``+inf`` is ``"inf"``; a t-adic scalar
is a list of ``[exponent, "num/den"]`` pairs.  Decoders raise
:class:`InputError` naming the offending location for structurally bad
documents and let domain errors (a point outside a fan, say) propagate.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .complexes import Cell, PolyhedralComplex
from .errors import InputError, TropError
from .polyhedral import Cone, Fan, make_cone
from .polynomials import LaurentPoly, RationalFunction
from .scalars import INF, ExtVal, FieldConfig, Scalar, TPoly
from .systems import BaseChart, EmbeddingSystem, Extra
from .tropspace import ExtendedPoint, TropMap
from .tropvar import ASSERTED, UNKNOWN, KPoint, Weight


class At:
    """A location inside an input document, for error messages."""

    def __init__(self, path: str = "<input>", where: str = ""):
        self.path = path
        self.where = where

    def __truediv__(self, key) -> "At":
        return At(self.path, f"{self.where}/{key}")

    def fail(self, message: str) -> InputError:
        return InputError(self.path, self.where or "/", message)


def _get(obj, key: str, at: At, default=...):
    if not isinstance(obj, dict):
        raise at.fail("expected an object")
    if key not in obj:
        if default is ...:
            raise (at / key).fail("missing field")
        return default
    return obj[key]


def _list(obj, at: At) -> list:
    if not isinstance(obj, list):
        raise at.fail("expected a list")
    return obj


def _int(obj, at: At) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise at.fail(f"expected an integer, got {obj!r}")
    return obj


def _int_vector(obj, at: At, n: int | None = None) -> tuple[int, ...]:
    v = tuple(_int(x, at / i) for i, x in enumerate(_list(obj, at)))
    if n is not None and len(v) != n:
        raise at.fail(f"expected {n} entries, got {len(v)}")
    return v


# ---------------------------------------------------------------------------
# Scalars


def rat_to_json(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rat_from_json(obj, at: At = At()) -> Fraction:
    if isinstance(obj, bool):
        raise at.fail(f"expected a rational, got {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except (ValueError, ZeroDivisionError):
            pass
    raise at.fail(f"expected a rational string 'num/den', got {obj!r}")


def extval_to_json(x: ExtVal) -> str:
    return "inf" if x is INF else rat_to_json(x)


def extval_from_json(obj, at: At = At()) -> ExtVal:
    return INF if obj == "inf" else rat_from_json(obj, at)


def field_to_json(F: FieldConfig) -> str:
    return str(F)


def field_from_json(obj, at: At = At()) -> FieldConfig:
    try:
        if isinstance(obj, str):
            return FieldConfig.parse(obj)
        if isinstance(obj, dict):
            return FieldConfig(_get(obj, "kind", at), obj.get("p"))
    except TropError as e:
        raise at.fail(str(e)) from None
    raise at.fail(f"expected a field description, got {obj!r}")


def scalar_to_json(c: Scalar, F: FieldConfig):
    if F.kind == "tadic":
        return [[e, rat_to_json(x)] for e, x in c.terms]
    return rat_to_json(c)


def scalar_from_json(obj, F: FieldConfig, at: At = At()) -> Scalar:
    if F.kind == "tadic":
        if not isinstance(obj, list):
            return TPoly.const(rat_from_json(obj, at))
        terms = []
        for i, pair in enumerate(obj):
            if not isinstance(pair, list) or len(pair) != 2:
                raise (at / i).fail("expected [exponent, 'num/den']")
            terms.append((_int(pair[0], at / i / 0), rat_from_json(pair[1], at / i / 1)))
        return TPoly(terms)
    return rat_from_json(obj, at)


# ---------------------------------------------------------------------------
# Cones, fans, points, maps


def cone_to_json(c: Cone) -> dict:
    return {"rank": c.rank, "generators": [list(g) for g in c.generators]}


def cone_from_json(obj, at: At = At()) -> Cone:
    n = _int(_get(obj, "rank", at), at / "rank")
    gens = [_int_vector(g, at / "generators" / i, n)
            for i, g in enumerate(_list(_get(obj, "generators", at), at / "generators"))]
    return make_cone(gens, n)


def fan_to_json(fan: Fan) -> dict:
    return {"rank": fan.rank,
            "cones": [{"generators": [list(g) for g in c.generators]} for c in fan.cones]}


def cone_list_from_json(obj, at: At = At()) -> tuple[int, list[Cone]]:
    """The rank and the cones exactly as listed (no face completion)."""
    n = _int(_get(obj, "rank", at), at / "rank")
    cones = []
    for i, c in enumerate(_list(_get(obj, "cones", at), at / "cones")):
        ca = at / "cones" / i
        gens = [_int_vector(g, ca / "generators" / j, n)
                for j, g in enumerate(_list(_get(c, "generators", ca), ca / "generators"))]
        cones.append(make_cone(gens, n))
    return n, cones


def fan_from_json(obj, at: At = At()) -> Fan:
    return Fan(*cone_list_from_json(obj, at))


def point_to_json(p: ExtendedPoint) -> dict:
    return {"stratum": p.stratum, "rep": [rat_to_json(x) for x in p.rep]}


def point_from_json(obj, fan: Fan, at: At = At()) -> ExtendedPoint:
    stratum = _int(_get(obj, "stratum", at, 0), at / "stratum")
    rep = [rat_from_json(x, at / "rep" / i) for i, x in enumerate(_list(_get(obj, "rep", at), at / "rep"))]
    if len(rep) != fan.rank:
        raise (at / "rep").fail(f"expected {fan.rank} entries")
    if not 0 <= stratum < len(fan):
        raise (at / "stratum").fail(f"no cone with index {stratum}")
    return ExtendedPoint(fan, stratum, rep)


def map_to_json(m: TropMap, with_fans: bool = False) -> dict:
    out = {"matrix": [list(r) for r in m.matrix], "shift": [rat_to_json(x) for x in m.shift]}
    if with_fans:
        out["source"] = fan_to_json(m.source)
        out["target"] = fan_to_json(m.target)
    return out


def map_from_json(obj, source: Fan | None = None, target: Fan | None = None, at: At = At()) -> TropMap:
    if source is None:
        source = fan_from_json(_get(obj, "source", at), at / "source")
    if target is None:
        target = fan_from_json(_get(obj, "target", at), at / "target")
    A = [_int_vector(r, at / "matrix" / i, source.rank)
         for i, r in enumerate(_list(_get(obj, "matrix", at), at / "matrix"))]
    if len(A) != target.rank:
        raise (at / "matrix").fail(f"expected {target.rank} rows")
    shift = [rat_from_json(x, at / "shift" / i) for i, x in enumerate(_list(_get(obj, "shift", at, []), at / "shift"))]
    if shift and len(shift) != target.rank:
        raise (at / "shift").fail(f"expected {target.rank} entries")
    return TropMap(tuple(A), source, target, tuple(shift))


# ---------------------------------------------------------------------------
# Polynomials and complexes


def poly_to_json(f: LaurentPoly) -> dict:
    return {"field": field_to_json(f.field), "nvars": f.nvars,
            "terms": [{"coeff": scalar_to_json(c, f.field), "exp": list(e)} for e, c in f.terms]}


def poly_from_json(obj, field: FieldConfig | None = None, at: At = At()) -> LaurentPoly:
    if "field" in (obj if isinstance(obj, dict) else {}):
        field = field_from_json(obj["field"], at / "field")
    elif field is None:
        raise (at / "field").fail("missing field (pass --field or add it to the document)")
    terms = _list(_get(obj, "terms", at), at / "terms")
    nvars = _get(obj, "nvars", at, None)
    if nvars is None:
        if not terms:
            raise (at / "nvars").fail("needed when there are no terms")
        nvars = len(_list(_get(terms[0], "exp", at / "terms" / 0), at / "terms" / 0 / "exp"))
    nvars = _int(nvars, at / "nvars")
    out = []
    for i, t in enumerate(terms):
        ta = at / "terms" / i
        out.append((_int_vector(_get(t, "exp", ta), ta / "exp", nvars),
                    scalar_from_json(_get(t, "coeff", ta), field, ta / "coeff")))
    return LaurentPoly(out, nvars, field)


def function_to_json(f: RationalFunction) -> dict:
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def function_from_json(obj, field: FieldConfig | None = None, at: At = At()) -> RationalFunction:
    if isinstance(obj, dict) and "num" in obj:
        num = poly_from_json(obj["num"], field, at / "num")
        den = poly_from_json(obj["den"], num.field, at / "den") if "den" in obj else None
        return RationalFunction(num, den)
    return RationalFunction(poly_from_json(obj, field, at))


def _rows_to_json(rows) -> list:
    return [[rat_to_json(x) for x in a] + [rat_to_json(b)] for a, b in rows]


def _rows_from_json(obj, n: int, at: At) -> list:
    out = []
    for i, r in enumerate(_list(obj, at)):
        vals = [rat_from_json(x, at / i / j) for j, x in enumerate(_list(r, at / i))]
        if len(vals) != n + 1:
            raise (at / i).fail(f"expected {n + 1} entries (coefficients then constant)")
        out.append((tuple(vals[:n]), vals[n]))
    return out


def _label_to_json(label):
    if isinstance(label, (tuple, list)):
        return [_label_to_json(x) for x in label]
    return label


def _label_from_json(obj):
    if isinstance(obj, list):
        return tuple(_label_from_json(x) for x in obj)
    return obj


def complex_to_json(C: PolyhedralComplex) -> dict:
    out = {"n": C.n, "stratum": C.stratum,
           "cells": [{"eq": _rows_to_json(c.eqs), "ineq": _rows_to_json(c.ineqs)} for c in C.cells]}
    if C.labels:
        out["labels"] = [_label_to_json(x) for x in C.labels]
    if C.flags:
        out["flags"] = list(C.flags)
    return out


def complex_from_json(obj, at: At = At()) -> PolyhedralComplex:
    n = _int(_get(obj, "n", at), at / "n")
    cells = []
    for i, c in enumerate(_list(_get(obj, "cells", at), at / "cells")):
        ca = at / "cells" / i
        cells.append(Cell(n, _rows_from_json(_get(c, "eq", ca, []), n, ca / "eq"),
                          _rows_from_json(_get(c, "ineq", ca, []), n, ca / "ineq")))
    labels = [_label_from_json(x) for x in _list(_get(obj, "labels", at, []), at / "labels")]
    flags = [str(x) for x in _list(_get(obj, "flags", at, []), at / "flags")]
    return PolyhedralComplex(n, cells, _int(_get(obj, "stratum", at, 0), at / "stratum"), labels, flags)


# ---------------------------------------------------------------------------
# Ideals and systems


def ideal_from_json(obj, field: FieldConfig | None = None, at: At = At()):
    """``(gens, basis_flag)`` from ``{"field", "gens": [...], "basis"}`` or a single polynomial.

    A single polynomial is a hypersurface, whose generator is a tropical basis.
    """
    if isinstance(obj, dict) and "gens" in obj:
        if "field" in obj:
            field = field_from_json(obj["field"], at / "field")
        gens = [poly_from_json(g, field, at / "gens" / i)
                for i, g in enumerate(_list(obj["gens"], at / "gens"))]
        if not gens:
            raise (at / "gens").fail("at least one generator is required")
        basis = _get(obj, "basis", at, UNKNOWN)
        if basis not in (ASSERTED, UNKNOWN):
            raise (at / "basis").fail("expected 'asserted' or 'unknown'")
        return gens, basis
    return [poly_from_json(obj, field, at)], ASSERTED


def valuation_to_json(eta, F: FieldConfig) -> dict:
    if isinstance(eta, KPoint):
        return {"kpoint": [scalar_to_json(c, F) for c in eta.coords]}
    return {"weight": [rat_to_json(x) for x in eta.w]}


def valuation_from_json(obj, F: FieldConfig, at: At = At()):
    if isinstance(obj, dict) and "kpoint" in obj:
        return KPoint(tuple(scalar_from_json(c, F, at / "kpoint" / i)
                            for i, c in enumerate(_list(obj["kpoint"], at / "kpoint"))))
    if isinstance(obj, dict) and "weight" in obj:
        return Weight(tuple(rat_from_json(x, at / "weight" / i)
                            for i, x in enumerate(_list(obj["weight"], at / "weight"))))
    raise at.fail("expected {'kpoint': [...]} or {'weight': [...]}")


def system_to_json(S: EmbeddingSystem) -> dict:
    b = S.base
    F = b.field
    return {
        "base": {"rank": b.rank, "field": field_to_json(F), "names": list(b.names),
                 "gens": [poly_to_json(g) for g in b.gens], "fan": fan_to_json(b.fan),
                 "basis": b.basis_flag},
        "nodes": [{"id": nd.id, "kind": nd.kind, "basis": nd.basis_flag,
                   "extras": [{"function": function_to_json(e.function), "factor": e.factor,
                               "text": e.function.to_string(b.names)} for e in nd.extras]}
                  for nd in S.nodes.values()],
        "arrows": [{"source": a.source, "target": a.target, "matrix": [list(r) for r in a.matrix],
                    "coefficients": [scalar_to_json(c, F) for c in a.coefficients]} for a in S.arrows],
        "valuations": [valuation_to_json(v, F) for v in S.valuations],
    }


def system_from_json(obj, at: At = At()) -> EmbeddingSystem:
    ba = at / "base"
    b = _get(obj, "base", at)
    F = field_from_json(_get(b, "field", ba), ba / "field")
    n = _int(_get(b, "rank", ba), ba / "rank")
    gens = [poly_from_json(g, F, ba / "gens" / i) for i, g in enumerate(_list(_get(b, "gens", ba, []), ba / "gens"))]
    fan = fan_from_json(b["fan"], ba / "fan") if "fan" in b else None
    names = _get(b, "names", ba, None)
    basis = _get(b, "basis", ba, UNKNOWN)
    S = EmbeddingSystem(BaseChart(n, gens, F, fan, basis, names))
    for i, nd in enumerate(_list(_get(obj, "nodes", at, []), at / "nodes")):
        na = at / "nodes" / i
        nid = _get(nd, "id", na)
        extras = []
        for k, e in enumerate(_list(_get(nd, "extras", na, []), na / "extras")):
            ea = na / "extras" / k
            extras.append(Extra(function_from_json(_get(e, "function", ea), F, ea / "function"),
                                _get(e, "factor", ea, "A1")))
        if nid == "base":
            if extras:
                raise (na / "extras").fail("the base node has no extra coordinates")
            continue
        if nid in S.nodes:
            raise (na / "id").fail(f"duplicate node id {nid!r}")
        node = S.add_node(extras, _get(nd, "kind", na, "graph"), nid, _get(nd, "basis", na, None))
        if node.id != nid:
            raise (na / "extras").fail(f"same coordinates as node {node.id!r}")
    for i, v in enumerate(_list(_get(obj, "valuations", at, []), at / "valuations")):
        S.register(valuation_from_json(v, F, at / "valuations" / i))
    for i, a in enumerate(_list(_get(obj, "arrows", at, []), at / "arrows")):
        aa = at / "arrows" / i
        src, tgt = _get(a, "source", aa), _get(a, "target", aa)
        for key, nid in (("source", src), ("target", tgt)):
            if nid not in S.nodes:
                raise (aa / key).fail(f"no node {nid!r}")
        A = [_int_vector(r, aa / "matrix" / j, S.nodes[src].rank)
             for j, r in enumerate(_list(_get(a, "matrix", aa), aa / "matrix"))]
        if len(A) != S.nodes[tgt].rank:
            raise (aa / "matrix").fail(f"expected {S.nodes[tgt].rank} rows")
        coeffs = _get(a, "coefficients", aa, None)
        if coeffs is not None:
            coeffs = [scalar_from_json(c, F, aa / "coefficients" / j) for j, c in enumerate(_list(coeffs, aa / "coefficients"))]
        S.add_arrow(src, tgt, A, coeffs)
    return S


def tuple_to_json(t: dict) -> dict:
    return {"nodes": list(t), "points": {k: point_to_json(p) for k, p in t.items()}}


def tuple_from_json(obj, S: EmbeddingSystem, at: At = At()) -> tuple[list[str], dict]:
    ids = [str(x) for x in _list(_get(obj, "nodes", at), at / "nodes")]
    pts = _get(obj, "points", at, {})
    out = {}
    for nid in ids:
        if nid not in S.nodes:
            raise (at / "nodes").fail(f"no node {nid!r}")
        pa = at / "points" / nid
        out[nid] = point_from_json(_get(pts, nid, at / "points"), S.nodes[nid].fan, pa)
    return ids, out


def load_json_text(text: str, path: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(path, f"line {e.lineno} column {e.colno}", e.msg) from None
