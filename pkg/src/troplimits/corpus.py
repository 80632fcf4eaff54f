"""Reference systems: three plane curves with sample points and five-plus nodes each.

* ``line``: ``x + y + 1`` over the trivially valued rationals;
* ``conic``: ``x^2 + y^2 - 1`` over the 5-adic rationals, points from the
  rational parametrization;
* ``tadic_line``: ``x + y + t`` over ``Q((t))``.

Each system has the base node, three graph nodes (one with a projective
line factor) and two products, with all arrows produced by the
constructions.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import count

from .polynomials import LaurentPoly, RationalFunction
from .scalars import TADIC, TRIVIAL, TPoly, padic
from .systems import BaseChart, EmbeddingSystem, graph_embedding, product_embedding
from .tropvar import ASSERTED, KPoint

NAMES = ("line", "conic", "tadic_line")


def _rationals():
    """Nonzero rationals by height: 1, -1, 2, -2, 1/2, -1/2, 3, ..."""
    seen = set()
    for h in count(1):
        for num in range(1, h + 1):
            for den in range(1, h + 1):
                if max(num, den) != h:
                    continue
                for sign in (1, -1):
                    q = Fraction(sign * num, den)
                    if q not in seen:
                        seen.add(q)
                        yield q


def _add_nodes(S: EmbeddingSystem, f1, f2, f3):
    g1, _ = graph_embedding(S, "base", f1)
    g2, _ = graph_embedding(S, "base", f2, "P1")
    g3, _ = graph_embedding(S, "base", f3)
    product_embedding(S, g1, g2)
    product_embedding(S, g2, g3)


def line(npoints: int = 100) -> EmbeddingSystem:
    F = TRIVIAL
    x, y = LaurentPoly.variables(2, F)
    S = EmbeddingSystem(BaseChart(2, [x + y + 1], F, basis_flag=ASSERTED))
    pts = []
    for a in _rationals():
        if len(pts) == npoints:
            break
        if a != -1:
            pts.append(a)
    for a in pts:
        S.register(KPoint((a, -1 - a)))
    _add_nodes(S, RationalFunction(x - 1), RationalFunction(x - 1, y), RationalFunction(y - 3))
    return S


def conic(npoints: int = 100) -> EmbeddingSystem:
    F = padic(5)
    x, y = LaurentPoly.variables(2, F)
    S = EmbeddingSystem(BaseChart(2, [x * x + y * y - 1], F, basis_flag=ASSERTED))
    n = 0
    for s in _rationals():
        if n == npoints:
            break
        if s in (1, -1):
            continue
        d = 1 + s * s
        S.register(KPoint(((1 - s * s) / d, 2 * s / d)))
        n += 1
    _add_nodes(S, RationalFunction(x - Fraction(3, 5)), RationalFunction(x - 1, y),
               RationalFunction(y - Fraction(4, 5)))
    return S


def tadic_line(npoints: int = 100) -> EmbeddingSystem:
    F = TADIC
    x, y = LaurentPoly.variables(2, F)
    t = TPoly.t(1)
    S = EmbeddingSystem(BaseChart(2, [x + y + t], F, basis_flag=ASSERTED))
    n = 0
    coeffs = _rationals()
    while n < npoints:
        c = next(coeffs)
        for k in (-1, 0, 1, 2):
            if n == npoints:
                break
            a = TPoly.t(k, c) + (t if k == 2 else TPoly())
            if a == -t:
                continue
            S.register(KPoint((a, -a - t)))
            n += 1
    _add_nodes(S, RationalFunction(x - t), RationalFunction(x + 1, y), RationalFunction(y + 2 * t))
    return S


def build(name: str, npoints: int = 100) -> EmbeddingSystem:
    return {"line": line, "conic": conic, "tadic_line": tadic_line}[name](npoints)
