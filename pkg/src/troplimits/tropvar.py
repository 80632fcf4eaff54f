"""Tropicalization of subvarieties of toric varieties.

Min-plus convention throughout.  Hypersurfaces in the torus get an explicit
polyhedral complex; ideals with several generators are handled as a
membership predicate that is honest about whether the generators are known
to form a tropical basis.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .complexes import Cell, PolyhedralComplex, feasible, merge_cells
from .errors import ChartError, EmbeddingError, TropError
from .polyhedral import Cone, Fan, monoid
from .polynomials import (LaurentPoly, TropicalPolynomial, tropicalize_poly,
                          trop_eval_torus, trop_eval_values)
from .scalars import INF, ExtVal, FieldConfig, ext_add, val
from .tropspace import ExtendedPoint, TropMap, eval_monomial, hom_to_point, quotient_coordinates


class Membership(enum.Enum):
    IN = "In"
    OUT = "Out"
    IN_PREVARIETY = "InPrevariety"


ASSERTED = "asserted"
UNKNOWN = "unknown"


# ---------------------------------------------------------------------------
# Evaluation


def trop_eval(F: TropicalPolynomial, p: ExtendedPoint | Sequence, chart=None) -> tuple[ExtVal, int]:
    """Minimum of the terms of ``F`` at ``p`` and how many terms attain it.

    ``p`` is an :class:`ExtendedPoint` or a plain vector (torus point).  For
    points on a boundary stratum, every exponent must lie in ``S_chart``.
    """
    if not isinstance(p, ExtendedPoint):
        return trop_eval_torus(F, p)
    if p.is_torus_point() and chart is None:
        return trop_eval_torus(F, p.rep)
    values = [ext_add(c, eval_monomial(p, chart, u)) for c, u in F.terms]
    return trop_eval_values(values)


def membership_min_twice(F: TropicalPolynomial, p, chart=None) -> bool:
    m, count = trop_eval(F, p, chart)
    return m is INF or count >= 2


# ---------------------------------------------------------------------------
# Hypersurfaces


def _stratum_cell(F: TropicalPolynomial, S: Sequence[int]):
    """Equalities/inequalities for "terms in S tie and are <= the rest"."""
    (c0, u0) = F.terms[S[0]]
    eqs, ineqs = [], []
    for s in S[1:]:
        c, u = F.terms[s]
        eqs.append((tuple(a - b for a, b in zip(u, u0)), c0 - c))
    others = [i for i in range(len(F.terms)) if i not in S]
    for v in others:
        c, u = F.terms[v]
        ineqs.append((tuple(a - b for a, b in zip(u0, u)), c - c0))
    return eqs, ineqs


def _cells_of(F: TropicalPolynomial, n: int):
    """Closures of the argmin strata with at least two minimizing terms."""
    k = len(F.terms)
    out = []
    for size in range(2, k + 1):
        for S in itertools.combinations(range(k), size):
            eqs, ineqs = _stratum_cell(F, S)
            if feasible(eqs, [], ineqs, nvars=n):
                out.append((S, eqs, ineqs))
    return out


def trop_hypersurface(f: LaurentPoly, stratum: int = 0) -> PolyhedralComplex:
    """The tropical hypersurface of ``f`` in the dense torus ``R^n``.

    One cell per subset ``S`` (``|S| >= 2``) of terms that is exactly the set
    of minimizing terms somewhere; the cell is the closure of that locus.
    A monomial yields the empty complex, flagged ``"monomial"``.
    """
    n = f.nvars
    F = tropicalize_poly(f)
    if len(F.terms) < 2:
        return PolyhedralComplex(n, [], stratum, [], ["monomial"])
    cells, labels = [], []
    for S, eqs, ineqs in _cells_of(F, n):
        cells.append(Cell(n, eqs, ineqs))
        labels.append(tuple(F.terms[i][1] for i in S))
    return PolyhedralComplex(n, cells, stratum, labels)


def trop_prevariety(gens: Sequence[LaurentPoly], stratum: int = 0) -> PolyhedralComplex:
    """Common refinement of the tropical hypersurfaces of ``gens``.

    Equal to the tropical variety when ``gens`` is a tropical basis.
    """
    if not gens:
        raise TropError("no generators")
    n = gens[0].nvars
    Fs = [tropicalize_poly(g) for g in gens]
    if any(len(F.terms) < 2 for F in Fs):
        return PolyhedralComplex(n, [], stratum, [], ["monomial"])
    per = [_cells_of(F, n) for F in Fs]
    cells, labels = [], []
    for combo in itertools.product(*per):
        eqs = [r for c in combo for r in c[1]]
        strict = [r for c in combo for r in c[2]]
        if feasible(eqs, [], strict, nvars=n):
            cells.append(Cell(n, eqs, strict))
            labels.append(tuple(tuple(F.terms[i][1] for i in c[0]) for F, c in zip(Fs, combo)))
    return PolyhedralComplex(n, cells, stratum, labels)


def linear_tropical_basis(gens: Sequence[LaurentPoly]) -> list[LaurentPoly]:
    """Circuits of a linear ideal, which form a tropical basis for it.

    ``gens`` must be affine-linear polynomials (degree <= 1, no negative
    exponents) over a field with rational scalars.
    """
    if not gens:
        return []
    n = gens[0].nvars
    F = gens[0].field
    if F.kind == "tadic":
        raise TropError("circuits are only computed over rational scalar fields")
    basis_exps = [tuple(int(i == j) for j in range(n)) for i in range(n)] + [(0,) * n]
    rows = []
    for g in gens:
        for e in g.exponents():
            if e not in basis_exps:
                raise TropError(f"{g.to_string()} is not affine-linear")
        rows.append([g.coefficient(e) for e in basis_exps])
    R, _ = linalg.rref(rows, n + 1)
    d = len(R)
    found: dict[frozenset, list] = {}
    # Each circuit is the unique (up to scale) row-space vector vanishing on some d-1 coordinates.
    for T in itertools.combinations(range(n + 1), d - 1):
        ker = linalg.nullspace([[R[i][j] for i in range(d)] for j in T], d)
        if len(ker) != 1:
            continue
        vec = [sum(l * row[j] for l, row in zip(ker[0], R)) for j in range(n + 1)]
        support = frozenset(j for j, x in enumerate(vec) if x != 0)
        lead = next(x for x in vec if x != 0)
        found.setdefault(support, [x / lead for x in vec])
    circuits = sorted((s for s in found if not any(t < s for t in found)), key=sorted)
    return [LaurentPoly({e: x for e, x in zip(basis_exps, found[s]) if x != 0}, n, F) for s in circuits]


# ---------------------------------------------------------------------------
# Strata


@dataclass(frozen=True)
class RestrictedGenerators:
    gens: tuple[LaurentPoly, ...]
    dropped: tuple[int, ...]  # indices of generators identically zero on the orbit
    basis: tuple[tuple[int, ...], ...]  # lattice basis of tau^perp ∩ M used for coordinates


def chart_shift(f: LaurentPoly, tau: Cone) -> LaurentPoly:
    """``x^m f`` with exponents in ``S_tau`` and the shift as small as possible.

    For each generator ``g`` of ``tau`` the minimum of ``<u, g>`` over the
    exponents becomes zero, so the terms that are lowest along ``g`` survive
    restriction.  Raises :class:`ChartError` when no integral shift does this.
    """
    gens = tau.generators
    if not gens or f.is_zero():
        return f
    exps = f.exponents()
    target = [-min(linalg.dot(u, g) for u in exps) for g in gens]
    if all(t == 0 for t in target):
        return f
    m = linalg.solve([list(g) for g in gens], target, tau.rank)
    if m is None or any(x.denominator != 1 for x in m):
        raise ChartError(f"{f.to_string()} cannot be moved into the chart of {tau!r} by a monomial")
    return f.shift([int(x) for x in m])


def orbit_restriction(gens: Sequence[LaurentPoly], sigma: Cone, tau: Cone) -> RestrictedGenerators:
    """Restrict generators of ``K[S_sigma]`` to the orbit of ``tau <= sigma``.

    Terms with exponent outside ``tau^perp`` are deleted; survivors are
    rewritten in coordinates of the lattice ``tau^perp ∩ M``.
    """
    if not all(sigma.contains(g) for g in tau.generators):
        raise ChartError(f"{tau!r} is not contained in {sigma!r}")
    basis = tau.orthogonal_lattice()
    k = len(basis)
    out, dropped = [], []
    for i, f in enumerate(gens):
        for e in f.exponents():
            if any(linalg.dot(e, g) < 0 for g in sigma.generators):
                raise ChartError(f"exponent {list(e)} is not in S_sigma")
        kept = []
        for e, c in f.terms:
            if all(linalg.dot(e, g) == 0 for g in tau.generators):
                if basis:
                    coords = linalg.solve(linalg.transpose(basis, f.nvars), list(e), k)
                    kept.append((tuple(int(x) for x in coords), c))
                else:
                    kept.append(((), c))
        if not kept:
            dropped.append(i)
            continue
        out.append(LaurentPoly(kept, k, f.field))
    return RestrictedGenerators(tuple(out), tuple(dropped), tuple(basis))


def extended_membership(gens: Sequence[LaurentPoly], fan: Fan, p: ExtendedPoint,
                        basis_flag: str = UNKNOWN, chart=None, shift_into_chart: bool = True) -> Membership:
    """Membership of ``p`` in the tropicalization of ``V(gens)`` in ``N_R(fan)``.

    The generators are restricted to the orbit of ``p``'s stratum and the
    min-twice rule is applied on the quotient torus.  With
    ``shift_into_chart`` each generator is first multiplied by the monomial
    from :func:`chart_shift` (harmless on the torus).
    """
    if p.fan != fan:
        raise ChartError("point does not live on the given fan")
    tau = p.cone
    sigma = tau if chart is None else (fan[chart] if isinstance(chart, int) else chart)
    work = [chart_shift(g, tau) for g in gens] if shift_into_chart else list(gens)
    restricted = orbit_restriction(work, sigma, tau)
    q = quotient_coordinates(tau, p.rep)
    for g in restricted.gens:
        F = tropicalize_poly(g)
        if not membership_min_twice(F, q):
            return Membership.OUT
    return Membership.IN if basis_flag == ASSERTED else Membership.IN_PREVARIETY


# ---------------------------------------------------------------------------
# Valuations


@dataclass(frozen=True)
class KPoint:
    """A ``K``-point of ``X`` on the dense torus (all coordinates nonzero)."""

    coords: tuple


@dataclass(frozen=True)
class Weight:
    """Gauss (weight) valuation on the ambient torus ring: ``f -> min val(a_u) + <u, w>``.

    Only a valuation of the ambient torus, not of a proper subvariety.
    """

    w: tuple
    ambient_only: bool = True


PointValuation = KPoint | Weight


def make_kpoint(coords: Sequence, gens: Sequence[LaurentPoly], field: FieldConfig) -> KPoint:
    pt = tuple(field.coerce(c) for c in coords)
    if any(not x for x in pt):
        raise EmbeddingError("K-point coordinates must be nonzero")
    for g in gens:
        if not g.evaluate(pt).is_zero():
            raise EmbeddingError(f"point {[str(x) for x in pt]} does not satisfy {g.to_string()}")
    return KPoint(pt)


def valuation_of(eta: PointValuation, f: LaurentPoly) -> ExtVal:
    """``eta(f)`` for a Laurent polynomial on the base torus."""
    if isinstance(eta, KPoint):
        return f.evaluate(eta.coords).valuation()
    if f.is_zero():
        return INF
    return min(ext_add(val(c, f.field), Fraction(linalg.dot(e, eta.w))) for e, c in f.terms)


def trop_of_point_valuation(eta: PointValuation, fan: Fan, chart=None,
                            field: FieldConfig | None = None,
                            gens: Sequence[LaurentPoly] = ()) -> ExtendedPoint:
    """Image of ``eta`` in ``N_R(fan)``, built as the homomorphism ``u -> eta(x^u)``."""
    sig = fan[0] if chart is None else (fan[chart] if isinstance(chart, int) else chart)
    if isinstance(eta, Weight):
        if len(eta.w) != fan.rank:
            raise EmbeddingError("weight vector has the wrong length")
        values = tuple(Fraction(x) for x in eta.w)
    else:
        if field is None:
            raise EmbeddingError("a field is needed to value a K-point")
        if len(eta.coords) != fan.rank:
            raise EmbeddingError("K-point has the wrong number of coordinates")
        for c in eta.coords:
            if not c:
                raise EmbeddingError("K-point coordinate is zero")
        for g in gens:
            if not g.evaluate(eta.coords).is_zero():
                raise EmbeddingError(f"K-point does not satisfy {g.to_string()}")
        values = tuple(val(c, field) for c in eta.coords)
    table = {u: Fraction(linalg.dot(u, values)) for u in monoid(sig).generators}
    return hom_to_point(fan, sig, table)


# ---------------------------------------------------------------------------
# Images


def project_complex(C: PolyhedralComplex, m: TropMap) -> PolyhedralComplex:
    """Image of a torus-stratum complex under a torus-to-torus tropical map."""
    if m.source[C.stratum].dim != 0:
        raise TropError("project_complex only handles complexes on the dense torus")
    tgt = m.assignment[C.stratum]
    if m.target[tgt].dim != 0:
        raise TropError("the image leaves the dense torus of the target")
    images = [c.image(m.matrix, m.shift) for c in C.cells]
    return PolyhedralComplex(m.target.rank, merge_cells(images), tgt, [], list(C.flags))


__all__ = [
    "ASSERTED", "UNKNOWN", "Membership", "KPoint", "Weight", "PointValuation",
    "trop_eval", "membership_min_twice", "trop_hypersurface", "trop_prevariety",
    "linear_tropical_basis", "chart_shift", "orbit_restriction", "extended_membership",
    "make_kpoint", "valuation_of", "trop_of_point_valuation", "project_complex",
    "tropicalize_poly", "RestrictedGenerators",
]
