"""Rational polyhedra and polyhedral complexes with exact arithmetic.

A :class:`Cell` is ``{w : A_eq w = b_eq, A_in w <= b_in}``.  Emptiness of
systems with strict inequalities is decided by Fourier-Motzkin elimination;
vertices, rays and lines come from the cone machinery in
:mod:`troplimits.polyhedral` applied to the homogenization.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import linalg
from .polyhedral import cone

Row = tuple  # (coefficients tuple, constant)


def _norm(a, b, strict):
    lead = next((x for x in a if x != 0), None)
    if lead is None:
        return (tuple(a), b, strict)
    s = abs(lead)
    return (tuple(x / s for x in a), b / s, strict)


def feasible(eqs: Sequence[Row], ineqs: Sequence[Row], strict: Sequence[Row] = (), nvars: int | None = None) -> bool:
    """Whether ``eqs`` (``a.x = b``), ``ineqs`` (``a.x <= b``) and ``strict`` (``a.x < b``) have a common solution."""
    if nvars is None:
        rows = list(eqs) + list(ineqs) + list(strict)
        nvars = len(rows[0][0]) if rows else 0
    cons = [([Fraction(x) for x in a], Fraction(b), False) for a, b in ineqs]
    cons += [([Fraction(x) for x in a], Fraction(b), True) for a, b in strict]
    eq = [([Fraction(x) for x in a], Fraction(b)) for a, b in eqs]
    # Substitute out equalities.
    while eq:
        a, b = eq.pop()
        p = next((i for i, x in enumerate(a) if x != 0), None)
        if p is None:
            if b != 0:
                return False
            continue

        def sub(c, d, a=a, b=b, p=p):
            f = c[p] / a[p]
            return [ci - f * ai for ci, ai in zip(c, a)], d - f * b

        eq = [sub(c, d) for c, d in eq]
        cons = [(*sub(c, d), s) for c, d, s in cons]
    cons = list({_norm(a, b, s) for a, b, s in cons})
    for j in range(nvars):
        pos, neg, rest = [], [], []
        for a, b, s in cons:
            (pos if a[j] > 0 else neg if a[j] < 0 else rest).append((a, b, s))
        new = set(rest)
        for ap, bp, sp in pos:
            for an, bn, sn in neg:
                fp, fn = -an[j], ap[j]
                a = tuple(fp * x + fn * y for x, y in zip(ap, an))
                new.add(_norm(a, fp * bp + fn * bn, sp or sn))
        cons = list(new)
    for a, b, s in cons:
        if (s and not b > 0) or (not s and b < 0):
            return False
    return True


class Cell:
    """A closed rational polyhedron in ``R^n``."""

    def __init__(self, n: int, eqs: Sequence[Row] = (), ineqs: Sequence[Row] = ()):
        self.n = n
        self.eqs = tuple((tuple(Fraction(x) for x in a), Fraction(b)) for a, b in eqs)
        self.ineqs = tuple((tuple(Fraction(x) for x in a), Fraction(b)) for a, b in ineqs)

    def contains(self, w: Sequence) -> bool:
        return (all(linalg.dot(a, w) == b for a, b in self.eqs)
                and all(linalg.dot(a, w) <= b for a, b in self.ineqs))

    def is_empty(self) -> bool:
        return not feasible(self.eqs, self.ineqs, nvars=self.n)

    @cached_property
    def vrep(self):
        """``(vertices, rays, lines)``; vertices are empty iff the cell is empty.

        For cells with lines, vertices are taken orthogonal to the lines.
        """
        n = self.n
        rows = []
        for a, b in self.ineqs:
            rows.append(linalg.primitive(tuple(-x for x in a) + (b,)))
        for a, b in self.eqs:
            r = linalg.primitive(tuple(a) + (-b,))
            rows.append(r)
            rows.append(tuple(-x for x in r))
        rows.append((0,) * n + (1,))
        D = cone(tuple(r for r in rows if any(r)), n + 1)
        lines = [tuple(Fraction(x) for x in e[:n]) for e in D.equations]
        verts, rays = [], []
        for u in D.facet_normals:
            if u[n] > 0:
                verts.append(tuple(Fraction(x, u[n]) for x in u[:n]))
            else:
                rays.append(tuple(Fraction(x) for x in u[:n]))
        return sorted(verts), sorted(rays), lines

    @property
    def dim(self) -> int:
        verts, rays, lines = self.vrep
        if not verts:
            return -1
        v0 = verts[0]
        dirs = [tuple(a - b for a, b in zip(v, v0)) for v in verts[1:]] + rays + lines
        return linalg.rank(dirs, self.n) if dirs else 0

    def contains_cell(self, other: "Cell") -> bool:
        verts, rays, lines = other.vrep
        if not verts:
            return True
        return (all(self.contains(v) for v in verts)
                and all(linalg.dot(a, r) == 0 for a, _ in self.eqs for r in rays + lines)
                and all(linalg.dot(a, r) <= 0 for a, _ in self.ineqs for r in rays)
                and all(linalg.dot(a, r) == 0 for a, _ in self.ineqs for r in lines))

    def same_set(self, other: "Cell") -> bool:
        return self.contains_cell(other) and other.contains_cell(self)

    def intersect(self, other: "Cell") -> "Cell":
        return Cell(self.n, self.eqs + other.eqs, self.ineqs + other.ineqs)

    def image(self, A: Sequence[Sequence[int]], shift: Sequence = ()) -> "Cell":
        """Affine image ``{A w + shift}``, in canonical H-representation."""
        m = len(A)
        shift = tuple(Fraction(x) for x in shift) or (Fraction(0),) * m
        verts, rays, lines = self.vrep
        if not verts:
            return Cell(m, [((Fraction(0),) * m, Fraction(-1))])
        gens = [tuple(a + s for a, s in zip(linalg.matvec(A, v), shift)) + (1,) for v in verts]
        gens += [linalg.matvec(A, r) + (0,) for r in rays]
        for l in lines:
            img = linalg.matvec(A, l)
            gens += [img + (0,), tuple(-x for x in img) + (0,)]
        return Cell.from_homogeneous_cone(cone(tuple(linalg.primitive(g) for g in gens), m + 1), m)

    @classmethod
    def from_homogeneous_cone(cls, K, m: int) -> "Cell":
        eqs = [(tuple(Fraction(x) for x in e[:m]), Fraction(-e[m])) for e in K.equations]
        ineqs = []
        for u in K.facet_normals:
            a = tuple(Fraction(-x) for x in u[:m])
            if any(a):
                ineqs.append((a, Fraction(u[m])))
        return cls(m, eqs, ineqs)

    def canonical(self) -> "Cell":
        """Same set, H-representation rebuilt from the V-representation."""
        return self.image([[int(i == j) for j in range(self.n)] for i in range(self.n)])

    def to_rows(self):
        return ([list(a) + [b] for a, b in self.eqs], [list(a) + [b] for a, b in self.ineqs])

    def __eq__(self, other):
        return (isinstance(other, Cell) and self.n == other.n
                and self.eqs == other.eqs and self.ineqs == other.ineqs)

    def __hash__(self):
        return hash((self.n, self.eqs, self.ineqs))

    def __repr__(self):
        v, r, l = self.vrep
        return f"Cell(n={self.n}, vertices={v}, rays={r}, lines={l})"


@dataclass
class PolyhedralComplex:
    """A finite list of cells in (a quotient coordinate system of) one stratum.

    ``stratum`` is a cone index of the ambient fan (``0`` is the dense torus
    for every fan built by this package).  ``labels`` records, per cell, the
    term subsets that define it.
    """

    n: int
    cells: list[Cell]
    stratum: int = 0
    labels: list = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    def contains(self, w: Sequence) -> bool:
        return any(c.contains(w) for c in self.cells)

    def maximal_cells(self) -> list[Cell]:
        out = []
        for i, c in enumerate(self.cells):
            if not any(j != i and d.contains_cell(c) and not (c.contains_cell(d) and j > i)
                       for j, d in enumerate(self.cells)):
                out.append(c)
        return out

    def same_as(self, other: "PolyhedralComplex") -> bool:
        """Cell-by-cell equality up to mutual containment of cells."""
        if self.n != other.n:
            return False
        return (all(any(c.same_set(d) for d in other.cells) for c in self.cells)
                and all(any(c.same_set(d) for d in self.cells) for c in other.cells))

    def same_support_cells(self, other: "PolyhedralComplex") -> bool:
        """Maximal cells match up to mutual containment."""
        a, b = self.maximal_cells(), other.maximal_cells()
        return (all(any(c.same_set(d) for d in b) for c in a)
                and all(any(c.same_set(d) for d in a) for c in b))


def merge_cells(cells: Sequence[Cell]) -> list[Cell]:
    """Drop empty cells and duplicates (mutual containment); keep first occurrences."""
    out: list[Cell] = []
    for c in cells:
        if not c.vrep[0]:
            continue
        if any(c.same_set(d) for d in out):
            continue
        out.append(c)
    return out


def ray_cell(vertex: Sequence, direction: Sequence) -> Cell:
    """``vertex + R_{>=0} direction`` as a cell (oracle-side helper)."""
    n = len(vertex)
    gens = [linalg.primitive(tuple(Fraction(x) for x in vertex) + (Fraction(1),)),
            linalg.primitive(tuple(direction) + (0,))]
    return Cell.from_homogeneous_cone(cone(tuple(gens), n + 1), n)


def point_cell(vertex: Sequence) -> Cell:
    n = len(vertex)
    g = linalg.primitive(tuple(Fraction(x) for x in vertex) + (Fraction(1),))
    return Cell.from_homogeneous_cone(cone((g,), n + 1), n)

