"""Rational polyhedral cones and fans.

Cones live in ``N_R = R^n`` (or in the dual ``M_R``; the code does not care
which).  A cone is given by integer generators; its facet normals and
defining equations are computed once at construction by direct double
description, which is adequate for ranks up to about 6 and a dozen
generators.

Cones compare equal when they are equal as sets: the comparison key is the
rational row space of the generators together with the set of primitive
facet normals taken inside that span.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import linalg
from .errors import ConeError, FanMapError


def _as_int_vector(v, n: int | None = None) -> tuple[int, ...]:
    try:
        out = tuple(int(x) for x in v)
    except (TypeError, ValueError):
        raise ConeError(f"not an integer vector: {v!r}") from None
    if any(Fraction(x) != y for x, y in zip(v, out)):
        raise ConeError(f"not an integer vector: {v!r}")
    if n is not None and len(out) != n:
        raise ConeError(f"vector {v!r} has length {len(out)}, expected {n}")
    return out


class Cone:
    """A rational polyhedral cone ``cone(generators)`` in ``R^rank``."""

    def __init__(self, generators: Iterable[Sequence[int]] = (), rank: int | None = None):
        gens = [tuple(g) for g in generators]
        if rank is None:
            if not gens:
                raise ConeError("rank is required for a cone without generators")
            rank = len(gens[0])
        gens = [_as_int_vector(g, rank) for g in gens]
        gens = sorted({linalg.primitive(g) for g in gens if any(g)})
        self.rank = rank
        # L^perp inside M, as an integer basis.
        self.equations = tuple(linalg.integer_kernel(gens, rank)) if gens else tuple(
            tuple(r) for r in linalg.identity(rank))
        self.dim = rank - len(self.equations)
        self.facet_normals = tuple(sorted(_facets(gens, self.equations, self.dim, rank)))
        if self.is_pointed and self.dim > 1:
            gens = [g for g in gens if linalg.rank(
                [u for u in self.facet_normals if linalg.dot(u, g) == 0], rank) == self.dim - 1]
        self.generators = tuple(gens)
        span = linalg.rref(self.generators, rank)[0] if self.generators else []
        self._key = (rank, tuple(tuple(r) for r in span), frozenset(self.facet_normals))
        self._hash = hash(self._key)

    # -- basic predicates ---------------------------------------------------

    @cached_property
    def lineality_rank(self) -> int:
        return self.dim - linalg.rank(list(self.facet_normals), self.rank) if self.facet_normals else self.dim

    @property
    def is_pointed(self) -> bool:
        if self.dim == 0:
            return True
        return bool(self.facet_normals) and linalg.rank(list(self.facet_normals), self.rank) == self.dim

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.rank:
            raise ConeError(f"vector of length {len(v)} in a rank {self.rank} cone")
        return (all(linalg.dot(e, v) == 0 for e in self.equations)
                and all(linalg.dot(u, v) >= 0 for u in self.facet_normals))

    def in_relative_interior(self, v: Sequence) -> bool:
        return (all(linalg.dot(e, v) == 0 for e in self.equations)
                and all(linalg.dot(u, v) > 0 for u in self.facet_normals))

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(g) for g in other.generators)

    def relint_point(self) -> tuple[int, ...]:
        """Sum of the generators, a point of the relative interior."""
        return tuple(sum(col) for col in zip(*self.generators)) if self.generators else (0,) * self.rank

    def span_basis(self) -> list[tuple]:
        return [tuple(r) for r in linalg.rref(self.generators, self.rank)[0]] if self.generators else []

    def orthogonal_lattice(self) -> tuple[tuple[int, ...], ...]:
        """Lattice basis of ``span(self)^perp ∩ Z^n``."""
        return self.equations

    # -- equality -----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Cone) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Cone({[list(g) for g in self.generators]!r}, rank={self.rank})"

    def sort_key(self):
        return (self.dim, len(self.generators), self.generators)


def _facets(gens, equations, d, n):
    if d == 0:
        return set()
    out = set()
    eq_rows = [list(e) for e in equations]
    # Candidate hyperplanes pass through d-1 independent generators.
    for combo in itertools.combinations(gens, d - 1):
        if d > 1 and linalg.rank(list(combo), n) != d - 1:
            continue
        ns = linalg.nullspace([list(c) for c in combo] + eq_rows, n)
        if len(ns) != 1:
            continue
        u = ns[0]
        signs = [linalg.dot(u, g) for g in gens]
        if all(s >= 0 for s in signs):
            pass
        elif all(s <= 0 for s in signs):
            u = tuple(-x for x in u)
        else:
            continue
        out.add(linalg.primitive(u))
    return out


@lru_cache(maxsize=4096)
def cone(generators: tuple, rank: int) -> Cone:
    """Cached constructor; ``generators`` must be a tuple of tuples."""
    return Cone(generators, rank)


def make_cone(generators, rank: int | None = None) -> Cone:
    gens = tuple(tuple(int(x) for x in g) for g in generators)
    if rank is None:
        if not gens:
            raise ConeError("rank is required for a cone without generators")
        rank = len(gens[0])
    return cone(gens, rank)


def zero_cone(rank: int) -> Cone:
    return cone((), rank)


def orthant(rank: int) -> Cone:
    return cone(tuple(tuple(r) for r in linalg.identity(rank)), rank)


# ---------------------------------------------------------------------------
# Duals, faces, Hilbert bases


@lru_cache(maxsize=4096)
def dual_cone(sigma: Cone) -> Cone:
    """``{u : <u, v> >= 0 for all v in sigma}``."""
    gens = list(sigma.facet_normals)
    for e in sigma.equations:
        gens.append(tuple(e))
        gens.append(tuple(-x for x in e))
    return cone(tuple(gens), sigma.rank)


@dataclass(frozen=True)
class Face:
    cone: Cone
    normal: tuple[int, ...]  # supporting covector: face = sigma ∩ normal^perp


@lru_cache(maxsize=4096)
def _faces(sigma: Cone) -> tuple[Face, ...]:
    n = sigma.rank
    gens = sigma.generators
    full = frozenset(range(len(gens)))
    seen = {full: (0,) * n}
    queue = [full]
    while queue:
        F = queue.pop()
        nf = seen[F]
        for u in sigma.facet_normals:
            G = frozenset(i for i in F if linalg.dot(u, gens[i]) == 0)
            if G != F and G not in seen:
                seen[G] = tuple(a + b for a, b in zip(nf, u))
                queue.append(G)
    faces = {}
    for idx, nrm in seen.items():
        c = cone(tuple(gens[i] for i in sorted(idx)), n)
        faces.setdefault(c, Face(c, nrm))
    return tuple(sorted(faces.values(), key=lambda f: f.cone.sort_key()))


def faces(sigma: Cone) -> list[Cone]:
    """All faces of ``sigma``, from the minimal face up to ``sigma`` itself."""
    return [f.cone for f in _faces(sigma)]


def faces_with_normals(sigma: Cone) -> list[Face]:
    return list(_faces(sigma))


def is_face(tau: Cone, sigma: Cone) -> bool:
    return tau.rank == sigma.rank and tau in faces(sigma)


def minimal_face_containing(sigma: Cone, v: Sequence) -> Cone:
    """The face of ``sigma`` whose relative interior contains ``v``."""
    if not sigma.contains(v):
        raise ConeError(f"{list(v)} is not in {sigma!r}")
    tight = [u for u in sigma.facet_normals if linalg.dot(u, v) == 0]
    gens = tuple(g for g in sigma.generators
                 if all(linalg.dot(u, g) == 0 for u in tight))
    return cone(gens, sigma.rank)


def lineality_lattice(C: Cone) -> list[tuple[int, ...]]:
    """Lattice basis of ``(C ∩ -C) ∩ Z^n``."""
    rows = [list(e) for e in C.equations] + [list(u) for u in C.facet_normals]
    return linalg.integer_kernel(rows, C.rank)


def _pointed_hilbert_basis(gens: list[tuple[int, ...]], C: Cone) -> list[tuple[int, ...]]:
    if not gens:
        return []
    n = C.rank
    grading = tuple(sum(col) for col in zip(*C.facet_normals))
    lo = [sum(min(0, g[i]) for g in gens) for i in range(n)]
    hi = [sum(max(0, g[i]) for g in gens) for i in range(n)]
    cands = []
    for x in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if any(x) and C.contains(x):
            cands.append((linalg.dot(grading, x), x))
    cands.sort()
    basis: list[tuple[int, ...]] = []
    for _, x in cands:
        if not any(C.contains(tuple(a - b for a, b in zip(x, h))) for h in basis):
            basis.append(x)
    return basis


@lru_cache(maxsize=4096)
def _hilbert(C: Cone) -> tuple[tuple[int, ...], ...]:
    n = C.rank
    lin = lineality_lattice(C)
    if not lin:
        return tuple(sorted(_pointed_hilbert_basis(list(C.generators), C)))
    # Split Z^n = complement ⊕ lineality via a unimodular basis change.
    rows = [list(e) for e in C.equations] + [list(u) for u in C.facet_normals]
    if rows:
        H, U = linalg.column_hermite(linalg.integer_rows(rows), n)
        kcols = [j for j in range(n) if all(r[j] == 0 for r in H)]
    else:
        U, kcols = linalg.identity(n), list(range(n))
    qcols = [j for j in range(n) if j not in kcols]
    Uinv = linalg.inverse(U)
    q = len(qcols)
    qgens = [tuple(int(linalg.dot(Uinv[j], g)) for j in qcols) for g in C.generators]
    Q = cone(tuple(g for g in qgens if any(g)), q) if q else None
    out = set()
    if Q is not None:
        for y in _pointed_hilbert_basis(list(Q.generators), Q):
            out.add(tuple(sum(U[i][j] * yj for j, yj in zip(qcols, y)) for i in range(n)))
    for j in kcols:
        col = tuple(U[i][j] for i in range(n))
        out.add(col)
        out.add(tuple(-x for x in col))
    return tuple(sorted(out))


@dataclass(frozen=True)
class MonoidBasis:
    cone: Cone
    generators: tuple[tuple[int, ...], ...]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def hilbert_basis(C: Cone) -> MonoidBasis:
    """Generators of the monoid ``C ∩ Z^n``.

    For pointed ``C`` this is the (unique) minimal generating set.  Otherwise
    it is the Hilbert basis of a pointed complement together with plus and
    minus a lattice basis of the lineality space.
    """
    return MonoidBasis(C, _hilbert(C))


def monoid(sigma: Cone) -> MonoidBasis:
    """Hilbert basis of ``S_sigma = sigma^dual ∩ M``."""
    return hilbert_basis(dual_cone(sigma))


# ---------------------------------------------------------------------------
# Fans


class Fan:
    """A finite face-closed family of cones, stored in canonical order.

    Cones are sorted by ``(dim, #generators, generators)``; the index of a
    cone in :attr:`cones` is its stable identifier.  Construction does not
    validate the intersection condition; call :func:`fan_validate`.
    """

    __slots__ = ("rank", "cones", "_index", "_hash")

    def __init__(self, rank: int, cones: Iterable[Cone], complete_faces: bool = True):
        cs = set()
        for c in cones:
            if c.rank != rank:
                raise ConeError(f"cone of rank {c.rank} in a fan of rank {rank}")
            cs.add(c)
            if complete_faces:
                cs.update(faces(c))
        if not cs:
            cs.add(zero_cone(rank))
        self.rank = rank
        self.cones = tuple(sorted(cs, key=Cone.sort_key))
        self._index = {c: i for i, c in enumerate(self.cones)}
        self._hash = hash((rank, frozenset(self.cones)))

    def index(self, c: Cone) -> int:
        try:
            return self._index[c]
        except KeyError:
            raise ConeError(f"{c!r} is not a cone of this fan") from None

    def __contains__(self, c: Cone) -> bool:
        return c in self._index

    def __getitem__(self, i: int) -> Cone:
        return self.cones[i]

    def __len__(self):
        return len(self.cones)

    def __iter__(self):
        return iter(self.cones)

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Fan) and self.rank == other.rank and self._index.keys() == other._index.keys()

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Fan(rank={self.rank}, cones={len(self.cones)})"

    def maximal_cones(self) -> list[Cone]:
        return [c for c in self.cones
                if not any(d != c and d.contains_cone(c) for d in self.cones)]

    def stratum_of(self, v: Sequence) -> int | None:
        """Index of the cone with ``v`` in its relative interior, if any."""
        for i, c in enumerate(self.cones):
            if c.in_relative_interior(v):
                return i
        return None


def intersect_cones(a: Cone, b: Cone) -> Cone:
    return dual_cone(cone(tuple(dual_cone(a).generators + dual_cone(b).generators), a.rank))


@dataclass
class FanReport:
    valid: bool
    missing_faces: list[tuple[int, Cone]] = field(default_factory=list)
    bad_pairs: list[tuple[int, int]] = field(default_factory=list)


def fan_validate(rank: int, cones: Sequence[Cone]) -> FanReport:
    """Check face closure and the pairwise face-intersection condition.

    Takes a raw cone list (not a :class:`Fan`, whose constructor completes
    faces) so that missing faces can be reported.  Pair indices refer to
    positions in ``cones``.
    """
    cs = list(cones)
    present = set(cs)
    missing = []
    for i, c in enumerate(cs):
        for f in faces(c):
            if f not in present:
                missing.append((i, f))
    bad = []
    for i, j in itertools.combinations(range(len(cs)), 2):
        a, b = cs[i], cs[j]
        if a.rank != rank or b.rank != rank:
            bad.append((i, j))
            continue
        meet = intersect_cones(a, b)
        if not (is_face(meet, a) and is_face(meet, b)):
            bad.append((i, j))
    return FanReport(not missing and not bad, missing, bad)


def validate(fan: Fan) -> FanReport:
    return fan_validate(fan.rank, fan.cones)


def product_cone(a: Cone, b: Cone) -> Cone:
    n, m = a.rank, b.rank
    gens = [g + (0,) * m for g in a.generators] + [(0,) * n + h for h in b.generators]
    return cone(tuple(gens), n + m)


def product_fan(F: Fan, G: Fan) -> Fan:
    return Fan(F.rank + G.rank, [product_cone(a, b) for a in F for b in G], complete_faces=False)


def fan_of_cones(rank: int, generator_lists: Iterable[Iterable[Sequence[int]]]) -> Fan:
    return Fan(rank, [make_cone(g, rank) for g in generator_lists])


def torus_fan(rank: int) -> Fan:
    return Fan(rank, [zero_cone(rank)])


def affine_line_fan() -> Fan:
    return fan_of_cones(1, [[(1,)]])


def projective_line_fan() -> Fan:
    return fan_of_cones(1, [[(1,)], [(-1,)]])


def projective_plane_fan() -> Fan:
    return fan_of_cones(2, [[(1, 0), (0, 1)], [(0, 1), (-1, -1)], [(-1, -1), (1, 0)]])


def affine_space_fan(rank: int) -> Fan:
    return Fan(rank, [orthant(rank)])


def _image(A, g):
    return tuple(linalg.dot(row, g) for row in A)


def fan_map_compatible(A: Sequence[Sequence[int]], source: Fan, target: Fan):
    """Whether ``A`` maps every cone of ``source`` into a cone of ``target``.

    Returns ``(ok, assignment)`` where ``assignment[i]`` is the index of the
    smallest target cone containing ``A(source[i])`` (``None`` if there is
    none).
    """
    A = [tuple(int(x) for x in row) for row in A]
    if len(A) != target.rank or any(len(row) != source.rank for row in A):
        raise FanMapError(f"matrix shape does not match ranks {source.rank} -> {target.rank}")
    assignment: list[int | None] = []
    for c in source:
        img = [_image(A, g) for g in c.generators]
        best = None
        for j, d in enumerate(target):
            if all(d.contains(v) for v in img):
                if best is None or d.dim < target[best].dim:
                    best = j
        assignment.append(best)
    return all(a is not None for a in assignment), assignment
