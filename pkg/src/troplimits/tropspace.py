"""Extended tropicalizations ``N_R(sigma)`` and ``N_R(Delta)``.

A point of ``N_R(Delta)`` is stored orbit-style: a cone ``tau`` of the fan
(the stratum) and a rational vector modulo ``span(tau)``.  As a monoid
homomorphism on ``S_sigma`` for a chart ``sigma >= tau`` it sends ``u`` to
``<u, rep>`` when ``u`` vanishes on ``tau`` and to ``+inf`` otherwise.

Representatives are canonical: coordinates are chosen greedily from the
standard basis to complement ``span(tau)`` and the representative is the
unique one supported on the chosen coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from . import linalg
from .errors import ChartError, ConeError, FaceError, FanMapError, NonAdditiveError
from .polyhedral import Cone, Fan, cone, fan_map_compatible, is_face, monoid, zero_cone
from .scalars import INF, TRIVIAL, ExtVal, FieldConfig, Scalar, ext_add, val


@lru_cache(maxsize=4096)
def _reducer(tau: Cone):
    """Rows ``r_k`` with ``r_k[p_j] = delta_kj`` spanning ``span(tau)``.

    ``p_j`` are the coordinates *not* picked by the greedy complement.
    """
    n = tau.rank
    basis = tau.span_basis()
    chosen: list[int] = []
    rows = [list(b) for b in basis]
    r = len(rows)
    for j in range(n):
        e = [0] * n
        e[j] = 1
        if linalg.rank(rows + [e], n) > r:
            rows.append(e)
            r += 1
            chosen.append(j)
    pivots = [j for j in range(n) if j not in chosen]
    if not basis:
        return (), ()
    R, piv = linalg.rref(basis, n, col_order=pivots + chosen)
    assert piv == pivots
    return tuple(tuple(row) for row in R), tuple(pivots)


def reduce_mod_span(tau: Cone, v: Sequence) -> tuple[Fraction, ...]:
    rows, pivots = _reducer(tau)
    w = [Fraction(x) for x in v]
    for row, p in zip(rows, pivots):
        c = w[p]
        if c:
            w = [a - c * b for a, b in zip(w, row)]
    return tuple(w)


def quotient_coordinates(tau: Cone, rep: Sequence) -> tuple[Fraction, ...]:
    """Coordinates of ``rep`` in ``N/span(tau)`` dual to a lattice basis of ``tau^perp ∩ M``."""
    return tuple(Fraction(linalg.dot(b, rep)) for b in tau.orthogonal_lattice())


class ExtendedPoint:
    """A point of ``N_R(fan)``: stratum index and canonical representative."""

    __slots__ = ("fan", "stratum", "rep", "_hash")

    def __init__(self, fan: Fan, stratum: int, rep: Sequence):
        if not 0 <= stratum < len(fan):
            raise ConeError(f"stratum index {stratum} out of range for {fan!r}")
        if len(rep) != fan.rank:
            raise ConeError(f"representative has length {len(rep)}, fan rank is {fan.rank}")
        self.fan = fan
        self.stratum = stratum
        self.rep = reduce_mod_span(fan[stratum], rep)
        self._hash = hash((stratum, self.rep))

    @classmethod
    def torus(cls, fan: Fan, rep: Sequence) -> "ExtendedPoint":
        return cls(fan, fan.index(zero_cone(fan.rank)), rep)

    @property
    def cone(self) -> Cone:
        return self.fan[self.stratum]

    def is_torus_point(self) -> bool:
        return self.cone.dim == 0

    def coordinates(self) -> tuple:
        """Per-coordinate extended values, valid when the stratum is a coordinate cone.

        Coordinates whose positive axis lies in the stratum read ``+inf``.
        """
        gens = self.cone.generators
        inf_axes = set()
        for g in gens:
            nz = [i for i, x in enumerate(g) if x]
            if len(nz) != 1 or g[nz[0]] != 1:
                raise ConeError("stratum is not spanned by positive coordinate axes")
            inf_axes.add(nz[0])
        return tuple(INF if i in inf_axes else x for i, x in enumerate(self.rep))

    def __eq__(self, other):
        return (isinstance(other, ExtendedPoint) and self.stratum == other.stratum
                and self.rep == other.rep and self.fan == other.fan)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        rep = ", ".join(str(x) for x in self.rep)
        return f"ExtendedPoint(stratum={self.stratum} {list(self.cone.generators)}, rep=({rep}))"


def canonicalize(p: ExtendedPoint) -> ExtendedPoint:
    """Canonical form (points are canonical on construction, so this is a check)."""
    if p.stratum >= len(p.fan):
        raise ConeError("stratum not in fan")
    return ExtendedPoint(p.fan, p.stratum, p.rep)


def _chart(p: ExtendedPoint, sigma) -> Cone:
    sig = p.fan[sigma] if isinstance(sigma, int) else sigma
    if sig is None:
        sig = p.cone
    if not is_face(p.cone, sig):
        raise FaceError(f"stratum {p.cone!r} is not a face of chart {sig!r}")
    return sig


def eval_monomial(p: ExtendedPoint, sigma, u: Sequence[int], a: Scalar | None = None,
                  F: FieldConfig = TRIVIAL) -> ExtVal:
    """Value of the monomial ``a x^u`` at ``p`` read in the chart ``sigma``.

    ``sigma`` is a cone or a cone index of ``p.fan`` (``None``: the stratum
    itself).  Returns ``val(a) + <u, rep>`` when ``u`` vanishes on the
    stratum and ``+inf`` otherwise.
    """
    sig = _chart(p, sigma)
    if any(linalg.dot(u, g) < 0 for g in sig.generators):
        raise ChartError(f"exponent {list(u)} is not in S_sigma for {sig!r}")
    va = Fraction(0) if a is None else val(F.coerce(a), F)
    if any(linalg.dot(u, g) != 0 for g in p.cone.generators):
        return INF
    return ext_add(va, Fraction(linalg.dot(u, p.rep)))


def as_monoid_hom(p: ExtendedPoint, sigma=None) -> dict[tuple[int, ...], ExtVal]:
    """The homomorphism ``S_sigma -> Q ∪ {inf}`` of ``p`` on a Hilbert basis."""
    sig = _chart(p, sigma)
    return {u: eval_monomial(p, sig, u) for u in monoid(sig).generators}


def hom_to_point(fan: Fan, sigma, table: Mapping[Sequence[int], ExtVal]) -> ExtendedPoint:
    """Inverse of :func:`as_monoid_hom`.

    ``table`` maps elements of ``S_sigma`` (at least a Hilbert basis) to
    extended values.
    """
    sig = fan[sigma] if isinstance(sigma, int) else sigma
    if sig not in fan:
        raise ConeError(f"{sig!r} is not a cone of the fan")
    items = [(tuple(int(x) for x in u), v) for u, v in table.items()]
    keys = {u: v for u, v in items}
    for u, _ in items:
        if any(linalg.dot(u, g) < 0 for g in sig.generators):
            raise ChartError(f"{list(u)} is not in S_sigma")
    missing = [h for h in monoid(sig).generators if h not in keys]
    if missing:
        raise ChartError(f"table does not cover the Hilbert basis element {list(missing[0])}")
    for i, (u, a) in enumerate(items):
        for v, b in items[i:]:
            s = tuple(x + y for x, y in zip(u, v))
            if s in keys and keys[s] != ext_add(a, b):
                raise NonAdditiveError(
                    f"value at {list(s)} is {keys[s]}, expected {ext_add(a, b)} = value({list(u)}) + value({list(v)})")
    finite = [u for u, v in items if v is not INF]
    tau_gens = tuple(g for g in sig.generators if all(linalg.dot(u, g) == 0 for u in finite))
    tau = cone(tau_gens, fan.rank)
    for u, v in items:
        perp = all(linalg.dot(u, g) == 0 for g in tau.generators)
        if perp != (v is not INF):
            raise NonAdditiveError(f"+inf pattern of the table is not the complement of a face (at {list(u)})")
    rep = linalg.solve([list(u) for u in finite], [keys[u] for u in finite], fan.rank)
    if rep is None:
        raise NonAdditiveError("finite values are not given by a linear functional")
    return ExtendedPoint(fan, fan.index(tau), rep)


# ---------------------------------------------------------------------------
# Maps


@dataclass(frozen=True)
class TropMap:
    """Tropicalization of an equivariant morphism, possibly composed with a translation.

    Sends ``(tau, rep)`` to ``(tau', A rep + shift)``.
    """

    matrix: tuple[tuple[int, ...], ...]
    source: Fan
    target: Fan
    shift: tuple[Fraction, ...] = ()
    assignment: tuple = field(default=(), compare=False)

    def __post_init__(self):
        A = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", A)
        shift = tuple(Fraction(x) for x in self.shift) or (Fraction(0),) * self.target.rank
        if len(shift) != self.target.rank:
            raise FanMapError("shift length does not match target rank")
        object.__setattr__(self, "shift", shift)
        ok, assignment = fan_map_compatible(A, self.source, self.target)
        if not ok:
            bad = [self.source[i] for i, a in enumerate(assignment) if a is None]
            raise FanMapError(f"cone {bad[0]!r} is not mapped into any cone of the target fan")
        object.__setattr__(self, "assignment", tuple(assignment))

    @classmethod
    def identity(cls, fan: Fan) -> "TropMap":
        return cls(tuple(tuple(r) for r in linalg.identity(fan.rank)), fan, fan)

    @classmethod
    def coordinate_projection(cls, source: Fan, target: Fan, coords: Sequence[int],
                              shift: Sequence = ()) -> "TropMap":
        A = [[int(j == c) for j in range(source.rank)] for c in coords]
        return cls(tuple(map(tuple, A)), source, target, tuple(shift))

    def compose(self, first: "TropMap") -> "TropMap":
        """``self ∘ first``."""
        if first.target != self.source:
            raise FanMapError("maps are not composable")
        A = linalg.matmul(self.matrix, first.matrix) if first.matrix else [[0] * first.source.rank for _ in self.matrix]
        shift = tuple(a + b for a, b in zip(linalg.matvec(self.matrix, first.shift), self.shift))
        return TropMap(tuple(map(tuple, A)), first.source, self.target, shift)


def trop_map_apply(m: TropMap, p: ExtendedPoint) -> ExtendedPoint:
    if p.fan != m.source:
        raise FanMapError("point does not live on the source fan of the map")
    s = linalg.matvec(m.matrix, p.cone.relint_point())
    j = m.target.stratum_of(s)
    if j is None:
        raise FanMapError(f"image {list(s)} of the stratum lies in no cone of the target")
    rep = tuple(a + b for a, b in zip(linalg.matvec(m.matrix, p.rep), m.shift))
    return ExtendedPoint(m.target, j, rep)


def trop_map_apply_dual(m: TropMap, p: ExtendedPoint) -> ExtendedPoint:
    """Same as :func:`trop_map_apply`, computed by pulling back characters.

    The chart is the smallest target cone containing the image of the source
    stratum; the point is rebuilt from the values ``u' -> p(A^T u') + <u', shift>``.
    """
    if p.fan != m.source:
        raise FanMapError("point does not live on the source fan of the map")
    chart = m.target[m.assignment[p.stratum]]
    At = linalg.transpose(m.matrix, m.source.rank) if m.matrix else []
    table = {}
    for u in monoid(chart).generators:
        pulled = tuple(linalg.dot(col, u) for col in At) if At else (0,) * m.source.rank
        table[u] = ext_add(eval_monomial(p, None, pulled), Fraction(linalg.dot(u, m.shift)))
    return hom_to_point(m.target, chart, table)
