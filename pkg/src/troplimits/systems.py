"""Systems of toric embeddings of a fixed scheme ``X``.

``X`` is presented by its intersection ``X°`` with a base torus of rank
``n``.  Every embedding in a system keeps the ``n`` base coordinates and
adds extra coordinates ``z_k = p_k / q_k`` (graph re-embeddings); the
ambient fan is ``base_fan × F_1 × ... × F_r`` where each ``F_k`` is the fan
of the affine line (default) or of the projective line.  With that shape,
products of embeddings are concatenations of extra coordinates with shared
ones deduplicated, and the finite-stage limit check can assemble a point of
the product from the entries of a compatible tuple.

Morphisms are recorded with an integer matrix and per-coordinate
coefficients: target coordinate ``j`` equals ``a_j * prod_i s_i^{A_ji}``.
Their tropicalization is the :class:`TropMap` with shift ``val(a_j)``.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import EmbeddingError
from .polyhedral import Fan, affine_line_fan, cone, product_fan, projective_line_fan, torus_fan
from .polynomials import LaurentPoly, Ratio, RationalFunction, default_names
from .scalars import INF, ExtVal, FieldConfig, Scalar, val
from .tropspace import ExtendedPoint, TropMap, trop_map_apply
from .tropvar import (ASSERTED, UNKNOWN, KPoint, Membership, PointValuation, Weight,
                      extended_membership, linear_tropical_basis, make_kpoint, valuation_of)

FACTOR_FANS = {"A1": affine_line_fan, "P1": projective_line_fan}


@dataclass(frozen=True)
class Extra:
    """An extra coordinate: a rational function on X° and the fan of its factor."""

    function: RationalFunction
    factor: str = "A1"

    def __post_init__(self):
        if self.factor not in FACTOR_FANS:
            raise EmbeddingError(f"unknown factor fan {self.factor!r} (use A1 or P1)")


@dataclass
class BaseChart:
    rank: int
    gens: list[LaurentPoly]
    field: FieldConfig
    fan: Fan | None = None
    basis_flag: str = UNKNOWN
    names: list[str] | None = None

    def __post_init__(self):
        if self.fan is None:
            self.fan = torus_fan(self.rank)
        if self.fan.rank != self.rank:
            raise EmbeddingError("base fan rank differs from base rank")
        for g in self.gens:
            if g.is_zero():
                raise EmbeddingError("zero generator")
            if g.nvars != self.rank or g.field != self.field:
                raise EmbeddingError(f"generator {g.to_string()} does not live on the base torus")
        if self.names is None:
            self.names = default_names(self.rank)


class ToricEmbedding:
    """A node of a system: base coordinates plus extra coordinates."""

    def __init__(self, id: str, base: BaseChart, extras: Sequence[Extra] = (),
                 basis_flag: str | None = None, kind: str = "graph"):
        self.id = id
        self.base = base
        self.extras = tuple(extras)
        self.kind = kind
        if basis_flag is None:
            basis_flag = base.basis_flag if not self.extras else UNKNOWN
        self.basis_flag = basis_flag
        n = base.rank
        fan = base.fan
        for e in self.extras:
            if e.function.nvars != n or e.function.field != base.field:
                raise EmbeddingError(f"{e.function!r} is not a function on the base torus")
            fan = product_fan(fan, FACTOR_FANS[e.factor]())
        self.fan = fan

    @property
    def rank(self) -> int:
        return self.base.rank + len(self.extras)

    @property
    def coordinate_functions(self) -> list[RationalFunction]:
        n, F = self.base.rank, self.base.field
        base = [RationalFunction(LaurentPoly.var(i, n, F)) for i in range(n)]
        return base + [e.function for e in self.extras]

    @property
    def names(self) -> list[str]:
        return list(self.base.names) + [f"z{k + 1}" for k in range(len(self.extras))]

    @property
    def ideal_gens(self) -> list[LaurentPoly]:
        """Base generators and graph relations ``z_k q_k - p_k`` in ``rank`` variables."""
        m = self.rank
        n = self.base.rank
        out = [g.lift(m) for g in self.base.gens]
        for k, e in enumerate(self.extras):
            z = LaurentPoly.var(n + k, m, self.base.field)
            out.append(z * e.function.den.lift(m) - e.function.num.lift(m))
        return out

    def describe(self) -> dict:
        names = self.base.names
        return {
            "id": self.id,
            "kind": self.kind,
            "coordinates": self.names,
            "functions": [f.to_string(names) for f in self.coordinate_functions],
            "factors": [e.factor for e in self.extras],
            "rank": self.rank,
            "basis": self.basis_flag,
        }

    def __eq__(self, other):
        return (isinstance(other, ToricEmbedding) and self.id == other.id and self.kind == other.kind
                and self.extras == other.extras and self.basis_flag == other.basis_flag
                and self.base == other.base)

    def __repr__(self):
        return f"ToricEmbedding({self.id!r}, rank={self.rank})"


@dataclass
class EmbeddingMorphism:
    source: str
    target: str
    matrix: tuple
    coefficients: tuple
    trop: TropMap


class LimitStatus(enum.Enum):
    LIFTED = "CompatibleLifted"
    NO_EVIDENCE = "CompatibleNoEvidence"
    OUT_OF_PREVARIETY = "CompatibleOutOfPrevariety"
    INCOMPATIBLE = "Incompatible"


@dataclass
class LimitCheckResult:
    status: LimitStatus
    arrow: int | None = None
    detail: str = ""
    product_point: ExtendedPoint | None = None


@dataclass
class MorphismReport:
    arrow: int
    checked: int
    failures: list = field(default_factory=list)
    coordinate_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.coordinate_failures


@dataclass
class SeparationWitness:
    node: str
    images: tuple[ExtendedPoint, ExtendedPoint]
    source: str  # "existing", "pool" or "random"
    function: RationalFunction | None = None
    attempts: int = 0


@dataclass
class SeparationFailure:
    attempts: int
    reason: str = "budget exhausted"


@dataclass
class StarWitness:
    node: str
    coefficient: Scalar
    exponent: tuple[int, ...]
    chart: int  # index in the node's fan of a cone on whose chart the monomial is regular
    created: bool = False


@dataclass
class ProbeReport:
    total: int
    tally: dict
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


class EmbeddingSystem:
    """Nodes, arrows and registered sample valuations.

    Mutation happens only through ``add_*``/``register`` and the
    constructions below; callers serialize writers.
    """

    def __init__(self, base: BaseChart):
        self.base = base
        self.nodes: dict[str, ToricEmbedding] = {}
        self.arrows: list[EmbeddingMorphism] = []
        self.valuations: list[PointValuation] = []
        self.nodes["base"] = ToricEmbedding("base", base, (), kind="base")

    @property
    def field(self) -> FieldConfig:
        return self.base.field

    def __eq__(self, other):
        return (isinstance(other, EmbeddingSystem) and self.base == other.base
                and self.nodes == other.nodes and self.arrows == other.arrows
                and self.valuations == other.valuations)

    def node(self, id: str) -> ToricEmbedding:
        try:
            return self.nodes[id]
        except KeyError:
            raise EmbeddingError(f"no node {id!r}") from None

    def _fresh_id(self, prefix: str) -> str:
        k = 1
        while f"{prefix}{k}" in self.nodes:
            k += 1
        return f"{prefix}{k}"

    def register(self, eta: PointValuation) -> int:
        if isinstance(eta, KPoint):
            eta = make_kpoint(eta.coords, self.base.gens, self.field)
            for node in self.nodes.values():
                for e in node.extras:
                    if e.function.den.evaluate(eta.coords).is_zero():
                        raise EmbeddingError(
                            f"denominator of {e.function.to_string()} vanishes at the new point")
        elif isinstance(eta, Weight):
            if len(eta.w) != self.base.rank:
                raise EmbeddingError("weight has the wrong length")
            eta = Weight(tuple(Fraction(x) for x in eta.w), eta.ambient_only)
        else:
            raise EmbeddingError(f"not a valuation: {eta!r}")
        self.valuations.append(eta)
        return len(self.valuations) - 1

    def kpoints(self) -> list[KPoint]:
        return [v for v in self.valuations if isinstance(v, KPoint)]

    def add_node(self, extras: Sequence[Extra], kind: str = "graph", id: str | None = None,
                 basis_flag: str | None = None) -> ToricEmbedding:
        extras = tuple(extras)
        for node in self.nodes.values():
            if node.extras == extras:
                return node
        nid = id or self._fresh_id("p" if kind == "product" else "g")
        if nid in self.nodes:
            raise EmbeddingError(f"duplicate node id {nid!r}")
        node = ToricEmbedding(nid, self.base, extras, basis_flag, kind)
        self.nodes[nid] = node
        return node

    def add_arrow(self, source: str, target: str, matrix, coefficients=None) -> int:
        s, t = self.node(source), self.node(target)
        A = tuple(tuple(int(x) for x in row) for row in matrix)
        if coefficients is None:
            coefficients = (self.field.one,) * t.rank
        coefficients = tuple(self.field.coerce(c) for c in coefficients)
        if len(coefficients) != t.rank:
            raise EmbeddingError("one coefficient per target coordinate is required")
        shift = []
        for c in coefficients:
            v = val(c, self.field)
            if v is INF:
                raise EmbeddingError("morphism coefficients must be nonzero")
            shift.append(v)
        trop = TropMap(A, s.fan, t.fan, tuple(shift))
        self.arrows.append(EmbeddingMorphism(source, target, A, coefficients, trop))
        return len(self.arrows) - 1

    def arrows_within(self, ids: Sequence[str]) -> list[int]:
        ids = set(ids)
        return [i for i, a in enumerate(self.arrows) if a.source in ids and a.target in ids]


# ---------------------------------------------------------------------------
# Constructions


def _projection_matrix(src: ToricEmbedding, tgt: ToricEmbedding) -> list[list[int]]:
    """Coordinate projection from ``src`` onto ``tgt`` (tgt's extras must occur in src)."""
    n = src.base.rank
    rows = [[int(j == i) for j in range(src.rank)] for i in range(n)]
    for e in tgt.extras:
        try:
            k = src.extras.index(e)
        except ValueError:
            raise EmbeddingError(f"{tgt.id} has a coordinate that {src.id} lacks") from None
        rows.append([int(j == n + k) for j in range(src.rank)])
    return rows


def product_embedding(S: EmbeddingSystem, a: str, b: str) -> tuple[str, int, int]:
    """The product node of ``a`` and ``b`` with its two projection arrows."""
    na, nb = S.node(a), S.node(b)
    if na.base is not nb.base:
        raise EmbeddingError("nodes belong to different base charts")
    extras = list(na.extras) + [e for e in nb.extras if e not in na.extras]
    node = S.add_node(extras, kind="product")
    ia = _ensure_arrow(S, node, na)
    ib = _ensure_arrow(S, node, nb)
    return node.id, ia, ib


def _ensure_arrow(S: EmbeddingSystem, src: ToricEmbedding, tgt: ToricEmbedding) -> int:
    A = tuple(map(tuple, _projection_matrix(src, tgt)))
    for i, arr in enumerate(S.arrows):
        if arr.source == src.id and arr.target == tgt.id and arr.matrix == A:
            return i
    return S.add_arrow(src.id, tgt.id, A)


def graph_embedding(S: EmbeddingSystem, node: str, f: RationalFunction, factor: str = "A1") -> tuple[str, int]:
    """Append the coordinate ``z = f`` to ``node``; returns the new node and its arrow to ``node``."""
    src = S.node(node)
    if f.num.is_zero():
        raise EmbeddingError("the zero function cannot be made a monomial")
    if f.nvars != S.base.rank or f.field != S.field:
        raise EmbeddingError("function does not live on the base torus")
    for i, eta in enumerate(S.kpoints()):
        if f.den.evaluate(eta.coords).is_zero():
            raise EmbeddingError(f"denominator {f.den.to_string(S.base.names)} vanishes at registered K-point {i}")
    new = S.add_node(list(src.extras) + [Extra(f, factor)], kind="graph")
    arrow = _ensure_arrow(S, new, src)
    return new.id, arrow


# ---------------------------------------------------------------------------
# Images of valuations


def coordinate_values(S: EmbeddingSystem, node: str, eta: PointValuation) -> list[ExtVal]:
    nd = S.node(node)
    n = S.base.rank
    if isinstance(eta, KPoint):
        out = [val(c, S.field) for c in eta.coords]
        for e in nd.extras:
            out.append(e.function.evaluate(eta.coords).valuation())
        return out
    out = [Fraction(x) for x in eta.w]
    for e in nd.extras:
        out.append(valuation_of(eta, e.function.num) - valuation_of(eta, e.function.den))
    assert len(out) == n + len(nd.extras)
    return out


def point_from_values(node: ToricEmbedding, values: Sequence[ExtVal]) -> ExtendedPoint:
    """The extended point with the given per-coordinate values.

    Base values must be finite; an infinite extra coordinate puts the point
    on the boundary ray of that factor.
    """
    n = node.base.rank
    m = node.rank
    if any(v is INF for v in values[:n]):
        raise EmbeddingError("a base coordinate has infinite value")
    gens = tuple(tuple(int(j == i) for j in range(m)) for i in range(n, m) if values[i] is INF)
    tau = cone(gens, m)
    if tau not in node.fan:
        raise EmbeddingError(f"the ambient fan of {node.id} has no stratum for this point")
    rep = [Fraction(0) if v is INF else v for v in values]
    return ExtendedPoint(node.fan, node.fan.index(tau), rep)


def trop_image_of_valuation(S: EmbeddingSystem, node: str, eta: PointValuation | int) -> ExtendedPoint:
    if isinstance(eta, int):
        eta = S.valuations[eta]
    return point_from_values(S.node(node), coordinate_values(S, node, eta))


def _monomial_value(coords: Sequence[Ratio], row: Sequence[int], coeff: Scalar, F: FieldConfig) -> Ratio:
    out = Ratio(coeff, F.one, F)
    for c, k in zip(coords, row):
        if k:
            out = out * c ** k
    return out


def verify_morphism(S: EmbeddingSystem, arrow: int) -> MorphismReport:
    """Check on every registered valuation that the arrow commutes with tropicalization.

    Coordinate compatibility of the underlying morphism is checked on the
    registered K-points as well.
    """
    arr = S.arrows[arrow]
    src, tgt = S.node(arr.source), S.node(arr.target)
    report = MorphismReport(arrow, 0)
    for i, eta in enumerate(S.valuations):
        expected = trop_image_of_valuation(S, tgt.id, eta)
        got = trop_map_apply(arr.trop, trop_image_of_valuation(S, src.id, eta))
        report.checked += 1
        if got != expected:
            report.failures.append({"valuation": i, "expected": expected, "got": got})
        if isinstance(eta, KPoint):
            svals = [f.evaluate(eta.coords) for f in src.coordinate_functions]
            tvals = [f.evaluate(eta.coords) for f in tgt.coordinate_functions]
            for j, (row, a) in enumerate(zip(arr.matrix, arr.coefficients)):
                try:
                    ok = _monomial_value(svals, row, a, S.field) == tvals[j]
                except Exception:
                    ok = False
                if not ok:
                    report.coordinate_failures.append({"valuation": i, "coordinate": j})
    return report


# ---------------------------------------------------------------------------
# Separation of points


def _same_valuation(a: PointValuation, b: PointValuation) -> bool:
    return type(a) is type(b) and a == b


def _candidate_pool(S: EmbeddingSystem, eta, eta2):
    n = S.base.rank
    F = S.field
    xs = LaurentPoly.variables(n, F)
    for i in range(n):
        seen = []
        for pt in (eta, eta2):
            if isinstance(pt, KPoint) and pt.coords[i] not in seen:
                seen.append(pt.coords[i])
                yield RationalFunction(xs[i] - pt.coords[i]), "pool"


def _random_candidates(S: EmbeddingSystem, seed: int):
    n = S.base.rank
    F = S.field
    xs = LaurentPoly.variables(n, F)
    rng = random.Random(seed)
    while True:
        coeffs = [rng.randint(-3, 3) for _ in range(n)]
        if not any(coeffs):
            continue
        f = LaurentPoly.const(rng.randint(-3, 3), n, F)
        for c, x in zip(coeffs, xs):
            f = f + c * x
        yield RationalFunction(f), "random"


def separate_points(S: EmbeddingSystem, eta: PointValuation | int, eta2: PointValuation | int,
                    budget: int = 5, seed: int = 0, search_existing: bool = True):
    """Find an embedding whose tropicalization tells ``eta`` and ``eta2`` apart.

    Tries the existing nodes first, then graph re-embeddings along
    ``x_i - c`` for coordinate values ``c`` of the two points, then seeded
    random affine functions.  At most ``budget`` candidate functions are
    tried; new graph nodes are attached to the base node.
    """
    if isinstance(eta, int):
        eta = S.valuations[eta]
    if isinstance(eta2, int):
        eta2 = S.valuations[eta2]
    if _same_valuation(eta, eta2):
        raise EmbeddingError("the two valuations coincide")
    if search_existing:
        for nid in S.nodes:
            a = trop_image_of_valuation(S, nid, eta)
            b = trop_image_of_valuation(S, nid, eta2)
            if a != b:
                return SeparationWitness(nid, (a, b), "existing")
    attempts = 0

    def candidates():
        yield from _candidate_pool(S, eta, eta2)
        yield from _random_candidates(S, seed)

    for f, origin in candidates():
        if attempts >= budget:
            break
        attempts += 1
        va = _function_value(S, f, eta)
        vb = _function_value(S, f, eta2)
        if va != vb:
            nid, _ = graph_embedding(S, "base", f)
            a = trop_image_of_valuation(S, nid, eta)
            b = trop_image_of_valuation(S, nid, eta2)
            return SeparationWitness(nid, (a, b), origin, f, attempts)
    return SeparationFailure(attempts)


def _function_value(S: EmbeddingSystem, f: RationalFunction, eta: PointValuation) -> ExtVal:
    if isinstance(eta, KPoint):
        return f.evaluate(eta.coords).valuation()
    return valuation_of(eta, f.num) - valuation_of(eta, f.den)


# ---------------------------------------------------------------------------
# Monomial witnesses


def star_witness(S: EmbeddingSystem, f: RationalFunction, factor: str = "A1") -> StarWitness:
    """A node on which ``f`` is the pullback of a monomial.

    Monomials in the base coordinates are witnessed by the base node on the
    torus chart.  Otherwise an existing coordinate equal to ``f`` is reused,
    or a graph re-embedding is built; the witness chart is the ray of the
    new coordinate, on which ``z`` is regular.
    """
    n = S.base.rank
    md = f.monomial_data()
    if md is not None:
        a, u = md
        base = S.node("base")
        return StarWitness("base", a, tuple(u), base.fan.index(cone((), n)))
    for nid, node in S.nodes.items():
        for k, e in enumerate(node.extras):
            if e.function.same_as(f):
                return _coordinate_witness(node, k)
    nid, _ = graph_embedding(S, "base", f, factor)
    node = S.node(nid)
    return _coordinate_witness(node, len(node.extras) - 1, created=True)


def _coordinate_witness(node: ToricEmbedding, k: int, created: bool = False) -> StarWitness:
    n = node.base.rank
    m = node.rank
    e = tuple(int(j == n + k) for j in range(m))
    ray = cone((e,), m)
    return StarWitness(node.id, node.base.field.one, e, node.fan.index(ray), created)


# ---------------------------------------------------------------------------
# Finite-stage inverse limits


def _blocks(node: ToricEmbedding, p: ExtendedPoint):
    """Split a point of ``node.fan`` into its base block and one block per extra."""
    n = node.base.rank
    base_map = TropMap.coordinate_projection(node.fan, node.base.fan, range(n))
    out = {"base": trop_map_apply(base_map, p)}
    for k, e in enumerate(node.extras):
        m = TropMap.coordinate_projection(node.fan, FACTOR_FANS[e.factor](), [n + k])
        out[e] = trop_map_apply(m, p)
    return out


def _assemble(node: ToricEmbedding, blocks: dict) -> ExtendedPoint:
    n = node.base.rank
    m = node.rank
    base_pt = blocks["base"]
    gens = [g + (0,) * (m - n) for g in base_pt.cone.generators]
    rep = list(base_pt.rep)
    for k, e in enumerate(node.extras):
        b = blocks[e]
        for g in b.cone.generators:
            v = [0] * m
            v[n + k] = g[0]
            gens.append(tuple(v))
        rep.append(b.rep[0])
    tau = cone(tuple(gens), m)
    return ExtendedPoint(node.fan, node.fan.index(tau), rep)


def _product_of(S: EmbeddingSystem, ids: Sequence[str]) -> ToricEmbedding:
    extras: list[Extra] = []
    for i in ids:
        for e in S.node(i).extras:
            if e not in extras:
                extras.append(e)
    for node in S.nodes.values():
        if list(node.extras) == extras:
            return node
    return ToricEmbedding("product(" + ",".join(ids) + ")", S.base, extras, kind="product")


def _membership_data(S: EmbeddingSystem, node: ToricEmbedding, use_linear_basis: bool):
    gens = node.ideal_gens
    flag = node.basis_flag
    if use_linear_basis and S.field.kind != "tadic" and gens and all(
            all(sum(e) <= 1 and min(e) >= 0 for e in g.exponents()) for g in gens):
        return linear_tropical_basis(gens), ASSERTED
    return gens, flag


def finite_stage_limit_check(S: EmbeddingSystem, D: Sequence[str], tuple_: dict,
                             use_linear_basis: bool = True) -> LimitCheckResult:
    """Check a tuple of extended points over the finite subdiagram ``D``.

    (a) every arrow of ``S`` inside ``D`` must carry the source entry to the
    target entry; (b) the entries are assembled into a point of the product
    embedding of ``D`` (coordinates shared by several nodes must agree, which
    is compatibility along the product's projections) and tested for
    membership in the tropicalization of the product.
    """
    ids = list(D)
    for i in ids:
        if i not in tuple_:
            raise EmbeddingError(f"tuple has no entry for node {i!r}")
        if tuple_[i].fan != S.node(i).fan:
            raise EmbeddingError(f"tuple entry for {i!r} is not on that node's fan")
    for a in S.arrows_within(ids):
        arr = S.arrows[a]
        if trop_map_apply(arr.trop, tuple_[arr.source]) != tuple_[arr.target]:
            return LimitCheckResult(LimitStatus.INCOMPATIBLE, a,
                                    f"arrow {arr.source} -> {arr.target} does not carry the entries")
    if not ids:
        return LimitCheckResult(LimitStatus.NO_EVIDENCE, None, "empty diagram")
    prod = _product_of(S, ids)
    blocks: dict = {}
    owner: dict = {}
    for i in ids:
        for key, pt in _blocks(S.node(i), tuple_[i]).items():
            if key in blocks and blocks[key] != pt:
                what = "base coordinates" if key == "base" else f"coordinate {key.function.to_string(S.base.names)}"
                return LimitCheckResult(
                    LimitStatus.INCOMPATIBLE, None,
                    f"{what} disagree between {owner[key]} and {i} (projections from {prod.id})")
            blocks.setdefault(key, pt)
            owner.setdefault(key, i)
    point = _assemble(prod, blocks)
    gens, flag = _membership_data(S, prod, use_linear_basis)
    result = extended_membership(gens, prod.fan, point, flag)
    status = {Membership.IN: LimitStatus.LIFTED,
              Membership.IN_PREVARIETY: LimitStatus.NO_EVIDENCE,
              Membership.OUT: LimitStatus.OUT_OF_PREVARIETY}[result]
    return LimitCheckResult(status, None, f"membership in {prod.id}: {result.value}", point)


def induced_tuple(S: EmbeddingSystem, D: Sequence[str], eta: PointValuation | int) -> dict:
    return {i: trop_image_of_valuation(S, i, eta) for i in D}


def surjectivity_probe(S: EmbeddingSystem, D: Sequence[str], k: int = 10,
                       use_linear_basis: bool = True) -> ProbeReport:
    """Run the limit check on tuples induced by the first ``k`` registered K-points."""
    tally = {s.value: 0 for s in LimitStatus}
    if not D:
        return ProbeReport(0, tally)
    pts = S.kpoints()
    if not pts:
        raise EmbeddingError("no registered K-points")
    report = ProbeReport(0, tally)
    for j in range(min(k, len(pts))):
        res = finite_stage_limit_check(S, D, induced_tuple(S, D, pts[j]), use_linear_basis)
        report.total += 1
        tally[res.status.value] += 1
        if res.status in (LimitStatus.INCOMPATIBLE, LimitStatus.OUT_OF_PREVARIETY):
            report.failures.append({"kpoint": j, "status": res.status.value,
                                    "arrow": res.arrow, "detail": res.detail})
    return report


__all__ = [
    "BaseChart", "Extra", "ToricEmbedding", "EmbeddingMorphism", "EmbeddingSystem",
    "LimitStatus", "LimitCheckResult", "MorphismReport", "SeparationWitness",
    "SeparationFailure", "StarWitness", "ProbeReport", "product_embedding",
    "graph_embedding", "trop_image_of_valuation", "verify_morphism", "separate_points",
    "star_witness", "finite_stage_limit_check", "surjectivity_probe", "induced_tuple",
    "coordinate_values", "point_from_values",
]
