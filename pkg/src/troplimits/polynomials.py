"""Laurent polynomials over a valued field, rational functions, tropical polynomials."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import ChartError, EmbeddingError, FieldMismatchError, ScalarError
from .scalars import INF, ExtVal, FieldConfig, Scalar, TPoly, ext_add, val


class LaurentPoly:
    """Immutable Laurent polynomial in ``nvars`` variables over ``field``."""

    __slots__ = ("field", "nvars", "terms", "_hash")

    def __init__(self, terms: Mapping | Iterable, nvars: int, field: FieldConfig):
        acc: dict[tuple[int, ...], Scalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ScalarError(f"exponent {list(exp)} does not have {nvars} entries")
            c = field.coerce(c)
            acc[exp] = acc[exp] + c if exp in acc else c
        self.field = field
        self.nvars = nvars
        self.terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def const(cls, c, nvars: int, field: FieldConfig) -> "LaurentPoly":
        return cls({(0,) * nvars: c}, nvars, field)

    @classmethod
    def var(cls, i: int, nvars: int, field: FieldConfig) -> "LaurentPoly":
        return cls({tuple(int(j == i) for j in range(nvars)): 1}, nvars, field)

    @classmethod
    def monomial(cls, exp: Sequence[int], field: FieldConfig, c=1) -> "LaurentPoly":
        return cls({tuple(exp): c}, len(exp), field)

    @classmethod
    def variables(cls, nvars: int, field: FieldConfig) -> list["LaurentPoly"]:
        return [cls.var(i, nvars, field) for i in range(nvars)]

    # -- queries ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def exponents(self) -> list[tuple[int, ...]]:
        return [e for e, _ in self.terms]

    def coefficient(self, exp) -> Scalar:
        for e, c in self.terms:
            if e == tuple(exp):
                return c
        return self.field.zero

    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)

    # -- arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.field != self.field:
                raise FieldMismatchError(f"field mismatch: {self.field} vs {other.field}")
            if other.nvars != self.nvars:
                raise ScalarError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return LaurentPoly.const(other, self.nvars, self.field)

    def __add__(self, other):
        other = self._coerce(other)
        return LaurentPoly(list(self.terms) + list(other.terms), self.nvars, self.field)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([(e, -c) for e, c in self.terms], self.nvars, self.field)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return LaurentPoly(out, self.nvars, self.field)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ScalarError("only monomials can be inverted")
            (e, c), = self.terms
            return LaurentPoly.monomial([-x for x in e], self.field, _inverse(c)) ** (-k)
        out = LaurentPoly.const(1, self.nvars, self.field)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, m: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial ``x^m``."""
        return LaurentPoly([(tuple(a + b for a, b in zip(e, m)), c) for e, c in self.terms],
                           self.nvars, self.field)

    def lift(self, nvars: int, positions: Sequence[int] | None = None) -> "LaurentPoly":
        """Re-read in ``nvars`` variables, variable ``i`` becoming ``positions[i]``."""
        pos = list(positions) if positions is not None else list(range(self.nvars))
        out = []
        for e, c in self.terms:
            ne = [0] * nvars
            for i, x in enumerate(e):
                ne[pos[i]] += x
            out.append((tuple(ne), c))
        return LaurentPoly(out, nvars, self.field)

    def evaluate(self, point: Sequence[Scalar]) -> "Ratio":
        """Value at a point of the torus, as an exact fraction of field elements."""
        if len(point) != self.nvars:
            raise ScalarError(f"point has {len(point)} coordinates, expected {self.nvars}")
        F = self.field
        pt = [F.coerce(x) for x in point]
        if not self.terms:
            return Ratio(F.zero, F.one, F)
        low = [min(0, min(e[i] for e, _ in self.terms)) for i in range(self.nvars)]
        for i, x in enumerate(pt):
            if low[i] < 0 and not x:
                raise ScalarError(f"coordinate {i} is zero but appears with a negative exponent")
        num = F.zero
        for e, c in self.terms:
            term = c
            for x, k, l in zip(pt, e, low):
                if k - l:
                    term = term * x ** (k - l)
            num = num + term
        den = F.one
        for x, l in zip(pt, low):
            if l:
                den = den * x ** (-l)
        return Ratio(num, den, F)

    # -- misc -----------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, LaurentPoly) and self.nvars == other.nvars
                and self.field == other.field and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.field, self.terms))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self.to_string()!r})"

    def to_string(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names is not None else default_names(self.nvars)
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            cs = f"({c})" if isinstance(c, TPoly) else str(c)
            if not mono:
                parts.append(cs)
            elif c == 1 or (isinstance(c, TPoly) and c == TPoly.const(1)):
                parts.append(mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)


def default_names(n: int) -> list[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


def _inverse(c: Scalar) -> Scalar:
    return c.inverse() if isinstance(c, TPoly) else 1 / c


@dataclass(frozen=True)
class Ratio:
    """An element ``num/den`` of the fraction field, ``den != 0``."""

    num: Scalar
    den: Scalar
    field: FieldConfig

    def __post_init__(self):
        if not self.den:
            raise ScalarError("zero denominator")

    def is_zero(self) -> bool:
        return not self.num

    def valuation(self) -> ExtVal:
        v = val(self.num, self.field)
        return INF if v is INF else v - val(self.den, self.field)

    def __mul__(self, other: "Ratio") -> "Ratio":
        return Ratio(self.num * other.num, self.den * other.den, self.field)

    def __truediv__(self, other: "Ratio") -> "Ratio":
        if other.is_zero():
            raise ScalarError("division by zero")
        return Ratio(self.num * other.den, self.den * other.num, self.field)

    def __pow__(self, k: int) -> "Ratio":
        if k < 0:
            if self.is_zero():
                raise ScalarError("zero raised to a negative power")
            return Ratio(self.den ** (-k), self.num ** (-k), self.field)
        return Ratio(self.num ** k, self.den ** k, self.field)

    def scale(self, a: Scalar) -> "Ratio":
        return Ratio(self.num * a, self.den, self.field)

    def __eq__(self, other):
        if not isinstance(other, Ratio):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("Ratio is not hashable")


class RationalFunction:
    """``num / den`` on the base torus; ``den`` is expected to be a unit on X."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.const(1, num.nvars, num.field)
        if num.field != den.field or num.nvars != den.nvars:
            raise EmbeddingError("numerator and denominator live in different rings")
        if den.is_zero():
            raise EmbeddingError("zero denominator")
        self.num = num
        self.den = den

    @property
    def nvars(self) -> int:
        return self.num.nvars

    @property
    def field(self) -> FieldConfig:
        return self.num.field

    def evaluate(self, point) -> Ratio:
        d = self.den.evaluate(point)
        if d.is_zero():
            raise EmbeddingError(f"denominator {self.den.to_string()} vanishes at the point")
        return self.num.evaluate(point) / d

    def monomial_data(self):
        """``(a, u)`` if this is the monomial ``a x^u``, else ``None``."""
        if not (self.num.is_monomial() and self.den.is_monomial()):
            return None
        (e1, c1), = self.num.terms
        (e2, c2), = self.den.terms
        if isinstance(c2, TPoly) and not c2.is_monomial():
            return None
        return c1 * _inverse(c2), tuple(a - b for a, b in zip(e1, e2))

    def same_as(self, other: "RationalFunction") -> bool:
        """Equality in the fraction field of the Laurent ring (not modulo an ideal)."""
        return self.num * other.den == other.num * self.den

    def __eq__(self, other):
        return (isinstance(other, RationalFunction) and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def to_string(self, names=None) -> str:
        n = self.num.to_string(names)
        if self.den == LaurentPoly.const(1, self.nvars, self.field):
            return n
        return f"({n}) / ({self.den.to_string(names)})"

    def __repr__(self):
        return f"RationalFunction({self.to_string()!r})"


# ---------------------------------------------------------------------------
# Tropical polynomials


@dataclass(frozen=True)
class TropicalPolynomial:
    """``min_u (c_u + <u, w>)`` with finite coefficients ``c_u``."""

    terms: tuple[tuple[Fraction, tuple[int, ...]], ...]

    @property
    def nvars(self) -> int:
        return len(self.terms[0][1]) if self.terms else 0

    def scaled(self, c: Fraction) -> "TropicalPolynomial":
        return TropicalPolynomial(tuple((a + c, u) for a, u in self.terms))


def tropicalize_poly(f: LaurentPoly) -> TropicalPolynomial:
    if f.is_zero():
        raise ScalarError("cannot tropicalize the zero polynomial")
    return TropicalPolynomial(tuple((val(c, f.field), e) for e, c in f.terms))


def trop_eval_torus(F: TropicalPolynomial, w: Sequence) -> tuple[ExtVal, int]:
    """``(min, number of terms attaining it)`` at a point of the torus."""
    vals = [c + sum(a * b for a, b in zip(u, w)) for c, u in F.terms]
    m = min(vals)
    return m, sum(1 for v in vals if v == m)


def trop_eval_values(values: Sequence[ExtVal]) -> tuple[ExtVal, int]:
    m = INF
    for v in values:
        if v < m:
            m = v
    return m, sum(1 for v in values if v == m)


def chart_exponent_check(f: LaurentPoly, generators) -> None:
    for e in f.exponents():
        for g in generators:
            if sum(a * b for a, b in zip(e, g)) < 0:
                raise ChartError(f"exponent {list(e)} of {f.to_string()} is negative on {list(g)}")


def term_values(F: TropicalPolynomial, monomial_value) -> list[ExtVal]:
    return [ext_add(c, monomial_value(u)) for c, u in F.terms]
