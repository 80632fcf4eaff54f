"""Valued scalars and extended values.

Three kinds of valued field are supported, all with exact arithmetic:

* ``trivial``: the rationals with the trivial valuation,
* ``padic:p``: the rationals with the ``p``-adic valuation,
* ``tadic``: Laurent polynomials in ``t`` over the rationals, valued by the
  lowest exponent of ``t`` (a subring of the Laurent series field).

Extended values live in ``Q ∪ {+inf}``; the point at infinity is the
singleton :data:`INF`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

from sympy import isprime

from .errors import FieldMismatchError, ScalarError


@total_ordering
class _Infinity:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("troplimits.INF")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

ExtVal = Union[Fraction, _Infinity]


def is_inf(x) -> bool:
    return x is INF


def ext(x) -> ExtVal:
    """Coerce ints, Fractions, ``"p/q"`` strings and ``"inf"`` to an ExtVal."""
    if x is INF:
        return INF
    if isinstance(x, str):
        if x.strip() == "inf":
            return INF
        return Fraction(x)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Fraction(x)
    raise ScalarError(f"not an extended value: {x!r}")


def ext_add(x: ExtVal, y: ExtVal) -> ExtVal:
    if x is INF or y is INF:
        return INF
    return x + y


def ext_min(x: ExtVal, y: ExtVal) -> ExtVal:
    if x is INF:
        return y
    if y is INF:
        return x
    return min(x, y)


def ext_neg_shift(x: ExtVal, y: Fraction) -> ExtVal:
    """``x - y`` for finite ``y``."""
    return INF if x is INF else x - y


# ---------------------------------------------------------------------------
# Laurent polynomials in t


class TPoly:
    """Immutable Laurent polynomial in ``t`` with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        acc: dict[int, Fraction] = {}
        if isinstance(terms, dict):
            items = terms.items()
        elif terms is None:
            items = ()
        else:
            items = terms
        for e, c in items:
            if isinstance(e, bool) or not isinstance(e, int):
                raise ScalarError(f"t-exponent must be an integer, got {e!r}")
            c = Fraction(c)
            acc[e] = acc.get(e, Fraction(0)) + c
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        self._hash = None

    @classmethod
    def const(cls, c) -> "TPoly":
        return cls({0: c})

    @classmethod
    def t(cls, e: int = 1, c=1) -> "TPoly":
        return cls({e: c})

    @property
    def terms(self) -> tuple:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def order(self) -> ExtVal:
        return INF if not self._terms else Fraction(self._terms[0][0])

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __add__(self, other):
        other = _as_tpoly(other)
        if other is NotImplemented:
            return other
        return TPoly(list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self):
        return TPoly([(e, -c) for e, c in self._terms])

    def __sub__(self, other):
        other = _as_tpoly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_tpoly(other)
        if other is NotImplemented:
            return other
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = TPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "TPoly":
        """Inverse of a unit of the Laurent ring (a nonzero monomial)."""
        if not self.is_monomial():
            raise ScalarError(f"{self} is not a unit of Q[t, 1/t]")
        (e, c), = self._terms
        return TPoly({-e: 1 / c})

    def __eq__(self, other):
        other = _as_tpoly(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("TPoly", self._terms))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"TPoly({dict(self._terms)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms:
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"t^{e}")
            else:
                parts.append(f"{c}*t^{e}")
        return " + ".join(parts)


def _as_tpoly(x):
    if isinstance(x, TPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return TPoly.const(x)
    return NotImplemented


Scalar = Union[Fraction, TPoly]


# ---------------------------------------------------------------------------
# Fields


@dataclass(frozen=True)
class FieldConfig:
    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("trivial", "padic", "tadic"):
            raise ScalarError(f"unknown field kind {self.kind!r}")
        if self.kind == "padic":
            if not isinstance(self.p, int) or not isprime(self.p):
                raise ScalarError(f"p-adic field needs a prime, got {self.p!r}")
        elif self.p is not None:
            raise ScalarError(f"field kind {self.kind!r} takes no prime")

    @classmethod
    def parse(cls, text: str) -> "FieldConfig":
        """Parse ``trivial``, ``padic:<p>`` or ``tadic``."""
        text = text.strip()
        if text.startswith("padic:"):
            try:
                p = int(text.split(":", 1)[1])
            except ValueError:
                raise ScalarError(f"bad prime in {text!r}") from None
            return cls("padic", p)
        return cls(text)

    def __str__(self):
        return f"padic:{self.p}" if self.kind == "padic" else self.kind

    @property
    def zero(self) -> Scalar:
        return TPoly() if self.kind == "tadic" else Fraction(0)

    @property
    def one(self) -> Scalar:
        return TPoly.const(1) if self.kind == "tadic" else Fraction(1)

    def uniformizer(self) -> Scalar:
        """An element of valuation 1 (``p`` or ``t``); trivial fields have none."""
        if self.kind == "padic":
            return Fraction(self.p)
        if self.kind == "tadic":
            return TPoly.t(1)
        raise ScalarError("the trivially valued field has no uniformizer")

    def coerce(self, a) -> Scalar:
        """Convert an int/Fraction/str (or TPoly for ``tadic``) into a scalar."""
        if isinstance(a, bool):
            raise ScalarError(f"not a scalar: {a!r}")
        if self.kind == "tadic":
            if isinstance(a, TPoly):
                return a
            if isinstance(a, (int, Fraction)):
                return TPoly.const(a)
            if isinstance(a, str):
                return TPoly.const(Fraction(a))
            raise ScalarError(f"not a t-adic scalar: {a!r}")
        if isinstance(a, TPoly):
            if len(a.terms) == 0:
                return Fraction(0)
            if len(a.terms) == 1 and a.terms[0][0] == 0:
                return a.terms[0][1]
            raise ScalarError(f"{a} is not a rational number (field {self})")
        if isinstance(a, (int, Fraction)):
            return Fraction(a)
        if isinstance(a, str):
            try:
                return Fraction(a)
            except ValueError:
                raise ScalarError(f"malformed rational {a!r}") from None
        raise ScalarError(f"not a scalar for field {self}: {a!r}")

    def check(self, a) -> Scalar:
        """Return ``a`` if it already is a scalar of this field, else raise."""
        if self.kind == "tadic":
            if not isinstance(a, TPoly):
                raise ScalarError(f"expected a t-adic scalar, got {a!r}")
        elif not isinstance(a, Fraction):
            raise ScalarError(f"expected a rational scalar for {self}, got {a!r}")
        return a


TRIVIAL = FieldConfig("trivial")
TADIC = FieldConfig("tadic")


def padic(p: int) -> FieldConfig:
    return FieldConfig("padic", p)


def _vp(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def val(a: Scalar, F: FieldConfig) -> ExtVal:
    """Valuation of ``a`` in ``F``; ``val(0) = INF``."""
    a = F.check(a)
    if F.kind == "tadic":
        return a.order()
    if a == 0:
        return INF
    if F.kind == "trivial":
        return Fraction(0)
    return Fraction(_vp(abs(a.numerator), F.p) - _vp(a.denominator, F.p))


def is_zero(a: Scalar) -> bool:
    return not a


def scalar_add(a: Scalar, b: Scalar, F: FieldConfig) -> Scalar:
    return F.check(a) + F.check(b)


def scalar_mul(a: Scalar, b: Scalar, F: FieldConfig) -> Scalar:
    return F.check(a) * F.check(b)


def scalar_neg(a: Scalar, F: FieldConfig) -> Scalar:
    return -F.check(a)


def scalar_sub(a: Scalar, b: Scalar, F: FieldConfig) -> Scalar:
    return F.check(a) - F.check(b)


def same_field(F: FieldConfig, G: FieldConfig) -> None:
    if F != G:
        raise FieldMismatchError(f"field mismatch: {F} vs {G}")
