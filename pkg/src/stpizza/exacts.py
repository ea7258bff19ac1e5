"""Exact exponents, generalized polynomials and affine exponent functions.

Exponents live in Q ∪ {∞}.  Finite exponents are :class:`fractions.Fraction`
and the infinite exponent is ``math.inf``; Python orders the two kinds
correctly against each other, so ``min``/``max``/``sorted`` just work.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import ArityError, DomainError, InvalidRational

INF = math.inf
Exp = Union[Fraction, float]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def is_inf(e) -> bool:
    return isinstance(e, float) and math.isinf(e) and e > 0


def as_exp(value) -> Exp:
    """Coerce an int, Fraction, ``math.inf`` or string into an exponent."""
    if isinstance(value, str):
        return parse_exp(value)
    if isinstance(value, float):
        if is_inf(value):
            return INF
        raise InvalidRational(f"floating point exponent {value!r} is not exact")
    return Fraction(value)


def parse_rational(text: str, location: str = "") -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise InvalidRational(f"not an exact rational: {text!r}", location)
    num, _, den = text.strip().partition("/")
    if den and int(den) == 0:
        raise InvalidRational(f"zero denominator in {text!r}", location)
    return Fraction(int(num), int(den) if den else 1)


def parse_exp(text: str, location: str = "") -> Exp:
    if isinstance(text, str) and text.strip() == "inf":
        return INF
    return parse_rational(text, location)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_exp(e: Exp) -> str:
    return "inf" if is_inf(e) else format_rational(e)


def half(e: Exp) -> Exp:
    return INF if is_inf(e) else Fraction(e) / 2


def _is_zero(c) -> bool:
    if isinstance(c, tuple):
        return all(x == 0 for x in c)
    return c == 0


class GPoly:
    """A finite sum ``Σ c·t^e`` with rational exponents.

    Scalar polynomials carry ``Fraction`` coefficients (``dim is None``);
    vector polynomials carry tuples of ``Fraction`` of length ``dim``.
    Terms are kept sorted by exponent with zero coefficients dropped, so two
    equal polynomials always have identical ``terms``.
    """

    __slots__ = ("terms", "dim", "_hash")

    def __init__(self, terms: Mapping | Iterable = (), dim: int | None = None):
        acc: dict[Fraction, object] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            if is_inf(e):
                raise ValueError("a generalized polynomial has finite exponents only")
            e = Fraction(e)
            if dim is None:
                c = Fraction(c)
                acc[e] = acc.get(e, 0) + c
            else:
                c = tuple(Fraction(x) for x in c)
                if len(c) != dim:
                    raise ArityError(f"coefficient of length {len(c)} in a {dim}-vector")
                prev = acc.get(e)
                acc[e] = c if prev is None else tuple(a + b for a, b in zip(prev, c))
        self.terms = tuple((e, acc[e]) for e in sorted(acc) if not _is_zero(acc[e]))
        self.dim = dim
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def monomial(cls, e, c=1) -> "GPoly":
        return cls({Fraction(e): Fraction(c)})

    @classmethod
    def const(cls, c) -> "GPoly":
        return cls({Fraction(0): Fraction(c)})

    @classmethod
    def t(cls) -> "GPoly":
        return cls.monomial(1)

    @classmethod
    def zero(cls, dim: int | None = None) -> "GPoly":
        return cls((), dim)

    @classmethod
    def from_components(cls, comps: Sequence["GPoly"]) -> "GPoly":
        n = len(comps)
        acc: dict[Fraction, list] = {}
        for i, p in enumerate(comps):
            if p.dim is not None:
                raise ArityError("components must be scalar")
            for e, c in p.terms:
                acc.setdefault(e, [Fraction(0)] * n)[i] = c
        return cls(((e, tuple(v)) for e, v in acc.items()), n)

    # -- structure ----------------------------------------------------
    @property
    def is_scalar(self) -> bool:
        return self.dim is None

    def is_zero(self) -> bool:
        return not self.terms

    def component(self, i: int) -> "GPoly":
        if self.dim is None:
            raise ArityError("scalar polynomial has no components")
        return GPoly((e, c[i]) for e, c in self.terms)

    def components(self) -> list["GPoly"]:
        return [self.component(i) for i in range(self.dim)]

    def coeff(self, e):
        e = Fraction(e)
        for ee, c in self.terms:
            if ee == e:
                return c
        return Fraction(0) if self.dim is None else (Fraction(0),) * self.dim

    def ord(self) -> Exp:
        return self.terms[0][0] if self.terms else INF

    def leading(self):
        return self.terms[0] if self.terms else None

    def sign_at_zero(self) -> int:
        """Sign of p(t) for all small t > 0: -1, 0 or +1."""
        if self.dim is not None:
            raise ArityError("sign is defined for scalar polynomials only")
        if not self.terms:
            return 0
        return 1 if self.terms[0][1] > 0 else -1

    def exponents(self) -> list[Fraction]:
        return [e for e, _ in self.terms]

    def map_terms(self, fn) -> "GPoly":
        """Rebuild from ``fn(e, c) -> (e', c')`` applied to every term."""
        return GPoly((fn(e, c) for e, c in self.terms), self.dim)

    # -- arithmetic ---------------------------------------------------
    def _check(self, other: "GPoly"):
        if self.dim != other.dim:
            raise ArityError(f"arity mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        if not isinstance(other, GPoly):
            other = GPoly.const(other) if self.dim is None else NotImplemented
            if other is NotImplemented:
                return other
        self._check(other)
        return GPoly(list(self.terms) + list(other.terms), self.dim)

    __radd__ = __add__

    def __neg__(self):
        if self.dim is None:
            return GPoly(((e, -c) for e, c in self.terms))
        return GPoly(((e, tuple(-x for x in c)) for e, c in self.terms), self.dim)

    def __sub__(self, other):
        if not isinstance(other, GPoly):
            if self.dim is not None:
                return NotImplemented
            other = GPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if self.dim is None:
                return GPoly(((e, c * other) for e, c in self.terms))
            return GPoly(((e, tuple(x * other for x in c)) for e, c in self.terms), self.dim)
        if not isinstance(other, GPoly):
            return NotImplemented
        if self.dim is not None and other.dim is not None:
            raise ArityError("product of two vectors; use inner()")
        if self.dim is not None:
            return other * self
        out = []
        if other.dim is None:
            for e1, c1 in self.terms:
                for e2, c2 in other.terms:
                    out.append((e1 + e2, c1 * c2))
            return GPoly(out)
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out.append((e1 + e2, tuple(c1 * x for x in c2)))
        return GPoly(out, other.dim)

    __rmul__ = __mul__

    def inner(self, other: "GPoly") -> "GPoly":
        if self.dim is None or other.dim is None:
            raise ArityError("inner product needs two vectors")
        self._check(other)
        out = []
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                s = sum((a * b for a, b in zip(c1, c2)), Fraction(0))
                if s:
                    out.append((e1 + e2, s))
        return GPoly(out)

    def norm2(self) -> "GPoly":
        return self.inner(self)

    # -- misc ---------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, GPoly):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, self.terms))
        return self._hash

    def __repr__(self):
        return f"GPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            cs = "(" + ", ".join(format_rational(x) for x in c) + ")" if self.dim else format_rational(c)
            es = format_rational(e)
            parts.append(cs if e == 0 else f"{cs}*t^{es if e.denominator == 1 else '(' + es + ')'}")
        return " + ".join(parts)

    def to_json(self) -> list:
        if self.dim is None:
            return [[format_rational(e), format_rational(c)] for e, c in self.terms]
        return [[format_rational(e), [format_rational(x) for x in c]] for e, c in self.terms]

    @classmethod
    def from_json(cls, data, dim: int | None = None, location: str = "") -> "GPoly":
        if not isinstance(data, list):
            raise InvalidRational("a polynomial must be a list of [exponent, coefficient] pairs", location)
        terms = []
        for k, pair in enumerate(data):
            loc = f"{location}[{k}]"
            if not isinstance(pair, list) or len(pair) != 2:
                raise InvalidRational("expected an [exponent, coefficient] pair", loc)
            e = parse_rational(pair[0], loc)
            if dim is None:
                terms.append((e, parse_rational(pair[1], loc)))
            else:
                if not isinstance(pair[1], list) or len(pair[1]) != dim:
                    raise InvalidRational(f"expected {dim} coefficients", loc)
                terms.append((e, tuple(parse_rational(x, loc) for x in pair[1])))
        return cls(terms, dim)


def series_divide(num: GPoly, den: GPoly, precision: Exp, max_terms: int = 64):
    """Quotient ``num/den`` as a truncated generalized series.

    Returns ``(quotient, exact)``; when not exact, the discarded tail has
    order strictly greater than ``precision``.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    e_d, c_d = den.terms[0]
    quotient: list = []
    rem = num
    for _ in range(max_terms):
        if rem.is_zero():
            return GPoly(quotient), True
        e_r, c_r = rem.terms[0]
        if e_r - e_d > precision:
            break
        term = GPoly.monomial(e_r - e_d, c_r / c_d)
        quotient.append(term.terms[0])
        rem = rem - term * den
    return GPoly(quotient), rem.is_zero()


@dataclass(frozen=True)
class ExpInterval:
    lo: Exp
    hi: Exp

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def spanning(cls, a: Exp, b: Exp) -> "ExpInterval":
        return cls(min(a, b), max(a, b))

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, q) -> bool:
        return self.lo <= q <= self.hi

    def __str__(self):
        if self.is_point:
            return "{" + format_exp(self.lo) + "}"
        return f"[{format_exp(self.lo)}, {format_exp(self.hi)}]"


@dataclass(frozen=True)
class AffineFn:
    """``q ↦ a·q + b`` on an exponent interval, with ``a·∞ = ∞`` for ``a > 0``."""

    a: Fraction
    b: Fraction
    domain: ExpInterval

    def __post_init__(self):
        if self.a < 0 and is_inf(self.domain.hi):
            raise DomainError("a decreasing width law cannot reach the infinite exponent")

    @classmethod
    def constant(cls, value: Exp, q: Exp) -> "AffineFn":
        return cls(Fraction(0), Fraction(value), ExpInterval(q, q))

    def __call__(self, q: Exp) -> Exp:
        if q not in self.domain:
            raise DomainError(f"{format_exp(q)} outside {self.domain}")
        if is_inf(q):
            if self.a > 0:
                return INF
            if self.a == 0:
                return self.b
            raise DomainError("negative slope at the infinite exponent")
        return self.a * q + self.b

    def same_law(self, other: "AffineFn") -> bool:
        return self.a == other.a and self.b == other.b

    def __str__(self):
        if self.a == 0:
            return format_rational(self.b)
        parts = "q" if self.a == 1 else f"{format_rational(self.a)}q"
        if self.b:
            parts += f" {'+' if self.b > 0 else '-'} {format_rational(abs(self.b))}"
        return parts


def gp_ord(p: GPoly) -> Exp:
    return p.ord()


def gp_sign_at_zero(p: GPoly) -> int:
    return p.sign_at_zero()


def affine_eval(f: AffineFn, q: Exp) -> Exp:
    return f(q)
