"""Exact rational rings used throughout the package.

Four coefficient rings are provided, all immutable and exact:

* :class:`YPoly` -- Laurent polynomials in ``y`` over Q.
* :class:`FracExpPoly` -- sparse polynomials with rational exponents, i.e.
  elements of Q[t^(1/e), t^(-1/e)] for a common denominator ``e`` that is
  never fixed in advance.
* :class:`XSeries` -- elements of Q[x]/(x^(n+1)), the rational cohomology
  ring of P^n.
* :class:`XYSeries` -- the same truncated ring with y-polynomial
  coefficients.

Rationals are plain :class:`fractions.Fraction` instances.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .errors import HMError

__all__ = [
    "Fraction",
    "FracExpPoly",
    "XSeries",
    "XYSeries",
    "YPoly",
    "format_rational",
    "frac_add",
    "frac_common_denominator",
    "frac_mul",
    "parse_rational",
    "qy_series",
    "series_add",
    "series_inv",
    "series_mul",
    "series_substitute_scaled",
    "todd_coefficients",
]

RationalLike = Union[int, Fraction, str]


def parse_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: every value in this package is exact.
    """
    if isinstance(value, bool):
        raise HMError(f"not a rational number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise HMError(f"not a rational number: {value!r}") from exc
    raise HMError(f"not an exact rational: {value!r}")


def format_rational(q: Fraction | int) -> str:
    """Render ``q`` as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(q))


# ---------------------------------------------------------------------------
# Sparse polynomials


class _SparsePoly:
    """Sparse map exponent -> nonzero rational coefficient.

    Subclasses fix the exponent type and the printed variable name.
    """

    __slots__ = ("_terms", "_hash")
    var = "?"

    def __init__(self, terms: Mapping | Iterable | None = None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exp, coeff in items:
                exp = self._coerce_exponent(exp)
                acc[exp] = acc.get(exp, 0) + parse_rational(coeff)
        self._terms = {e: Fraction(c) for e, c in acc.items() if c != 0}
        self._hash = None

    @staticmethod
    def _coerce_exponent(exp):
        raise NotImplementedError

    @classmethod
    def _from_clean(cls, terms: dict):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: RationalLike):
        return cls({0: c})

    @classmethod
    def monomial(cls, exp, coeff: RationalLike = 1):
        return cls({exp: coeff})

    # -- access

    def coeff(self, exp) -> Fraction:
        return self._terms.get(self._coerce_exponent(exp), Fraction(0))

    def items(self) -> list:
        """Terms as ``(exponent, coefficient)`` pairs in ascending order."""
        return sorted(self._terms.items())

    def exponents(self) -> list:
        return sorted(self._terms)

    def __iter__(self) -> Iterator:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def constant_term(self) -> Fraction:
        return self._terms.get(0, Fraction(0))

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._terms)

    def min_exponent(self):
        if not self._terms:
            raise HMError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exponent(self):
        if not self._terms:
            raise HMError("zero polynomial has no exponents")
        return max(self._terms)

    def total_coefficient(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    # -- arithmetic

    def _lift(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return type(self).constant(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return self._from_clean(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._from_clean({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return self._from_clean({})
            return self._from_clean({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, type(self)):
            return NotImplemented
        terms: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                terms[e] = terms.get(e, 0) + c1 * c2
        return self._from_clean({e: c for e, c in terms.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise HMError("only nonnegative integer powers are supported")
        result = type(self).constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exp):
        """Multiply by the monomial ``var^exp``."""
        exp = self._coerce_exponent(exp)
        return self._from_clean({e + exp: c for e, c in self._terms.items()})

    # -- comparison

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    # -- printing

    def _format_power(self, exp) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.items():
            mag = abs(c)
            if exp == 0:
                body = format_rational(mag)
            else:
                power = self._format_power(exp)
                if mag == 1:
                    body = power
                elif mag.denominator == 1:
                    body = f"{mag}{power}"
                else:
                    body = f"({mag}){power}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class YPoly(_SparsePoly):
    """Laurent polynomial in ``y`` with rational coefficients."""

    __slots__ = ()
    var = "y"

    @staticmethod
    def _coerce_exponent(exp) -> int:
        if isinstance(exp, bool) or not isinstance(exp, (int, Fraction)):
            exp = int(exp)
        if isinstance(exp, Fraction):
            if exp.denominator != 1:
                raise HMError("y-exponents must be integers")
            exp = exp.numerator
        return int(exp)

    @classmethod
    def gen(cls) -> YPoly:
        """The variable ``y`` itself."""
        return cls({1: 1})

    def degree(self) -> int:
        return self.max_exponent() if self._terms else -1

    def evaluate(self, y: RationalLike) -> Fraction:
        y = parse_rational(y)
        total = Fraction(0)
        for e, c in self._terms.items():
            if e < 0 and y == 0:
                raise HMError("cannot evaluate a Laurent term at y = 0")
            total += c * y**e
        return total

    def _format_power(self, exp: int) -> str:
        if exp == 1:
            return "y"
        if exp < 0:
            return f"y^{{{exp}}}"
        return f"y^{exp}"

    def to_json(self) -> dict:
        return {str(e): format_rational(c) for e, c in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> YPoly:
        return cls({int(e): c for e, c in data.items()})


class FracExpPoly(_SparsePoly):
    """Polynomial with rational exponents, printed in the variable ``t``.

    Exponents are stored as reduced fractions; the common denominator is
    derived on demand by :meth:`common_denominator`.
    """

    __slots__ = ()
    var = "t"

    @staticmethod
    def _coerce_exponent(exp) -> Fraction:
        return parse_rational(exp)

    def common_denominator(self) -> int:
        return math.lcm(1, *(e.denominator for e in self._terms))

    def _format_power(self, exp: Fraction) -> str:
        if exp == 1:
            return self.var
        if exp.denominator == 1:
            return f"{self.var}^{exp.numerator}"
        return f"{self.var}^{{{exp}}}"

    def format(self, var: str = "t") -> str:
        """Render with a different variable name (``t``, ``ỹ`` ...)."""
        text = str(self)
        return text if var == "t" else text.replace("t", var)

    def to_json(self) -> dict:
        return {format_rational(e): format_rational(c) for e, c in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> FracExpPoly:
        return cls({parse_rational(e): c for e, c in data.items()})


def frac_add(a: FracExpPoly, b: FracExpPoly) -> FracExpPoly:
    return a + b


def frac_mul(a: FracExpPoly, b: FracExpPoly) -> FracExpPoly:
    return a * b


def frac_common_denominator(a: FracExpPoly) -> int:
    return a.common_denominator()


# ---------------------------------------------------------------------------
# Truncated power series


class _TruncatedSeries:
    """Common arithmetic for series truncated above ``x^order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        coeffs = [self._coerce(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise HMError("truncation order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [self._zero()] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    # subclass hooks
    @staticmethod
    def _zero():
        raise NotImplementedError

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    @classmethod
    def one(cls, order: int):
        return cls([1], order)

    @classmethod
    def x(cls, order: int):
        """The generator ``x`` (zero when ``order == 0``)."""
        return cls([0, 1], order)

    def coeff(self, k: int):
        if 0 <= k <= self.order:
            return self.coeffs[k]
        return self._zero()

    def __getitem__(self, k: int):
        return self.coeff(k)

    def __len__(self) -> int:
        return self.order + 1

    def truncate(self, order: int):
        return type(self)(self.coeffs, order)

    def _lift(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, _TruncatedSeries):
            return None
        try:
            c = self._coerce(other)
        except (HMError, TypeError):
            return None
        return type(self)([c], self.order)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return type(self)([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return type(self)([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if not isinstance(other, _TruncatedSeries):
            try:
                c = self._coerce(other)
            except (HMError, TypeError):
                return NotImplemented
            return type(self)([a * c for a in self.coeffs], self.order)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            s = self._zero()
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    s = s + a[i] * b[k - i]
            out.append(s)
        return type(self)(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise HMError("only nonnegative integer powers are supported")
        result = type(self).one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int = 1):
        """Multiply by ``x^k``."""
        return type(self)([self._zero()] * k + list(self.coeffs), self.order)

    def _unit_constant(self) -> Fraction:
        raise NotImplementedError

    def inv(self):
        """Inverse modulo ``x^(order+1)``; the constant term must be a unit."""
        inv0 = 1 / self._unit_constant()
        a = self.coeffs
        out = [self._coerce(inv0)]
        for k in range(1, self.order + 1):
            s = self._zero()
            for i in range(1, k + 1):
                if a[i] and out[k - i]:
                    s = s + a[i] * out[k - i]
            out.append(-s * inv0)
        return type(self)(out, self.order)

    def substitute_scaled(self, scale):
        """Return the series in ``scale * x``."""
        scale = self._coerce(scale)
        out, power = [], self._coerce(1)
        for c in self.coeffs:
            out.append(c * power)
            power = power * scale
        return type(self)(out, self.order)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            other = self._lift(other)
            if other is None:
                return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.order, self.coeffs))

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"{type(self).__name__}([{body}], order={self.order})"


class XSeries(_TruncatedSeries):
    """Rational series modulo ``x^(order+1)``."""

    __slots__ = ()

    @staticmethod
    def _zero():
        return Fraction(0)

    @staticmethod
    def _coerce(c):
        return parse_rational(c)

    def _unit_constant(self) -> Fraction:
        if self.coeffs[0] == 0:
            raise HMError("non-invertible constant term")
        return self.coeffs[0]

    def __str__(self) -> str:
        return str(YPoly({k: c for k, c in enumerate(self.coeffs)})).replace("y", "x")

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list[str]) -> XSeries:
        return cls(data)


class XYSeries(_TruncatedSeries):
    """Series modulo ``x^(order+1)`` whose coefficients are :class:`YPoly`."""

    __slots__ = ()

    @staticmethod
    def _zero():
        return YPoly()

    @staticmethod
    def _coerce(c):
        if isinstance(c, YPoly):
            return c
        if isinstance(c, _SparsePoly):
            raise HMError("fractional exponents are not allowed in XYSeries")
        return YPoly.constant(parse_rational(c))

    def _unit_constant(self) -> Fraction:
        c0 = self.coeffs[0]
        if not c0.is_constant() or c0.constant_term() == 0:
            raise HMError("non-invertible constant term")
        return c0.constant_term()

    def evaluate_y(self, y: RationalLike) -> XSeries:
        return XSeries([c.evaluate(y) for c in self.coeffs], self.order)

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(f"({c})*x^{k}" if k else f"({c})")
        return " + ".join(parts) or "0"

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list[dict]) -> XYSeries:
        return cls([YPoly.from_json(d) for d in data])


def series_add(a, b):
    return a + b


def series_mul(a, b):
    return a * b


def series_inv(a):
    return a.inv()


def series_substitute_scaled(a, scale):
    return a.substitute_scaled(scale)


@lru_cache(maxsize=None)
def todd_coefficients(order: int) -> tuple[Fraction, ...]:
    """Coefficients ``b_k`` of ``t / (1 - exp(-t))`` up to ``t^order``.

    Obtained by inverting ``(1 - exp(-t)) / t = sum (-1)^k t^k / (k+1)!``.
    """
    base = XSeries(
        [Fraction((-1) ** k, math.factorial(k + 1)) for k in range(order + 1)], order
    )
    return base.inv().coeffs


@lru_cache(maxsize=None)
def qy_series(order: int) -> XYSeries:
    """Hirzebruch's normalized power series truncated at ``x^order``.

    ``Q_y(x) = x(1+y) / (1 - exp(-x(1+y))) - x y``.  It specializes to
    ``1 + x`` at ``y = -1``, to the Todd series at ``y = 0`` and to
    ``x / tanh(x)`` at ``y = 1``.
    """
    if order < 0:
        raise HMError("truncation order must be nonnegative")
    b = todd_coefficients(order)
    one_plus_y = YPoly({0: 1, 1: 1})
    coeffs = [b[k] * one_plus_y**k for k in range(order + 1)]
    if order >= 1:
        coeffs[1] = coeffs[1] - YPoly.gen()
    return XYSeries(coeffs, order)
