"""Homology and cohomology calculus on projective space.

Homology classes of P^n are stored in the basis of linear-subspace classes
``[P^0], ..., [P^n]``, so pushing forward along a linear embedding is the
identity on indices and capping with the hyperplane class is a shift.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import HMError
from .rings import XSeries, XYSeries, YPoly, format_rational, parse_rational, qy_series

__all__ = [
    "HomologyClass",
    "YClass",
    "cap_hyperplane",
    "cap_series",
    "ci_chern_class",
    "ci_chi_y_virtual",
    "ci_euler",
    "cohomology_to_homology",
    "hirzebruch_class_of_linear_subspace",
]


class HomologyClass:
    """Element of H_*(P^n; Q); ``coeffs[k]`` is the coefficient of [P^k]."""

    __slots__ = ("ambient_dim", "coeffs")

    def __init__(self, ambient_dim: int, coeffs: Iterable = ()):
        if ambient_dim < 0:
            raise HMError("ambient dimension must be nonnegative")
        coeffs = [parse_rational(c) for c in coeffs]
        if len(coeffs) > ambient_dim + 1:
            if any(coeffs[ambient_dim + 1 :]):
                raise HMError("class has entries above the ambient dimension")
            coeffs = coeffs[: ambient_dim + 1]
        coeffs += [Fraction(0)] * (ambient_dim + 1 - len(coeffs))
        self.ambient_dim = ambient_dim
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, n: int) -> HomologyClass:
        return cls(n)

    @classmethod
    def linear(cls, k: int, n: int, coeff=1) -> HomologyClass:
        """``coeff`` times the class of a k-dimensional linear subspace."""
        if not 0 <= k <= n:
            raise HMError(f"no linear subspace of dimension {k} in P^{n}")
        c = [0] * (n + 1)
        c[k] = coeff
        return cls(n, c)

    @classmethod
    def point(cls, n: int, coeff=1) -> HomologyClass:
        return cls.linear(0, n, coeff)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.ambient_dim else Fraction(0)

    def degree_zero(self) -> Fraction:
        return self.coeffs[0]

    def support_dim(self) -> int:
        """Largest dimension with a nonzero entry, -1 for the zero class."""
        for k in range(self.ambient_dim, -1, -1):
            if self.coeffs[k]:
                return k
        return -1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: HomologyClass) -> None:
        if not isinstance(other, HomologyClass):
            raise TypeError("expected a HomologyClass")
        if other.ambient_dim != self.ambient_dim:
            raise HMError("inconsistent ambient dimensions")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        return HomologyClass(self.ambient_dim, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return HomologyClass(self.ambient_dim, [-a for a in self.coeffs])

    def __sub__(self, other):
        self._check(other)
        return self + (-other)

    def __mul__(self, scalar):
        scalar = parse_rational(scalar)
        return HomologyClass(self.ambient_dim, [a * scalar for a in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, HomologyClass):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ambient_dim, self.coeffs))

    def __repr__(self) -> str:
        return f"HomologyClass({self.ambient_dim}, [{', '.join(map(str, self.coeffs))}])"

    def __str__(self) -> str:
        terms = [f"{format_rational(c)}[P^{k}]" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) or "0"

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]


class YClass:
    """Polynomial in ``y`` with :class:`HomologyClass` coefficients."""

    __slots__ = ("ambient_dim", "_terms")

    def __init__(self, ambient_dim: int, terms: Mapping[int, HomologyClass] | None = None):
        self.ambient_dim = ambient_dim
        clean = {}
        for e, h in (terms or {}).items():
            if h.ambient_dim != ambient_dim:
                raise HMError("inconsistent ambient dimensions")
            if not h.is_zero():
                clean[int(e)] = h
        self._terms = clean

    @classmethod
    def from_dimension_polys(cls, ambient_dim: int, polys: Sequence[YPoly]) -> YClass:
        """Build from ``polys[k]``, the y-polynomial coefficient of [P^k]."""
        acc: dict[int, list] = {}
        for k, p in enumerate(polys):
            for e, c in p.items():
                acc.setdefault(e, [0] * (ambient_dim + 1))[k] = c
        return cls(ambient_dim, {e: HomologyClass(ambient_dim, v) for e, v in acc.items()})

    @classmethod
    def constant(cls, h: HomologyClass) -> YClass:
        return cls(h.ambient_dim, {0: h})

    def items(self) -> list[tuple[int, HomologyClass]]:
        return sorted(self._terms.items())

    def term(self, e: int) -> HomologyClass:
        return self._terms.get(e, HomologyClass(self.ambient_dim))

    def dimension_poly(self, k: int) -> YPoly:
        """The y-polynomial coefficient of [P^k]."""
        return YPoly({e: h[k] for e, h in self._terms.items()})

    def evaluate(self, y) -> HomologyClass:
        y = parse_rational(y)
        total = HomologyClass(self.ambient_dim)
        for e, h in self._terms.items():
            if e < 0 and y == 0:
                raise HMError("cannot evaluate a Laurent term at y = 0")
            total = total + h * y**e
        return total

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, YClass):
            return NotImplemented
        if other.ambient_dim != self.ambient_dim:
            raise HMError("inconsistent ambient dimensions")
        terms = dict(self._terms)
        for e, h in other._terms.items():
            terms[e] = terms[e] + h if e in terms else h
        return YClass(self.ambient_dim, terms)

    __radd__ = __add__

    def __neg__(self):
        return YClass(self.ambient_dim, {e: -h for e, h in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, YPoly):
            out = YClass(self.ambient_dim)
            for e1, c in other.items():
                out = out + YClass(
                    self.ambient_dim, {e + e1: h * c for e, h in self._terms.items()}
                )
            return out
        scalar = parse_rational(other)
        return YClass(self.ambient_dim, {e: h * scalar for e, h in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, YClass):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._terms == other._terms

    def __hash__(self):
        return hash((self.ambient_dim, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"y^{e}: {h!r}" for e, h in self.items())
        return f"YClass({self.ambient_dim}, {{{body}}})"

    def to_json(self) -> dict[str, list[str]]:
        return {f"y^{e}": h.to_json() for e, h in self.items()}

    @classmethod
    def from_json(cls, ambient_dim: int, data: Mapping[str, list]) -> YClass:
        terms = {}
        for key, vec in data.items():
            if not key.startswith("y^"):
                raise HMError(f"bad YClass key {key!r}")
            terms[int(key[2:])] = HomologyClass(ambient_dim, vec)
        return cls(ambient_dim, terms)


# ---------------------------------------------------------------------------
# cap products


def cap_hyperplane(c, multiplier=1):
    """Cap with ``multiplier`` times the hyperplane class.

    Each [P^j] goes to ``multiplier * [P^(j-1)]``; the point class dies.
    Works on :class:`HomologyClass` and :class:`YClass`.
    """
    m = parse_rational(multiplier)
    if isinstance(c, YClass):
        return YClass(c.ambient_dim, {e: cap_hyperplane(h, m) for e, h in c.items()})
    return HomologyClass(c.ambient_dim, [a * m for a in c.coeffs[1:]])


def cap_series(c: HomologyClass, s: XSeries) -> HomologyClass:
    """Cap a homology class with a cohomology class given as a series in x."""
    if s.order < c.ambient_dim:
        raise HMError(
            f"series truncated at order {s.order} is too short for P^{c.ambient_dim}"
        )
    n = c.ambient_dim
    out = [Fraction(0)] * (n + 1)
    for j, a in enumerate(c.coeffs):
        if not a:
            continue
        for k in range(j + 1):
            out[j - k] += a * s.coeffs[k]
    return HomologyClass(n, out)


def cohomology_to_homology(s: XSeries, n: int | None = None) -> HomologyClass:
    """Poincare dual in P^n: the coefficient of ``x^(n-k)`` goes to [P^k]."""
    n = s.order if n is None else n
    return HomologyClass(n, [s.coeff(n - k) for k in range(n + 1)])


# ---------------------------------------------------------------------------
# complete intersections


def _check_ci(n: int, degrees: Sequence[int]) -> list[int]:
    if n < 1:
        raise HMError("ambient dimension must be at least 1")
    degrees = [int(d) for d in degrees]
    if any(d < 1 for d in degrees):
        raise HMError("degrees must be positive integers")
    if len(degrees) > n:
        raise HMError("negative-dimensional complete intersection")
    return degrees


def ci_chern_class(n: int, degrees: Sequence[int]) -> XSeries:
    """Image in H^*(P^n) of the Chern class of a complete intersection.

    ``(1+x)^(n+1) * prod d_i x / (1 + d_i x)`` modulo ``x^(n+1)``.
    """
    degrees = _check_ci(n, degrees)
    x = XSeries.x(n)
    out = (1 + x) ** (n + 1)
    for d in degrees:
        out = out * (d * x) * (1 + d * x).inv()
    return out


def ci_euler(n: int, degrees: Sequence[int]) -> Fraction:
    """Euler number of a smooth complete intersection of the given degrees."""
    return ci_chern_class(n, degrees).coeff(n)


def ci_chi_y_virtual(n: int, degrees: Sequence[int]) -> YPoly:
    """chi_y genus of a smooth complete intersection in P^n.

    Convention: ``sum (-1)^q h^{p,q} y^p``, so ``y = -1`` gives the Euler
    number and ``y = 0`` the arithmetic genus.
    """
    degrees = _check_ci(n, degrees)
    out = _qy_power(n, n + 1)
    for d in degrees:
        out = out * _normal_factor(n, d)
    return out.coeff(n)


@lru_cache(maxsize=None)
def _qy_power(order: int, k: int) -> XYSeries:
    return qy_series(order) ** k


@lru_cache(maxsize=None)
def _normal_factor(order: int, d: int) -> XYSeries:
    # d x / Q_y(d x), with Q_y(d x) = 1 + O(x) invertible
    return qy_series(order).substitute_scaled(d).inv().shift(1) * d


def hirzebruch_class_of_linear_subspace(k: int, n: int) -> YClass:
    """Hirzebruch class of P^k pushed forward into H_*(P^n)[y]."""
    if not 0 <= k <= n:
        raise HMError(f"no linear subspace of dimension {k} in P^{n}")
    total = _qy_power(k, k + 1)
    polys = [YPoly() for _ in range(n + 1)]
    for j in range(k + 1):
        polys[k - j] = total.coeff(j)
    return YClass.from_dimension_polys(n, polys)
