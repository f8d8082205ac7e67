"""Steenbrink spectra of quasi-homogeneous isolated hypersurface singularities.

Spectra live in Z[t^(1/e)].  The supported class is generated by the
one-variable germs ``z^m`` under the Thom-Sebastiani join, i.e. the
Brieskorn-Pham germs ``x_1^a_1 + ... + x_N^a_N``.  For these the spectrum
is symmetric, so Sp and its dual agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .errors import HMError
from .rings import FracExpPoly

__all__ = [
    "Classification",
    "ResolutionData",
    "Spectrum",
    "brieskorn_pham",
    "check_symmetry",
    "classify",
    "lct_from_resolution",
    "lct_from_spectrum",
    "max_exponent",
    "milnor_number",
    "min_exponent",
    "monodromy_beta",
    "rational_after_cover",
    "sp_power",
    "ts_product",
]


@dataclass(frozen=True)
class Spectrum:
    """Spectrum of a germ in ``num_vars`` variables.

    Coefficients must be nonnegative integers and exponents must lie in
    ``(0, num_vars)``.  The empty spectrum of a smooth germ is only accepted
    with ``allow_empty=True``.
    """

    poly: FracExpPoly
    num_vars: int
    allow_empty: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        if self.num_vars < 1:
            raise HMError("a germ needs at least one variable")
        if self.poly.is_zero() and not self.allow_empty:
            raise HMError("empty spectrum (smooth germ) requires allow_empty=True")
        for alpha, c in self.poly.items():
            if c < 0 or c.denominator != 1:
                raise HMError(f"spectrum multiplicity {c} is not a nonnegative integer")
            if not 0 < alpha < self.num_vars:
                raise HMError(f"spectrum exponent {alpha} outside (0, {self.num_vars})")

    @classmethod
    def empty(cls, num_vars: int = 1) -> Spectrum:
        return cls(FracExpPoly(), num_vars, allow_empty=True)

    @property
    def mu(self) -> int:
        return milnor_number(self)

    def exponents(self) -> list[Fraction]:
        """Spectral numbers with repetition, in increasing order."""
        out = []
        for alpha, c in self.poly.items():
            out.extend([alpha] * int(c))
        return out

    def __str__(self) -> str:
        return f"{self.poly} (N={self.num_vars})"


def sp_power(m: int, allow_smooth: bool = False) -> Spectrum:
    """Spectrum of ``z^m``: ``t^(1/m) + ... + t^((m-1)/m)``."""
    if m == 1 and allow_smooth:
        return Spectrum.empty(1)
    if m < 2:
        raise HMError("z^m has an isolated singularity only for m >= 2")
    return Spectrum(FracExpPoly({Fraction(k, m): 1 for k in range(1, m)}), 1)


def ts_product(a: Spectrum, b: Spectrum) -> Spectrum:
    """Spectrum of the join ``f(x) + g(y)``: the product of spectra."""
    poly = a.poly * b.poly
    return Spectrum(poly, a.num_vars + b.num_vars, allow_empty=poly.is_zero())


def brieskorn_pham(exponents: Sequence[int]) -> Spectrum:
    """Spectrum of ``sum x_i^a_i``."""
    exponents = list(exponents)
    if not exponents:
        raise HMError("Brieskorn-Pham germ needs at least one exponent")
    if any(int(a) != a or a < 2 for a in exponents):
        raise HMError("Brieskorn-Pham exponents must be integers >= 2")
    return reduce(ts_product, (sp_power(int(a)) for a in exponents))


def milnor_number(s: Spectrum) -> int:
    return int(s.poly.total_coefficient())


def check_symmetry(s: Spectrum) -> bool:
    """Is the spectrum invariant under ``alpha -> N - alpha``?"""
    n = s.num_vars
    return all(s.poly.coeff(n - alpha) == c for alpha, c in s.poly.items())


def min_exponent(s: Spectrum) -> Fraction:
    if s.poly.is_zero():
        raise HMError("empty spectrum has no minimal exponent")
    return s.poly.min_exponent()


def max_exponent(s: Spectrum) -> Fraction:
    if s.poly.is_zero():
        raise HMError("empty spectrum has no maximal exponent")
    return s.poly.max_exponent()


@dataclass(frozen=True)
class Classification:
    du_bois: bool
    insignificant: bool


def classify(s: Spectrum) -> Classification:
    """Du Bois iff ``alpha_1 >= 1``; cohomologically insignificant smoothing
    iff ``alpha_mu <= N - 1``."""
    return Classification(
        du_bois=min_exponent(s) >= 1,
        insignificant=max_exponent(s) <= s.num_vars - 1,
    )


def monodromy_beta(s: Spectrum) -> Fraction:
    """Smallest positive ``beta`` with ``exp(2 pi i beta)`` a monodromy eigenvalue.

    Each spectral number is reduced mod 1 to its representative in (0, 1].
    """
    if s.poly.is_zero():
        raise HMError("empty spectrum has no monodromy eigenvalues")
    return min(alpha - math.ceil(alpha) + 1 for alpha in s.poly.exponents())


def rational_after_cover(s: Spectrum, m: int) -> bool:
    """Whether ``f - z^m = 0`` has a rational singularity.

    Uses ``alpha_{h,1} = alpha_{f,1} + 1/m`` and rationality iff
    ``alpha_{h,1} > 1``; valid when ``1/m <= beta``.
    """
    if m < 1:
        raise HMError("cover degree must be positive")
    if Fraction(1, m) > monodromy_beta(s):
        raise HMError("base-change condition 1/m <= beta violated")
    return min_exponent(s) + Fraction(1, m) > 1


def lct_from_spectrum(s: Spectrum) -> Fraction:
    """``min(alpha_1, 1)``; the log canonical threshold for the supported class."""
    return min(min_exponent(s), Fraction(1))


@dataclass(frozen=True)
class ResolutionData:
    """Discrepancy ``nu`` and multiplicity ``mult`` of each exceptional divisor."""

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs: Iterable[tuple[int, int]]):
        clean = []
        for nu, mult in pairs:
            if int(nu) != nu or nu < 0:
                raise HMError("discrepancies must be nonnegative integers")
            if int(mult) != mult or mult < 1:
                raise HMError("multiplicities must be positive integers")
            clean.append((int(nu), int(mult)))
        object.__setattr__(self, "pairs", tuple(clean))

    @classmethod
    def parse(cls, text: str) -> ResolutionData:
        """Parse ``"4/6,1/3"`` into pairs ``(4, 6), (1, 3)`` without reducing."""
        pairs = []
        for item in text.split(","):
            item = item.strip()
            if not item:
                continue
            try:
                nu, mult = item.split("/")
                pairs.append((int(nu), int(mult)))
            except ValueError as exc:
                raise HMError(f"bad resolution pair {item!r}; expected nu/mult") from exc
        return cls(pairs)


def lct_from_resolution(r: ResolutionData) -> Fraction:
    """``min (nu_i + 1) / m_i`` when below 1, otherwise 1."""
    if not r.pairs:
        raise HMError("resolution data is empty")
    v = min(Fraction(nu + 1, mult) for nu, mult in r.pairs)
    return v if v < 1 else Fraction(1)
