"""Spectral Hirzebruch-Milnor classes.

For a hypersurface with isolated singularities the localized spectral class
at a singular point is taken to be ``(-1)^(d_X) * Sp`` with ``d_X = N - 1``
the dimension of the hypersurface germ.  This normalization reproduces the
reduced Euler-Milnor value at ``y = -1``, the restriction to exponents in
(0, 1) at ``y = 0``, and the minus sign of the Thom-Sebastiani formula for
joins.  The ordinary Hirzebruch-Milnor class is recovered by the
integer-part map ``sum a_alpha ỹ^alpha -> sum a_alpha (-y)^floor(alpha)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import HMError, IdentityViolation
from .projspace import HomologyClass, YClass, ci_chi_y_virtual
from .rings import FracExpPoly, YPoly, parse_rational
from .spectrum import Spectrum, brieskorn_pham, check_symmetry, classify, lct_from_spectrum, ts_product

__all__ = [
    "GradedSpectralClass",
    "IsolatedHypersurfaceModel",
    "assemble_formula_2",
    "chi_y",
    "du_bois_detector",
    "germ_lct",
    "germ_m_zero",
    "hm_y_class",
    "int_part_map",
    "jumping_coefficients",
    "localized_point_class",
    "m_zero",
    "point_spectral_class",
    "theorem1_multiplier",
    "theorem4_point_check",
]


def int_part_map(p: FracExpPoly) -> YPoly:
    """``sum a_alpha ỹ^alpha -> sum a_alpha (-y)^floor(alpha)``."""
    out: dict[int, Fraction] = {}
    for alpha, c in p.items():
        k = math.floor(alpha)
        out[k] = out.get(k, 0) + c * (-1) ** (k % 2)
    return YPoly(out)


def localized_point_class(germ: Spectrum) -> FracExpPoly:
    """Localized spectral Hirzebruch-Milnor class of an isolated germ, in ỹ."""
    if germ.poly.is_zero():
        raise HMError("smooth germ has no localized class")
    if not check_symmetry(germ):
        raise HMError("unsupported germ: Sp/Sp′ ambiguity")
    d_x = germ.num_vars - 1
    return germ.poly * (-1) ** d_x


@dataclass(frozen=True)
class IsolatedHypersurfaceModel:
    """Degree ``degree`` hypersurface in P^n with the given singular germs.

    Every germ lives in ``n`` variables (the ambient dimension).
    """

    ambient_dim: int
    degree: int
    germs: tuple[Spectrum, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "germs", tuple(self.germs))
        if self.ambient_dim < 1:
            raise HMError("ambient dimension must be at least 1")
        if self.degree < 1:
            raise HMError("degree must be positive")
        for g in self.germs:
            if g.num_vars != self.ambient_dim:
                raise HMError(
                    f"germ in {g.num_vars} variables does not fit a hypersurface in P^{self.ambient_dim}"
                )

    @classmethod
    def from_brieskorn_pham(
        cls, n: int, m: int, germs: Sequence[Sequence[int]]
    ) -> IsolatedHypersurfaceModel:
        return cls(n, m, tuple(brieskorn_pham(g) for g in germs))

    @classmethod
    def from_json(cls, data: Mapping) -> IsolatedHypersurfaceModel:
        try:
            return cls.from_brieskorn_pham(int(data["n"]), int(data["m"]), data.get("germs", []))
        except (KeyError, TypeError) as exc:
            raise HMError(f"malformed hypersurface model: {exc}") from exc


def hm_y_class(model: IsolatedHypersurfaceModel) -> YPoly:
    """Degree-0 part of the Hirzebruch-Milnor class: sum over singular points."""
    total = YPoly()
    for g in model.germs:
        total = total + int_part_map(localized_point_class(g))
    return total


def chi_y(model: IsolatedHypersurfaceModel) -> YPoly:
    """chi_y of the singular hypersurface: virtual genus minus the Milnor term."""
    return ci_chi_y_virtual(model.ambient_dim, [model.degree]) - hm_y_class(model)


def germ_m_zero(germ: Spectrum) -> Fraction:
    """Sum of the coefficients of the localized class at exponents in (0, 1)."""
    return sum(
        (c for alpha, c in localized_point_class(germ).items() if 0 < alpha < 1),
        Fraction(0),
    )


def m_zero(model: IsolatedHypersurfaceModel) -> tuple[list[Fraction], Fraction]:
    """Per-germ values of ``M_y`` at ``y = 0`` and their total."""
    per = [germ_m_zero(g) for g in model.germs]
    return per, sum(per, Fraction(0))


def du_bois_detector(model: IsolatedHypersurfaceModel) -> bool:
    """True iff every germ has vanishing M_0.

    Cross-checked per germ against the minimal-exponent criterion; a
    disagreement raises :class:`IdentityViolation`.
    """
    verdict = True
    for g in model.germs:
        vanishes = germ_m_zero(g) == 0
        if vanishes != classify(g).du_bois:
            raise IdentityViolation(f"M_0 detector disagrees with alpha_1 >= 1 for {g}")
        verdict = verdict and vanishes
    return verdict


def jumping_coefficients(germ: Spectrum) -> frozenset[Fraction]:
    """Jumping coefficients in (0, 1) read off the localized spectral class."""
    return frozenset(
        alpha for alpha, c in localized_point_class(germ).items() if 0 < alpha < 1 and c
    )


def germ_lct(germ: Spectrum) -> Fraction:
    """Smallest jumping coefficient, or 1 if none lies in (0, 1)."""
    lct = min(jumping_coefficients(germ) | {Fraction(1)})
    if lct != lct_from_spectrum(germ):
        raise IdentityViolation(f"jumping-coefficient lct disagrees with alpha_1 for {germ}")
    return lct


def theorem4_point_check(g1: Spectrum, g2: Spectrum) -> bool:
    """Check ``M(join) = -M(g1) x M(g2)`` for localized point classes."""
    if g1.poly.is_zero() or g2.poly.is_zero():
        # both sides vanish
        return True
    lhs = localized_point_class(ts_product(g1, g2))
    rhs = -(localized_point_class(g1) * localized_point_class(g2))
    return lhs == rhs


def theorem1_multiplier(m: int, j: int) -> FracExpPoly:
    """``(-sum_{i=1}^{m-1} ỹ^(i/m))^j``."""
    if m < 1 or j < 0:
        raise HMError("need m >= 1 and j >= 0")
    base = -FracExpPoly({Fraction(i, m): 1 for i in range(1, m)})
    return base**j


class GradedSpectralClass:
    """Homology classes of P^n graded by rational ỹ-exponents."""

    __slots__ = ("ambient_dim", "_terms")

    def __init__(self, ambient_dim: int, terms: Mapping | None = None):
        self.ambient_dim = ambient_dim
        clean: dict[Fraction, HomologyClass] = {}
        for alpha, h in (terms or {}).items():
            if h.ambient_dim != ambient_dim:
                raise HMError("inconsistent ambient dimensions")
            alpha = parse_rational(alpha)
            h = clean[alpha] + h if alpha in clean else h
            if h.is_zero():
                clean.pop(alpha, None)
            else:
                clean[alpha] = h
        self._terms = clean

    def items(self) -> list[tuple[Fraction, HomologyClass]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: GradedSpectralClass) -> GradedSpectralClass:
        if other.ambient_dim != self.ambient_dim:
            raise HMError("inconsistent ambient dimensions")
        terms = dict(self._terms)
        for alpha, h in other._terms.items():
            terms[alpha] = terms[alpha] + h if alpha in terms else h
        return GradedSpectralClass(self.ambient_dim, terms)

    def times(self, p: FracExpPoly) -> GradedSpectralClass:
        """Multiply by a fractional-exponent polynomial in ỹ."""
        acc: dict[Fraction, HomologyClass] = {}
        for alpha, h in self._terms.items():
            for beta, c in p.items():
                term = h * c
                key = alpha + beta
                acc[key] = acc[key] + term if key in acc else term
        return GradedSpectralClass(self.ambient_dim, acc)

    def int_part(self) -> YClass:
        """Apply the integer-part map exponent by exponent."""
        out = YClass(self.ambient_dim)
        for alpha, h in self._terms.items():
            k = math.floor(alpha)
            out = out + YClass(self.ambient_dim, {k: h * (-1) ** (k % 2)})
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedSpectralClass):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._terms == other._terms

    def __repr__(self) -> str:
        body = ", ".join(f"{a}: {h!r}" for a, h in self.items())
        return f"GradedSpectralClass({self.ambient_dim}, {{{body}}})"


def point_spectral_class(model: IsolatedHypersurfaceModel) -> GradedSpectralClass:
    """Localized point classes of all germs, placed in dimension 0 of P^n."""
    n = model.ambient_dim
    total = GradedSpectralClass(n)
    for g in model.germs:
        loc = localized_point_class(g)
        total = total + GradedSpectralClass(
            n, {alpha: HomologyClass.point(n, c) for alpha, c in loc.items()}
        )
    return total


def assemble_formula_2(classes: Sequence[GradedSpectralClass], m: int) -> YClass:
    """``sum_j int_part(classes[j] * (-sum_i ỹ^(i/m))^j)``.

    ``classes[j]`` is the spectral class contributed by the ``j``-th
    generic hyperplane section; computing it is up to the caller.
    """
    if not classes:
        raise HMError("need at least the j = 0 class")
    n = classes[0].ambient_dim
    if any(c.ambient_dim != n for c in classes):
        raise HMError("inconsistent ambient dimensions")
    total = YClass(n)
    for j, cls in enumerate(classes):
        total = total + cls.times(theorem1_multiplier(m, j)).int_part()
    return total
