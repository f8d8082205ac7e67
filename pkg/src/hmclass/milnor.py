"""Localized Milnor classes and Euler-number defects of projective hypersurfaces.

A degree-``m`` hypersurface ``X`` in P^n with singular locus of dimension
``r`` is described by the pushforward of ``c(EM)``, the MacPherson-Chern
class of its reduced Euler-Milnor function ``x -> chi(F_x) - 1``.  Two
formulas give the localized Milnor class from it: one iterates generic
hyperplane sections, the other intersects with one generic hypersurface of
degree ``m``.  They must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import HMError, IdentityViolation
from .projspace import HomologyClass, cap_series, ci_chern_class, ci_euler, cohomology_to_homology
from .rings import XSeries, parse_rational

__all__ = [
    "EMData",
    "Example28",
    "euler_delta_direct",
    "euler_delta_iterated",
    "example_2_8",
    "example_2_8_em_data",
    "hyperplane_correction_series",
    "milnor_class_direct",
    "milnor_class_iterated",
    "verify_identity_2_7_1",
]


@dataclass(frozen=True)
class EMData:
    """Singular-locus data of a degree-``degree`` hypersurface in P^n.

    ``em_class`` is the pushforward to P^n of c(EM); ``sing_dim`` is the
    dimension ``r`` of the singular locus.
    """

    ambient_dim: int
    degree: int
    em_class: HomologyClass
    sing_dim: int

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise HMError("ambient dimension must be at least 1")
        if self.degree < 1:
            raise HMError("degree must be positive")
        if not 0 <= self.sing_dim <= self.ambient_dim - 1:
            raise HMError("singular locus dimension must lie in [0, n-1]")
        if self.em_class.ambient_dim != self.ambient_dim:
            raise HMError("EM class lives in the wrong projective space")


def hyperplane_correction_series(m: int, r: int, order: int) -> XSeries:
    """``1 - sum_{j=1}^r m(1-m)^(j-1) (x/(1+x))^j`` modulo ``x^(order+1)``."""
    x = XSeries.x(order)
    z = x * (1 + x).inv()
    out = XSeries.one(order)
    zj = XSeries.one(order)
    for j in range(1, r + 1):
        zj = zj * z
        out = out - zj * (m * (1 - m) ** (j - 1))
    return out


def milnor_class_iterated(d: EMData, stratified: bool = False) -> HomologyClass:
    """Localized Milnor class from iterated generic hyperplane sections.

    With ``stratified=True`` the geometric reading (restrictions of EM to the
    iterated sections) is requested, which needs ``m >= 2`` when ``r >= 1``.
    """
    if d.em_class.support_dim() > d.sing_dim:
        raise HMError("EM class exceeds declared singular dimension")
    if stratified and d.sing_dim >= 1 and d.degree < 2:
        raise HMError("the hyperplane-section formula needs m >= 2 when r >= 1")
    s = hyperplane_correction_series(d.degree, d.sing_dim, d.ambient_dim)
    return cap_series(d.em_class, s)


def milnor_class_direct(d: EMData) -> HomologyClass:
    """Localized Milnor class ``c(EM) * (1 + m c_1(L))^(-1)``."""
    n = d.ambient_dim
    s = (1 + d.degree * XSeries.x(n)).inv()
    return cap_series(d.em_class, s)


def verify_identity_2_7_1(m: int, order: int) -> bool:
    """Check ``mx/(1+mx) = sum_{j>=1} m(1-m)^(j-1) (x/(1+x))^j`` mod x^(order+1).

    The right side is summed as a series in ``z = x/(1+x)``; since ``z`` has
    valuation 1, terms with ``j > order`` vanish.
    """
    if order < 1:
        raise HMError("order must be at least 1")
    x = XSeries.x(order)
    lhs = m * x * (1 + m * x).inv()
    z = x * (1 + x).inv()
    rhs = XSeries([], order)
    zj = XSeries.one(order)
    for j in range(1, order + 1):
        zj = zj * z
        rhs = rhs + zj * (m * (1 - m) ** (j - 1))
    return lhs == rhs


def euler_delta_iterated(v: Sequence, m: int) -> Fraction:
    """``chi(X') - chi(X)`` from the degrees ``v_j`` of EM restricted to Sigma_j.

    ``v[0]`` is the EM-weighted Euler characteristic of the whole singular
    locus, ``v[j]`` the same for its intersection with ``j`` generic
    hyperplanes.
    """
    if not v:
        raise HMError("need at least the value on the full singular locus")
    v = [parse_rational(a) for a in v]
    return v[0] - sum((m * (1 - m) ** (j - 1) * v[j] for j in range(1, len(v))), Fraction(0))


def euler_delta_direct(v0, v_prime) -> Fraction:
    return parse_rational(v0) - parse_rational(v_prime)


@dataclass(frozen=True)
class Example28:
    n: int
    a: tuple[int, int]
    b: tuple[int, int]
    m: int
    em_value: int
    delta_iterated: Fraction
    delta_direct: Fraction
    chi_smooth: Fraction
    chi_X: Fraction

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "a": list(self.a),
            "b": list(self.b),
            "m": self.m,
            "em_value": self.em_value,
            "delta_iterated": str(self.delta_iterated),
            "delta_direct": str(self.delta_direct),
            "chi_smooth": str(self.chi_smooth),
            "chi_X": str(self.chi_X),
        }


def _check_example_2_8(n, a1, a2, b1, b2) -> int:
    if n < 3:
        raise HMError("the family needs n >= 3")
    if a1 < 2 or a2 < 2:
        raise HMError("the hypersurfaces Y_i need degree a_i >= 2")
    if b1 < 2 or b2 < 2:
        raise HMError("exponents b_i must be at least 2")
    if a1 * b1 != a2 * b2:
        raise HMError("degree mismatch")
    return a1 * b1


def example_2_8(n: int, a1: int, a2: int, b1: int, b2: int) -> Example28:
    """Euler numbers for ``X = {g_1^b1 - c g_2^b2 = 0}`` in P^n.

    Here ``g_i`` defines a smooth degree-``a_i`` hypersurface, the two meet
    transversally and ``Sing X`` is their intersection, along which EM is
    the constant ``-(b1-1)(b2-1)``.  The defect ``chi(X') - chi(X)`` is
    computed by both the iterated-hyperplane and the single-hypersurface
    route; :class:`IdentityViolation` is raised if they disagree.
    """
    m = _check_example_2_8(n, a1, a2, b1, b2)
    em_value = -(b1 - 1) * (b2 - 1)
    # Sigma_j: the curve/surface Y1 cap Y2 cut by j generic hyperplanes
    chis = [ci_euler(n - j, [a1, a2]) for j in range(n - 1)]
    delta_iterated = em_value * euler_delta_iterated(chis, m)
    delta_direct = em_value * euler_delta_direct(chis[0], ci_euler(n, [a1, a2, m]))
    if delta_iterated != delta_direct:
        raise IdentityViolation(
            f"hyperplane and hypersurface formulas disagree: {delta_iterated} != {delta_direct}"
        )
    chi_smooth = ci_euler(n, [m])
    return Example28(
        n=n,
        a=(a1, a2),
        b=(b1, b2),
        m=m,
        em_value=em_value,
        delta_iterated=delta_iterated,
        delta_direct=delta_direct,
        chi_smooth=chi_smooth,
        chi_X=chi_smooth - delta_direct,
    )


def example_2_8_em_data(n: int, a1: int, a2: int, b1: int, b2: int) -> EMData:
    """The EMData of the same family: ``em_value`` times c(Y1 cap Y2)."""
    m = _check_example_2_8(n, a1, a2, b1, b2)
    em_value = -(b1 - 1) * (b2 - 1)
    sigma = cohomology_to_homology(ci_chern_class(n, [a1, a2]))
    return EMData(ambient_dim=n, degree=m, em_class=sigma * em_value, sing_dim=n - 2)
