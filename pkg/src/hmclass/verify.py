"""Identity suites replayed by ``hmclass verify``.

Each suite checks one family of identities over a fixed, deterministic
parameter grid and returns a :class:`VerificationReport`.  Where a suite
needs an oracle it uses a route independent of the code under test
(Bernoulli recursion, Hodge numbers, subset inclusion-exclusion).
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .arrangement import Arrangement, arrangement_euler, lattice
from .errors import HMError, IdentityViolation
from .milnor import (
    EMData,
    example_2_8,
    example_2_8_em_data,
    milnor_class_direct,
    milnor_class_iterated,
    verify_identity_2_7_1,
)
from .projspace import HomologyClass, ci_chi_y_virtual, ci_euler
from .rings import FracExpPoly, YPoly, qy_series
from .spectral import (
    IsolatedHypersurfaceModel,
    chi_y,
    du_bois_detector,
    germ_lct,
    germ_m_zero,
    theorem4_point_check,
)
from .spectrum import (
    ResolutionData,
    brieskorn_pham,
    check_symmetry,
    classify,
    lct_from_resolution,
    lct_from_spectrum,
    milnor_number,
    min_exponent,
    sp_power,
    ts_product,
)

__all__ = [
    "SUITES",
    "VerificationReport",
    "bernoulli_todd_oracle",
    "bp_grid",
    "inclusion_exclusion_euler",
    "run_suites",
    "sample_arrangements",
]


@dataclass
class VerificationReport:
    suite: str
    cases: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, description: str, expected, actual) -> bool:
        self.cases += 1
        if expected != actual:
            self.failures.append((description, str(expected), str(actual)))
            return False
        return True

    def guard(self, description: str, thunk: Callable[[], object], expected=True) -> None:
        """Run ``thunk`` and compare; exceptions count as failures."""
        try:
            actual = thunk()
        except (HMError, IdentityViolation) as exc:
            self.cases += 1
            self.failures.append((description, str(expected), f"{type(exc).__name__}: {exc}"))
            return
        self.check(description, expected, actual)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": [
                {"input": d, "expected": e, "actual": a} for d, e, a in self.failures
            ],
        }


# ---------------------------------------------------------------------------
# oracles


def bernoulli_todd_oracle(order: int) -> list[Fraction]:
    """Coefficients of ``t/(1 - e^-t)`` from the Bernoulli recursion.

    ``sum_{j<=k} C(k+1, j) B_j = 0`` gives ``B_k`` with ``B_1 = -1/2``; the
    Todd coefficients are ``(-1)^k B_k / k!``.
    """
    bern = [Fraction(1)]
    for k in range(1, order + 1):
        s = sum(math.comb(k + 1, j) * bern[j] for j in range(k))
        bern.append(-s / (k + 1))
    return [(-1) ** k * bern[k] / math.factorial(k) for k in range(order + 1)]


def _int_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank via fraction-free Bareiss elimination on integer-scaled rows."""
    mat = []
    for row in rows:
        den = math.lcm(1, *(Fraction(a).denominator for a in row))
        mat.append([int(Fraction(a) * den) for a in row])
    if not mat:
        return 0
    ncols = len(mat[0])
    rank, prev = 0, 1
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        p = mat[rank][col]
        for i in range(rank + 1, len(mat)):
            mat[i] = [(p * mat[i][c] - mat[i][col] * mat[rank][c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
        if rank == len(mat):
            break
    return rank


def inclusion_exclusion_euler(a: Arrangement) -> int:
    """chi of the union of hyperplanes by inclusion-exclusion over subsets.

    An intersection of rank ``k <= n`` is a copy of P^(n-k), of Euler
    characteristic ``n - k + 1``; rank ``n + 1`` means empty.
    """
    n = a.ambient_dim
    total = 0
    forms = a.forms
    for size in range(1, len(forms) + 1):
        for subset in itertools.combinations(forms, size):
            k = _int_rank(subset)
            if k <= n:
                total += (-1) ** (size + 1) * (n - k + 1)
    return total


# ---------------------------------------------------------------------------
# parameter grids


def bp_grid(max_entry: int, max_len: int) -> list[tuple[int, ...]]:
    """Brieskorn-Pham exponent tuples (non-decreasing) with entries in [2, max_entry]."""
    out = []
    for length in range(1, max_len + 1):
        out.extend(itertools.combinations_with_replacement(range(2, max_entry + 1), length))
    return out


def sample_arrangements(seed: int = 0, per_size: int = 12) -> list[Arrangement]:
    """Deterministic arrangements with up to 7 hyperplanes in P^2 and P^3.

    Random small-integer forms plus structured families (coordinate
    hyperplanes, pencils, braid-type forms) that exercise non-generic
    intersections.
    """
    rng = random.Random(seed)
    out: list[Arrangement] = []

    def attempt(n: int, forms: Iterable[Sequence[int]]) -> None:
        try:
            out.append(Arrangement(n, tuple(tuple(f) for f in forms)))
        except HMError:
            pass

    for n in (2, 3):
        for size in range(1, 8):
            for _ in range(per_size):
                forms: list[tuple[int, ...]] = []
                while len(forms) < size:
                    f = tuple(rng.choice((-1, 0, 0, 1, 1, 2)) for _ in range(n + 1))
                    if any(f):
                        forms.append(f)
                attempt(n, forms)
        coords = [tuple(int(i == j) for j in range(n + 1)) for i in range(n + 1)]
        attempt(n, coords)
        diffs = [
            tuple((1 if c == i else -1 if c == j else 0) for c in range(n + 1))
            for i, j in itertools.combinations(range(n + 1), 2)
        ]
        attempt(n, diffs)
        attempt(n, coords + diffs[: 7 - len(coords)])
        for k in range(1, 8):
            attempt(n, [(1, t) + (0,) * (n - 1) for t in range(k)])
    return out


# ---------------------------------------------------------------------------
# suites


def suite_plane_curves(**_) -> VerificationReport:
    rep = VerificationReport("plane-curves")
    for d in range(1, 11):
        rep.guard(f"ci_euler(2, [{d}])", lambda d=d: ci_euler(2, [d]), 3 * d - d * d)
    return rep


def suite_specialization(**_) -> VerificationReport:
    rep = VerificationReport("specialization")
    for n in range(1, 9):
        for k in range(0, min(3, n) + 1):
            for degrees in itertools.combinations_with_replacement(range(1, 7), k):
                chi = ci_chi_y_virtual(n, degrees)
                rep.check(f"chi_y({n}, {list(degrees)}) at y=-1", ci_euler(n, degrees), chi.evaluate(-1))
                rep.check(f"chi_y({n}, {list(degrees)}) at y=0 is integral", 1, chi.evaluate(0).denominator)
    for order in range(0, 13):
        q = qy_series(order)
        x_plus_one = [Fraction(1), Fraction(1)][: order + 1] + [Fraction(0)] * max(0, order - 1)
        rep.check(f"Q_y at y=-1, order {order}", x_plus_one, list(q.evaluate_y(-1).coeffs))
        rep.check(f"Q_y at y=0, order {order}", bernoulli_todd_oracle(order), list(q.evaluate_y(0).coeffs))
    return rep


def suite_identity_2_7_1(m_max: int = 12, order: int = 30, **_) -> VerificationReport:
    rep = VerificationReport("identity-2-7-1")
    for m in range(1, m_max + 1):
        rep.guard(f"m={m}, order={order}", lambda m=m: verify_identity_2_7_1(m, order))
    return rep


def random_em_data(rng: random.Random, n_max: int = 6, m_max: int = 8) -> EMData:
    """Random EMData whose EM class is supported in dimensions <= r."""
    n = rng.randint(1, n_max)
    m = rng.randint(1, m_max)
    r = rng.randint(0, n - 1)
    coeffs = [Fraction(rng.randint(-20, 20), rng.choice((1, 1, 2, 3))) for _ in range(r + 1)]
    return EMData(n, m, HomologyClass(n, coeffs), r)


def suite_milnor_10_12(samples: int = 200, seed: int = 0, **_) -> VerificationReport:
    rep = VerificationReport("milnor-10-12")
    rng = random.Random(seed)
    for _ in range(samples):
        d = random_em_data(rng)
        rep.guard(
            f"n={d.ambient_dim} m={d.degree} r={d.sing_dim} em={list(map(str, d.em_class.coeffs))}",
            lambda d=d: milnor_class_iterated(d),
            milnor_class_direct(d),
        )
    return rep


def suite_example_2_8(**_) -> VerificationReport:
    rep = VerificationReport("example-2-8")
    ex = example_2_8(3, 2, 2, 2, 2)
    rep.check("(3,2,2,2,2) delta_iterated", 16, ex.delta_iterated)
    rep.check("(3,2,2,2,2) delta_direct", 16, ex.delta_direct)
    rep.check("(3,2,2,2,2) chi(X')", 24, ex.chi_smooth)
    rep.check("(3,2,2,2,2) chi(X)", 8, ex.chi_X)
    for n in range(3, 7):
        for a1, a2, b1, b2 in itertools.product(range(2, 5), repeat=4):
            if a1 * b1 != a2 * b2:
                continue
            label = f"({n},{a1},{a2},{b1},{b2})"
            try:
                ex = example_2_8(n, a1, a2, b1, b2)
            except IdentityViolation as exc:
                rep.check(label, "equal deltas", str(exc))
                continue
            rep.check(f"{label} deltas agree", ex.delta_iterated, ex.delta_direct)
            d = example_2_8_em_data(n, a1, a2, b1, b2)
            rep.check(f"{label} degree-0 of direct class", ex.delta_direct, milnor_class_direct(d).degree_zero())
            rep.check(f"{label} degree-0 of iterated class", ex.delta_iterated, milnor_class_iterated(d).degree_zero())
    return rep


def suite_spectrum(**_) -> VerificationReport:
    rep = VerificationReport("spectrum")
    rep.check(
        "BP(2,3)",
        FracExpPoly({Fraction(5, 6): 1, Fraction(7, 6): 1}),
        brieskorn_pham([2, 3]).poly,
    )
    for a in bp_grid(6, 5):
        s = brieskorn_pham(a)
        rep.check(f"mu BP{a}", math.prod(x - 1 for x in a), milnor_number(s))
        rep.check(f"symmetry BP{a}", True, check_symmetry(s))
    for a in bp_grid(5, 3):
        s = brieskorn_pham(a)
        for m in range(2, 7):
            rep.check(
                f"min exponent BP{a} * z^{m}",
                min_exponent(s) + Fraction(1, m),
                min_exponent(ts_product(s, sp_power(m))),
            )
    return rep


def suite_classify(**_) -> VerificationReport:
    rep = VerificationReport("classify")
    node, cusp, a1_3 = brieskorn_pham([2, 2]), brieskorn_pham([2, 3]), brieskorn_pham([2, 2, 2])
    rep.check("node alpha_1", 1, min_exponent(node))
    rep.check("node Du Bois", True, classify(node).du_bois)
    rep.check("cusp alpha_1", Fraction(5, 6), min_exponent(cusp))
    rep.check("cusp Du Bois", False, classify(cusp).du_bois)
    rep.check("BP(2,2,2) alpha_1", Fraction(3, 2), min_exponent(a1_3))
    rep.check("BP(2,2,2) Du Bois", True, classify(a1_3).du_bois)
    rep.check("lct cusp from spectrum", Fraction(5, 6), lct_from_spectrum(cusp))
    rep.check("lct cusp from resolution (4,6)", Fraction(5, 6), lct_from_resolution(ResolutionData([(4, 6)])))
    for a in bp_grid(6, 4):
        c = classify(brieskorn_pham(a))
        rep.check(f"BP{a} Du Bois iff insignificant", c.du_bois, c.insignificant)
    return rep


def suite_spectral_fixtures(**_) -> VerificationReport:
    rep = VerificationReport("spectral-fixtures")
    y = YPoly.gen()
    nodal = IsolatedHypersurfaceModel.from_brieskorn_pham(2, 3, [[2, 2]])
    cusp = IsolatedHypersurfaceModel.from_brieskorn_pham(2, 3, [[2, 3]])
    rep.check("nodal cubic chi_y", -y, chi_y(nodal))
    rep.check("nodal cubic chi", 1, chi_y(nodal).evaluate(-1))
    rep.check("cuspidal cubic chi_y", 1 - y, chi_y(cusp))
    rep.check("cuspidal cubic chi", 2, chi_y(cusp).evaluate(-1))
    rep.check("node M_0", 0, germ_m_zero(brieskorn_pham([2, 2])))
    rep.check("cusp M_0", -1, germ_m_zero(brieskorn_pham([2, 3])))
    rep.guard("nodal cubic Du Bois detector", lambda: du_bois_detector(nodal), True)
    rep.guard("cuspidal cubic Du Bois detector", lambda: du_bois_detector(cusp), False)
    for a in bp_grid(6, 4):
        g = brieskorn_pham(a)
        rep.check(f"BP{a} M_0 = 0 iff alpha_1 >= 1", classify(g).du_bois, germ_m_zero(g) == 0)
        rep.guard(f"BP{a} jumping-coefficient lct", lambda g=g: germ_lct(g), lct_from_spectrum(g))
        n = len(a)
        model = IsolatedHypersurfaceModel(n, 3, (g,))
        rep.check(
            f"BP{a} Euler specialization",
            ci_euler(n, [3]) - (-1) ** (n - 1) * milnor_number(g),
            chi_y(model).evaluate(-1),
        )
    return rep


def suite_ts_sign(**_) -> VerificationReport:
    rep = VerificationReport("ts-sign")
    grid = bp_grid(5, 4)
    for a, b in itertools.product(grid, repeat=2):
        if len(a) + len(b) > 5:
            continue
        rep.guard(
            f"BP{a} join BP{b}",
            lambda a=a, b=b: theorem4_point_check(brieskorn_pham(a), brieskorn_pham(b)),
        )
    return rep


def suite_arrangement(seed: int = 0, **_) -> VerificationReport:
    rep = VerificationReport("arrangement")
    for k in range(1, 11):
        forms = [(1, t, t * t) for t in range(k)]
        a = Arrangement(2, tuple(forms))
        rep.check(f"{k} generic lines", 2 * k - math.comb(k, 2), arrangement_euler(a))
    concurrent = Arrangement(2, ((1, 0, 0), (0, 1, 0), (1, 1, 0)))
    rep.check("3 concurrent lines", 4, arrangement_euler(concurrent))
    for a in sample_arrangements(seed):
        flats = lattice(a)
        label = f"P^{a.ambient_dim} {[list(map(str, f)) for f in a.forms]}"
        rep.check(f"{label} r_Z > 0", True, all(z.multiplicity > 0 for z in flats))
        rep.check(f"{label} chi", inclusion_exclusion_euler(a), arrangement_euler(a, flats))
    return rep


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "plane-curves": suite_plane_curves,
    "specialization": suite_specialization,
    "identity-2-7-1": suite_identity_2_7_1,
    "milnor-10-12": suite_milnor_10_12,
    "example-2-8": suite_example_2_8,
    "spectrum": suite_spectrum,
    "classify": suite_classify,
    "spectral-fixtures": suite_spectral_fixtures,
    "ts-sign": suite_ts_sign,
    "arrangement": suite_arrangement,
}


def run_suites(names: Sequence[str] = ("all",), **params) -> list[VerificationReport]:
    if "all" in names:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise HMError(f"unknown suite(s): {', '.join(unknown)}")
    return [SUITES[n](**params) for n in names]
