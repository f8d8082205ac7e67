"""Projective hyperplane arrangements: intersection lattice, Moebius function,
Chern and Hirzebruch classes.

The constant sheaf on ``X = union X_i`` has a resolution by constant
sheaves of rank ``r_Z`` on the flats ``Z``, placed in degree
``codim Z - 1``; ``(-1)^codim r_Z`` is the Moebius function of the
intersection lattice.  Additivity then reduces every characteristic class
of ``X`` to classes of linear subspaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import HMError
from .projspace import HomologyClass, YClass, hirzebruch_class_of_linear_subspace
from .rings import format_rational, parse_rational

__all__ = [
    "Arrangement",
    "Flat",
    "arrangement_class",
    "arrangement_euler",
    "build_lattice",
    "complement_class",
    "lattice",
    "moebius_assign",
    "rref",
]

Matrix = tuple[tuple[Fraction, ...], ...]


def rref(rows: Sequence[Sequence]) -> Matrix:
    """Reduced row-echelon form over Q with pivots scaled to 1; zero rows dropped."""
    m = [[parse_rational(a) for a in row] for row in rows]
    if not m:
        return ()
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        pr = next((i for i in range(pivot_row, len(m)) if m[i][col] != 0), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        p = m[pivot_row][col]
        m[pivot_row] = [a / p for a in m[pivot_row]]
        for i in range(len(m)):
            if i != pivot_row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return tuple(tuple(row) for row in m[:pivot_row])


@dataclass(frozen=True)
class Arrangement:
    """Hyperplanes of P^n given by linear forms in ``n + 1`` coordinates."""

    ambient_dim: int
    forms: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = self.ambient_dim
        if n < 1:
            raise HMError("ambient dimension must be at least 1")
        forms = tuple(tuple(parse_rational(a) for a in f) for f in self.forms)
        if not forms:
            raise HMError("an arrangement needs at least one hyperplane")
        seen = set()
        for f in forms:
            if len(f) != n + 1:
                raise HMError(f"form {f} does not have {n + 1} coefficients")
            if not any(f):
                raise HMError("zero linear form")
            key = rref([f])
            if key in seen:
                raise HMError("repeated hyperplane")
            seen.add(key)
        object.__setattr__(self, "forms", forms)

    @classmethod
    def from_json(cls, data: Mapping) -> Arrangement:
        try:
            return cls(int(data["n"]), tuple(tuple(f) for f in data["forms"]))
        except (KeyError, TypeError) as exc:
            raise HMError(f"malformed arrangement: {exc}") from exc

    def __len__(self) -> int:
        return len(self.forms)


@dataclass(frozen=True)
class Flat:
    """A nonempty intersection of hyperplanes of the arrangement."""

    equations: Matrix
    codim: int
    members: frozenset[int]
    moebius: Fraction | None = field(default=None, compare=False)
    multiplicity: int | None = field(default=None, compare=False)

    def dim(self, n: int) -> int:
        return n - self.codim

    def to_json(self) -> dict:
        return {
            "codim": self.codim,
            "members": sorted(self.members),
            "equations": [[format_rational(a) for a in row] for row in self.equations],
            "moebius": None if self.moebius is None else format_rational(self.moebius),
            "r": self.multiplicity,
        }


def build_lattice(a: Arrangement) -> list[Flat]:
    """All distinct nonempty intersections of at least one hyperplane.

    Flats are closed under intersecting with one more hyperplane, starting
    from the hyperplanes; empty intersections (rank ``n + 1``) are dropped.
    The list is ordered by codimension, then by member indices.
    """
    n = a.ambient_dim
    forms = a.forms

    def make(rows) -> Flat | None:
        eq = rref(rows)
        if len(eq) > n:
            return None
        members = frozenset(
            i for i, f in enumerate(forms) if len(rref(eq + (f,))) == len(eq)
        )
        return Flat(eq, len(eq), members)

    found: dict[Matrix, Flat] = {}
    frontier = []
    for f in forms:
        flat = make([f])
        found[flat.equations] = flat
        frontier.append(flat)
    while frontier:
        nxt = []
        for flat in frontier:
            for i, f in enumerate(forms):
                if i in flat.members:
                    continue
                new = make(flat.equations + (f,))
                if new is None or new.equations in found:
                    continue
                found[new.equations] = new
                nxt.append(new)
        frontier = nxt
    return sorted(found.values(), key=lambda z: (z.codim, sorted(z.members)))


def moebius_assign(flats: Sequence[Flat]) -> list[Flat]:
    """Fill in the Moebius value and ``r_Z = (-1)^codim mu(Z)`` of every flat.

    The order is reverse inclusion of subspaces, with the ambient space as
    bottom element (``mu = 1``); ``W <= Z`` iff every hyperplane through W
    passes through Z.
    """
    ordered = sorted(flats, key=lambda z: z.codim)
    mu: dict[frozenset, Fraction] = {}
    out = []
    for z in ordered:
        below = sum((mu[w.members] for w in ordered if w.codim < z.codim and w.members < z.members), Fraction(0))
        value = -(1 + below)
        mu[z.members] = value
        r = value * (-1) ** z.codim
        if r.denominator != 1:
            raise HMError("non-integral Moebius value")
        out.append(replace(z, moebius=value, multiplicity=int(r)))
    return out


def lattice(a: Arrangement) -> list[Flat]:
    """The intersection lattice with Moebius data filled in."""
    return moebius_assign(build_lattice(a))


def _flats(a: Arrangement, flats: Sequence[Flat] | None) -> Sequence[Flat]:
    if flats is None:
        return lattice(a)
    if any(z.multiplicity is None for z in flats):
        return moebius_assign(flats)
    return flats


def arrangement_class(a: Arrangement, mode: str = "chern", flats: Sequence[Flat] | None = None):
    """Chern class (``mode="chern"``) or Hirzebruch class of the arrangement.

    ``sum_Z (-1)^(codim Z - 1) r_Z  C(Z)`` with ``C`` the class of the linear
    subspace ``Z`` pushed into P^n.
    """
    if mode not in ("chern", "hirzebruch"):
        raise HMError(f"unknown mode {mode!r}")
    n = a.ambient_dim
    total = YClass(n)
    for z in _flats(a, flats):
        sign = (-1) ** (z.codim - 1)
        total = total + hirzebruch_class_of_linear_subspace(z.dim(n), n) * (sign * z.multiplicity)
    return total.evaluate(-1) if mode == "chern" else total


def arrangement_euler(a: Arrangement, flats: Sequence[Flat] | None = None) -> Fraction:
    """Euler characteristic ``sum_Z (-1)^(codim Z - 1) r_Z (dim Z + 1)``."""
    n = a.ambient_dim
    return sum(
        ((-1) ** (z.codim - 1) * z.multiplicity * (z.dim(n) + 1) for z in _flats(a, flats)),
        Fraction(0),
    )


def complement_class(a: Arrangement, flats: Sequence[Flat] | None = None) -> HomologyClass:
    """Chern class of the complement ``P^n - X``."""
    n = a.ambient_dim
    whole = hirzebruch_class_of_linear_subspace(n, n).evaluate(-1)
    return whole - arrangement_class(a, "chern", flats)
