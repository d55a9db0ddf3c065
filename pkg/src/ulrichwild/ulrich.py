"""Numerical Ulrich criteria for vector bundles on a polarized surface.

Every predicate is evaluated in cross-multiplied integer form; fractions
only appear in reported values (slopes, cohomology lower bounds).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .lattice import DivisorClass, LatticeMismatchError
from .surface import PolarizedSurface


class ParityError(ValueError):
    """A class whose Riemann-Roch term ``(c1^2 - c1.K)/2`` is not integral."""


@dataclass(frozen=True)
class ChernData:
    """Rank and Chern classes standing in for a vector bundle."""

    r: int
    c1: DivisorClass
    c2: int

    def __post_init__(self):
        if isinstance(self.r, bool) or not isinstance(self.r, int) or self.r < 1:
            raise ValueError(f"rank must be a positive integer, got {self.r!r}")


class ChernCheck(NamedTuple):
    eq1: bool
    eq2: bool

    @property
    def both(self) -> bool:
        return self.eq1 and self.eq2


class Bound1(NamedTuple):
    holds: bool
    lhs: int


def _on(S: PolarizedSurface, *classes: DivisorClass):
    for D in classes:
        if D.lattice != S.lattice:
            raise LatticeMismatchError("class does not belong to the surface lattice")


def adjoint_class(S: PolarizedSurface) -> DivisorClass:
    """``3h + K``, the twist relating an Ulrich bundle to its dual."""
    return 3 * S.h + S.K


def ulrich_chern_check(S: PolarizedSurface, E: ChernData) -> ChernCheck:
    """Both Chern equalities an Ulrich bundle satisfies, tested separately.

    ``eq1``: ``2 c1.h = r (3d + h.K)``;
    ``eq2``: ``2 c2 = c1^2 - c1.K - 2 r (d - chi)``.
    """
    _on(S, E.c1)
    c1h = E.c1.dot(S.h)
    eq1 = 2 * c1h == E.r * (3 * S.d + S.hK)
    c1sq, c1K = E.c1.dot(E.c1), E.c1.dot(S.K)
    eq2 = 2 * E.c2 == c1sq - c1K - 2 * E.r * (S.d - S.chi)
    return ChernCheck(eq1, eq2)


def line_bundle_conditions(S: PolarizedSurface, D: DivisorClass) -> bool:
    """Whether ``O_S(D)`` passes the Ulrich numerics for a line bundle."""
    _on(S, D)
    s = 3 * S.d + S.hK
    if s % 2:
        return False
    if D.dot(S.h) != s // 2:
        return False
    return D.dot(D) == 2 * (S.d - S.chi) + D.dot(S.K)


def special_c1(S: PolarizedSurface, r: int) -> DivisorClass:
    if r < 1 or r % 2:
        raise ValueError(f"special bundles have even positive rank, got {r}")
    return (r // 2) * adjoint_class(S)


def dual_twist(S: PolarizedSurface, E: ChernData) -> ChernData:
    """Chern data of ``E^vee(3h + K)``."""
    _on(S, E.c1)
    D = adjoint_class(S)
    r = E.r
    c1 = r * D - E.c1
    c2 = E.c2 - (r - 1) * E.c1.dot(D) + r * (r - 1) // 2 * D.dot(D)
    return ChernData(r, c1, c2)


def hodge_bound_ok(S: PolarizedSurface, E: ChernData) -> bool:
    """``4d c1^2 <= r^2 (3d + h.K)^2``.

    The inequality is implied by the first Ulrich equality and Hodge index;
    it is evaluated here for any input.
    """
    _on(S, E.c1)
    return 4 * S.d * E.c1.dot(E.c1) <= E.r ** 2 * (3 * S.d + S.hK) ** 2


def riemann_roch_chi(S: PolarizedSurface, E: ChernData) -> int:
    _on(S, E.c1)
    num = E.c1.dot(E.c1) - E.c1.dot(S.K)
    if num % 2:
        raise ParityError(
            f"c1^2 - c1.K = {num} is odd; {E.c1} is not an algebraic class "
            "for this canonical class")
    return E.r * S.chi + num // 2 - E.c2


def twist(S: PolarizedSurface, E: ChernData, t: int) -> ChernData:
    """Chern data of ``E(t h)``."""
    _on(S, E.c1)
    r = E.r
    c1 = E.c1 + (r * t) * S.h
    c2 = E.c2 + (r - 1) * t * E.c1.dot(S.h) + r * (r - 1) // 2 * t * t * S.d
    return ChernData(r, c1, c2)


def chi_hom(S: PolarizedSurface, E: ChernData, F: ChernData) -> int:
    """Euler characteristic of ``E^vee (x) F`` for two Ulrich bundles."""
    _on(S, E.c1, F.c1)
    return (F.r * E.c1.dot(S.K) - E.c1.dot(F.c1)
            + E.r * F.r * (2 * S.d - S.chi))


def bound1_lhs(d: int, chi: int, hK: int) -> int:
    return d * d + 4 * (chi - 2) * d - hK * hK


def wildness_bound1(S: PolarizedSurface) -> Bound1:
    """Sufficient condition for Ulrich-wildness once some Ulrich bundle exists."""
    lhs = bound1_lhs(S.d, S.chi, S.hK)
    return Bound1(lhs > 0, lhs)


def h1_lower_bound(S: PolarizedSurface, r: int) -> Fraction:
    """Lower bound for ``h^1(E^vee (x) E^vee(3h+K))`` over rank ``r`` Ulrich ``E``."""
    if r < 1:
        raise ValueError("rank must be positive")
    d, hK = S.d, S.hK
    return Fraction(r * r * (d * d + 4 * S.chi * d - hK * hK), 4 * d)


def pluricanonical_wild(lam: int, K2: int, chi: int) -> bool:
    """Wildness inequality when ``h = lam K`` on a minimal surface of general type."""
    return (lam * lam - 1) * K2 + 4 * chi > 8


def slope(S: PolarizedSurface, E: ChernData) -> Fraction:
    _on(S, E.c1)
    return Fraction(E.c1.dot(S.h), E.r)


def tensor_restriction_chern(rA: int, alphaA: int, rB: int, alphaB: int
                             ) -> tuple[int, int]:
    """Rank and ``h``-coefficient of ``c1`` for ``A (x) B`` restricted to an intersection.

    Only handles first Chern classes proportional to the hyperplane class.
    """
    return rA * rB, rA * alphaB + rB * alphaA
