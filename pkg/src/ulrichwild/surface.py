"""Polarized surfaces and their classical numerical invariants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .lattice import DivisorClass, IntersectionLattice, LatticeMismatchError


class InconsistentSurfaceError(ValueError):
    """The numerical data cannot come from a very ample polarization."""


@dataclass(frozen=True)
class PolarizedSurface:
    """A lattice with hyperplane class ``h``, canonical class ``K`` and ``(q, p_g)``.

    ``chi`` is always derived as ``1 - q + p_g``.
    """

    lattice: IntersectionLattice
    h: DivisorClass
    K: DivisorClass
    q: int = 0
    p_g: int = 0
    label: Optional[str] = None

    def __post_init__(self):
        if self.h.lattice != self.lattice or self.K.lattice != self.lattice:
            raise LatticeMismatchError("h and K must live on the surface lattice")
        if self.q < 0 or self.p_g < 0:
            raise InconsistentSurfaceError(
                f"q and p_g must be non-negative (q={self.q}, p_g={self.p_g})")
        if self.d <= 0:
            raise InconsistentSurfaceError(
                f"hyperplane class must have positive square, got h^2={self.d}")
        _check_parity(self.d, self.hK)

    @property
    def d(self) -> int:
        return self.h.dot(self.h)

    @property
    def hK(self) -> int:
        return self.h.dot(self.K)

    @property
    def K2(self) -> int:
        return self.K.dot(self.K)

    @property
    def chi(self) -> int:
        return 1 - self.q + self.p_g

    def divisor(self, coords) -> DivisorClass:
        return self.lattice.divisor(coords)


@dataclass(frozen=True)
class SurfaceInvariants:
    d: int
    hK: int
    K2: int
    chi: int
    pi: int
    c2_top: int


def _check_parity(d, hK):
    if (d + hK) % 2:
        raise InconsistentSurfaceError(
            f"d + h.K = {d + hK} is odd; the sectional genus would not be an "
            "integer")


def sectional_genus(d: int, hK: int) -> int:
    _check_parity(d, hK)
    return (d + hK) // 2 + 1


def invariants(S: PolarizedSurface) -> SurfaceInvariants:
    d, hK, K2, chi = S.d, S.hK, S.K2, S.chi
    return SurfaceInvariants(d=d, hK=hK, K2=K2, chi=chi,
                             pi=sectional_genus(d, hK), c2_top=12 * chi - K2)


def double_point_p4_residual(d: int, hK: int, K2: int, chi: int) -> int:
    """Left side of the double point formula for a smooth surface in P^4.

    Zero is necessary for the surface to embed in P^4.
    """
    return d * d - 10 * d - 5 * hK - 2 * K2 + 12 * chi


def bmy_holds(K2: int, chi: int) -> bool:
    # Only meaningful for minimal surfaces of general type.
    return K2 <= 9 * chi


def ambient_dimension(chi: int, d: int, hK: int, h1_of_h: int = 0,
                      h2_of_h: int = 0) -> int:
    """``h^0(O_S(h)) - 1`` from Riemann-Roch, given the higher cohomology."""
    _check_parity(d, hK)
    return chi + (d - hK) // 2 - 1 + h1_of_h - h2_of_h


def expected_ambient_dimension(S: PolarizedSurface, h1_of_h: int = 0) -> int:
    """Riemann-Roch prediction of N for a linearly normal embedding.

    Assumes ``h^2(O_S(h)) = 0``; ``h1_of_h`` is the speciality of ``h``.
    """
    if h1_of_h < 0:
        raise ValueError("h1_of_h must be non-negative")
    return ambient_dimension(S.chi, S.d, S.hK, h1_of_h)
