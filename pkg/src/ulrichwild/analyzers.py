"""Closed-form invariants of the surface families used as worked examples.

Covers complete intersections, minimal surfaces of Kodaira dimension zero,
hypersurface sections of del Pezzo threefolds, hyperplane sections of the
GPK^3 threefold and pluricanonically embedded surfaces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod

from .lattice import custom
from .surface import PolarizedSurface, bmy_holds
from .ulrich import (ChernData, bound1_lhs, hodge_bound_ok, pluricanonical_wild,
                     tensor_restriction_chern, ulrich_chern_check)


def hilbert_polynomial_pn(N: int, t) -> Fraction:
    """``chi(O_{P^N}(t)) = prod_{j=1..N} (t + j) / N!`` as an exact rational."""
    return Fraction(prod(t + j for j in range(1, N + 1)), factorial(N))


def _check_ci(N, degrees):
    degrees = [int(x) for x in degrees]
    if N < 3:
        raise ValueError(f"ambient dimension must be >= 3, got {N}")
    if len(degrees) != N - 2:
        raise ValueError(f"a surface in P^{N} needs {N - 2} degrees, "
                         f"got {len(degrees)}")
    if any(x < 1 for x in degrees):
        raise ValueError(f"degrees must be >= 1, got {degrees}")
    return degrees


def koszul_chi(N: int, degrees) -> int:
    """``chi(O_S)`` for a complete intersection via the Koszul resolution."""
    degrees = _check_ci(N, degrees)
    total = Fraction(0)
    for k in range(len(degrees) + 1):
        for I in itertools.combinations(degrees, k):
            total += (-1) ** k * hilbert_polynomial_pn(N, -sum(I))
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral chi {total} for degrees {degrees}")
    return int(total)


def ci_sections(N: int, degrees, t: int) -> int:
    """``h^0(O_S(t))`` for ``t >= 0``: Hilbert function of the complete intersection."""
    degrees = _check_ci(N, degrees)
    if t < 0:
        raise ValueError("only non-negative twists are supported")
    total = 0
    for k in range(len(degrees) + 1):
        for I in itertools.combinations(degrees, k):
            u = t - sum(I)
            if u >= 0:
                total += (-1) ** k * comb(u + N, N)
    return total


@dataclass(frozen=True)
class CIInvariants:
    ambient_N: int
    degrees: tuple[int, ...]
    d: int
    hK: int
    K2: int
    chi: int
    bound1_lhs: int

    @property
    def canonical_multiple(self) -> int:
        return sum(self.degrees) - self.ambient_N - 1

    @property
    def bound1_holds(self) -> bool:
        return self.bound1_lhs > 0

    @property
    def degenerate(self) -> bool:
        return 1 in self.degrees


def complete_intersection(N: int, degrees) -> CIInvariants:
    degrees = _check_ci(N, degrees)
    d = prod(degrees)
    s = sum(degrees) - N - 1
    chi = koszul_chi(N, degrees)
    hK = d * s
    return CIInvariants(ambient_N=N, degrees=tuple(degrees), d=d, hK=hK,
                        K2=d * s * s, chi=chi, bound1_lhs=bound1_lhs(d, chi, hK))


@dataclass
class CIScanReport:
    N_max: int
    d_max: int
    entries: list = field(default_factory=list)
    mid_range_all_pass: bool = True
    quartic_p3_passes: bool = False
    p3_high_degree_all_fail: bool = True
    failures: list = field(default_factory=list)

    @property
    def confirmed(self) -> bool:
        return (self.mid_range_all_pass and self.quartic_p3_passes
                and self.p3_high_degree_all_fail)


def ci_wild_range_scan(N_max: int, d_max: int) -> CIScanReport:
    """Evaluate the wildness inequality on every complete intersection in range.

    Degree tuples are non-decreasing with product at most ``d_max``; degree 1
    entries are kept (they are degenerate embeddings with the same invariants).
    Checked claims: all ``5 <= d <= 9`` pass, the quartic in P^3 passes,
    every surface in P^3 with ``d >= 10`` fails.
    """
    report = CIScanReport(N_max=N_max, d_max=d_max)
    for N in range(3, N_max + 1):
        for degs in _degree_tuples(N - 2, d_max):
            ci = complete_intersection(N, degs)
            report.entries.append(ci)
            if 5 <= ci.d <= 9 and not ci.bound1_holds:
                report.mid_range_all_pass = False
                report.failures.append(ci)
            if N == 3 and ci.d == 4:
                report.quartic_p3_passes = ci.bound1_holds
            if N == 3 and ci.d >= 10 and ci.bound1_holds:
                report.p3_high_degree_all_fail = False
                report.failures.append(ci)
    return report


def _degree_tuples(length, d_max, low=1):
    if length == 0:
        yield ()
        return
    for first in range(low, d_max + 1):
        rest_max = d_max // first
        if length > 1 and rest_max < first:
            break
        for rest in _degree_tuples(length - 1, rest_max, first):
            yield (first,) + rest


def minimal_kodaira_zero_check(chi: int, h0_of_h: int) -> tuple[int, bool]:
    """Degree and wildness verdict for a minimal surface with ``K`` numerically 0."""
    d = 2 * h0_of_h - 2 * chi
    if d <= 0:
        raise ValueError(f"non-positive degree {d} from chi={chi}, h0={h0_of_h}")
    return d, d + 4 * (chi - 2) > 0


@dataclass(frozen=True)
class DelPezzoSection:
    a: int
    delta: int
    d: int
    hK: int
    K2: int
    chi: int
    bound1_lhs: int
    bound1_holds: bool
    simplified_lhs: int
    simplified_rhs: int
    simplified_lhs_holds: bool
    equivalence_flag: bool


def del_pezzo_threefold_section_chi(a: int, delta: int) -> int:
    """``chi(O_S)`` for ``S = F cap Delta``, ``F`` del Pezzo of degree ``a``.

    From ``chi(O_F(t)) = (t + 1)(a t (t + 2) + 6) / 6`` and
    ``chi(O_S) = 1 - chi(O_F(-delta))``.
    """
    num = delta * (delta - 1) * (delta - 2) * a
    if num % 6:
        raise ArithmeticError(f"non-integral chi for a={a}, delta={delta}")
    return num // 6 + delta


def del_pezzo_section(a: int, delta: int) -> DelPezzoSection:
    if not 3 <= a <= 8:
        raise ValueError(f"a must lie in 3..8, got {a}")
    if delta < 2:
        raise ValueError(f"delta must be >= 2, got {delta}")
    d = delta * a
    hK = (delta - 2) * d
    chi = del_pezzo_threefold_section_chi(a, delta)
    lhs = bound1_lhs(d, chi, hK)
    s_lhs = -delta * (delta - 1) * (delta - 5) * a
    s_rhs = 24 - 12 * delta
    simplified = s_lhs > s_rhs
    return DelPezzoSection(a=a, delta=delta, d=d, hK=hK, K2=(delta - 2) * hK,
                           chi=chi, bound1_lhs=lhs, bound1_holds=lhs > 0,
                           simplified_lhs=s_lhs, simplified_rhs=s_rhs,
                           simplified_lhs_holds=simplified,
                           equivalence_flag=(lhs > 0) == simplified)


@dataclass(frozen=True)
class SpinorTensorExample:
    a: int
    surface: PolarizedSurface
    bundle: ChernData
    c1_sq: int
    special_sq: int
    is_special: bool
    hodge_ok: bool
    slope_equality: bool


def spinor_tensor_example(a: int) -> SpinorTensorExample:
    """Rank 2 bundle ``c1 = 2h + 2A`` on a K3 quadric section with elliptic pencil ``A``.

    Only ``h^2 = 2a``, ``h.A = a`` and ``A^2 = 0`` enter.
    """
    if a < 3:
        raise ValueError(f"a must be >= 3, got {a}")
    lat, K = custom([[2 * a, a], [a, 0]], ["h", "A"], [0, 0])
    h, A = lat.gens()
    S = PolarizedSurface(lat, h, K, q=0, p_g=1, label=f"K3 quadric section, a={a}")
    c1 = 2 * h + 2 * A
    special = 3 * h + K
    E = ChernData(2, c1, 0)
    c1_sq = c1.dot(c1)
    special_sq = special.dot(special)
    return SpinorTensorExample(
        a=a, surface=S, bundle=E, c1_sq=c1_sq, special_sq=special_sq,
        is_special=c1 == special and c1_sq == special_sq,
        hodge_ok=hodge_bound_ok(S, E),
        slope_equality=ulrich_chern_check(S, E).eq1)


@dataclass(frozen=True)
class GPK3Check:
    q: int
    p_g: int
    K2: int
    chi: int
    bound2_value: int
    pluricanonical_wild: bool
    bmy_holds: bool
    tensor_rank: int
    tensor_alpha: int


def gpk3_section_check() -> GPK3Check:
    """Hyperplane section of a GPK^3 threefold: canonically embedded, wild."""
    q, p_g, K2 = 0, 9, 25
    chi = 1 - q + p_g
    rank, alpha = tensor_restriction_chern(3, 3, 3, 3)
    return GPK3Check(q=q, p_g=p_g, K2=K2, chi=chi,
                     bound2_value=(1 * 1 - 1) * K2 + 4 * chi,
                     pluricanonical_wild=pluricanonical_wild(1, K2, chi),
                     bmy_holds=bmy_holds(K2, chi),
                     tensor_rank=rank, tensor_alpha=alpha)
