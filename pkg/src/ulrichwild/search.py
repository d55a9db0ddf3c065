"""Integer search for Ulrich line-bundle candidates and special rank-2 data.

A class ``D`` is a candidate when

    D.h = (3d + h.K) / 2,      D^2 - D.K = 2 (d - chi).

The first condition is a linear form ``l . x = m`` in the coordinates of
``D`` (``l = gram @ h``).  On the hyperplane it cuts out, the quadratic
``f(x) = x^T G x - x.(G K) - 2(d - chi)`` is strictly concave whenever the
lattice has signature ``(1, rank-1)``, because ``h^perp`` is negative
definite.  The enumeration uses that to bound each coordinate from the
partial maximum of ``f`` (a Fincke-Pohst style recursion).  Pruning runs in
floats with a safety margin; accepted points are re-checked in integers.
Other lattices fall back to plain box iteration.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional

from .lattice import IntersectionLattice
from .surface import PolarizedSurface
from .ulrich import ChernData, ParityError, adjoint_class

DEFAULT_BOX_RADIUS = 20

CERTIFICATE_KINDS = ("parity", "linear_gcd", "quadratic_discriminant")


@dataclass(frozen=True)
class InfeasibilityCertificate:
    """Arithmetic witness that no integer class satisfies the line-bundle system."""

    kind: str
    details: dict

    def __post_init__(self):
        if self.kind not in CERTIFICATE_KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")


@dataclass(frozen=True)
class SearchResult:
    solutions: list
    certificate: Optional[InfeasibilityCertificate]
    box_radius: int
    exhaustive_within_box: bool
    lattice: Optional[IntersectionLattice] = field(default=None, compare=False)

    @property
    def proven_empty(self) -> bool:
        return self.certificate is not None


def _egcd(a, b):
    """``(g, u, v)`` with ``u a + v b = g = gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def _integer_roots(A, B, C):
    """Integer roots of ``A t^2 + B t + C`` and, if none, the reason."""
    if A == 0:
        if B == 0:
            return (None, None) if C == 0 else ([], "nonzero_constant")
        return ([-C // B], None) if C % B == 0 else ([], "non_divisible")
    disc = B * B - 4 * A * C
    if disc < 0:
        return [], "negative_discriminant"
    s = isqrt(disc)
    if s * s != disc:
        return [], "non_square"
    roots = sorted({(-B + sg * s) // (2 * A) for sg in (1, -1)
                    if (-B + sg * s) % (2 * A) == 0})
    return (roots, None) if roots else ([], "non_divisible")


def _normalize(A, B, C):
    g = gcd(gcd(A, B), C) or 1
    A, B, C = A // g, B // g, C // g
    if A < 0 or (A == 0 and (B < 0 or (B == 0 and C < 0))):
        A, B, C = -A, -B, -C
    return A, B, C


def line_bundle_certificate(lattice: IntersectionLattice, h, K, chi: int
                            ) -> Optional[InfeasibilityCertificate]:
    """Try to prove that no integer class satisfies the line-bundle system.

    ``h`` and ``K`` are coordinate sequences on ``lattice``.  Parity and gcd
    obstructions work in any rank; eliminating the linear condition and
    testing the remaining quadratic is only attempted in rank <= 2.
    """
    h, K = tuple(h), tuple(K)
    d = lattice.pair_coords(h, h)
    hK = lattice.pair_coords(h, K)
    s = 3 * d + hK
    if s % 2:
        return InfeasibilityCertificate("parity", {"3d+hK": s})
    m = s // 2
    l = lattice.apply(h)
    g = 0
    for c in l:
        g = gcd(g, c)
    if g == 0 or m % g:
        return InfeasibilityCertificate(
            "linear_gcd", {"coefficients": list(l), "gcd": g, "target": m})
    n = lattice.rank
    GK = lattice.apply(K)
    const = 2 * (d - chi)

    def f(x):
        return lattice.pair_coords(x, x) - sum(a * b for a, b in zip(x, GK)) - const

    if n == 1:
        x = (m // l[0],)
        value = f(x)
        if value != 0:
            return InfeasibilityCertificate(
                "quadratic_discriminant",
                {"reason": "nonzero_constant", "point": list(x),
                 "quadratic": [0, 0, value]})
        return None
    if n != 2:
        return None
    _, u, v = _egcd(l[0], l[1])
    x0 = (u * (m // g), v * (m // g))
    w = (l[1] // g, -l[0] // g)
    A = lattice.pair_coords(w, w)
    B = 2 * lattice.pair_coords(x0, w) - sum(a * b for a, b in zip(w, GK))
    C = f(x0)
    A, B, C = _normalize(A, B, C)
    roots, reason = _integer_roots(A, B, C)
    if reason is None:
        return None
    return InfeasibilityCertificate(
        "quadratic_discriminant",
        {"reason": reason, "quadratic": [A, B, C],
         "discriminant": B * B - 4 * A * C,
         "base_point": list(x0), "direction": list(w)})


# ---------------------------------------------------------------------------
# Enumeration


def _solve(matrix, rhs):
    """Solve ``matrix @ x = rhs`` over Fractions (matrix assumed invertible)."""
    n = len(matrix)
    a = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                fac = a[r][col]
                a[r] = [x - fac * y for x, y in zip(a[r], a[col])]
    return [row[n] for row in a]


def _pivot(l):
    nz = [(abs(c), i) for i, c in enumerate(l) if c]
    return min(nz)[1]


class _LimitReached(Exception):
    pass


def _enumerate_pruned(lattice, l, m, GK, const, box, limit=None):
    n = lattice.rank
    G = lattice.gram
    j = _pivot(l)
    free = [i for i in range(n) if i != j]
    p = len(free)
    lj = Fraction(l[j])
    # x = x0 + M y with x0 = (m / l_j) e_j
    x0 = [Fraction(0)] * n
    x0[j] = m / lj
    cols = []
    for i in free:
        col = [Fraction(0)] * n
        col[i] = Fraction(1)
        col[j] = -l[i] / lj
        cols.append(col)

    def bil(a, b):
        return sum(a[r] * sum(G[r][c] * b[c] for c in range(n)) for r in range(n))

    H = [[bil(cols[a], cols[b]) for b in range(p)] for a in range(p)]
    Gx0 = [sum(G[r][c] * x0[c] for c in range(n)) for r in range(n)]
    gvec = [2 * sum(col[r] * Gx0[r] for r in range(n))
            - sum(col[r] * GK[r] for r in range(n)) for col in cols]
    c0 = bil(x0, x0) - sum(x0[r] * GK[r] for r in range(n)) - const

    # f(y) = y^T H y + g.y + c0 = fmax - z^T A z with z = y - ystar, A = -H.
    ystar = _solve(H, [-gi / 2 for gi in gvec])
    fmax = c0 + sum(gi * yi for gi, yi in zip(gvec, ystar)) / 2
    if fmax < 0:
        return [], True
    diag, upper = _ldl_upper([[-v for v in row] for row in H])
    # The decomposition is exact; traversal uses floats with a slack so that
    # no lattice point is cut off, and every leaf is re-checked in integers.
    ys = [float(v) for v in ystar]
    dg = [float(v) for v in diag]
    up = [[float(v) for v in row] for row in upper]
    slack = 1e-6 * (1 + abs(float(fmax)))

    found = []
    y = [0] * p

    def leaf():
        rest = m - sum(l[i] * yi for i, yi in zip(free, y))
        if rest % l[j]:
            return
        xj = rest // l[j]
        if abs(xj) > box:
            return
        x = [0] * n
        for i, yi in zip(free, y):
            x[i] = yi
        x[j] = xj
        if lattice.pair_coords(x, x) - sum(a * b for a, b in zip(x, GK)) == const:
            found.append(tuple(x))
            if limit is not None and len(found) >= limit:
                raise _LimitReached

    def dfs(i, budget):
        # coordinates i+1..p-1 are fixed; d_i (z_i + shift)^2 <= budget
        if i < 0:
            if abs(budget) <= slack:
                leaf()
            return
        row = up[i]
        center = ys[i] - sum(row[k] * (y[k] - ys[k]) for k in range(i + 1, p))
        r = math.sqrt(max(budget, 0.0) / dg[i]) + slack
        lo = max(-box, math.ceil(center - r))
        hi = min(box, math.floor(center + r))
        for s in range(lo, hi + 1):
            y[i] = s
            dfs(i - 1, budget - dg[i] * (s - center) ** 2)
        y[i] = 0

    try:
        dfs(p - 1, float(fmax))
    except _LimitReached:
        return found, False
    return found, True


def _ldl_upper(A):
    """``z^T A z = sum_i d_i (z_i + sum_{k>i} u_ik z_k)^2`` for positive definite ``A``."""
    p = len(A)
    Q = [list(map(Fraction, row)) for row in A]
    for i in range(p):
        for k in range(i + 1, p):
            Q[k][i] = Q[i][k]
            Q[i][k] = Q[i][k] / Q[i][i]
        for k in range(i + 1, p):
            for c in range(k, p):
                Q[k][c] -= Q[k][i] * Q[i][c]
    return [Q[i][i] for i in range(p)], Q


def _enumerate_box(lattice, l, m, GK, const, box, limit=None):
    n = lattice.rank
    j = _pivot(l)
    free = [i for i in range(n) if i != j]
    found = []
    for y in itertools.product(range(-box, box + 1), repeat=len(free)):
        rest = m - sum(l[i] * yi for i, yi in zip(free, y))
        if rest % l[j]:
            continue
        xj = rest // l[j]
        if abs(xj) > box:
            continue
        x = [0] * n
        for i, yi in zip(free, y):
            x[i] = yi
        x[j] = xj
        if lattice.pair_coords(x, x) - sum(a * b for a, b in zip(x, GK)) == const:
            found.append(tuple(x))
            if limit is not None and len(found) >= limit:
                return found, False
    return found, True


def find_ulrich_line_bundles(S: PolarizedSurface,
                             box_radius: int = DEFAULT_BOX_RADIUS,
                             max_solutions: Optional[int] = None) -> SearchResult:
    """All candidate Ulrich line bundles with coordinates in ``[-R, R]``.

    Certificates are tried first; a certificate proves emptiness over all of
    ``Z^rank``.  Solutions come back in lexicographic coordinate order.
    ``exhaustive_within_box`` is true whenever the box is fully decided,
    by enumeration or by a certificate; it is false when the search stopped
    at ``max_solutions`` (the returned list is then not canonical).
    """
    if box_radius < 1:
        raise ValueError("box_radius must be >= 1")
    if max_solutions is not None and max_solutions < 1:
        raise ValueError("max_solutions must be >= 1")
    lat = S.lattice
    cert = line_bundle_certificate(lat, S.h.coords, S.K.coords, S.chi)
    if cert is not None:
        return SearchResult([], cert, box_radius, True, lat)
    l = lat.apply(S.h.coords)
    m = (3 * S.d + S.hK) // 2
    GK = lat.apply(S.K.coords)
    const = 2 * (S.d - S.chi)
    if lat.is_hyperbolic():
        found, complete = _enumerate_pruned(lat, l, m, GK, const, box_radius,
                                            max_solutions)
    else:
        found, complete = _enumerate_box(lat, l, m, GK, const, box_radius,
                                         max_solutions)
    sols = [lat.divisor(x) for x in sorted(set(found))]
    return SearchResult(sols, None, box_radius, complete, lat)


def find_special_rank2(S: PolarizedSurface) -> ChernData:
    """Rank 2 Chern data with ``c1 = 3h + K`` and ``c2`` forced by Ulrich numerics."""
    c1 = adjoint_class(S)
    num = c1.dot(c1) - c1.dot(S.K)
    if num % 2:
        raise ParityError(f"c1^2 - c1.K = {num} is odd for c1 = {c1}")
    return ChernData(2, c1, num // 2 - 2 * (S.d - S.chi))
