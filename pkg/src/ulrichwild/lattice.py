"""Integer intersection lattices standing in for Num(S) of a smooth surface.

Every lattice carries a labelled basis and a symmetric integer Gram matrix.
Divisor classes are integer coordinate vectors tied to their lattice; pairing
two classes from different lattices raises instead of silently computing.

Basis conventions (fixed, so serialized output is deterministic):

* plane: ``[L]``
* ruled / Hirzebruch: ``[xi, f]``
* curve times P^1: ``[f1, f2]`` with ``f1`` the fibre over a point of the curve
* blow-ups append ``e<k>`` after the base basis, continuing any existing
  exceptional numbering.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class LatticeError(ValueError):
    """Malformed lattice data (non-symmetric Gram, wrong dimensions, ...)."""


class LatticeMismatchError(LatticeError):
    """Two divisor classes from different lattices were combined."""


@dataclass(frozen=True)
class IntersectionLattice:
    basis_labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        labels = tuple(str(s) for s in self.basis_labels)
        gram = tuple(tuple(_as_int(v) for v in row) for row in self.gram)
        n = len(labels)
        if n == 0:
            raise LatticeError("lattice rank must be positive")
        if len(set(labels)) != n:
            raise LatticeError(f"duplicate basis labels: {labels}")
        if len(gram) != n or any(len(row) != n for row in gram):
            raise LatticeError(
                f"gram must be {n}x{n} to match {n} basis labels")
        for i in range(n):
            for j in range(i + 1, n):
                if gram[i][j] != gram[j][i]:
                    raise LatticeError(
                        f"gram is not symmetric at ({i},{j}): "
                        f"{gram[i][j]} != {gram[j][i]}")
        object.__setattr__(self, "basis_labels", labels)
        object.__setattr__(self, "gram", gram)

    @property
    def rank(self) -> int:
        return len(self.basis_labels)

    def divisor(self, coords: Iterable[int]) -> DivisorClass:
        return DivisorClass(self, tuple(coords))

    def zero(self) -> DivisorClass:
        return DivisorClass(self, (0,) * self.rank)

    def basis(self, label: str) -> DivisorClass:
        try:
            i = self.basis_labels.index(label)
        except ValueError:
            raise LatticeError(f"no basis element {label!r} in "
                               f"{self.basis_labels}") from None
        coords = [0] * self.rank
        coords[i] = 1
        return DivisorClass(self, tuple(coords))

    def gens(self) -> tuple[DivisorClass, ...]:
        return tuple(self.basis(s) for s in self.basis_labels)

    def apply(self, coords: Sequence[int]) -> tuple[int, ...]:
        """Return ``gram @ coords``, the linear form ``D -> D . x``."""
        return tuple(sum(g * c for g, c in zip(row, coords))
                     for row in self.gram)

    def pair_coords(self, a: Sequence[int], b: Sequence[int]) -> int:
        return sum(x * y for x, y in zip(a, self.apply(b)))

    def signature(self) -> tuple[int, int, int]:
        """Inertia ``(n_plus, n_minus, n_zero)`` of the Gram matrix, exactly."""
        return inertia(self.gram)

    def is_hyperbolic(self) -> bool:
        """True when the signature is ``(1, rank - 1)`` (Hodge index shape)."""
        return self.signature() == (1, self.rank - 1, 0)


@dataclass(frozen=True)
class DivisorClass:
    lattice: IntersectionLattice
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(_as_int(c) for c in self.coords)
        if len(coords) != self.lattice.rank:
            raise LatticeError(
                f"coordinate vector of length {len(coords)} does not fit a "
                f"rank {self.lattice.rank} lattice")
        object.__setattr__(self, "coords", coords)

    def _check(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if other.lattice != self.lattice:
            raise LatticeMismatchError(
                "divisor classes live on different lattices: "
                f"{self.lattice.basis_labels} vs {other.lattice.basis_labels}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DivisorClass(self.lattice,
                            tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DivisorClass(self.lattice,
                            tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return DivisorClass(self.lattice, tuple(-a for a in self.coords))

    def __mul__(self, k):
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return DivisorClass(self.lattice, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def dot(self, other: DivisorClass) -> int:
        self._check(other)
        return self.lattice.pair_coords(self.coords, other.coords)

    def self_intersection(self) -> int:
        return self.dot(self)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        return format_class(self.coords, self.lattice.basis_labels)


def pair(D1: DivisorClass, D2: DivisorClass) -> int:
    """Intersection number ``D1 . D2``."""
    if not isinstance(D1, DivisorClass) or not isinstance(D2, DivisorClass):
        raise TypeError("pair() expects two DivisorClass values")
    return D1.dot(D2)


def format_class(coords: Sequence[int], labels: Sequence[str]) -> str:
    terms = []
    for c, s in zip(coords, labels):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        terms.append((sign, f"{mag}{s}"))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _as_int(v) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        if isinstance(v, Fraction) and v.denominator == 1:
            return int(v)
        raise LatticeError(f"expected an integer, got {v!r}")
    return v


def inertia(matrix: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """Sylvester inertia of a symmetric rational matrix.

    Congruence diagonalisation over ``Fraction``; a zero pivot with a nonzero
    off-diagonal entry is fixed by adding row/column ``j`` to ``i``.
    """
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        p = next((i for i in active if a[i][i] != 0), None)
        if p is None:
            pair_ij = next(((i, j) for i in active for j in active
                            if i != j and a[i][j] != 0), None)
            if pair_ij is None:
                break
            i, j = pair_ij
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            continue
        piv = a[p][p]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        active.remove(p)
        for i in active:
            factor = a[i][p] / piv
            if factor:
                for k in active:
                    a[i][k] -= factor * a[p][k]
        for i in active:
            a[i][p] = a[p][i] = Fraction(0)
    return pos, neg, n - pos - neg


# ---------------------------------------------------------------------------
# Standard surfaces


def plane() -> tuple[IntersectionLattice, DivisorClass]:
    """P^2: basis ``[L]``, ``L^2 = 1``, ``K = -3L``."""
    lat = IntersectionLattice(("L",), ((1,),))
    return lat, lat.divisor((-3,))


def ruled(g: int, e: int) -> tuple[IntersectionLattice, DivisorClass]:
    """Geometrically ruled surface over a genus ``g`` curve with invariant ``e``.

    Basis ``[xi, f]`` with ``xi^2 = -e``, ``xi.f = 1``, ``f^2 = 0`` and
    ``K = -2 xi + (2g - 2 - e) f``. Pull-backs of divisors on the base curve
    are only tracked through their degree.
    """
    if g < 0:
        raise LatticeError(f"genus must be non-negative, got {g}")
    lat = IntersectionLattice(("xi", "f"), ((-e, 1), (1, 0)))
    return lat, lat.divisor((-2, 2 * g - 2 - e))


def hirzebruch(e: int) -> tuple[IntersectionLattice, DivisorClass]:
    return ruled(0, e)


def product_curve_p1(g: int) -> tuple[IntersectionLattice, DivisorClass]:
    """``C x P^1`` with ``C`` of genus ``g``; basis ``[f1, f2]``.

    ``f1`` is the fibre over a point of ``C`` and ``f2`` a horizontal copy of
    ``C``, so ``K = (2g - 2) f1 - 2 f2``.
    """
    if g < 0:
        raise LatticeError(f"genus must be non-negative, got {g}")
    lat = IntersectionLattice(("f1", "f2"), ((0, 1), (1, 0)))
    return lat, lat.divisor((2 * g - 2, -2))


_EXC = re.compile(r"^e(\d+)$")


def blow_up(base: IntersectionLattice, K_base: DivisorClass, t: int
            ) -> tuple[IntersectionLattice, DivisorClass]:
    """Blow up ``t`` points; appends orthogonal ``(-1)``-classes and adds them to K."""
    if t < 1:
        raise LatticeError(f"number of blown-up points must be >= 1, got {t}")
    if K_base.lattice != base:
        raise LatticeMismatchError("canonical class does not belong to base")
    used = [int(m.group(1)) for s in base.basis_labels if (m := _EXC.match(s))]
    start = max(used, default=0) + 1
    labels = base.basis_labels + tuple(f"e{start + i}" for i in range(t))
    n = base.rank
    gram = [list(row) + [0] * t for row in base.gram]
    for i in range(t):
        row = [0] * (n + t)
        row[n + i] = -1
        gram.append(row)
    lat = IntersectionLattice(labels, tuple(tuple(r) for r in gram))
    return lat, lat.divisor(K_base.coords + (1,) * t)


def custom(gram, labels, K_coords) -> tuple[IntersectionLattice, DivisorClass]:
    lat = IntersectionLattice(tuple(labels), tuple(tuple(r) for r in gram))
    return lat, lat.divisor(K_coords)
