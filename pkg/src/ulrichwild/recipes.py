"""Construction recipes: small trees over the lattice constructors.

A recipe serializes as ``{kind, args, polarization, q, p_g}``.  Inner nodes
(the ``base`` of a blow-up) carry only ``kind`` and ``args``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from . import lattice as lat
from .surface import PolarizedSurface

KINDS = ("plane", "ruled", "product_curve_p1", "blow_up", "custom")


class RecipeError(ValueError):
    pass


@dataclass(frozen=True, eq=True)
class SurfaceRecipe:
    kind: str
    args: dict = field(default_factory=dict)
    polarization: Optional[tuple[int, ...]] = None
    q: int = 0
    p_g: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise RecipeError(f"unknown recipe kind {self.kind!r}; "
                              f"expected one of {', '.join(KINDS)}")
        if self.polarization is not None:
            object.__setattr__(self, "polarization", tuple(self.polarization))

    def build_base(self) -> tuple[lat.IntersectionLattice, lat.DivisorClass]:
        a = self.args
        try:
            if self.kind == "plane":
                return lat.plane()
            if self.kind == "ruled":
                return lat.ruled(int(a["g"]), int(a["e"]))
            if self.kind == "product_curve_p1":
                return lat.product_curve_p1(int(a["g"]))
            if self.kind == "blow_up":
                base = a["base"]
                if not isinstance(base, SurfaceRecipe):
                    raise RecipeError("blow_up base must be a recipe")
                L, K = base.build_base()
                return lat.blow_up(L, K, int(a["t"]))
            return lat.custom(a["gram"], a["labels"], a["K"])
        except KeyError as exc:
            raise RecipeError(f"{self.kind} recipe is missing argument "
                              f"{exc.args[0]!r}") from None

    def build(self, label: Optional[str] = None) -> PolarizedSurface:
        if self.polarization is None:
            raise RecipeError("recipe has no polarization")
        L, K = self.build_base()
        if len(self.polarization) != L.rank:
            raise RecipeError(f"polarization has {len(self.polarization)} "
                              f"coordinates but the lattice has rank {L.rank}")
        return PolarizedSurface(L, L.divisor(self.polarization), K,
                                q=self.q, p_g=self.p_g, label=label)

    def to_dict(self) -> dict:
        args: dict[str, Any] = {}
        for k, v in self.args.items():
            if isinstance(v, SurfaceRecipe):
                args[k] = v.to_dict()
            elif isinstance(v, tuple):
                args[k] = [list(x) if isinstance(x, tuple) else x for x in v]
            else:
                args[k] = v
        out: dict[str, Any] = {"kind": self.kind, "args": args}
        if self.polarization is not None:
            out["polarization"] = list(self.polarization)
            out["q"] = self.q
            out["p_g"] = self.p_g
        return out

    @classmethod
    def from_dict(cls, obj: dict, path: str = "recipe") -> SurfaceRecipe:
        if not isinstance(obj, dict):
            raise RecipeError(f"{path}: expected an object")
        if "kind" not in obj:
            raise RecipeError(f"{path}: missing field 'kind'")
        args = dict(obj.get("args", {}))
        if not isinstance(args, dict):
            raise RecipeError(f"{path}.args: expected an object")
        if "base" in args:
            args["base"] = cls.from_dict(args["base"], f"{path}.args.base")
        pol = obj.get("polarization")
        if pol is not None and (not isinstance(pol, list)
                                or not all(isinstance(x, int) for x in pol)):
            raise RecipeError(f"{path}.polarization: expected a list of integers")
        try:
            return cls(kind=obj["kind"], args=args,
                       polarization=tuple(pol) if pol is not None else None,
                       q=int(obj.get("q", 0)), p_g=int(obj.get("p_g", 0)))
        except RecipeError as exc:
            raise RecipeError(f"{path}: {exc}") from None


def plane_blowup(a: int, *mults: int) -> SurfaceRecipe:
    """``a L - sum m_i e_i`` on P^2 blown up at ``len(mults)`` points."""
    if not mults:
        return SurfaceRecipe("plane", {}, (a,))
    base = SurfaceRecipe("plane")
    return SurfaceRecipe("blow_up", {"base": base, "t": len(mults)},
                         (a,) + tuple(-m for m in mults))


def ruled_surface(g: int, e: int, x: int, y: int, t: int = 0, q: int = 0
                  ) -> SurfaceRecipe:
    """``x xi + y f - sum_{i<=t} e_i`` on a (blown-up) ruled surface."""
    base = SurfaceRecipe("ruled", {"g": g, "e": e})
    if t == 0:
        return SurfaceRecipe("ruled", {"g": g, "e": e}, (x, y), q=q)
    return SurfaceRecipe("blow_up", {"base": base, "t": t},
                         (x, y) + (-1,) * t, q=q)


def curve_times_line(g: int, x: int, y: int, t: int = 0, q: int = 0
                     ) -> SurfaceRecipe:
    if t == 0:
        return SurfaceRecipe("product_curve_p1", {"g": g}, (x, y), q=q)
    base = SurfaceRecipe("product_curve_p1", {"g": g})
    return SurfaceRecipe("blow_up", {"base": base, "t": t},
                         (x, y) + (-1,) * t, q=q)
