"""Exact numerical tests for Ulrich bundles on polarized surfaces."""

from .lattice import (DivisorClass, IntersectionLattice, LatticeError,
                      LatticeMismatchError, blow_up, custom, hirzebruch, pair,
                      plane, product_curve_p1, ruled)
from .surface import (InconsistentSurfaceError, PolarizedSurface, SurfaceInvariants,
                      ambient_dimension, bmy_holds, double_point_p4_residual,
                      expected_ambient_dimension, invariants, sectional_genus)
from .ulrich import (ChernData, ParityError, chi_hom, dual_twist, h1_lower_bound,
                     hodge_bound_ok, line_bundle_conditions, pluricanonical_wild,
                     riemann_roch_chi, special_c1, twist, ulrich_chern_check,
                     wildness_bound1)
from .search import (InfeasibilityCertificate, SearchResult, find_special_rank2,
                     find_ulrich_line_bundles)

__version__ = "0.1.0"

__all__ = [
    "DivisorClass",
    "IntersectionLattice",
    "LatticeError",
    "LatticeMismatchError",
    "blow_up",
    "custom",
    "hirzebruch",
    "pair",
    "plane",
    "product_curve_p1",
    "ruled",
    "InconsistentSurfaceError",
    "PolarizedSurface",
    "SurfaceInvariants",
    "ambient_dimension",
    "bmy_holds",
    "double_point_p4_residual",
    "expected_ambient_dimension",
    "invariants",
    "sectional_genus",
    "ChernData",
    "ParityError",
    "chi_hom",
    "dual_twist",
    "h1_lower_bound",
    "hodge_bound_ok",
    "line_bundle_conditions",
    "pluricanonical_wild",
    "riemann_roch_chi",
    "special_c1",
    "twist",
    "ulrich_chern_check",
    "wildness_bound1",
    "InfeasibilityCertificate",
    "SearchResult",
    "find_special_rank2",
    "find_ulrich_line_bundles",
]
