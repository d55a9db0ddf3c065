import pytest

from ulrichwild.lattice import blow_up, plane, ruled
from ulrichwild.recipes import plane_blowup
from ulrichwild.surface import (InconsistentSurfaceError, PolarizedSurface,
                                ambient_dimension, bmy_holds, double_point_p4_residual,
                                expected_ambient_dimension, invariants, sectional_genus)


def test_plane_conic_embedding():
    lat, K = plane()
    S = PolarizedSurface(lat, 2 * lat.basis("L"), K)
    inv = invariants(S)
    assert (inv.d, inv.hK, inv.K2, inv.chi, inv.pi, inv.c2_top) == (4, -6, 9, 1, 0, 3)
    assert expected_ambient_dimension(S) == 5


def test_cubic_surface():
    S = plane_blowup(3, *[1] * 6).build()
    inv = invariants(S)
    assert (inv.d, inv.hK, inv.K2, inv.pi) == (3, -3, 3, 1)
    assert inv.c2_top == 9  # Bl_6 P^2 has Euler number 3 + 6
    assert expected_ambient_dimension(S) == 3


def test_bordiga_double_point():
    S = plane_blowup(4, *[1] * 10).build()
    inv = invariants(S)
    assert double_point_p4_residual(inv.d, inv.hK, inv.K2, inv.chi) == 0


def test_rejects_bad_surfaces():
    lat, K = plane()
    with pytest.raises(InconsistentSurfaceError):
        PolarizedSurface(lat, lat.zero(), K)
    with pytest.raises(InconsistentSurfaceError):
        PolarizedSurface(lat, lat.basis("L"), K, q=-1)
    lat2, K2 = ruled(0, 0)
    other, _ = plane()
    with pytest.raises(ValueError):
        PolarizedSurface(lat2, other.basis("L"), K2)


def test_sectional_genus_parity():
    assert sectional_genus(8, -8) == 1
    with pytest.raises(InconsistentSurfaceError):
        sectional_genus(5, -4)


def test_ambient_dimension_with_cohomology():
    # quintic surface: h^2(O(h)) = h^0(O) = 1
    assert ambient_dimension(5, 5, 5, 0, 1) == 3
    assert ambient_dimension(0, 8, -4, 2) == 7


def test_bmy():
    assert bmy_holds(25, 10)
    assert not bmy_holds(10, 1)


def test_blown_up_chi_unchanged():
    lat, K = blow_up(*ruled(1, 0), 2)
    S = PolarizedSurface(lat, lat.divisor((2, 3, -1, -1)), K, q=1)
    assert S.chi == 0 and S.K2 == -2
