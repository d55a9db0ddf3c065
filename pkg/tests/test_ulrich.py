from fractions import Fraction

import pytest

from ulrichwild.lattice import custom, plane
from ulrichwild.recipes import curve_times_line, plane_blowup
from ulrichwild.surface import PolarizedSurface
from ulrichwild.ulrich import (ChernData, ParityError, adjoint_class, chi_hom, dual_twist,
                               h1_lower_bound, hodge_bound_ok, line_bundle_conditions,
                               pluricanonical_wild, riemann_roch_chi, slope, special_c1,
                               tensor_restriction_chern, twist, ulrich_chern_check,
                               wildness_bound1)


def _plane(a=1):
    lat, K = plane()
    return PolarizedSurface(lat, a * lat.basis("L"), K)


def test_trivial_bundle_on_plane_is_ulrich():
    S = _plane()
    E = ChernData(1, S.lattice.zero(), 0)
    assert ulrich_chern_check(S, E).both
    assert line_bundle_conditions(S, S.lattice.zero())
    assert riemann_roch_chi(S, E) == 1


def test_veronese_has_no_line_bundle_but_rank2():
    S = _plane(2)
    L = S.lattice.basis("L")
    for k in range(-5, 6):
        assert not line_bundle_conditions(S, k * L)
    c1 = special_c1(S, 2)
    assert c1 == adjoint_class(S) == 3 * L
    num = c1.dot(c1) - c1.dot(S.K) - 2 * 2 * (S.d - S.chi)
    E = ChernData(2, c1, num // 2)
    assert ulrich_chern_check(S, E).both
    assert riemann_roch_chi(S, E) == 2 * S.d


def test_quadric_line_bundles():
    S = curve_times_line(0, 1, 1).build()
    f1, f2 = S.lattice.gens()
    assert line_bundle_conditions(S, f1) and line_bundle_conditions(S, f2)
    assert not line_bundle_conditions(S, f1 + f2)


def test_dual_twist_and_twist():
    S = plane_blowup(3, 1, 1).build()
    c1 = S.lattice.divisor((4, -1, -2))
    E = ChernData(2, c1, 5)
    assert dual_twist(S, dual_twist(S, E)) == E
    assert twist(S, twist(S, E, 2), -2) == E
    assert twist(S, E, 0) == E


def test_parity_error_odd_lattice():
    lat, K = custom([[1]], ["h"], [0])
    S = PolarizedSurface(lat, 2 * lat.basis("h"), K)
    with pytest.raises(ParityError):
        riemann_roch_chi(S, ChernData(1, lat.basis("h"), 0))


def test_bounds():
    S = _plane()
    assert wildness_bound1(S).lhs == -12
    assert h1_lower_bound(S, 1) == Fraction(1 + 4 - 9, 4)
    assert h1_lower_bound(S, 2) == 4 * h1_lower_bound(S, 1)
    with pytest.raises(ValueError):
        h1_lower_bound(S, 0)


def test_hodge_bound():
    S = _plane(2)
    L = S.lattice.basis("L")
    assert hodge_bound_ok(S, ChernData(2, 3 * L, 0))
    assert not hodge_bound_ok(S, ChernData(1, 3 * L, 0))


def test_chi_hom_special_formula():
    S = plane_blowup(4, *[1] * 10).build()
    for r in (2, 4):
        c1 = special_c1(S, r)
        num = c1.dot(c1) - c1.dot(S.K) - 2 * r * (S.d - S.chi)
        E = ChernData(r, c1, num // 2)
        val = -chi_hom(S, E, dual_twist(S, E))
        assert 4 * val == r * r * (S.d + 4 * S.chi - S.K2)


def test_misc():
    S = _plane(2)
    L = S.lattice.basis("L")
    assert slope(S, ChernData(2, 6 * L, 0)) == 6
    assert pluricanonical_wild(1, 25, 10)
    assert not pluricanonical_wild(1, 1, 1)
    assert tensor_restriction_chern(3, 3, 3, 3) == (9, 18)
    with pytest.raises(ValueError):
        special_c1(S, 3)
    with pytest.raises(ValueError):
        ChernData(0, L, 0)
