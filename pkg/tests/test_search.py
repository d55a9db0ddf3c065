import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from oracles import brute_force_line_bundles
from ulrichwild.lattice import custom
from ulrichwild.recipes import plane_blowup, ruled_surface
from ulrichwild.search import (find_special_rank2, find_ulrich_line_bundles,
                               line_bundle_certificate)
from ulrichwild.surface import InconsistentSurfaceError, PolarizedSurface
from ulrichwild.ulrich import line_bundle_conditions, ulrich_chern_check

# frozen after cross-checking against the brute-force oracle
F1_SOLUTIONS = [(0, 2), (1, 1)]
GENUS2_SCROLL_SOLUTIONS = [(0, 9), (1, 4)]


def _coords(res):
    return [D.coords for D in res.solutions]


def test_f1_scroll():
    S = ruled_surface(0, 1, 1, 2).build()
    res = find_ulrich_line_bundles(S, 10)
    assert _coords(res) == F1_SOLUTIONS
    assert res.exhaustive_within_box and not res.proven_empty
    assert all(line_bundle_conditions(S, D) for D in res.solutions)


def test_genus2_scroll():
    S = ruled_surface(2, -2, 1, 3, q=2).build()
    assert _coords(find_ulrich_line_bundles(S, 12)) == GENUS2_SCROLL_SOLUTIONS


def test_linear_gcd_certificate():
    S = plane_blowup(2).build()
    res = find_ulrich_line_bundles(S)
    assert res.certificate.kind == "linear_gcd"
    assert res.certificate.details == {"coefficients": [2], "gcd": 2, "target": 3}


def test_quadratic_certificate_on_blown_up_plane():
    S = plane_blowup(3, 1).build()
    cert = line_bundle_certificate(S.lattice, S.h.coords, S.K.coords, S.chi)
    assert cert.kind == "quadratic_discriminant"
    assert cert.details["quadratic"] == [4, -24, 35]
    assert cert.details["reason"] == "non_divisible"
    assert brute_force_line_bundles(S.lattice.gram, S.h.coords, S.K.coords, S.chi, 15) == []


def test_parity_certificate():
    # odd 3d + h.K cannot come from a very ample class, build the lattice directly
    lat, K = custom([[1, 0], [0, -1]], ["a", "b"], [0, 0])
    cert = line_bundle_certificate(lat, (1, 0), (0, 0), 1)
    assert cert.kind == "parity"


def test_max_solutions_truncates():
    S = plane_blowup(4, *[1] * 8).build()
    full = find_ulrich_line_bundles(S, 6)
    part = find_ulrich_line_bundles(S, 6, max_solutions=5)
    assert full.exhaustive_within_box and not part.exhaustive_within_box
    assert len(part.solutions) == 5
    assert set(D.coords for D in part.solutions) <= set(D.coords for D in full.solutions)


def test_argument_validation():
    S = plane_blowup(1).build()
    with pytest.raises(ValueError):
        find_ulrich_line_bundles(S, 0)
    with pytest.raises(ValueError):
        find_ulrich_line_bundles(S, 3, max_solutions=0)


def test_box_fallback_for_non_hyperbolic_lattice():
    lat, K = custom([[2, 0], [0, 2]], ["a", "b"], [0, 0])
    S = PolarizedSurface(lat, lat.divisor((1, 1)), K, p_g=1)
    res = find_ulrich_line_bundles(S, 6)
    assert _coords(res) == brute_force_line_bundles(lat.gram, (1, 1), (0, 0), S.chi, 6)


def test_higher_rank_matches_oracle():
    for recipe in (plane_blowup(3, 1, 1), plane_blowup(4, 2, 1, 1, 1),
                   ruled_surface(0, 1, 2, 4, t=2)):
        S = recipe.build()
        res = find_ulrich_line_bundles(S, 4)
        assert _coords(res) == brute_force_line_bundles(
            S.lattice.gram, S.h.coords, S.K.coords, S.chi, 4)


@st.composite
def small_surfaces(draw):
    kind = draw(st.sampled_from(["ruled", "plane_blowup"]))
    if kind == "ruled":
        g = draw(st.integers(0, 3))
        e = draw(st.integers(-2 * g if g else 0, 4))
        x = draw(st.integers(1, 3))
        y = draw(st.integers(-3, 9))
        t = draw(st.integers(0, 1))
        recipe = ruled_surface(g, e, x, y, t=t)
    else:
        a = draw(st.integers(1, 7))
        mults = draw(st.lists(st.integers(1, 3), min_size=0, max_size=2))
        recipe = plane_blowup(a, *mults)
    try:
        return recipe.build()
    except InconsistentSurfaceError:
        assume(False)


@settings(max_examples=150, deadline=None, suppress_health_check=list(HealthCheck))
@given(small_surfaces(), st.integers(0, 3))
def test_search_matches_brute_force(S, extra_q):
    S = PolarizedSurface(S.lattice, S.h, S.K, q=0, p_g=extra_q)
    R = 5
    res = find_ulrich_line_bundles(S, R)
    oracle = brute_force_line_bundles(S.lattice.gram, S.h.coords, S.K.coords, S.chi, R)
    if res.certificate is not None:
        assert oracle == []
    else:
        assert _coords(res) == oracle


def test_special_rank2():
    S = plane_blowup(4, *[1] * 10).build()
    E = find_special_rank2(S)
    assert E.r == 2 and E.c1 == 3 * S.h + S.K
    assert ulrich_chern_check(S, E).both
