import json

import pytest

from ulrichwild.catalog import (KNOWN_ERRATA, SPECIALITY, CatalogError, Kodaira,
                                UlrichStatus, catalog_from_json, catalog_to_json, get_row,
                                load_catalog, numeric_model, row_from_dict, row_to_dict,
                                surface_for_row, verify_catalog, verify_row,
                                wildness_record)
from ulrichwild.recipes import RecipeError, SurfaceRecipe
from ulrichwild.search import find_special_rank2
from ulrichwild.surface import invariants

ROWS = load_catalog()

# rows whose printed numbers disagree with their construction, by field
FROZEN_FLAGS = {
    "IX": ["K2"],
    "XII": ["N", "h1"],
    "XXVII": ["d", "h1", "hK"],
    "XLV": ["h1", "hK", "pi"],
}


def test_row_count_and_ids():
    assert len(ROWS) == 52
    assert ROWS[0].id == "I" and ROWS[-1].id == "LII"
    assert [r.id for r in ROWS][47:50] == ["XLVIII", "IL", "L"]
    assert len({r.id for r in ROWS}) == 52


def test_printed_examples():
    r = get_row("XIX")
    assert (r.d, r.kappa, r.p_g, r.K2, r.hK, r.N) == (6, Kodaira.TWO, 10, 24, 12, 3)
    assert get_row("xxix").ulrich_status is UlrichStatus.NO_RESULTS
    with pytest.raises(CatalogError):
        get_row("LIII")


def test_kappa_one_iff_no_results():
    for r in ROWS:
        assert (r.kappa is Kodaira.ONE) == (r.ulrich_status is UlrichStatus.NO_RESULTS)


def test_recipe_coverage():
    assert sum(1 for r in ROWS if r.recipes) == 40
    no_recipe = sorted(r.id for r in ROWS if not r.recipes)
    assert no_recipe == sorted(["VIII", "XIII", "XVIII", "XIX", "XXVIII", "XXIX", "XXX",
                                "XLVIII", "IL", "L", "LI", "LII"])
    assert len(get_row("XXXII").recipes) == 5


def test_flags_are_exactly_the_known_errata():
    flags = {rep.row_id: rep.mismatches for rep in verify_catalog() if rep.mismatches}
    assert flags == FROZEN_FLAGS
    assert {k: sorted(v) for k, v in KNOWN_ERRATA.items()} == FROZEN_FLAGS
    assert all(rep.ok for rep in verify_catalog())


def test_verify_xiv_and_v():
    for rid in ("XIV", "V"):
        rep = verify_row(get_row(rid))
        assert rep.all_match and rep.double_point_derived == 0


def test_verify_ix():
    rep = verify_row(get_row("IX"))
    assert rep.mismatches == ["K2"] and rep.expected_flags == ["K2"]
    assert rep.derived("K2") == 1
    assert (rep.double_point_derived, rep.double_point_printed) == (0, -2)


def test_speciality_from_n():
    for r in ROWS:
        if r.id in KNOWN_ERRATA and "h1" in KNOWN_ERRATA[r.id]:
            continue
        assert r.h1_of_h == SPECIALITY.get(r.id, 0), r.id
        assert r.h1_of_h >= 0


def test_variants_agree():
    for r in ROWS:
        invs = {(i.d, i.hK, i.K2, i.chi) for i in (invariants(x.build()) for x in r.recipes)}
        assert len(invs) <= 1, r.id


def test_numeric_models():
    for r in ROWS:
        if r.recipes:
            continue
        S = numeric_model(r)
        assert (S.d, S.hK, S.K2, S.chi) == (r.d, r.hK, r.K2, r.chi)
    assert numeric_model(get_row("LII")).lattice.rank == 1
    assert numeric_model(get_row("XLVIII")).lattice.rank == 2
    assert find_special_rank2(surface_for_row(get_row("XLVIII"))).c2 == 27


def test_surface_for_row_variants():
    S = surface_for_row(get_row("XL"), 3)
    assert S.lattice.gram[0][0] == -6
    with pytest.raises(CatalogError):
        surface_for_row(get_row("XL"), 4)
    with pytest.raises(CatalogError):
        surface_for_row(get_row("VIII"), 1)


def test_wildness_records():
    vii = wildness_record(get_row("VII"))
    assert (vii.d, vii.pi, vii.verdict, vii.bound1_holds) == (4, 0, "not wild", False)
    assert wildness_record(get_row("III")).verdict == "wild"
    xlvii = wildness_record(get_row("XLVII"))
    assert xlvii.bound1_lhs == -80 and xlvii.not_sharp
    assert wildness_record(get_row("L")).verdict == "unknown"


def test_json_round_trip():
    text = catalog_to_json()
    rows = catalog_from_json(text)
    assert rows == ROWS
    assert catalog_to_json(rows) == text
    data = json.loads(text)
    assert data[0]["kappa"] == "-inf"
    assert set(data[0]) >= {"id", "model", "recipe", "d", "kappa", "p_g", "q", "K2",
                            "hK", "N", "ulrich_status"}


def test_json_errors():
    with pytest.raises(CatalogError, match="line 1"):
        catalog_from_json("[{,}]")
    with pytest.raises(CatalogError, match="top-level array"):
        catalog_from_json("{}")
    good = row_to_dict(get_row("IV"))
    bad = dict(good)
    del bad["N"]
    with pytest.raises(CatalogError, match="missing field"):
        row_from_dict(bad)
    bad = dict(good, kappa="two")
    with pytest.raises(CatalogError, match="kappa"):
        row_from_dict(bad)
    bad = dict(good, ulrich_status="maybe")
    with pytest.raises(CatalogError, match="ulrich_status"):
        row_from_dict(bad)
    bad = dict(good, recipe={"kind": "torus", "args": {}})
    with pytest.raises(CatalogError, match="unknown recipe kind"):
        row_from_dict(bad)


def test_recipe_round_trip():
    for r in ROWS:
        for x in r.recipes:
            assert SurfaceRecipe.from_dict(json.loads(json.dumps(x.to_dict()))) == x
    with pytest.raises(RecipeError):
        SurfaceRecipe.from_dict({"kind": "ruled", "args": {"g": 0},
                                 "polarization": [1, 1]}).build()
