import io
import json

import pytest

from ulrichwild.catalog import catalog_from_json, load_catalog
from ulrichwild.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_single_row():
    code, out, _ = call("verify-catalog", "--row", "XIV")
    assert code == 0 and "all fields match" in out


def test_verify_full_catalog_has_only_expected_flags():
    code, out, _ = call("--json", "verify-catalog")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["row_count"] == 52
    ix = next(r for r in data["rows"] if r["id"] == "IX")
    assert ix["expected_flags"] == ["K2"] and ix["unexpected"] == []


def test_unexpected_mismatch_exits_1(tmp_path):
    data = json.loads(call("export-catalog")[1])
    for row in data:
        if row["id"] == "XIV":
            row["K2"] = 5
    path = tmp_path / "cat.json"
    path.write_text(json.dumps(data))
    code, out, _ = call("verify-catalog", "--catalog", str(path))
    assert code == 1 and "XIV" in out


def test_export_round_trip(tmp_path):
    path = tmp_path / "out.json"
    assert call("export-catalog", "-o", str(path))[0] == 0
    assert catalog_from_json(path.read_text()) == load_catalog()
    code, _, _ = call("verify-catalog", "--catalog", str(path))
    assert code == 0


def test_find_line_bundles():
    code, out, _ = call("find-line-bundles", "--surface", "catalog:VII")
    assert code == 0 and "linear_gcd" in out
    code, out, _ = call("find-line-bundles", "--surface", "catalog:IV", "--box", "10",
                        "--json")
    data = json.loads(out)
    assert data["solutions"] == ["2f", "xi + f"]
    assert data["solution_coords"] == [[0, 2], [1, 1]]
    code, out, _ = call("find-line-bundles", "--surface", "catalog:XIV", "--json",
                        "--max-solutions", "3")
    data = json.loads(out)
    assert data["count"] == 3 and data["exhaustive_within_box"] is False


def test_json_flag_is_position_independent():
    a = call("--json", "gpk3")[1]
    b = call("gpk3", "--json")[1]
    assert a == b and json.loads(a)["tensor_rank"] == 9


def test_dp3_section_json():
    code, out, _ = call("dp3-section", "--a", "3", "--delta", "5", "--json")
    assert code == 0 and json.loads(out)["bound1_holds"] is True


def test_special_rank2_and_check_wild():
    data = json.loads(call("special-rank2", "--surface", "catalog:VIII", "--json")[1])
    assert data["c2"] == 14 and data["minus_chi_hom_dual_twist"] == 12
    assert data["h1_lower_bound"] == "12"
    data = json.loads(call("check-wild", "--surface", "catalog:XLVII", "--json")[1])
    assert data["bound1_lhs"] == -80 and data["low_degree_verdict"] == "wild"
    assert data["h1_lower_bound"]["1"] == "-1/2"


def test_invariants_and_surface_files(tmp_path):
    data = json.loads(call("invariants", "--surface", "catalog:IX", "--json")[1])
    assert (data["d"], data["K2"], data["double_point_p4_residual"]) == (5, 1, 0)
    spec = tmp_path / "s.json"
    spec.write_text(json.dumps({"gram": [[1]], "labels": ["L"], "K": [-3], "h": [2]}))
    data = json.loads(call("invariants", "--surface", str(spec), "--json")[1])
    assert data["d"] == 4 and data["pi"] == 0
    spec.write_text(json.dumps({"recipe": {
        "kind": "blow_up", "args": {"base": {"kind": "plane", "args": {}}, "t": 1},
        "polarization": [3, -1], "q": 0, "p_g": 0}}))
    data = json.loads(call("invariants", "--surface", str(spec), "--json")[1])
    assert data["d"] == 8


def test_ci_commands():
    data = json.loads(call("ci", "--ambient", "4", "--degrees", "2,4", "--json")[1])
    assert (data["d"], data["chi"], data["bound1_lhs"]) == (8, 6, 128)
    data = json.loads(call("ci-scan", "--max-degree", "12", "--max-ambient", "6",
                           "--json")[1])
    assert data["confirmed"] and data["failures"] == []
    code, out, _ = call("ci-scan", "--max-degree", "10", "--max-ambient", "3")
    assert code == 0 and "confirmed" in out


def test_kodaira_zero():
    data = json.loads(call("kodaira-zero", "--chi", "0", "--h0", "5", "--json")[1])
    assert data == {"chi": 0, "h0_of_h": 5, "d": 10, "bound1_holds": True}


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    [],
    ["ci", "--ambient", "4"],
    ["ci", "--ambient", "4", "--degrees", "2,x"],
    ["ci", "--ambient", "4", "--degrees", "2"],
    ["dp3-section", "--a", "2", "--delta", "3"],
    ["invariants", "--surface", "catalog:LIII"],
    ["invariants", "--surface", "/nonexistent/file.json"],
    ["verify-catalog", "--row", "ZZ"],
    ["kodaira-zero", "--chi", "3", "--h0", "1"],
])
def test_usage_errors_exit_2(argv):
    code, _, err = call(*argv)
    assert code == 2 and err


def test_malformed_surface_file(tmp_path):
    spec = tmp_path / "bad.json"
    spec.write_text('{"gram": [[1]],\n "labels": ["L"], "K": [-3]}')
    code, _, err = call("invariants", "--surface", str(spec))
    assert code == 2 and "missing field(s) h" in err
    spec.write_text('{"gram": [[1]],\n "labels": ]}')
    code, _, err = call("invariants", "--surface", str(spec))
    assert code == 2 and "line 2" in err
    spec.write_text(json.dumps({"gram": [[1, 2], [3, 1]], "labels": ["a", "b"],
                                "K": [0, 0], "h": [1, 0]}))
    code, _, err = call("invariants", "--surface", str(spec))
    assert code == 2 and "symmetric" in err
