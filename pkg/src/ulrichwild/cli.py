"""Command-line front end.

Every subcommand builds a plain dict and prints it either as an aligned
key/value listing or, with ``--json``, as sorted JSON.  Rationals are
printed as strings (``"25/2"``) so JSON output never contains floats.

Exit codes: 0 success (including mathematically negative answers), 1 an
unexpected audit mismatch in ``verify-catalog``, 2 bad arguments or input.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from fractions import Fraction
from typing import Optional

from . import __version__
from .analyzers import (ci_wild_range_scan, complete_intersection, del_pezzo_section,
                        gpk3_section_check, minimal_kodaira_zero_check)
from .catalog import (KNOWN_ERRATA, CatalogError, catalog_from_json, catalog_to_json,
                      get_row, load_catalog, surface_for_row,
                      verify_row, wildness_record)
from .lattice import DivisorClass, LatticeError, custom
from .recipes import RecipeError, SurfaceRecipe
from .search import DEFAULT_BOX_RADIUS, find_special_rank2, find_ulrich_line_bundles
from .surface import (InconsistentSurfaceError, PolarizedSurface,
                      double_point_p4_residual, invariants)
from .ulrich import (ParityError, chi_hom, dual_twist, h1_lower_bound, hodge_bound_ok,
                     riemann_roch_chi, ulrich_chern_check, wildness_bound1)

DEFAULT_MAX_SOLUTIONS = 1000


class UsageError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


# ---------------------------------------------------------------------------
# Surface loading


def _from_spec_dict(obj, where) -> PolarizedSurface:
    if not isinstance(obj, dict):
        raise UsageError(f"{where}: expected a JSON object")
    if "recipe" in obj:
        try:
            recipe = SurfaceRecipe.from_dict(obj["recipe"], "recipe")
            return recipe.build(label=obj.get("label"))
        except (RecipeError, LatticeError, InconsistentSurfaceError) as exc:
            raise UsageError(f"{where}: {exc}") from None
    missing = [k for k in ("gram", "labels", "K", "h") if k not in obj]
    if missing:
        raise UsageError(f"{where}: missing field(s) {', '.join(missing)} "
                         "(or give a 'recipe')")
    for k in ("q", "p_g"):
        if k in obj and (isinstance(obj[k], bool) or not isinstance(obj[k], int)):
            raise UsageError(f"{where}.{k}: expected an integer")
    try:
        lat, K = custom(obj["gram"], obj["labels"], obj["K"])
        h = lat.divisor(obj["h"])
        return PolarizedSurface(lat, h, K, q=obj.get("q", 0), p_g=obj.get("p_g", 0),
                                label=obj.get("label"))
    except (LatticeError, InconsistentSurfaceError, TypeError) as exc:
        raise UsageError(f"{where}: {exc}") from None


def load_surface(spec: str, variant: int = 0):
    """Resolve ``catalog:ID`` or a JSON file path; returns ``(surface, row or None)``."""
    if spec.startswith("catalog:"):
        try:
            row = get_row(spec[len("catalog:"):])
            return surface_for_row(row, variant), row
        except CatalogError as exc:
            raise UsageError(str(exc)) from None
    try:
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read surface file {spec!r}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{spec}: line {exc.lineno}, column {exc.colno}: "
                         f"{exc.msg}") from None
    return _from_spec_dict(obj, spec), None


# ---------------------------------------------------------------------------
# Formatting


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, DivisorClass):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _text_lines(payload, indent=0):
    pad = " " * indent
    if not payload:
        return []
    width = max(len(str(k)) for k in payload)
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_text_lines(value, indent + 2))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                sub = _text_lines(item, indent + 4)
                sub[0] = pad + "  - " + sub[0][indent + 4:]
                lines.extend(sub)
        else:
            if isinstance(value, list):
                value = ", ".join(str(v) for v in value) if value else "(none)"
            elif value is None:
                value = "-"
            elif isinstance(value, bool):
                value = "yes" if value else "no"
            lines.append(f"{pad}{str(key).ljust(width)}  {value}")
    return lines


def _emit(payload, as_json, out, text=None):
    payload = _jsonable(payload)
    if as_json:
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(text if text is not None else _text_lines(payload)) + "\n")


def _table(headers, rows):
    cells = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
              for i, h in enumerate(headers)]
    fmt = "  ".join("{:<%d}" % w for w in widths)
    lines = [fmt.format(*headers).rstrip(), fmt.format(*("-" * w for w in widths))]
    lines.extend(fmt.format(*r).rstrip() for r in cells)
    return lines


def _surface_header(S: PolarizedSurface, row):
    payload = {"surface": S.label or "file", "basis": list(S.lattice.basis_labels),
               "h": S.h, "K": S.K}
    if row is not None and not row.recipes:
        payload["model"] = "numeric"
    return payload


# ---------------------------------------------------------------------------
# Subcommands


def cmd_invariants(args, out):
    S, row = load_surface(args.surface, args.variant)
    inv = invariants(S)
    payload = _surface_header(S, row)
    payload.update(d=inv.d, hK=inv.hK, K2=inv.K2, chi=inv.chi, pi=inv.pi,
                   c2_top=inv.c2_top, q=S.q, p_g=S.p_g,
                   signature=list(S.lattice.signature()),
                   double_point_p4_residual=double_point_p4_residual(
                       inv.d, inv.hK, inv.K2, inv.chi))
    _emit(payload, args.json, out)
    return 0


def cmd_check_wild(args, out):
    S, row = load_surface(args.surface, args.variant)
    b = wildness_bound1(S)
    payload = _surface_header(S, row)
    payload.update(d=S.d, chi=S.chi, hK=S.hK, bound1_lhs=b.lhs, bound1_holds=b.holds,
                   h1_lower_bound={"1": h1_lower_bound(S, 1), "2": h1_lower_bound(S, 2)})
    if row is not None:
        rec = wildness_record(row)
        payload["low_degree_verdict"] = rec.verdict
        payload["not_sharp"] = rec.not_sharp
    _emit(payload, args.json, out)
    return 0


def cmd_find_line_bundles(args, out):
    S, row = load_surface(args.surface, args.variant)
    limit = args.max_solutions if args.max_solutions > 0 else None
    res = find_ulrich_line_bundles(S, args.box, limit)
    payload = _surface_header(S, row)
    cert = res.certificate
    payload.update(
        box_radius=res.box_radius, exhaustive_within_box=res.exhaustive_within_box,
        proven_empty=res.proven_empty, count=len(res.solutions),
        certificate=None if cert is None else cert.kind,
        certificate_details=None if cert is None else cert.details,
        solutions=[str(D) for D in res.solutions],
        solution_coords=[list(D.coords) for D in res.solutions])
    if args.json:
        _emit(payload, True, out)
        return 0
    text_payload = {k: v for k, v in payload.items()
                    if k not in ("solution_coords", "certificate_details")}
    if cert is not None:
        text_payload["certificate_details"] = {
            k: (", ".join(map(str, v)) if isinstance(v, list) else v)
            for k, v in cert.details.items()}
    _emit(text_payload, False, out)
    return 0


def cmd_special_rank2(args, out):
    S, row = load_surface(args.surface, args.variant)
    payload = _surface_header(S, row)
    try:
        E = find_special_rank2(S)
        rr = riemann_roch_chi(S, E)
    except ParityError as exc:
        raise UsageError(str(exc)) from None
    chk = ulrich_chern_check(S, E)
    payload.update(rank=E.r, c1=E.c1, c2=E.c2, eq1=chk.eq1, eq2=chk.eq2,
                   riemann_roch_chi=rr, rank_times_degree=E.r * S.d,
                   hodge_bound_ok=hodge_bound_ok(S, E),
                   minus_chi_hom_dual_twist=-chi_hom(S, E, dual_twist(S, E)),
                   h1_lower_bound=h1_lower_bound(S, 2))
    _emit(payload, args.json, out)
    return 0


def _report_payload(rep, row):
    wild = wildness_record(row)
    if rep.all_match:
        status = "all fields match"
    elif rep.ok:
        status = "expected flags: " + ", ".join(rep.expected_flags)
    else:
        status = "UNEXPECTED mismatch: " + ", ".join(rep.unexpected)
    return {
        "id": rep.row_id, "has_recipe": rep.has_recipe, "status": status,
        "mismatches": rep.mismatches, "expected_flags": rep.expected_flags,
        "unexpected": rep.unexpected,
        "known_errata": dict(sorted(KNOWN_ERRATA.get(rep.row_id, {}).items())),
        "h1_of_h": rep.h1_of_h,
        "double_point_derived": rep.double_point_derived,
        "double_point_printed": rep.double_point_printed,
        "checks": [{"field": c.field, "printed": c.printed, "derived": c.derived,
                    "source": c.source, "variant": c.variant, "match": c.match}
                   for c in rep.checks],
        "wildness": {"pi": wild.pi, "bound1_lhs": wild.bound1_lhs,
                     "bound1_holds": wild.bound1_holds, "verdict": wild.verdict,
                     "not_sharp": wild.not_sharp},
    }


def cmd_verify_catalog(args, out):
    if args.catalog:
        try:
            with open(args.catalog, encoding="utf-8") as fh:
                rows = catalog_from_json(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read catalog {args.catalog!r}: "
                             f"{exc.strerror}") from None
        except (CatalogError, LatticeError, InconsistentSurfaceError) as exc:
            raise UsageError(f"{args.catalog}: {exc}") from None
    else:
        rows = load_catalog()
    if args.row:
        wanted = args.row.strip().upper()
        rows = [r for r in rows if r.id.upper() == wanted]
        if not rows:
            raise UsageError(f"no catalog row {args.row!r}")
    reports = [_report_payload(verify_row(r), r) for r in rows]
    failed = [p["id"] for p in reports if p["unexpected"]]
    payload = {"rows": reports, "row_count": len(reports),
               "unexpected_rows": failed, "ok": not failed}
    if args.json:
        _emit(payload, True, out)
    else:
        lines = _table(("row", "recipe", "pi", "bound1", "verdict", "status"),
                       [(p["id"], "yes" if p["has_recipe"] else "no",
                         p["wildness"]["pi"], p["wildness"]["bound1_lhs"],
                         p["wildness"]["verdict"], p["status"]) for p in reports])
        if len(reports) == 1:
            p = reports[0]
            lines.append("")
            lines.extend(_table(("field", "printed", "derived", "source", "variant"),
                                [(c["field"], c["printed"], c["derived"], c["source"],
                                  "-" if c["variant"] is None else c["variant"])
                                 for c in p["checks"]]))
        lines.append("")
        lines.append("ok" if not failed else "unexpected mismatches in: " + ", ".join(failed))
        _emit(payload, False, out, text=lines)
    return 1 if failed else 0


def cmd_export_catalog(args, out):
    text = catalog_to_json()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def _ci_payload(ci):
    return {"ambient_N": ci.ambient_N, "degrees": list(ci.degrees), "d": ci.d,
            "hK": ci.hK, "K2": ci.K2, "chi": ci.chi, "bound1_lhs": ci.bound1_lhs,
            "bound1_holds": ci.bound1_holds, "canonical_multiple": ci.canonical_multiple}


def _parse_degrees(text):
    try:
        degs = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--degrees must be a comma-separated list of integers, "
                         f"got {text!r}") from None
    return degs


def cmd_ci(args, out):
    try:
        ci = complete_intersection(args.ambient, _parse_degrees(args.degrees))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(_ci_payload(ci), args.json, out)
    return 0


def cmd_ci_scan(args, out):
    if args.max_ambient < 3 or args.max_degree < 1:
        raise UsageError("need --max-ambient >= 3 and --max-degree >= 1")
    rep = ci_wild_range_scan(args.max_ambient, args.max_degree)
    payload = {"max_ambient": rep.N_max, "max_degree": rep.d_max,
               "surfaces": len(rep.entries),
               "mid_range_all_pass": rep.mid_range_all_pass,
               "quartic_p3_passes": rep.quartic_p3_passes,
               "p3_high_degree_all_fail": rep.p3_high_degree_all_fail,
               "confirmed": rep.confirmed,
               "failures": [_ci_payload(c) for c in rep.failures]}
    if args.json:
        payload["entries"] = [_ci_payload(c) for c in rep.entries]
        _emit(payload, True, out)
        return 0
    lines = _text_lines({k: v for k, v in payload.items() if k != "failures"})
    lines.append("")
    lines.extend(_table(("N", "degrees", "d", "hK", "chi", "bound1", "holds"),
                        [(c.ambient_N, ",".join(map(str, c.degrees)), c.d, c.hK, c.chi,
                          c.bound1_lhs, "yes" if c.bound1_holds else "no")
                         for c in rep.entries]))
    _emit(payload, False, out, text=lines)
    return 0


def cmd_dp3_section(args, out):
    try:
        r = del_pezzo_section(args.a, args.delta)
    except (ValueError, ArithmeticError) as exc:
        raise UsageError(str(exc)) from None
    _emit({k: getattr(r, k) for k in r.__dataclass_fields__}, args.json, out)
    return 0


def cmd_gpk3(args, out):
    r = gpk3_section_check()
    _emit({k: getattr(r, k) for k in r.__dataclass_fields__}, args.json, out)
    return 0


def cmd_kodaira_zero(args, out):
    try:
        d, holds = minimal_kodaira_zero_check(args.chi, args.h0)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit({"chi": args.chi, "h0_of_h": args.h0, "d": d, "bound1_holds": holds},
          args.json, out)
    return 0


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print stable, sorted JSON instead of text")
    parser = argparse.ArgumentParser(
        prog="ulrichwild",
        description="Exact numerical checks for Ulrich bundles on polarized surfaces.")
    parser.add_argument("--json", action="store_true", default=False,
                        help="print stable, sorted JSON instead of text")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def surface_cmd(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.add_argument("--surface", required=True,
                       help="surface JSON file, or catalog:ID for a table row")
        p.add_argument("--variant", type=int, default=0,
                       help="recipe variant for rows with several models (default 0)")
        p.set_defaults(func=func)
        return p

    surface_cmd("invariants", cmd_invariants, "degree, h.K, K^2, chi, genus, signature")
    surface_cmd("check-wild", cmd_check_wild, "wildness inequality and h^1 lower bounds")
    p = surface_cmd("find-line-bundles", cmd_find_line_bundles,
                    "search for Ulrich line-bundle candidates")
    p.add_argument("--box", type=int, default=DEFAULT_BOX_RADIUS,
                   help=f"coordinate bound R (default {DEFAULT_BOX_RADIUS})")
    p.add_argument("--max-solutions", type=int, default=DEFAULT_MAX_SOLUTIONS,
                   help=f"stop after this many candidates, 0 for no limit "
                        f"(default {DEFAULT_MAX_SOLUTIONS})")
    surface_cmd("special-rank2", cmd_special_rank2,
                "rank 2 Chern data with c1 = 3h + K")

    p = sub.add_parser("verify-catalog", parents=[common],
                       help="audit table rows against their constructions")
    p.add_argument("--row", help="only this row id")
    p.add_argument("--catalog", help="audit this exported catalog JSON instead")
    p.set_defaults(func=cmd_verify_catalog)

    p = sub.add_parser("export-catalog", parents=[common], help="write the table as JSON")
    p.add_argument("--output", "-o", help="file to write (default stdout)")
    p.set_defaults(func=cmd_export_catalog)

    p = sub.add_parser("ci", parents=[common],
                       help="invariants of a complete intersection surface")
    p.add_argument("--ambient", type=int, required=True, help="N for P^N")
    p.add_argument("--degrees", required=True, help="comma-separated, e.g. 2,4")
    p.set_defaults(func=cmd_ci)

    p = sub.add_parser("ci-scan", parents=[common],
                       help="wildness inequality over all complete intersections in range")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--max-ambient", type=int, required=True)
    p.set_defaults(func=cmd_ci_scan)

    p = sub.add_parser("dp3-section", parents=[common],
                       help="sections of a del Pezzo threefold of degree a by a "
                            "degree delta hypersurface")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(func=cmd_dp3_section)

    p = sub.add_parser("gpk3", parents=[common], help="hyperplane section of GPK^3")
    p.set_defaults(func=cmd_gpk3)

    p = sub.add_parser("kodaira-zero", parents=[common],
                       help="minimal surface with numerically trivial K")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--h0", type=int, required=True, help="h^0(O_S(h))")
    p.set_defaults(func=cmd_kodaira_zero)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"ulrichwild: error: {exc}\n")
        return 2


def main(argv: Optional[list] = None) -> int:
    return run(argv)
