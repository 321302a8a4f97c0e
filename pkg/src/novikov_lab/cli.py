"""Command-line front end: ``novikov-lab <command> ...``.

Every command builds a report dictionary. With ``--json`` it is printed as
JSON, otherwise as short text lines. Exit status: 0 when every hard check
passes (the status may still be degenerate or unknown), 1 when a check
fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import __version__, catalog
from .algebra import (
    FINGERPRINT_FIELDS,
    Algebra,
    annihilator,
    check_novikov,
    ensure_generator_words,
    fingerprint,
    is_one_generated,
    power_chain,
)
from .cohomology import cohomology, unflatten_form
from .dsl import format_algebra, format_form, parse_algebra, parse_form
from .errors import (
    ConstraintViolation,
    DimensionMismatch,
    DslSyntaxError,
    IndexOutOfRange,
    MissingGeneratorWords,
    NotACocycle,
    UnboundParameter,
    UnknownDimension,
    UnknownEntry,
)
from .expr import evaluate
from .extensions import common_annihilator, extend, has_annihilator_component, is_admissible
from .isomorphism import DEFAULT_BUDGET, DEFAULT_HEIGHT, IsoWitness, NotIsomorphicCertificate, find_isomorphism
from .linalg import Matrix

INPUT_ERRORS = (
    DslSyntaxError,
    UnboundParameter,
    IndexOutOfRange,
    UnknownEntry,
    UnknownDimension,
    ConstraintViolation,
    DimensionMismatch,
    OSError,
)


class UsageError(Exception):
    pass


def _json_value(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Matrix):
        return [[str(c) for c in row] for row in x.entries]
    if isinstance(x, dict):
        return {str(k): _json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_value(v) for v in x]
    return x


def parse_params(items: Sequence[str] | None) -> dict[str, Fraction]:
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise UsageError(f"expected name=value, got {item!r}")
        try:
            out[name.strip()] = evaluate(value.strip())
        except (ValueError, SyntaxError, ZeroDivisionError) as exc:
            raise UsageError(f"bad value for {name.strip()!r}: {exc}") from None
    return out


def resolve_seed(seed: int | None) -> int:
    if seed is not None:
        return seed
    env = os.environ.get("NOVIKOV_LAB_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"NOVIKOV_LAB_SEED must be an integer, got {env!r}") from None


def load_algebra(path: str, params: dict[str, Fraction]) -> Algebra:
    text = Path(path).read_text(encoding="utf-8")
    return parse_algebra(text, params, name=Path(path).stem)


# --- commands ------------------------------------------------------------------


def cmd_check(args) -> dict:
    a = load_algebra(args.file, args.bindings)
    violations = check_novikov(a)
    chain = power_chain(a)
    nilpotent = chain[-1] == 0
    one_gen = nilpotent and is_one_generated(a)[0]
    checks = {"novikov_ok": not violations}
    info = {
        "dim": a.dim,
        "nilpotent": nilpotent,
        "one_generated": one_gen,
        "power_chain": chain,
        "annihilator_dim": annihilator(a).dim,
    }
    if not violations:
        info["fingerprint"] = dict(zip(FINGERPRINT_FIELDS, fingerprint(a)))
    else:
        first = violations[0]
        info["violation"] = {"identity": first.identity, "triple": list(first.triple), "residual": list(first.residual)}
        info["violation_count"] = len(violations)
    return {"checks": checks, "result": info, "status": "pass" if not violations else "fail"}


def cmd_cohomology(args) -> dict:
    a = load_algebra(args.file, args.bindings)
    violations = check_novikov(a)
    if violations:
        v = violations[0]
        return {
            "checks": {"novikov_ok": False},
            "result": {"violation": {"identity": v.identity, "triple": list(v.triple)}},
            "status": "fail",
        }
    data = cohomology(a)
    n = a.dim
    result = {
        "dims": {"z2": data.z2.dim, "b2": data.b2.dim, "h2": data.h2_dim},
        "z2": [format_form(unflatten_form(v, n)) for v in data.z2.basis],
        "b2": [format_form(unflatten_form(v, n)) for v in data.b2.basis],
        "h2": [format_form(t) for t in data.h2_reps],
    }
    return {"checks": {"novikov_ok": True}, "result": result, "status": "pass"}


def cmd_extend(args) -> dict:
    a = load_algebra(args.file, args.bindings)
    if not args.cocycle:
        raise UsageError("extend needs at least one --cocycle")
    forms = [parse_form(c, a.dim, args.bindings) for c in args.cocycle]
    try:
        ext = extend(a, forms)
    except NotACocycle as exc:
        detail = {"condition": exc.condition, "triple": list(exc.triple), "cocycle": exc.index}
        return {"checks": {"cocycles_ok": False}, "result": {"violation": detail}, "status": "fail"}
    data = cohomology(a)
    result = {
        "dim": ext.dim,
        "admissible": is_admissible(a, forms),
        "common_annihilator_dim": common_annihilator(a, forms).dim,
        "annihilator_component": has_annihilator_component(a, data, forms),
        "novikov_ok": not check_novikov(ext),
        "algebra": format_algebra(ext),
    }
    return {
        "checks": {"cocycles_ok": True, "novikov_ok": result["novikov_ok"]},
        "result": result,
        "status": "pass" if result["novikov_ok"] else "fail",
    }


def cmd_iso(args) -> dict:
    a = ensure_generator_words(load_algebra(args.file_a, args.bindings))
    b = load_algebra(args.file_b, args.bindings)
    if a.generator_words is None:
        raise MissingGeneratorWords(f"{args.file_a} is not a one-generated nilpotent algebra")
    found = find_isomorphism(a, b, args.budget, args.height)
    if isinstance(found, IsoWitness):
        result = {
            "outcome": "witness",
            "matrix": found.matrix,
            "generator_image": list(found.generator_image),
            "products_checked": found.products_checked,
            "nodes": found.nodes,
        }
        return {"checks": {"isomorphic": True}, "result": result, "status": "pass"}
    if isinstance(found, NotIsomorphicCertificate):
        result = {"outcome": "not-isomorphic", "invariant": found.invariant, "left": found.left, "right": found.right}
        return {"checks": {"isomorphic": False}, "result": result, "status": "fail"}
    result = {"outcome": "unknown", "nodes": found.nodes, "reason": found.reason}
    return {"checks": {}, "result": result, "status": "unknown"}


def _base_case_dict(r: catalog.BaseCaseReport) -> dict:
    return {
        "case": r.case,
        "params": r.params,
        "h2_dim": r.h2_dim,
        "nabla_in_Z2": r.nabla_in_Z2,
        "nabla_independent_mod_B2": r.nabla_independent_mod_B2,
        "nabla_spans_H2": r.nabla_spans_H2,
        "aut_template_ok": r.aut_template_ok,
        "action_formula_ok": r.action_formula_ok,
        "samples": r.samples,
        "mismatches": r.mismatches,
    }


def cmd_orbit_verify(args) -> dict:
    if args.entry in catalog.BASE_CASES and args.entry not in catalog.ENTRIES:
        case = catalog.BASE_CASES[args.entry]
    else:
        entry = catalog.get_entry(args.entry)
        case = catalog.base_case_for(entry, entry.resolve(args.bindings))
        if case is None:
            raise UnknownEntry(f"no cocycle and automorphism data for {args.entry} at these parameters")
    r = catalog.verify_base_case(case, args.bindings, args.seed, args.samples)
    keys = ("nabla_in_Z2", "nabla_independent_mod_B2", "aut_template_ok", "action_formula_ok")
    checks = {k: getattr(r, k) for k in keys}
    return {"checks": checks, "result": _base_case_dict(r), "status": "pass" if r.ok else "fail"}


def _entry_dict(r: catalog.EntryReport) -> dict:
    out = {
        "id": r.id,
        "params": r.params,
        "status": r.status,
        "constraints_ok": r.constraints_ok,
        "novikov_ok": r.novikov_ok,
        "nilpotent_ok": r.nilpotent_ok,
        "one_generated_ok": r.one_generated_ok,
        "annihilator_dim": r.annihilator_dim,
        "h2_dim": r.h2_dim,
        "power_chain": r.power_chain,
        "nabla_in_Z2": r.nabla_in_Z2,
        "nabla_independent_mod_B2": r.nabla_independent_mod_B2,
        "aut_template_ok": r.aut_template_ok,
        "action_formula_ok": r.action_formula_ok,
        "construction_roundtrip_ok": r.construction_roundtrip_ok,
        "degenerate": r.degenerate,
        "notices": r.notices,
    }
    if r.base_case is not None:
        out["base_case"] = r.base_case.case
        out["samples"] = r.base_case.samples
        if r.base_case.mismatches:
            out["mismatches"] = r.base_case.mismatches
    if r.roundtrip is not None:
        trip = {"construction": r.roundtrip.construction, "base": r.roundtrip.base}
        trip["admissible"] = r.roundtrip.admissible
        trip["outcome"] = r.roundtrip.status
        if isinstance(r.roundtrip.detail, IsoWitness):
            trip["matrix"] = r.roundtrip.detail.matrix
        out["roundtrip"] = trip
    return out


def _overall(statuses: Sequence[str]) -> str:
    for s in ("fail", "unknown", "degenerate"):
        if s in statuses:
            return s
    return "pass"


def cmd_catalog_verify(args) -> dict:
    skipped: list[str] = []
    reports = catalog.verify_catalog(args.dim, args.bindings, args.seed, args.samples, args.budget, skipped)
    entries = [_entry_dict(r) for r in reports]
    result: dict[str, Any] = {"entries": entries, "skipped": skipped}
    statuses = [r.status for r in reports]
    if args.equivalences:
        rows = catalog.verify_equivalences(args.bindings, args.budget)
        result["equivalences"] = [_equivalence_dict(r) for r in rows]
        statuses += ["pass" if r.status == "witness" else "fail" if r.status == "not-isomorphic" else "unknown" for r in rows]
    counts = {s: statuses.count(s) for s in ("pass", "degenerate", "unknown", "fail")}
    result["summary"] = counts
    return {"checks": {r.id: r.status != "fail" for r in reports}, "result": result, "status": _overall(statuses)}


def _equivalence_dict(r: catalog.EquivalenceRow) -> dict:
    out = {"claim": r.claim, "left": r.left, "right": r.right, "outcome": r.status, "nodes": r.nodes}
    if r.matrix is not None:
        out["matrix"] = r.matrix
        out["generator_image"] = list(r.generator_image)
    if r.detail:
        out["detail"] = r.detail
    return out


def cmd_catalog_equivalences(args) -> dict:
    rows = catalog.verify_equivalences(args.bindings, args.budget)
    statuses = ["pass" if r.status == "witness" else "fail" if r.status == "not-isomorphic" else "unknown" for r in rows]
    return {
        "checks": {r.claim: r.status == "witness" for r in rows},
        "result": {"equivalences": [_equivalence_dict(r) for r in rows]},
        "status": _overall(statuses),
    }


def cmd_catalog_list(args) -> dict:
    entries = catalog.entries_of_dim(args.dim) if args.dim is not None else list(catalog.ENTRIES.values())
    rows = []
    for e in entries:
        row = {"id": e.id, "dim": e.dim, "params": list(e.params), "default": [str(d) for d in e.default]}
        if e.nonzero:
            row["nonzero"] = list(e.nonzero)
        if e.note:
            row["note"] = e.note
        rows.append(row)
    return {"checks": {}, "result": {"entries": rows}, "status": "pass"}


def cmd_catalog_show(args) -> dict:
    entry = catalog.get_entry(args.entry)
    a = entry.instantiate(args.bindings, check=False)
    return {"checks": {}, "result": {"id": entry.id, "algebra": format_algebra(a, comment=a.name)}, "status": "pass"}


# --- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--seed", type=int, default=None, help="seed for random samples (default 0 or $NOVIKOV_LAB_SEED)")
    common.add_argument("--timing", action="store_true", help="add wall-clock time to the report")
    common.add_argument("--params", nargs="+", metavar="NAME=VALUE", default=[], help="parameter bindings")

    parser = argparse.ArgumentParser(prog="novikov-lab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="check the Novikov identities, nilpotency and one-generation")
    p.add_argument("file")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("cohomology", parents=[common], help="compute Z2, B2 and H2")
    p.add_argument("file")
    p.set_defaults(run=cmd_cohomology)

    p = sub.add_parser("extend", parents=[common], help="central extension by cocycles such as 'D13 + 2 D22'")
    p.add_argument("file")
    p.add_argument("--cocycle", action="append", default=[], metavar="FORM")
    p.set_defaults(run=cmd_extend)

    p = sub.add_parser("iso", parents=[common], help="search for an isomorphism between two algebras")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--height", type=int, default=DEFAULT_HEIGHT)
    p.set_defaults(run=cmd_iso)

    p = sub.add_parser("orbit-verify", parents=[common], help="check listed cocycles and action formulas of an entry")
    p.add_argument("entry")
    p.add_argument("--samples", type=int, default=catalog.DEFAULT_SAMPLES)
    p.set_defaults(run=cmd_orbit_verify)

    p = sub.add_parser("catalog", help="list or verify the catalog")
    csub = p.add_subparsers(dest="action", required=True)
    c = csub.add_parser("verify", parents=[common], help="verify catalog entries")
    c.add_argument("--dim", type=int, default=None)
    c.add_argument("--samples", type=int, default=catalog.DEFAULT_SAMPLES)
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    c.add_argument("--equivalences", action="store_true", help="also check the claimed isomorphisms")
    c.set_defaults(run=cmd_catalog_verify)
    c = csub.add_parser("equivalences", parents=[common], help="search witnesses for the claimed isomorphisms")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    c.set_defaults(run=cmd_catalog_equivalences)
    c = csub.add_parser("list", parents=[common], help="list catalog entries")
    c.add_argument("--dim", type=int, default=None)
    c.set_defaults(run=cmd_catalog_list)
    c = csub.add_parser("show", parents=[common], help="print an entry in the text format")
    c.add_argument("entry")
    c.set_defaults(run=cmd_catalog_show)
    return parser


def _inputs(args) -> dict:
    skip = {"run", "json", "timing", "seed", "bindings", "params", "command"}
    out = {k: v for k, v in vars(args).items() if k not in skip}
    out["params"] = {k: str(v) for k, v in args.bindings.items()}
    return out


def _print_text(report: dict, out) -> None:
    print(f"{report['command']}: {report['status']}", file=out)
    result = report["result"]
    if report["command"] != "catalog verify":
        for name, ok in report["checks"].items():
            print(f"  {name}: {'ok' if ok else 'FAILED'}", file=out)
    elif result["skipped"]:
        print(f"  skipped (excluded parameter values): {', '.join(result['skipped'])}", file=out)
    if "entries" in result and report["command"] == "catalog verify":
        for e in result["entries"]:
            extra = f" ({'; '.join(e['notices'])})" if e["notices"] else ""
            label = e["id"] + (f"({','.join(e['params'].values())})" if e["params"] else "")
            print(f"  {label}: {e['status']} ann={e['annihilator_dim']} h2={e['h2_dim']}{extra}", file=out)
    elif "entries" in result:
        for e in result["entries"]:
            params = f"({', '.join(e['params'])})" if e["params"] else ""
            print(f"  {e['id']}{params}", file=out)
    if "equivalences" in result:
        for r in result["equivalences"]:
            print(f"  {r['claim']}: {r['outcome']}", file=out)
    for key in ("dims", "violation", "outcome", "algebra", "h2"):
        if key in result:
            value = result[key]
            if isinstance(value, str) and "\n" in value:
                print(value.rstrip(), file=out)
            else:
                print(f"  {key}: {json.dumps(_json_value(value))}", file=out)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    command = args.command + (f" {args.action}" if args.command == "catalog" else "")
    start = time.perf_counter()
    try:
        args.seed = resolve_seed(args.seed)
        args.bindings = parse_params(args.params)
        body = args.run(args)
    except UsageError as exc:
        print(f"novikov-lab: error: {exc}", file=err)
        return 2
    except INPUT_ERRORS + (MissingGeneratorWords,) as exc:
        print(f"novikov-lab: error: {exc}", file=err)
        return 2
    report = {"command": command, "inputs": _inputs(args), "seed": args.seed, **body}
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 3)}
    if args.json:
        print(json.dumps(_json_value(report), indent=2), file=out)
    else:
        _print_text(report, out)
    return 1 if report["status"] == "fail" else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
