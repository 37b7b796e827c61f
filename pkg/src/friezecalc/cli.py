"""Command-line front end.

Machine-readable JSON goes to stdout, short human summaries to stderr.
Exit codes: 0 all checks passed, 1 a check failed (the JSON carries the
violation report), 2 usage or input/parse errors.  Randomized subcommands
take ``--seed`` (fixed default) and echo it in the output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any

from . import classical, generators, serialize, zerofrieze
from .errors import FriezeError
from .field import format_element
from .frieze import (
    ConeSpec,
    InfiniteFrieze,
    cone_entries,
    detect_period,
    extract_m_minus,
    extract_m_plus,
)
from .matrix import (
    check_ptolemy,
    check_t_properties,
    det_closed_form,
    det_elimination,
    reconstruct_entry,
    triangulate,
    validate,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

DEFAULT_SEED = 0


def _read_json(path: str) -> Any:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(obj: Any) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load_matrix(path: str):
    return serialize.matrix_from_json(_read_json(path))


def _load_frieze(path: str) -> InfiniteFrieze:
    return InfiniteFrieze(serialize.frieze_seeds_from_json(_read_json(path)))


def _load_zero(path: str) -> zerofrieze.ZeroFrieze:
    u, v, fd = serialize.zero_seeds_from_json(_read_json(path))
    return zerofrieze.ZeroFrieze(u, v, fd)


# ---------------------------------------------------------------- matrix ops


def _cmd_validate(args) -> int:
    m = _load_matrix(args.matrix)
    report = validate(m)
    out = serialize.report_to_json(report)
    if args.ptolemy:
        ptolemy = check_ptolemy(m)
        out["ptolemy"] = serialize.report_to_json(ptolemy)
        out["ok"] = out["ok"] and ptolemy.ok
    _emit(out)
    if out["ok"]:
        _note("validate: ok")
    else:
        first = out["violations"][0] if out["violations"] else out["ptolemy"]["violations"][0]
        total = len(out["violations"]) + len(out.get("ptolemy", {}).get("violations", []))
        _note(
            f"validate: {total} violation(s), first: {first['rule']} at "
            f"{tuple(first['indices'])}: {first['lhs']} != {first['rhs']}"
        )
    return EXIT_OK if out["ok"] else EXIT_CHECK_FAILED


def _cmd_det(args) -> int:
    m = _load_matrix(args.matrix)
    out: dict[str, Any] = {"n": m.n, "method": args.method}
    if args.method in ("closed", "both"):
        report = validate(m)
        if not report.ok:
            _emit(
                {
                    "ok": False,
                    "error": "closed-form determinant needs a valid frieze matrix",
                    "violations": serialize.report_to_json(report)["violations"],
                }
            )
            _note("det: input failed validation")
            return EXIT_CHECK_FAILED
    if args.method == "closed":
        out["det"] = format_element(det_closed_form(m))
    elif args.method == "eliminate":
        out["det"] = format_element(det_elimination(m))
    else:
        closed = det_closed_form(m)
        elim = det_elimination(m)
        out["closed"] = format_element(closed)
        out["elimination"] = format_element(elim)
        out["equal"] = closed == elim
        _emit(out)
        _note(f"det: {out['closed']} (both methods agree: {out['equal']})")
        return EXIT_OK if out["equal"] else EXIT_CHECK_FAILED
    _emit(out)
    _note(f"det: {out['det']}")
    return EXIT_OK


def _cmd_triangulate(args) -> int:
    m = _load_matrix(args.matrix)
    report = validate(m)
    if not report.ok:
        _emit(serialize.report_to_json(report))
        _note("triangulate: input failed validation")
        return EXIT_CHECK_FAILED
    t, trace = triangulate(m, keep_trace=args.trace)
    out: dict[str, Any] = {"t": serialize.triangular_to_json(t)}
    ok = True
    if trace is not None:
        out["trace"] = {
            "steps": list(trace.steps),
            "matrices": [
                [[format_element(e) for e in row] for row in stage]
                for stage in trace.matrices
            ],
        }
        out["trace_matches_closed_form"] = trace.matrices[-1] == t.rows
        ok = out["trace_matches_closed_form"]
    if args.check_props:
        props = check_t_properties(t, m)
        out["properties"] = serialize.report_to_json(props)
        ok = ok and props.ok
    if args.grid:
        print(serialize.render_matrix_grid(t))
    else:
        _emit(out)
    _note("triangulate: ok" if ok else "triangulate: check failed")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_reconstruct(args) -> int:
    m = _load_matrix(args.matrix)
    value = reconstruct_entry(m, args.i, args.j)
    stored = m.entry(args.i, args.j)
    out = {
        "i": args.i,
        "j": args.j,
        "reconstructed": format_element(value),
        "stored": format_element(stored),
        "equal": value == stored,
    }
    _emit(out)
    _note(f"reconstruct ({args.i},{args.j}): {out['reconstructed']}")
    return EXIT_OK if out["equal"] else EXIT_CHECK_FAILED


# ---------------------------------------------------------------- frieze ops


def _cmd_frieze_gen(args) -> int:
    f = _load_frieze(args.seeds)
    if args.grid:
        print(serialize.render_frieze_grid(f, args.rows, args.cols, args.start))
        return EXIT_OK
    rows = [
        [
            format_element(f.entry(i, i + r))
            for i in range(args.start, args.start + args.cols)
        ]
        for r in range(args.rows)
    ]
    _emit(
        {
            "field": serialize.field_to_json(f.field),
            "col_start": args.start,
            "rows": rows,
        }
    )
    return EXIT_OK


def _cmd_frieze_cone(args) -> int:
    f = _load_frieze(args.seeds)
    entries = cone_entries(f, ConeSpec(args.i, args.j))
    _emit(
        {
            "i": args.i,
            "j": args.j,
            "entries": [
                {"x": x, "y": y, "value": format_element(v)}
                for (x, y), v in entries
            ],
        }
    )
    _note(f"cone of ({args.i},{args.j}): {len(entries)} entries")
    return EXIT_OK


def _cmd_frieze_extract(args) -> int:
    f = _load_frieze(args.seeds)
    if args.sign == "plus":
        m = extract_m_plus(f, args.k, args.n)
    else:
        m = extract_m_minus(f, args.k, args.n)
    if args.grid:
        print(serialize.render_matrix_grid(m))
    else:
        _emit(serialize.matrix_to_json(m))
    _note(f"extracted {args.n}x{args.n} matrix at k={args.k} ({args.sign})")
    return EXIT_OK


def _cmd_frieze_period(args) -> int:
    f = _load_frieze(args.seeds)
    period = detect_period(f, args.max, args.depth, args.start)
    _emit({"max_period": args.max, "depth": args.depth, "period": period})
    _note(f"period: {period}")
    return EXIT_OK


# ------------------------------------------------------------- 0-frieze ops


def _zero_rows(zf, rows: int, cols: int, start: int) -> list[list[str]]:
    return [
        [
            format_element(zf.entry(i, i + r - 1))
            for i in range(start, start + cols)
        ]
        for r in range(rows)
    ]


def _cmd_zero_gen(args) -> int:
    zf = _load_zero(args.seeds)
    if args.grid:
        print(serialize.render_zero_grid(zf, args.rows, args.cols, args.start))
    else:
        _emit({"col_start": args.start, "rows": _zero_rows(zf, args.rows, args.cols, args.start)})
    return EXIT_OK


def _cmd_zero_from_frieze(args) -> int:
    f = _load_frieze(args.seeds)
    zf = zerofrieze.from_frieze(f, args.k)
    if args.grid:
        print(serialize.render_zero_grid(zf, args.rows, args.cols, args.start))
    else:
        _emit(
            {
                "k": args.k,
                "col_start": args.start,
                "rows": _zero_rows(zf, args.rows, args.cols, args.start),
            }
        )
    return EXIT_OK


def _cmd_zero_check(args) -> int:
    zf = _load_zero(args.seeds)
    cells = zerofrieze.window_cells(zf, args.start, args.cols, args.rows)
    report = zerofrieze.check_zero_diamond(cells)
    out = serialize.report_to_json(report)
    try:
        a, b = zerofrieze.rank1_factorize(cells)
        out["rank1"] = {
            "ok": True,
            "a": {str(i): format_element(v) for i, v in sorted(a.items())},
            "b": {str(j): format_element(v) for j, v in sorted(b.items())},
        }
    except FriezeError as exc:
        out["rank1"] = {"ok": False, "error": str(exc)}
        out["ok"] = False
    _emit(out)
    _note("zerofrieze check: ok" if out["ok"] else "zerofrieze check: failed")
    return EXIT_OK if out["ok"] else EXIT_CHECK_FAILED


# -------------------------------------------------------------- cc / bm ops


def _quiddity_report(q: classical.QuiddityData) -> tuple[dict[str, Any], bool]:
    try:
        report = classical.cc_det_check(q)
    except FriezeError as exc:
        return {"quiddity": list(q.a), "ok": False, "error": str(exc)}, False
    out = {
        "quiddity": list(q.a),
        "k": q.k,
        "det": format_element(report.det),
        "det_oracle": format_element(report.det_oracle),
        "expected": format_element(report.expected),
        "ok": report.ok,
    }
    return out, report.ok


def _cmd_cc_check(args) -> int:
    try:
        values = [int(v) for v in args.quiddity.split(",")]
        q = classical.QuiddityData(tuple(values))
    except ValueError as exc:
        _note(f"error: bad quiddity sequence: {exc}")
        return EXIT_USAGE
    out, ok = _quiddity_report(q)
    _emit(out)
    _note(f"cc check {args.quiddity}: {'ok' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_cc_random(args) -> int:
    rng = random.Random(args.seed)
    cases = []
    all_ok = True
    for _ in range(args.count):
        t = generators.random_triangulation(rng, args.k)
        q = classical.quiddity_from_triangulation(t)
        out, ok = _quiddity_report(q)
        out["triangulation"] = serialize.triangulation_to_json(t)["diagonals"]
        cases.append(out)
        all_ok = all_ok and ok
    _emit(
        {
            "seed": args.seed,
            "k": args.k,
            "count": args.count,
            "ok": all_ok,
            "cases": cases,
        }
    )
    _note(f"cc random: {args.count} cases at k={args.k}: {'ok' if all_ok else 'FAILED'}")
    return EXIT_OK if all_ok else EXIT_CHECK_FAILED


def _two_row_report(x: classical.TwoRowMatrix) -> tuple[dict[str, Any], bool]:
    try:
        report = classical.baur_marsh_det_check(x)
    except FriezeError as exc:
        return {"n": x.n, "ok": False, "error": str(exc)}, False
    out = {
        "n": x.n,
        "rows": serialize.two_row_to_json(x)["rows"],
        "det": format_element(report.det),
        "det_oracle": format_element(report.det_oracle),
        "expected": format_element(report.expected),
        "ok": report.ok,
    }
    return out, report.ok


def _cmd_bm_check(args) -> int:
    x = serialize.two_row_from_json(_read_json(args.matrix))
    out, ok = _two_row_report(x)
    _emit(out)
    _note(f"bm check: {'ok' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_bm_random(args) -> int:
    rng = random.Random(args.seed)
    cases = []
    all_ok = True
    for _ in range(args.count):
        x = generators.random_two_row_matrix(rng, args.n)
        out, ok = _two_row_report(x)
        cases.append(out)
        all_ok = all_ok and ok
    _emit(
        {
            "seed": args.seed,
            "n": args.n,
            "count": args.count,
            "ok": all_ok,
            "cases": cases,
        }
    )
    _note(f"bm random: {args.count} cases at n={args.n}: {'ok' if all_ok else 'FAILED'}")
    return EXIT_OK if all_ok else EXIT_CHECK_FAILED


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="friezecalc",
        description="Exact frieze-matrix calculator and identity checker.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the frieze-matrix rules")
    p.add_argument("matrix", help="matrix JSON file (use - for stdin)")
    p.add_argument("--ptolemy", action="store_true", help="also check all quadruple relations")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("det", help="determinant, closed form and/or elimination")
    p.add_argument("matrix")
    p.add_argument("--method", choices=["closed", "eliminate", "both"], default="both")
    p.set_defaults(handler=_cmd_det)

    p = sub.add_parser("triangulate", help="upper triangular companion matrix")
    p.add_argument("matrix")
    p.add_argument("--trace", action="store_true", help="record every elimination stage")
    p.add_argument("--check-props", action="store_true", dest="check_props",
                   help="verify the structural identities of the result")
    p.add_argument("--grid", action="store_true", help="print a text grid instead of JSON")
    p.set_defaults(handler=_cmd_triangulate)

    p = sub.add_parser("reconstruct", help="recover an entry from the first two rows")
    p.add_argument("matrix")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(handler=_cmd_reconstruct)

    frieze = sub.add_parser("frieze", help="infinite friezes with coefficients")
    fsub = frieze.add_subparsers(dest="subcommand", required=True)

    p = fsub.add_parser("gen", help="evaluate and print rows of the frieze")
    p.add_argument("--seeds", required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--start", type=int, default=0, help="first column index")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--grid", action="store_true")
    fmt.add_argument("--json", dest="grid", action="store_false")
    p.set_defaults(handler=_cmd_frieze_gen, grid=False)

    p = fsub.add_parser("cone", help="all entries of the cone of (i, j)")
    p.add_argument("--seeds", required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(handler=_cmd_frieze_cone)

    p = fsub.add_parser("extract", help="cut an n x n frieze matrix out of the frieze")
    p.add_argument("--seeds", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sign", choices=["plus", "minus"], required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--grid", action="store_true")
    fmt.add_argument("--json", dest="grid", action="store_false")
    p.set_defaults(handler=_cmd_frieze_extract, grid=False)

    p = fsub.add_parser("period", help="smallest diagonal-shift period on a window")
    p.add_argument("--seeds", required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--start", type=int, default=0)
    p.set_defaults(handler=_cmd_frieze_period)

    zero = sub.add_parser("zerofrieze", help="0-frieze patterns")
    zsub = zero.add_subparsers(dest="subcommand", required=True)

    p = zsub.add_parser("gen", help="evaluate rows from u/v seed rows")
    p.add_argument("--seeds", required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--grid", action="store_true")
    p.set_defaults(handler=_cmd_zero_gen)

    p = zsub.add_parser("from-frieze", help="derive the 0-frieze of a frieze at k")
    p.add_argument("--seeds", required=True, help="frieze seed JSON")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--grid", action="store_true")
    p.set_defaults(handler=_cmd_zero_from_frieze)

    p = zsub.add_parser("check", help="zero-diamond and rank-1 checks on a window")
    p.add_argument("seeds", help="0-frieze seed JSON file")
    p.add_argument("--rows", type=int, default=6)
    p.add_argument("--cols", type=int, default=10)
    p.add_argument("--start", type=int, default=0)
    p.set_defaults(handler=_cmd_zero_check)

    cc = sub.add_parser("cc", help="finite integer friezes from quiddity sequences")
    csub = cc.add_subparsers(dest="subcommand", required=True)

    p = csub.add_parser("check", help="determinant check for one quiddity sequence")
    p.add_argument("--quiddity", required=True, help="comma-separated positive integers")
    p.set_defaults(handler=_cmd_cc_check)

    p = csub.add_parser("random", help="determinant checks for random triangulations")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(handler=_cmd_cc_random)

    bm = sub.add_parser("bm", help="matrices of 2x2 column minors")
    bsub = bm.add_subparsers(dest="subcommand", required=True)

    p = bsub.add_parser("check", help="determinant check for one 2 x n matrix")
    p.add_argument("--matrix", required=True, help="two-row JSON file")
    p.set_defaults(handler=_cmd_bm_check)

    p = bsub.add_parser("random", help="determinant checks for random 2 x n matrices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(handler=_cmd_bm_random)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.handler(args)
    except FriezeError as exc:
        _emit({"ok": False, "error": str(exc)})
        _note(f"check failed: {exc}")
        return EXIT_CHECK_FAILED
    except ZeroDivisionError as exc:
        _emit({"ok": False, "error": f"division by zero: {exc}"})
        _note(f"check failed: {exc}")
        return EXIT_CHECK_FAILED
    except (OSError, ValueError, IndexError, json.JSONDecodeError) as exc:
        _note(f"error: {exc}")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
