"""Command-line surface: generate, solve, verify, exthom, dualize.

Every command prints exactly one JSON document to stdout and communicates
through the exit code: 0 success, 1 data/validation/verification failure,
2 internal, resource, or I/O error.  JSON output is deterministic (sorted
keys, fixed indentation), so identical inputs give byte-identical output
regardless of any seeds.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .blockdata import (
    DataFormatError,
    Dataset,
    build_springer_block_a,
    dominates,
    load_dataset,
    save_dataset,
    validate_dataset,
    MAX_SPRINGER_N,
)
from .exthom import graded_hom_dims
from .laurent import HalfLaurent, NonExactDivision
from .oracle import kostka_foulkes, ssyt_enumerate
from .solver import SolveResult, SolverError, extension_invariance_check, solve
from .weyl import CharTable, char_table_sn, partitions_of

__all__ = ["main"]

VERIFY_MAX_N = 7

OK, VIOLATION, ERROR = 0, 1, 2
_STATUS = {OK: "ok", VIOLATION: "violation", ERROR: "error"}


def _report(command: str, code: int, artifacts: list[str] | None = None,
            diagnostics: list[dict] | None = None) -> dict:
    return {
        "command": command,
        "status": _STATUS[code],
        "artifacts": artifacts or [],
        "diagnostics": diagnostics or [],
    }


def _emit(obj: dict | list) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _diag(severity: str, kind: str, message: str) -> dict:
    return {"severity": severity, "kind": kind, "message": message}


# -- generate -----------------------------------------------------------------


def cmd_generate(args) -> int:
    try:
        block = build_springer_block_a(args.n)
    except ValueError as exc:
        _emit(_report("generate", ERROR,
                      diagnostics=[_diag("error", "ResourceLimit", str(exc))]))
        return ERROR
    try:
        save_dataset(Dataset((block,)), args.out)
    except OSError as exc:
        _emit(_report("generate", ERROR,
                      diagnostics=[_diag("error", "IOError", str(exc))]))
        return ERROR
    _emit(_report("generate", OK, artifacts=[args.out]))
    return OK


# -- solve --------------------------------------------------------------------


def _results_to_csv(results: list[SolveResult]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(["block", "matrix", "row", "col", "value"])
    for result in results:
        for name, matrix in (("p", result.p), ("lambda", result.lam),
                             ("p_dual", result.p_dual)):
            for i, row_label in enumerate(result.labels):
                for j, col_label in enumerate(result.labels):
                    writer.writerow([result.block, name, row_label, col_label,
                                     matrix[i][j].pretty()])
    return buffer.getvalue()


def cmd_solve(args) -> int:
    try:
        ds = load_dataset(args.input)
    except (OSError, DataFormatError) as exc:
        kind = "IOError" if isinstance(exc, OSError) else "DataFormatError"
        code = ERROR if isinstance(exc, OSError) else VIOLATION
        _emit(_report("solve", code, diagnostics=[_diag("error", kind, str(exc))]))
        return code

    violations = validate_dataset(ds)
    if violations:
        _emit(_report("solve", VIOLATION, diagnostics=[
            _diag("error", v.kind, v.message) for v in violations]))
        return VIOLATION

    results = []
    for block in ds.blocks:
        try:
            results.append(solve(block, order_seed=args.order_seed, validate=False))
        except (SolverError, NonExactDivision) as exc:
            _emit(_report("solve", ERROR, diagnostics=[
                _diag("error", type(exc).__name__, f"block {block.name!r}: {exc}")]))
            return ERROR

    payload: str
    if args.format == "json":
        payload = json.dumps([r.to_json() for r in results], indent=2, sort_keys=True) + "\n"
    else:
        payload = _results_to_csv(results)
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)
    except OSError as exc:
        _emit(_report("solve", ERROR,
                      diagnostics=[_diag("error", "IOError", str(exc))]))
        return ERROR
    _emit(_report("solve", OK, artifacts=[args.out]))
    return OK


# -- verify -------------------------------------------------------------------


def _coefficient_multiset(f: HalfLaurent) -> list[int]:
    return sorted(c for _, c in f.items())


def _verify_one_n(n: int, diagnostics: list[dict]) -> bool:
    block = build_springer_block_a(n)
    result = solve(block)
    ok = True
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            p = result.p_entry(lam.key(), mu.key())
            kostka = kostka_foulkes(lam, mu)
            if dominates(lam, mu):
                tableaux = len(ssyt_enumerate(lam, mu))
                if _coefficient_multiset(p) != _coefficient_multiset(kostka):
                    ok = False
                    diagnostics.append(_diag(
                        "error", "OracleMismatch",
                        f"n={n} pair ({lam.key()}, {mu.key()}): coefficients "
                        f"{p.pretty()} vs Kostka-Foulkes {kostka.pretty()}"))
                if p.evaluate_at_one() != tableaux:
                    ok = False
                    diagnostics.append(_diag(
                        "error", "OracleMismatch",
                        f"n={n} pair ({lam.key()}, {mu.key()}): p(1) = "
                        f"{p.evaluate_at_one()} but {tableaux} tableaux exist"))
            elif not p.is_zero():
                ok = False
                diagnostics.append(_diag(
                    "error", "SupportMismatch",
                    f"n={n} pair ({lam.key()}, {mu.key()}): expected zero, "
                    f"got {p.pretty()}"))
    if not extension_invariance_check(block, 5):
        ok = False
        diagnostics.append(_diag(
            "error", "OrderDependence",
            f"n={n}: solutions differ across linear extensions"))
    if ok:
        diagnostics.append(_diag(
            "info", "Verified",
            f"n={n}: solver output matches the charge-statistic oracle"))
    return ok


def cmd_verify(args) -> int:
    if args.n_max > VERIFY_MAX_N:
        _emit(_report("verify", ERROR, diagnostics=[_diag(
            "error", "ResourceLimit",
            f"verify supports --n-max up to {VERIFY_MAX_N}; tableau "
            f"enumeration beyond that is out of the desk-checkable range")]))
        return ERROR
    if args.n_max < 1:
        _emit(_report("verify", ERROR, diagnostics=[_diag(
            "error", "BadArgument", "--n-max must be at least 1")]))
        return ERROR
    diagnostics: list[dict] = []
    all_ok = all([_verify_one_n(n, diagnostics) for n in range(1, args.n_max + 1)])
    code = OK if all_ok else VIOLATION
    _emit(_report("verify", code, diagnostics=diagnostics))
    return code


# -- exthom -------------------------------------------------------------------


def cmd_exthom(args) -> int:
    if args.sn is not None:
        try:
            table = char_table_sn(args.sn)
        except ValueError as exc:
            _emit(_report("exthom", ERROR,
                          diagnostics=[_diag("error", "BadArgument", str(exc))]))
            return ERROR
    else:
        try:
            with open(args.table, "r", encoding="utf-8") as fh:
                table = CharTable.from_json(json.load(fh))
        except OSError as exc:
            _emit(_report("exthom", ERROR,
                          diagnostics=[_diag("error", "IOError", str(exc))]))
            return ERROR
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            _emit(_report("exthom", VIOLATION,
                          diagnostics=[_diag("error", "DataFormatError", str(exc))]))
            return VIOLATION
    try:
        dims = graded_hom_dims(table, args.chi, args.psi, args.max_k)
    except KeyError as exc:
        _emit(_report("exthom", VIOLATION,
                      diagnostics=[_diag("error", "UnknownLabel", str(exc))]))
        return VIOLATION
    _emit({"chi": args.chi, "psi": args.psi,
           "dims": list(dims.dims), "max_k": dims.max_degree})
    return OK


# -- dualize ------------------------------------------------------------------


def cmd_dualize(args) -> int:
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        _emit(_report("dualize", ERROR,
                      diagnostics=[_diag("error", "IOError", str(exc))]))
        return ERROR
    except json.JSONDecodeError as exc:
        _emit(_report("dualize", VIOLATION,
                      diagnostics=[_diag("error", "DataFormatError", str(exc))]))
        return VIOLATION
    if isinstance(raw, dict):
        raw = [raw]
    tables = []
    try:
        for entry in raw:
            tables.append({
                "block": entry["block"],
                "order": list(entry["order"]),
                "p_dual": entry["p_dual"],
            })
    except (KeyError, TypeError) as exc:
        _emit(_report("dualize", VIOLATION, diagnostics=[_diag(
            "error", "DataFormatError",
            f"not a solve result file: missing {exc}")]))
        return VIOLATION
    _emit(tables)
    return OK


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lsalgo",
        description="Exact block factorization omega = P * Lambda * P^T over "
                    "Laurent polynomials in t^(1/2).")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a generated block dataset")
    gen.add_argument("type", choices=["springer-a"],
                     help="dataset family to generate")
    gen.add_argument("--n", type=int, required=True,
                     help=f"size parameter (1..{MAX_SPRINGER_N})")
    gen.add_argument("--out", required=True, help="output dataset path")
    gen.set_defaults(func=cmd_generate)

    slv = sub.add_parser("solve", help="validate and solve every block of a dataset")
    slv.add_argument("input", help="dataset JSON path")
    slv.add_argument("--out", required=True, help="output path for the results")
    slv.add_argument("--format", choices=["json", "csv"], default="json",
                     help="json round-trips exactly; csv is lossy pretty-printing")
    slv.add_argument("--order-seed", type=int, default=None,
                     help="seed for drawing the linear extension; the "
                          "solution is independent of it")
    slv.set_defaults(func=cmd_solve)

    ver = sub.add_parser("verify", help="cross-check the solver against the "
                                        "tableau oracle for all n up to a bound")
    ver.add_argument("--n-max", type=int, required=True,
                     help=f"largest n to verify (1..{VERIFY_MAX_N})")
    ver.set_defaults(func=cmd_verify)

    ext = sub.add_parser("exthom", help="graded Hom dimensions for a character pair")
    source = ext.add_mutually_exclusive_group(required=True)
    source.add_argument("--table", help="character table JSON path")
    source.add_argument("--sn", type=int, help="use the built-in S_n table")
    ext.add_argument("--chi", required=True, help="first character id")
    ext.add_argument("--psi", required=True, help="second character id")
    ext.add_argument("--max-k", type=int, required=True,
                     help="truncation bound: degrees 0..2*max_k are reported")
    ext.set_defaults(func=cmd_exthom)

    dua = sub.add_parser("dualize", help="print the dual stalk tables of a "
                                         "solve result file")
    dua.add_argument("input", help="solve result JSON path")
    dua.set_defaults(func=cmd_dualize)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
