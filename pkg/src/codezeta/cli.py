"""Command-line front end: we / zeta / check-rh / scan.

All commands print deterministic JSON (or CSV for scan) on stdout; numbers
use '.' as the decimal separator regardless of locale.  Exit codes: 0 ok,
2 invalid parameters, 3 malformed file, 4 oracle or closed-form mismatch,
5 numeric RH failure, 6 inconclusive verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .algebra import UniPoly, half_power
from .enumerators import (
    GOLAY_NAMES,
    CodeParams,
    WeightEnumerator,
    enumerator_from_json,
    enumerator_to_json,
    golay_pair,
    hamming_enumerator,
    invariantize,
    mds_enumerator,
    simplex_enumerator,
)
from .rh import ALL_METHODS, RHVerdict, normalize_zeta, verify_rh
from .zeta import (
    ZetaPolynomial,
    dual_zeta,
    hamming_invariant_zeta_closed,
    mds_invariant_zeta,
    simplex_zeta_closed,
    zeta_by_linear_system,
    zeta_from_enumerator,
)

FAMILIES = ("mds", "hamming", "simplex", "golay", "file")

EXIT_OK = 0
EXIT_PARAMS = 2
EXIT_FILE = 3
EXIT_MISMATCH = 4
EXIT_NUMERIC_FAIL = 5
EXIT_INCONCLUSIVE = 6


class CLIError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


@dataclass
class FamilyInput:
    family: str
    inputs: dict
    enumerator: WeightEnumerator
    params: CodeParams | None
    dual: WeightEnumerator | None
    k_hint: int | None = None


def _require(args: argparse.Namespace, names: list[str], family: str) -> None:
    missing = [n for n in names if getattr(args, n.replace("-", "_"), None) is None]
    if missing:
        flags = ", ".join("--" + n for n in missing)
        raise CLIError(EXIT_PARAMS, f"family {family!r} requires {flags}")


def _load_fixture(path: str) -> tuple[WeightEnumerator, int | None]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
        return enumerator_from_json(data)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise CLIError(EXIT_FILE, f"cannot read enumerator from {path}: {exc}") from exc


def build_family_input(args: argparse.Namespace) -> FamilyInput:
    family = getattr(args, "family", None)
    if getattr(args, "stdin", False):
        try:
            data = json.load(sys.stdin)
            W, k = enumerator_from_json(data)
        except (json.JSONDecodeError, ValueError) as exc:
            raise CLIError(EXIT_FILE, f"cannot read enumerator from stdin: {exc}") from exc
        return FamilyInput("stdin", {"family": "stdin"}, W, None, None, k_hint=k)
    if family is None:
        raise CLIError(EXIT_PARAMS, "missing --family")
    if family == "mds":
        _require(args, ["n", "d", "q"], "mds")
        try:
            W, params = mds_enumerator(args.n, args.d, args.q)
            dual, _ = mds_enumerator(args.n, args.n + 2 - args.d, args.q)
        except ValueError as exc:
            raise CLIError(EXIT_PARAMS, str(exc)) from exc
        inputs = {"family": "mds", "n": args.n, "d": args.d, "q": args.q}
        return FamilyInput("mds", inputs, W, params, dual)
    if family in ("hamming", "simplex"):
        _require(args, ["r", "q"], family)
        try:
            if family == "hamming":
                W, params = hamming_enumerator(args.r, args.q)
                dual, _ = simplex_enumerator(args.r, args.q)
            else:
                W, params = simplex_enumerator(args.r, args.q)
                dual, _ = hamming_enumerator(args.r, args.q)
        except ValueError as exc:
            raise CLIError(EXIT_PARAMS, str(exc)) from exc
        inputs = {"family": family, "r": args.r, "q": args.q}
        return FamilyInput(family, inputs, W, params, dual)
    if family == "golay":
        _require(args, ["which"], "golay")
        try:
            W, dual, params = golay_pair(args.which)
        except ValueError as exc:
            raise CLIError(EXIT_PARAMS, str(exc)) from exc
        inputs = {"family": "golay", "which": args.which.lower().replace("-", "_")}
        return FamilyInput("golay", inputs, W, params, dual)
    if family == "file":
        _require(args, ["file"], "file")
        W, k = _load_fixture(args.file)
        dual = None
        params = None
        if getattr(args, "dual_file", None):
            dual, _ = _load_fixture(args.dual_file)
            if k is None:
                raise CLIError(
                    EXIT_PARAMS, "invariantizing a file pair needs \"k\" in the main fixture"
                )
            try:
                params = CodeParams(
                    n=W.n, k=k, d=W.min_distance, d_perp=dual.min_distance, q=W.q
                )
            except ValueError as exc:
                raise CLIError(EXIT_PARAMS, str(exc)) from exc
        inputs = {"family": "file", "file": args.file}
        if getattr(args, "dual_file", None):
            inputs["dual_file"] = args.dual_file
        return FamilyInput("file", inputs, W, params, dual, k_hint=k)
    raise CLIError(EXIT_PARAMS, f"unknown family {family!r}")


def _invariant_pair(fam: FamilyInput) -> tuple[WeightEnumerator, CodeParams]:
    if fam.dual is None or fam.params is None:
        raise CLIError(
            EXIT_PARAMS,
            "invariantization needs a dual pair; known families build one "
            "internally, file inputs need --dual-file and \"k\"",
        )
    try:
        W_tilde = invariantize(fam.enumerator, fam.dual, fam.params)
    except ValueError as exc:
        raise CLIError(EXIT_PARAMS, str(exc)) from exc
    return W_tilde, fam.params


def compute_zeta(fam: FamilyInput, invariantized: bool) -> ZetaPolynomial:
    if invariantized:
        W_tilde, params = _invariant_pair(fam)
        return zeta_from_enumerator(W_tilde, params)
    return zeta_from_enumerator(fam.enumerator, fam.params)


def closed_form_zeta(fam: FamilyInput, args: argparse.Namespace, invariantized: bool) -> ZetaPolynomial:
    try:
        if fam.family == "mds":
            if invariantized:
                return mds_invariant_zeta(args.n, args.d, args.q)
            return ZetaPolynomial(q=args.q, poly=UniPoly.one(args.q))
        if fam.family in ("hamming", "simplex"):
            if invariantized:
                return hamming_invariant_zeta_closed(args.r, args.q)
            simplex = simplex_zeta_closed(args.r, args.q)
            if fam.family == "simplex":
                return simplex
            _, sp = simplex_enumerator(args.r, args.q)
            return dual_zeta(simplex, sp)
    except ValueError as exc:
        raise CLIError(EXIT_PARAMS, str(exc)) from exc
    raise CLIError(EXIT_PARAMS, f"no closed form for family {fam.family!r}")


# -- output helpers -----------------------------------------------------


def _emit(payload: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload)


def _dump_json(obj: object) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _approx(value) -> str:
    return f"{float(value):.12g}"


# -- subcommands --------------------------------------------------------


def cmd_we(args: argparse.Namespace) -> int:
    fam = build_family_input(args)
    payload = _dump_json(enumerator_to_json(fam.enumerator, fam.params, k=fam.k_hint))
    _emit(payload, args.out)
    return EXIT_OK


def cmd_zeta(args: argparse.Namespace) -> int:
    fam = build_family_input(args)
    Z = compute_zeta(fam, args.invariantize)
    if args.oracle:
        if args.invariantize:
            W_check, params = _invariant_pair(fam)
        else:
            W_check, params = fam.enumerator, fam.params
        oracle = zeta_by_linear_system(W_check, params)
        if oracle.poly != Z.poly:
            sys.stderr.write("oracle mismatch: series and linear-system routes disagree\n")
            return EXIT_MISMATCH
    if args.closed_form:
        closed = closed_form_zeta(fam, args, args.invariantize)
        if closed.poly != Z.poly:
            sys.stderr.write("closed-form mismatch against the generic pipeline\n")
            return EXIT_MISMATCH
        Z = closed
    _emit(_dump_json(Z.to_json()), args.out)
    return EXIT_OK


def rh_methods_for(family: str, q: int) -> tuple[str, ...]:
    """Proof methods per family: the q = 2, 3 Hamming cases stay numeric-only."""
    if family in ("hamming", "simplex") and q in (2, 3):
        return ("numeric",)
    return ALL_METHODS


def _normalized_table(Z: ZetaPolynomial) -> list[dict]:
    P_norm = normalize_zeta(Z)
    c0 = P_norm[0]
    scaled = P_norm.scale(c0.inverse()) if c0 else P_norm
    return [{"exact": str(c), "approx": _approx(c)} for c in scaled.coeffs]


def run_report(fam: FamilyInput, args: argparse.Namespace) -> tuple[dict, RHVerdict]:
    timings: dict[str, float] = {}
    tic = time.perf_counter()
    invariantized = fam.dual is not None and fam.params is not None
    if fam.family in ("hamming", "simplex"):
        try:
            Z = hamming_invariant_zeta_closed(args.r, args.q)
        except ValueError as exc:
            raise CLIError(EXIT_PARAMS, str(exc)) from exc
    elif fam.family == "mds":
        try:
            Z = mds_invariant_zeta(args.n, args.d, args.q)
        except ValueError as exc:
            raise CLIError(EXIT_PARAMS, str(exc)) from exc
    elif invariantized:
        Z = compute_zeta(fam, invariantized=True)
    else:
        Z = compute_zeta(fam, invariantized=False)
    timings["zeta_ms"] = (time.perf_counter() - tic) * 1000.0
    tic = time.perf_counter()
    methods = rh_methods_for(fam.family, fam.enumerator.q)
    verdict = verify_rh(Z, grid=args.grid, tol=args.tol, methods=methods)
    timings["verdict_ms"] = (time.perf_counter() - tic) * 1000.0
    report = {
        "inputs": dict(fam.inputs, grid=args.grid, tol=args.tol),
        "enumerator": enumerator_to_json(fam.enumerator, fam.params, k=fam.k_hint),
        "zeta": Z.to_json(),
        "normalized_coeffs": _normalized_table(Z),
        "verdict": verdict.to_json(),
    }
    if args.timings:
        report["timings_ms"] = {k: round(v, 3) for k, v in timings.items()}
    return report, verdict


def _format_table(report: dict) -> str:
    lines = []
    inputs = " ".join(f"{k}={v}" for k, v in report["inputs"].items())
    verdict = report["verdict"]
    lines.append(inputs)
    lines.append(f"status={verdict['status']} max_deviation={verdict['max_deviation']}")
    lines.append(f"{'i':>4}  {'approx':<18}  exact")
    for i, entry in enumerate(report["normalized_coeffs"]):
        approx = f"{float(entry['approx']):.10g}"
        lines.append(f"{i:>4}  {approx:<18}  {entry['exact']}")
    return "\n".join(lines) + "\n"


def cmd_check_rh(args: argparse.Namespace) -> int:
    fam = build_family_input(args)
    report, verdict = run_report(fam, args)
    payload = _format_table(report) if args.table else _dump_json(report)
    _emit(payload, args.out)
    if verdict.status == "numeric_fail":
        return EXIT_NUMERIC_FAIL
    if verdict.status == "inconclusive":
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _scan_rows(args: argparse.Namespace) -> list[dict]:
    try:
        q_list = [int(part) for part in args.q_list.split(",") if part]
    except ValueError as exc:
        raise CLIError(EXIT_PARAMS, f"bad --q-list: {exc}") from exc
    if not q_list:
        raise CLIError(EXIT_PARAMS, "--q-list is empty")
    rows = []
    if args.family == "mds":
        if args.n_max is None:
            raise CLIError(EXIT_PARAMS, "scan --family mds needs --n-max")
        grid = [
            (q, n, d)
            for q in sorted(q_list)
            for n in range(3, args.n_max + 1)
            for d in range(2, (n + 1) // 2 + 1)
        ]
        for q, n, d in grid:
            rows.append(
                _scan_row(
                    "mds", q, n, d,
                    lambda n=n, d=d, q=q: mds_invariant_zeta(n, d, q),
                    ALL_METHODS, args,
                )
            )
    else:
        if args.r_max is None:
            raise CLIError(EXIT_PARAMS, "scan --family hamming needs --r-max")
        grid2 = [(q, r) for q in sorted(q_list) for r in range(3, args.r_max + 1)]
        for q, r in grid2:
            rows.append(
                _scan_row(
                    "hamming", q, r, 3,
                    lambda r=r, q=q: hamming_invariant_zeta_closed(r, q),
                    rh_methods_for("hamming", q), args,
                )
            )
    return rows


def _scan_row(family, q, n_or_r, d, make_zeta, methods, args) -> dict:
    try:
        Z = make_zeta()
        verdict = verify_rh(Z, grid=args.grid, tol=args.tol, methods=methods)
        dev = verdict.max_deviation
        return {
            "family": family,
            "q": q,
            "n_or_r": n_or_r,
            "d": d,
            "deg": Z.degree,
            "status": verdict.status,
            "max_deviation": None if dev is None else float(f"{dev:.6e}"),
        }
    except Exception as exc:  # per-row failures must not kill the sweep
        return {
            "family": family,
            "q": q,
            "n_or_r": n_or_r,
            "d": d,
            "deg": None,
            "status": f"error: {exc}",
            "max_deviation": None,
        }


def _rows_to_csv(rows: list[dict]) -> str:
    header = "family,q,n_or_r,d,deg,status,max_deviation"
    lines = [header]
    for row in rows:
        dev = "" if row["max_deviation"] is None else f"{row['max_deviation']:.6e}"
        deg = "" if row["deg"] is None else row["deg"]
        lines.append(
            f"{row['family']},{row['q']},{row['n_or_r']},{row['d']},{deg},{row['status']},{dev}"
        )
    return "\n".join(lines) + "\n"


def cmd_scan(args: argparse.Namespace) -> int:
    rows = _scan_rows(args)
    csv_text = _rows_to_csv(rows)
    try:
        if args.csv:
            with open(args.csv, "w", encoding="utf-8") as handle:
                handle.write(csv_text)
        if args.json_path:
            with open(args.json_path, "w", encoding="utf-8") as handle:
                handle.write(_dump_json(rows))
        if not args.csv and not args.json_path:
            _emit(csv_text, args.out)
    except OSError as exc:
        sys.stderr.write(f"cannot write scan output: {exc}\n")
        return 1
    return EXIT_OK


# -- argument parsing ----------------------------------------------------


def _add_input_options(parser: argparse.ArgumentParser, with_stdin: bool = False) -> None:
    parser.add_argument("--family", choices=FAMILIES, help="enumerator family")
    parser.add_argument("--n", type=int, help="length (mds)")
    parser.add_argument("--d", type=int, help="minimum distance (mds)")
    parser.add_argument("--q", type=int, help="field size / base")
    parser.add_argument("--r", type=int, help="rank parameter (hamming/simplex)")
    parser.add_argument("--which", help="golay variant: " + ", ".join(GOLAY_NAMES))
    parser.add_argument("--file", help="enumerator fixture JSON (family=file)")
    parser.add_argument("--dual-file", help="dual enumerator fixture JSON")
    if with_stdin:
        parser.add_argument(
            "--stdin", action="store_true", help="read enumerator JSON from stdin"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codezeta",
        description="Zeta polynomials of weight enumerators and unit-circle verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_we = sub.add_parser("we", help="construct a weight enumerator")
    p_we.add_argument("family_pos", nargs="?", choices=FAMILIES, metavar="family")
    _add_input_options(p_we)
    p_we.add_argument("--out", help="write output to a file instead of stdout")

    p_zeta = sub.add_parser("zeta", help="compute a zeta polynomial")
    _add_input_options(p_zeta, with_stdin=True)
    p_zeta.add_argument("--invariantize", action="store_true",
                        help="use the invariant combination of the dual pair")
    p_zeta.add_argument("--oracle", action="store_true",
                        help="cross-check against the linear-system route")
    p_zeta.add_argument("--closed-form", action="store_true",
                        help="cross-check against the family closed form")
    p_zeta.add_argument("--out", help="write output to a file instead of stdout")

    p_rh = sub.add_parser("check-rh", help="verify the unit-circle property")
    _add_input_options(p_rh, with_stdin=True)
    p_rh.add_argument("--invariantize", action="store_true",
                      help="accepted for symmetry; known families invariantize automatically")
    p_rh.add_argument("--grid", type=int, default=256, help="sign-scan grid size")
    p_rh.add_argument("--tol", type=float, default=1e-8, help="numeric tolerance")
    mode = p_rh.add_mutually_exclusive_group()
    mode.add_argument("--json", action="store_true", help="JSON report (default)")
    mode.add_argument("--table", action="store_true", help="tabular report")
    p_rh.add_argument("--timings", action="store_true", help="include stage timings")
    p_rh.add_argument("--out", help="write output to a file instead of stdout")

    p_scan = sub.add_parser("scan", help="sweep a parameter grid")
    p_scan.add_argument("--family", choices=("mds", "hamming"), required=True)
    p_scan.add_argument("--q-list", required=True, help="comma-separated q values")
    p_scan.add_argument("--n-max", type=int, help="largest n (mds)")
    p_scan.add_argument("--r-max", type=int, help="largest r (hamming)")
    p_scan.add_argument("--grid", type=int, default=256, help="sign-scan grid size")
    p_scan.add_argument("--tol", type=float, default=1e-8, help="numeric tolerance")
    p_scan.add_argument("--csv", help="write CSV rows to this path")
    p_scan.add_argument("--json", dest="json_path", help="write JSON rows to this path")
    p_scan.add_argument("--out", help="write stdout payload to a file")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "family_pos", None) and not args.family:
        args.family = args.family_pos
    handlers = {
        "we": cmd_we,
        "zeta": cmd_zeta,
        "check-rh": cmd_check_rh,
        "scan": cmd_scan,
    }
    try:
        return handlers[args.command](args)
    except CLIError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
