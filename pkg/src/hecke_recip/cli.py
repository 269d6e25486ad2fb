"""Command-line front end: ``hecke-recip <command> --p ... --max-length ...``."""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .asymptotics import (
    EstimateValue,
    check_lemma71,
    check_lemma72,
    class_counts,
    estimate_count,
    modular_closed_form,
)
from .core import EmptyCountError, HeckeError, HeckeParams
from .counting import (
    primitive_class_count_exact,
    reciprocal_class_count_exact,
    symmetric_class_count_exact,
)
from .enumeration import (
    enumerate_reciprocal_classes,
    oracle_enumerate_reciprocal,
    split_primitive_counts,
    structure_check,
    type_counts,
)
from .report import CountReportRow, emit_report, emit_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMULAS = ("thm1", "thm2", "lemma42", "lemma43", "modular")
GRID_COMMANDS = ("compare", "primitive-ratio")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    ps: tuple[int, ...]
    lengths: tuple[int, ...]
    method: str
    formula: Optional[str]
    fmt: Optional[str]
    out: Optional[str]
    parallel: int
    list_mode: bool

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [(p, x) for p in self.ps for x in self.lengths]


def _int_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=_int_list, required=True, help="comma-separated group parameters")
    grid = common.add_mutually_exclusive_group()
    grid.add_argument("--max-length", type=int, help="length bound x (a 4..x grid for table commands)")
    grid.add_argument("--lengths", type=_int_list, help="comma-separated length bounds")
    common.add_argument("--method", choices=("enumerate", "oracle", "dp"), default=None)
    common.add_argument("--formula", choices=FORMULAS, default=None)
    common.add_argument("--format", dest="fmt", choices=("csv", "json"), default=None)
    common.add_argument("--out", default=None, help="output path (default: standard output)")
    common.add_argument("--parallel", type=int, default=1)

    parser = argparse.ArgumentParser(
        prog="hecke-recip", description="Reciprocal conjugacy classes in the Hecke groups Z2 * Zp."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    enum_p = sub.add_parser("enumerate", parents=[common], help="list reciprocal classes")
    enum_p.add_argument("--list", dest="list_mode", action="store_true", help="tab-separated class lines")
    sub.add_parser("count", parents=[common], help="exact reciprocal class counts")
    sub.add_parser("estimate", parents=[common], help="CLT growth estimates")
    sub.add_parser("compare", parents=[common], help="exact / DP / estimate table")
    sub.add_parser("verify", parents=[common], help="run the invariant suites")
    sub.add_parser("primitive-ratio", parents=[common], help="primitive share of reciprocal classes")
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    for p in ns.p:
        if p < 3:
            raise UsageError(f"p must be >= 3, got {p}")
    if ns.parallel < 1:
        raise UsageError("--parallel must be >= 1")
    if ns.lengths is not None:
        lengths = ns.lengths
    elif ns.max_length is not None:
        if ns.command in GRID_COMMANDS:
            lengths = tuple(range(4, ns.max_length + 1))
        else:
            lengths = (ns.max_length,)
    elif ns.command == "verify":
        lengths = (14,)
    else:
        raise UsageError("one of --max-length or --lengths is required")
    if any(x < 0 for x in lengths) or not lengths:
        raise UsageError("lengths must be non-negative")
    method = ns.method or ("enumerate" if ns.command == "enumerate" else "dp")
    if ns.command == "enumerate" and method == "dp":
        raise UsageError("enumerate lists classes; use --method enumerate or oracle")
    formula = ns.formula
    if formula is not None:
        for p in ns.p:
            if formula == "thm1" and p % 2 == 0 or formula == "thm2" and p % 2 == 1:
                raise UsageError(f"--formula {formula} does not apply to p={p}")
            if formula == "modular" and p != 3:
                raise UsageError("--formula modular applies to p=3 only")
    if ns.command in ("compare", "estimate") and formula not in ("lemma42", "lemma43") and min(lengths) < 4:
        raise UsageError("theorem estimates need lengths >= 4")
    return RunConfig(
        command=ns.command,
        ps=tuple(sorted(set(ns.p))),
        lengths=tuple(sorted(set(lengths))),
        method=method,
        formula=formula,
        fmt=ns.fmt,
        out=ns.out,
        parallel=ns.parallel,
        list_mode=getattr(ns, "list_mode", False),
    )


def _default_formula(p: int, formula: Optional[str]) -> str:
    return formula or ("thm2" if p % 2 == 0 else "thm1")


def _estimate(p: int, x: int, formula: Optional[str]) -> EstimateValue:
    f = _default_formula(p, formula)
    if f == "modular":
        v = modular_closed_form(x)
        return EstimateValue("modular", x, "full", Fraction(v), Decimal(v), ())
    return estimate_count(HeckeParams(p), f, x)


def _records(cfg: RunConfig, p: int, x: int):
    params = HeckeParams(p)
    if cfg.method == "oracle":
        return oracle_enumerate_reciprocal(params, x)
    return enumerate_reciprocal_classes(params, x, parallel=cfg.parallel)


def _cmd_enumerate(cfg: RunConfig) -> tuple[bytes, int]:
    if cfg.list_mode:
        lines = []
        for p, x in cfg.pairs:
            if len(cfg.pairs) > 1:
                lines.append(f"# p={p} x={x}")
            for rec in _records(cfg, p, x):
                prim = "true" if rec.primitive else "false"
                lines.append(f"{rec.length}\t{rec.rtype}\t{prim}\t{rec.key}")
        return "".join(line + "\n" for line in lines).encode(), EXIT_OK
    header = ("p", "x", "length", "type", "primitive", "key")
    rows = [
        (p, x, rec.length, str(rec.rtype), rec.primitive, rec.key)
        for p, x in cfg.pairs
        for rec in _records(cfg, p, x)
    ]
    return emit_table(header, rows, cfg.fmt or "csv"), EXIT_OK


def _cmd_count(cfg: RunConfig) -> tuple[bytes, int]:
    rows = []
    for p, x in cfg.pairs:
        if cfg.method == "dp":
            n = reciprocal_class_count_exact(HeckeParams(p), x)
        else:
            n = len(_records(cfg, p, x))
        rows.append((p, x, n))
    if cfg.fmt is None and len(rows) == 1:
        return f"{rows[0][2]}\n".encode(), EXIT_OK
    return emit_table(("p", "x", "count"), rows, cfg.fmt or "csv"), EXIT_OK


def _cmd_estimate(cfg: RunConfig) -> tuple[bytes, int]:
    rows = []
    for p, x in cfg.pairs:
        est = _estimate(p, x, cfg.formula)
        rows.append((p, x, est.setting, est.decimal_string, f"{est.log10_value:.6f}"))
    return emit_table(("p", "x", "formula", "estimate", "estimate_log10"), rows, cfg.fmt or "csv"), EXIT_OK


def _compare_row(p: int, x: int, method: str, formula: Optional[str]) -> CountReportRow:
    params = HeckeParams(p)
    total, prim = class_counts(params, x, method)
    return CountReportRow.build(
        p, x, total, symmetric_class_count_exact(params, x), _estimate(p, x, formula), prim
    )


def _parallel_map(fn: Callable, args: Sequence[tuple], parallel: int) -> list:
    if parallel > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            return list(pool.map(fn, *zip(*args)))
    return [fn(*a) for a in args]


def _cmd_compare(cfg: RunConfig) -> tuple[bytes, int]:
    args = [(p, x, cfg.method, cfg.formula) for p, x in cfg.pairs]
    # enumeration shards itself; keep row-level parallelism for the DP path
    rows = _parallel_map(_compare_row, args, cfg.parallel if cfg.method == "dp" else 1)
    return emit_report(rows, cfg.fmt or "csv"), EXIT_OK


def _cmd_primitive_ratio(cfg: RunConfig) -> tuple[bytes, int]:
    rows = []
    for p, x in cfg.pairs:
        total, prim = class_counts(HeckeParams(p), x, cfg.method, cfg.parallel)
        ratio = f"{prim}/{total}" if total else None
        dec = f"{prim / total:.6f}" if total else None
        rows.append((p, x, prim, total, ratio, dec))
    header = ("p", "x", "primitive", "total", "ratio", "ratio_decimal")
    return emit_table(header, rows, cfg.fmt or "csv"), EXIT_OK


def run_verify(ps: Sequence[int], max_length: int, parallel: int = 1) -> list[dict]:
    """Run every invariant suite; one result dict per check."""
    results: list[dict] = []

    def record(name: str, p: int, x: Optional[int], passed: bool, detail: object = None) -> None:
        results.append({"check": name, "p": p, "x": x, "passed": bool(passed), "detail": detail})

    for p in ps:
        params = HeckeParams(p)
        oracle_full = oracle_enumerate_reciprocal(params, max_length)
        for x in range(0, max_length + 1):
            enum_keys = [r.key for r in enumerate_reciprocal_classes(params, x, parallel=parallel)]
            oracle = [r for r in oracle_full if r.length <= x]
            oracle_keys = [r.key for r in oracle]
            record("oracle-equivalence", p, x, enum_keys == oracle_keys,
                   {"enumerate": len(enum_keys), "oracle": len(oracle_keys)})
            prim, _ = split_primitive_counts(oracle)
            dp = (reciprocal_class_count_exact(params, x), primitive_class_count_exact(params, x),
                  symmetric_class_count_exact(params, x))
            tc = type_counts(oracle)
            seen = (tc.total, prim, tc.symmetric)
            record("dp-counts", p, x, dp == seen, {"dp": list(dp), "oracle": list(seen)})
            if params.is_even:
                record("sandwich", p, x, tc.sandwich_holds,
                       {"sym": tc.symmetric, "total": tc.total, "rec": tc.p_reciprocal, "sr": tc.mixed})
            if x >= 8:
                rep = check_lemma71(params, x, "oracle")
                record("lemma71", p, x, rep.holds, {"lhs": rep.lhs, "rhs": rep.rhs})
            try:
                rep72 = check_lemma72(params, x, "oracle")
                record("lemma72-min-c", p, x, True, {"min_c": round(rep72.min_c, 6)})
            except EmptyCountError:
                pass
        bad = [rec.key for rec in oracle_full if not structure_check(rec.key, params).ok]
        record("structure", p, max_length, not bad, {"classes": len(oracle_full), "failed": bad})
    return results


def _cmd_verify(cfg: RunConfig) -> tuple[bytes, int]:
    results = run_verify(cfg.ps, max(cfg.lengths), cfg.parallel)
    failures = [r for r in results if not r["passed"]]
    payload = {"passed": not failures, "checks": len(results), "failures": failures}
    if cfg.fmt == "csv":
        rows = [(r["check"], r["p"], r["x"], r["passed"], json.dumps(r["detail"], sort_keys=True))
                for r in results]
        data = emit_table(("check", "p", "x", "passed", "detail"), rows, "csv")
    else:
        data = (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode()
    return data, EXIT_OK if not failures else EXIT_FAIL


COMMANDS: dict[str, Callable[[RunConfig], tuple[bytes, int]]] = {
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "estimate": _cmd_estimate,
    "compare": _cmd_compare,
    "verify": _cmd_verify,
    "primitive-ratio": _cmd_primitive_ratio,
}


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = _config(ns)
        data, code = COMMANDS[cfg.command](cfg)
    except (UsageError, HeckeError) as exc:
        print(f"hecke-recip: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        with open(cfg.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return code


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
