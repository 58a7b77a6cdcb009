"""Command-line surface: single verifications, parameter sweeps over
(theorem, sequence, n, prime) grids, eigenspace classification, transform
prefixes, and the coefficient-matrix display.

Sweep cells that violate a result's hypotheses (wrong parity, prime too
small, sequence in the wrong eigenspace, a denominator divisible by p) are
skipped and counted rather than failed.  Output is sorted after execution,
so it is byte-identical for any --jobs value.

Exit codes: 0 when every report passes, 1 when any fails, 2 on usage or
configuration errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable

from .centralfact import RationalMatrix, coefficient_matrix, row_reduce
from .congruence import (
    COROLLARY_VARIANTS,
    CongruenceReport,
    EigenspaceMismatch,
    EvenDepth,
    PrimeTooSmall,
    verify_S_parity,
    verify_corollary_1_2,
    verify_lemma_2_1,
    verify_lemma_3_1,
    verify_theorem_1_1,
    verify_theorem_3_2,
    verify_theorem_3_3,
)
from .exactnum import DenominatorDivisibleByP, Residue, primes_between
from .seqalg import (
    BUILTIN_NAMES,
    DEFAULT_HORIZON,
    SequenceSpec,
    binomial_transform_prefix,
    classify_eigenspace,
)

THEOREM_IDS = (
    "lemma-2.1",
    "thm-1.1",
    "s-parity",
    "cor-1.2",
    "lemma-3.1",
    "thm-3.2",
    "thm-3.3",
)

FORMATS = ("text", "json", "csv")

# Hypothesis violations: a sweep cell hitting one of these is skipped, not failed.
_SKIP_EXCEPTIONS = (EvenDepth, PrimeTooSmall, EigenspaceMismatch, DenominatorDivisibleByP)


class ConfigInvalid(ValueError):
    """A sweep or verify configuration that cannot be run."""


@dataclass(frozen=True)
class SweepConfig:
    """A grid of verification cells: theorems x sequences x n x primes."""

    theorems: tuple[str, ...]
    sequences: tuple[str, ...]
    n_range: tuple[int, int]
    prime_range: tuple[int, int]
    c_values: tuple[int, ...] = (1,)
    m: int = 2
    jobs: int = 1
    horizon: int = DEFAULT_HORIZON

    def validate(self) -> None:
        if not self.theorems:
            raise ConfigInvalid("at least one theorem is required")
        for t in self.theorems:
            if t not in THEOREM_IDS:
                raise ConfigInvalid(f"unknown theorem id {t!r}")
        if not self.sequences:
            raise ConfigInvalid("at least one sequence is required")
        for s in self.sequences:
            if s not in BUILTIN_NAMES:
                raise ConfigInvalid(f"unknown sequence {s!r}")
        n_lo, n_hi = self.n_range
        if n_lo < 1 or n_lo > n_hi:
            raise ConfigInvalid(f"invalid n range {n_lo}..{n_hi}")
        p_lo, p_hi = self.prime_range
        if p_lo < 2 or p_hi < 2:
            raise ConfigInvalid("prime range bounds must be >= 2")
        if not primes_between(p_lo, p_hi):
            raise ConfigInvalid(f"no primes in range {p_lo}..{p_hi}")
        if not self.c_values:
            raise ConfigInvalid("at least one c value is required")
        if self.jobs < 1:
            raise ConfigInvalid("jobs must be >= 1")
        if self.horizon < 1:
            raise ConfigInvalid("horizon must be >= 1")


@dataclass(frozen=True)
class _Cell:
    theorem: str
    sequence: SequenceSpec | None = None
    n: int | None = None
    p: int | None = None
    variant: str | None = None
    c: int | None = None
    m: int | None = None
    horizon: int = DEFAULT_HORIZON


@dataclass(frozen=True)
class SweepResult:
    reports: list[CongruenceReport]
    cells: int
    skipped: dict[str, int]

    @property
    def failed(self) -> int:
        return sum(1 for r in self.reports if not r.passed)

    def meta(self) -> dict[str, Any]:
        return {
            "cells": str(self.cells),
            "reports": str(len(self.reports)),
            "passed": str(sum(1 for r in self.reports if r.passed)),
            "failed": str(self.failed),
            "skipped": str(sum(self.skipped.values())),
            "skip_reasons": {k: str(v) for k, v in sorted(self.skipped.items())},
        }


def _cells_for(config: SweepConfig) -> list[_Cell]:
    n_values = range(config.n_range[0], config.n_range[1] + 1)
    primes = primes_between(*config.prime_range)
    seqs = [SequenceSpec.builtin(name) for name in config.sequences]
    cells: list[_Cell] = []
    for theorem in config.theorems:
        if theorem == "lemma-2.1":
            cells += [
                _Cell(theorem, sequence=s, n=n, m=config.m, horizon=config.horizon)
                for s in seqs
                for n in n_values
            ]
        elif theorem in ("thm-1.1", "s-parity"):
            cells += [
                _Cell(theorem, sequence=s, n=n, p=p, horizon=config.horizon)
                for s in seqs
                for n in n_values
                for p in primes
            ]
        elif theorem == "cor-1.2":
            cells += [
                _Cell(theorem, sequence=s, n=n, p=p, variant=v, horizon=config.horizon)
                for s in seqs
                for n in n_values
                for p in primes
                for v in COROLLARY_VARIANTS
            ]
        elif theorem == "lemma-3.1":
            cells += [_Cell(theorem, n=n, p=p) for n in n_values for p in primes]
        elif theorem == "thm-3.2":
            cells += [
                _Cell(theorem, c=c, n=n, p=p)
                for c in config.c_values
                for n in n_values
                for p in primes
            ]
        elif theorem == "thm-3.3":
            cells += [_Cell(theorem, n=n, p=p) for n in n_values for p in primes]
    return cells


def _run_cell(cell: _Cell) -> CongruenceReport | str:
    """Run one cell; a hypothesis violation returns the skip reason."""
    try:
        if cell.theorem == "lemma-2.1":
            return verify_lemma_2_1(
                cell.sequence, cell.m, cell.n, p=cell.p, horizon=max(cell.n, cell.horizon)
            )
        if cell.theorem == "thm-1.1":
            return verify_theorem_1_1(cell.sequence, cell.n, cell.p, cell.horizon)
        if cell.theorem == "s-parity":
            return verify_S_parity(cell.sequence, cell.n, cell.p, cell.horizon)
        if cell.theorem == "cor-1.2":
            return verify_corollary_1_2(cell.sequence, cell.n, cell.p, cell.variant, cell.horizon)
        if cell.theorem == "lemma-3.1":
            return verify_lemma_3_1(cell.n, cell.p)
        if cell.theorem == "thm-3.2":
            return verify_theorem_3_2(cell.c, cell.n, cell.p)
        if cell.theorem == "thm-3.3":
            return verify_theorem_3_3(cell.n, cell.p)
        raise ConfigInvalid(f"unknown theorem id {cell.theorem!r}")
    except _SKIP_EXCEPTIONS as exc:
        return type(exc).__name__


def _sort_key(report: CongruenceReport) -> tuple:
    prm = report.params
    return (
        report.theorem,
        report.sequence,
        prm.get("c", 0),
        prm.get("m", -1),
        prm.get("n", -1),
        prm.get("p", -1),
        prm.get("variant", ""),
    )


def run_sweep(config: SweepConfig) -> SweepResult:
    """Run every admissible cell of the grid; deterministic for any jobs count."""
    config.validate()
    cells = _cells_for(config)
    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            outcomes = list(pool.map(_run_cell, cells))
    else:
        outcomes = [_run_cell(cell) for cell in cells]
    reports = [o for o in outcomes if isinstance(o, CongruenceReport)]
    skipped: dict[str, int] = {}
    for o in outcomes:
        if isinstance(o, str):
            skipped[o] = skipped.get(o, 0) + 1
    reports.sort(key=_sort_key)
    return SweepResult(reports=reports, cells=len(cells), skipped=skipped)


# ---------------------------------------------------------------------------
# Serialisation

_INT_PARAM_KEYS = ("n", "p", "e", "c", "m")


def _side_str(side: Residue | Fraction) -> str:
    return str(side.value) if isinstance(side, Residue) else str(side)


def _report_obj(report: CongruenceReport) -> dict[str, Any]:
    params: dict[str, Any] = {}
    for key in _INT_PARAM_KEYS:
        if key in report.params:
            params[key] = str(report.params[key])
    if "variant" in report.params:
        params["variant"] = report.params["variant"]
    obj: dict[str, Any] = {
        "theorem": report.theorem,
        "sequence": report.sequence,
        "params": params,
        "lhs": _side_str(report.lhs),
        "rhs": _side_str(report.rhs),
        "modulus": str(report.modulus) if report.modulus is not None else None,
        "pass": report.passed,
    }
    if report.detail is not None:
        obj["detail"] = report.detail
    return obj


def emit_report(
    reports: Iterable[CongruenceReport],
    fmt: str = "text",
    meta: dict[str, Any] | None = None,
) -> bytes:
    """Serialise reports as JSON, CSV or an aligned text table.

    All numbers are emitted as decimal strings.  JSON appends the sweep
    metadata (cell/skip accounting) as a trailing {"meta": ...} object.
    """
    reports = list(reports)
    if fmt == "json":
        objs: list[Any] = [_report_obj(r) for r in reports]
        if meta is not None:
            objs.append({"meta": meta})
        return (json.dumps(objs, indent=2) + "\n").encode("utf-8")
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        header = ["theorem", "sequence", *_INT_PARAM_KEYS, "variant", "lhs", "rhs", "modulus", "pass"]
        writer.writerow(header)
        for r in reports:
            row = [r.theorem, r.sequence]
            row += [str(r.params[k]) if k in r.params else "" for k in _INT_PARAM_KEYS]
            row.append(r.params.get("variant", ""))
            row += [_side_str(r.lhs), _side_str(r.rhs)]
            row.append(str(r.modulus) if r.modulus is not None else "exact")
            row.append("true" if r.passed else "false")
            writer.writerow(row)
        return out.getvalue().encode("utf-8")
    if fmt == "text":
        return _emit_text(reports, meta)
    raise ConfigInvalid(f"unknown format {fmt!r}")


def _emit_text(reports: list[CongruenceReport], meta: dict[str, Any] | None) -> bytes:
    headers = ("theorem", "sequence", "params", "lhs", "rhs", "modulus", "status")
    rows = []
    for r in reports:
        params = " ".join(f"{k}={v}" for k, v in r.params.items())
        rows.append(
            (
                r.theorem,
                r.sequence,
                params,
                _side_str(r.lhs),
                _side_str(r.rhs),
                str(r.modulus) if r.modulus is not None else "exact",
                "PASS" if r.passed else "FAIL",
            )
        )
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    if meta is not None:
        reasons = ", ".join(f"{k}={v}" for k, v in meta["skip_reasons"].items()) or "none"
        lines.append(
            f"cells={meta['cells']} reports={meta['reports']} passed={meta['passed']} "
            f"failed={meta['failed']} skipped={meta['skipped']} ({reasons})"
        )
    return ("\n".join(lines) + "\n").encode("utf-8")


def parse_reports(data: bytes | str) -> tuple[list[CongruenceReport], dict[str, Any] | None]:
    """Inverse of the JSON emitter: rebuild report objects and metadata."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    objs = json.loads(data)
    reports: list[CongruenceReport] = []
    meta: dict[str, Any] | None = None
    for obj in objs:
        if "meta" in obj:
            meta = obj["meta"]
            continue
        params: dict[str, Any] = {}
        for key, value in obj["params"].items():
            params[key] = int(value) if key in _INT_PARAM_KEYS else value
        if obj["modulus"] is None:
            lhs: Residue | Fraction = Fraction(obj["lhs"])
            rhs: Residue | Fraction = Fraction(obj["rhs"])
            modulus = None
        else:
            p, e = params["p"], params["e"]
            lhs = Residue(int(obj["lhs"]), p, e)
            rhs = Residue(int(obj["rhs"]), p, e)
            modulus = int(obj["modulus"])
        reports.append(
            CongruenceReport(
                theorem=obj["theorem"],
                sequence=obj["sequence"],
                params=params,
                lhs=lhs,
                rhs=rhs,
                modulus=modulus,
                passed=obj["pass"],
                detail=obj.get("detail"),
            )
        )
    return reports, meta


# ---------------------------------------------------------------------------
# Argument parsing and subcommands

def _parse_range(text: str, what: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise ConfigInvalid(f"cannot parse {what} range {text!r}; expected LO..HI") from exc
    return lo, hi


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        if ".." in text:
            lo, hi = _parse_range(text, what)
            return tuple(range(lo, hi + 1))
        return tuple(int(part) for part in text.split(","))
    except (ValueError, ConfigInvalid) as exc:
        raise ConfigInvalid(f"cannot parse {what} list {text!r}") from exc


def _parse_names(text: str, universe: tuple[str, ...], what: str) -> tuple[str, ...]:
    if text == "all":
        return universe
    names = tuple(part.strip() for part in text.split(",") if part.strip())
    for name in names:
        if name not in universe:
            raise ConfigInvalid(f"unknown {what} {name!r}")
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigensums",
        description="Exact verification of congruences for multiple sums over "
        "binomial-transform-invariant sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="verify a single (theorem, sequence, n, p) cell")
    verify.add_argument("--theorem", required=True, choices=THEOREM_IDS)
    verify.add_argument("--sequence", default="step", choices=BUILTIN_NAMES)
    verify.add_argument("--n", type=int, default=1, help="depth (or index i for s-parity)")
    verify.add_argument("--p", type=int, help="prime modulus base")
    verify.add_argument("--c", type=int, default=1, help="recurrence coefficient for thm-3.2")
    verify.add_argument("--m", type=int, default=2, help="free parameter for lemma-2.1")
    verify.add_argument("--variant", choices=COROLLARY_VARIANTS)
    verify.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
    verify.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)

    sweep = sub.add_parser("sweep", help="verify a grid of cells")
    sweep.add_argument("--theorem", default="all", help="comma-separated theorem ids, or 'all'")
    sweep.add_argument("--sequence", default="all", help="comma-separated builtin names, or 'all'")
    sweep.add_argument("--n", default="1..2", help="depth range LO..HI")
    sweep.add_argument("--primes", required=True, help="prime range LO..HI (inclusive)")
    sweep.add_argument("--c", default="1", help="c values for thm-3.2: LO..HI or comma list")
    sweep.add_argument("--m", type=int, default=2)
    sweep.add_argument("--jobs", type=int, default=1)
    sweep.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
    sweep.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)

    classify = sub.add_parser("classify", help="classify a sequence's eigenspace")
    classify.add_argument("--sequence", required=True, choices=BUILTIN_NAMES)
    classify.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)

    transform = sub.add_parser("transform", help="print the transform of a sequence prefix")
    transform.add_argument("--sequence", required=True, choices=BUILTIN_NAMES)
    transform.add_argument("--horizon", type=int, default=8)

    matrix = sub.add_parser("matrix", help="print the coefficient matrix and its reduction")
    matrix.add_argument("--rows", type=int, default=5)
    matrix.add_argument("--cols", type=int, default=8)

    return parser


def _cmd_verify(args: argparse.Namespace) -> int:
    needs_p = args.theorem != "lemma-2.1"
    if needs_p and args.p is None:
        raise ConfigInvalid(f"--p is required for {args.theorem}")
    if args.theorem == "cor-1.2" and args.variant is None:
        raise ConfigInvalid("--variant is required for cor-1.2")
    cell = _Cell(
        theorem=args.theorem,
        sequence=SequenceSpec.builtin(args.sequence),
        n=args.n,
        p=args.p,
        variant=args.variant,
        c=args.c,
        m=args.m,
        horizon=args.horizon,
    )
    try:
        outcome = _run_cell(cell)
    except ValueError as exc:
        raise ConfigInvalid(str(exc)) from exc
    if isinstance(outcome, str):
        raise ConfigInvalid(f"hypotheses not satisfied: {outcome}")
    sys.stdout.write(emit_report([outcome], args.fmt).decode("utf-8"))
    return 0 if outcome.passed else 1


def _cmd_sweep(args: argparse.Namespace) -> int:
    config = SweepConfig(
        theorems=_parse_names(args.theorem, THEOREM_IDS, "theorem"),
        sequences=_parse_names(args.sequence, BUILTIN_NAMES, "sequence"),
        n_range=_parse_range(args.n, "n"),
        prime_range=_parse_range(args.primes, "prime"),
        c_values=_parse_int_list(args.c, "c"),
        m=args.m,
        jobs=args.jobs,
        horizon=args.horizon,
    )
    result = run_sweep(config)
    sys.stdout.write(emit_report(result.reports, args.fmt, meta=result.meta()).decode("utf-8"))
    return 0 if result.failed == 0 else 1


def _cmd_classify(args: argparse.Namespace) -> int:
    spec = SequenceSpec.builtin(args.sequence)
    eigen = classify_eigenspace(spec, args.horizon)
    sys.stdout.write(f"{spec.describe()}: {eigen.kind.value} (horizon {eigen.horizon})\n")
    return 0


def _cmd_transform(args: argparse.Namespace) -> int:
    spec = SequenceSpec.builtin(args.sequence)
    transformed = binomial_transform_prefix(spec.terms(args.horizon))
    sys.stdout.write(" ".join(str(x) for x in transformed) + "\n")
    return 0


def _format_matrix(matrix: RationalMatrix) -> str:
    cells = [[str(x) for x in row] for row in matrix.entries]
    widths = [max(len(cells[r][c]) for r in range(matrix.rows)) for c in range(matrix.cols)]
    return "\n".join(
        "  ".join(cell.rjust(widths[c]) for c, cell in enumerate(row)) for row in cells
    )


def _cmd_matrix(args: argparse.Namespace) -> int:
    if args.rows < 1 or args.cols < 1:
        raise ConfigInvalid("need rows, cols >= 1")
    matrix = coefficient_matrix(args.rows, args.cols)
    sys.stdout.write("coefficient matrix:\n")
    sys.stdout.write(_format_matrix(matrix) + "\n")
    sys.stdout.write("row reduced:\n")
    sys.stdout.write(_format_matrix(row_reduce(matrix)) + "\n")
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "classify": _cmd_classify,
    "transform": _cmd_transform,
    "matrix": _cmd_matrix,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ConfigInvalid as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
