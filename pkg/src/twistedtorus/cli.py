"""Command-line surface: single-knot invariants, obstruction reports, and
family scans.

Exit-code convention for ``check-lens`` (deliberately inverted, because
certifying an obstruction is the interesting outcome): 0 means the lens
form FAILED (obstruction present), 1 means it passed, 2 invalid
parameters, 3 closure is not a knot.

Scans are deterministic: rows are collected in increasing m order no
matter how many worker processes run, and output is built fully in
memory before anything is written, so failures never leave partial files.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .alexander import NotAKnot, alexander_of_knot
from .braid import InvalidTorusParameters, TwistedTorusKnot, dean_braid, is_msy_family
from .laurent import format_poly
from .obstructions import HypothesisNotMet, gamma_primitivity_verdict, morton_check, os_lens_form_check
from .primitivity import middle_splitting_primitive

EXIT_OK = 0
EXIT_LENS_FORM_PASSES = 1
EXIT_BAD_PARAMS = 2
EXIT_NOT_A_KNOT = 3

CSV_HEADER = "m,p,q,r,n,braid_length,breadth,coeff_target_exp,coeff_value,lens_form_ok,gamma_primitive_excluded"


@dataclass(frozen=True)
class ScanRow:
    """One family member's worth of scan output; Morton columns are None
    when the check was skipped (m = 0 or hypothesis not met)."""

    m: int
    p: int
    q: int
    r: int
    n: int
    braid_length: int
    breadth: int
    coeff_target_exp: Optional[int]
    coeff_value: Optional[int]
    lens_form_ok: bool
    gamma_primitive_excluded: bool

    def validate(self) -> None:
        """Arithmetic self-checks re-run before any row is emitted."""
        if self.braid_length != self.q * (self.p - 1) + abs(self.r):
            raise AssertionError(f"braid length mismatch in row m={self.m}")
        if self.r >= 0 and self.breadth != self.q * (self.p - 1) + self.r - self.p + 1:
            raise AssertionError(f"breadth mismatch in row m={self.m}")

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "p": self.p,
            "q": self.q,
            "r": self.r,
            "n": self.n,
            "braid_length": self.braid_length,
            "breadth": self.breadth,
            "coeff_target_exp": self.coeff_target_exp,
            "coeff_value": self.coeff_value,
            "lens_form_ok": self.lens_form_ok,
            "gamma_primitive_excluded": self.gamma_primitive_excluded,
        }


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def rows_to_csv(rows: list[ScanRow]) -> str:
    lines = [CSV_HEADER]
    for row in rows:
        row.validate()
        d = row.to_json_dict()
        lines.append(",".join(_csv_cell(d[key]) for key in CSV_HEADER.split(",")))
    return "\n".join(lines) + "\n"


def rows_to_json(rows: list[ScanRow]) -> str:
    for row in rows:
        row.validate()
    return json.dumps([row.to_json_dict() for row in rows], indent=2) + "\n"


def rows_to_pretty(rows: list[ScanRow]) -> str:
    cols = CSV_HEADER.split(",")
    table = [cols] + [
        [_csv_cell(row.to_json_dict()[key]) or "-" for key in cols] for row in rows
    ]
    widths = [max(len(line[i]) for line in table) for i in range(len(cols))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(line, widths)) for line in table]
    return "\n".join(lines) + "\n"


def compute_scan_row(args: tuple[int, int, int]) -> ScanRow:
    """Whole pipeline for one family member; module-level so worker
    processes can pickle it."""
    p, q, m = args
    knot = TwistedTorusKnot(p, q, 10 * m - 4)
    braid = dean_braid(knot)
    d = alexander_of_knot(knot)
    lens_ok, _ = os_lens_form_check(d)
    target = coeff = None
    if m != 0:
        try:
            report = morton_check(p, q, knot.full_twists, d)
        except HypothesisNotMet:
            pass
        else:
            center = p * report.s + 2
            target = center
            coeff = d.paper_form.coefficient(center)
    mu_excluded = is_msy_family(knot)
    return ScanRow(
        m=m,
        p=p,
        q=q,
        r=knot.r,
        n=knot.full_twists,
        braid_length=len(braid),
        breadth=d.genus_breadth,
        coeff_target_exp=target,
        coeff_value=coeff,
        lens_form_ok=lens_ok,
        gamma_primitive_excluded=(not lens_ok) and mu_excluded,
    )


def scan_rows(p: int, q: int, m_start: int, m_end: int, jobs: int = 1) -> list[ScanRow]:
    """Scan the twisted family over m_start..m_end inclusive, optionally in
    parallel. Rows come back in increasing m order regardless of jobs."""
    if m_start > m_end:
        raise InvalidTorusParameters(f"empty scan range {m_start}..{m_end}")
    params = [(p, q, m) for m in range(m_start, m_end + 1)]
    if jobs <= 1 or len(params) == 1:
        return [compute_scan_row(t) for t in params]
    with ProcessPoolExecutor(max_workers=min(jobs, len(params))) as pool:
        return list(pool.map(compute_scan_row, params))


def _add_pqr(parser: argparse.ArgumentParser, with_r: bool = True) -> None:
    parser.add_argument("--p", type=int, required=True, help="strand count of the torus braid")
    parser.add_argument("--q", type=int, required=True, help="torus power")
    if with_r:
        parser.add_argument("--r", type=int, required=True, help="even twist parameter")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistedtorus",
        description="Alexander polynomials and surgery obstructions for twisted torus knots",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_alex = sub.add_parser("alex", help="print the Alexander polynomial of T(p,q,2,r)")
    _add_pqr(p_alex)
    p_alex.add_argument(
        "--form", choices=("paper", "symmetric"), default="paper",
        help="paper: exponents 0..2g with constant +1; symmetric: exponents -g..g",
    )

    p_lens = sub.add_parser(
        "check-lens",
        help="JSON obstruction report; exit 0 iff the lens form FAILS (obstruction present)",
    )
    _add_pqr(p_lens)

    p_scan = sub.add_parser("scan", help="batch-scan the r = 10m-4 family into CSV or JSON")
    _add_pqr(p_scan, with_r=False)
    p_scan.add_argument("--m-start", type=int, required=True)
    p_scan.add_argument("--m-end", type=int, required=True)
    p_scan.add_argument("--out", choices=("csv", "json"), default="csv", help="table format")
    p_scan.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    p_scan.add_argument("--jobs", type=int, default=1, help="parallel workers (per m)")
    p_scan.add_argument("--pretty", action="store_true", help="human table instead of csv/json")

    p_prim = sub.add_parser("primitive", help="middle-splitting primitivity of the (p,q) torus knot")
    _add_pqr(p_prim, with_r=False)

    return parser


def _cmd_alex(args) -> int:
    knot = TwistedTorusKnot(args.p, args.q, args.r)
    d = alexander_of_knot(knot)
    poly = d.paper_form if args.form == "paper" else d.symmetric_form
    print(format_poly(poly))
    return EXIT_OK


def _cmd_check_lens(args) -> int:
    knot = TwistedTorusKnot(args.p, args.q, args.r)
    report = gamma_primitivity_verdict(knot)
    print(report.to_json())
    return EXIT_OK if not report.lens_form_ok else EXIT_LENS_FORM_PASSES


def _cmd_scan(args) -> int:
    rows = scan_rows(args.p, args.q, args.m_start, args.m_end, jobs=args.jobs)
    if args.pretty:
        text = rows_to_pretty(rows)
    elif args.out == "csv":
        text = rows_to_csv(rows)
    else:
        text = rows_to_json(rows)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_primitive(args) -> int:
    result = middle_splitting_primitive(args.p, args.q)
    print(result.verdict_line())
    print(result.to_json())
    return EXIT_OK


_COMMANDS = {
    "alex": _cmd_alex,
    "check-lens": _cmd_check_lens,
    "scan": _cmd_scan,
    "primitive": _cmd_primitive,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InvalidTorusParameters as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    except NotAKnot as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_A_KNOT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
