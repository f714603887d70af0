"""Command-line front end: ``trinomia gen ...``, ``trinomia verify ...``, ``trinomia report all``.

Exit status is 0 when every check passes, 1 when any check fails or is
inconclusive, and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import report as rep
from . import seqgen
from .kernel import BiPoly, symbols
from .parallel import default_jobs

GEN_TARGETS = ("tnk", "tbc", "laurent", "motzkin", "triangle")
VERIFY_SUITES = (
    "hankel", "interlace", "tp", "sm", "criteria", "riordan",
    "binomial", "tli", "motzkin", "limits", "fundamental",
)
TP_CAP = 10
# smallest meaningful bound per suite flag
MINIMUMS = {("interlace", "max_n"): 2, ("tli", "max_sum"): 2, ("motzkin", "max_n"): 2, ("motzkin", "max_sum"): 2}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    target: str
    n: int | None = None
    rows: int | None = None
    max_n: int | None = None
    max_sum: int | None = None
    depth: int | None = None
    b: Fraction | None = None
    c: Fraction | None = None
    a: Fraction | None = None
    symbolic: bool = False
    kind: str = "tbc"
    fmt: str | None = None
    out: str | None = None
    jobs: int = 1
    profile: str = "quick"
    suites: list[str] | None = None
    n_ladder: list[int] = field(default_factory=lambda: [200, 800, 3200])

    def validate(self) -> None:
        for name in ("n", "rows", "max_n", "max_sum", "depth", "jobs"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")
        if any(k < 2 for k in self.n_ladder):
            raise UsageError("--n-ladder entries must be at least 2")
        for (suite, name), lo in MINIMUMS.items():
            v = getattr(self, name)
            if self.command == "verify" and self.target == suite and v is not None and v < lo:
                raise UsageError(f"--{name.replace('_', '-')} must be at least {lo} for {suite}")
        if (self.b is None) != (self.c is None) and self.command == "verify" and self.target in ("sm", "criteria", "hankel"):
            raise UsageError("--b and --c must be given together")


# ---------------------------------------------------------------------------
# gen


def _point(cfg: RunConfig):
    """Symbolic ``(b, c)`` unless both are supplied numerically."""
    if cfg.symbolic or cfg.b is None or cfg.c is None:
        return symbols()
    return _num(cfg.b), _num(cfg.c)


def _num(x: Fraction):
    return x.numerator if x.denominator == 1 else x


def _cell_csv(x) -> str:
    return str(x)


def _cell_json(x):
    if isinstance(x, BiPoly):
        return x.to_json()
    return str(x)


def _gen_rows(cfg: RunConfig) -> tuple[str, list[list]]:
    if cfg.target == "tnk":
        rows = cfg.rows or 6
        tri = seqgen.tu_matrix(rows - 1)
        return "tnk", [[tri[n, k] for k in range(n // 2 + 1)] for n in range(rows)]
    if cfg.target == "tbc":
        b, c = _point(cfg)
        n = cfg.n if cfg.n is not None else 10
        return "tbc", [[k, v] for k, v in enumerate(seqgen.tbc_sequence(b, c, n))]
    if cfg.target == "motzkin":
        b, c = _point(cfg)
        n = cfg.n if cfg.n is not None else 10
        return "motzkin", [[k, v] for k, v in enumerate(seqgen.motzkin_sequence(b, c, n))]
    if cfg.target == "laurent":
        b, c = _point(cfg)
        rows = cfg.rows or 6
        return "laurent", [[seqgen.laurent_entry(n, k, b, c) for k in range(-n, n + 1)] for n in range(rows)]
    if cfg.target == "triangle":
        rows = cfg.rows or 6
        if cfg.kind == "pascal":
            a = _num(cfg.a) if cfg.a is not None else 1
            tri = seqgen.pascal_triangle(a, rows - 1)
        elif cfg.kind == "tu":
            tri = seqgen.tu_matrix(rows - 1)
        else:
            b, c = _point(cfg)
            build = seqgen.tbc_triangle if cfg.kind == "tbc" else seqgen.motzkin_triangle
            tri = build(b, c, rows - 1)
        return f"triangle:{cfg.kind}", [list(r) for r in tri.rows]
    raise UsageError(f"unknown gen target {cfg.target!r}")


def render_gen(cfg: RunConfig) -> str:
    name, rows = _gen_rows(cfg)
    if (cfg.fmt or "csv") == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for r in rows:
            w.writerow([_cell_csv(x) for x in r])
        return buf.getvalue()
    return json.dumps({"name": name, "rows": [[_cell_json(x) for x in r] for r in rows]}, indent=2) + "\n"


# ---------------------------------------------------------------------------
# verify


def _verify_checks(cfg: RunConfig) -> list[rep.Check]:
    t = cfg.target
    bc = (_num(cfg.b), _num(cfg.c)) if cfg.b is not None and cfg.c is not None else (None, None)
    if t == "hankel":
        if cfg.symbolic:
            n = cfg.n if cfg.n is not None else 6
            return rep.suite_hankel(n, True, shifted_n=n)
        return rep.suite_hankel(symbolic=False, numeric_n=cfg.n or 10, b=bc[0], c=bc[1])
    if t == "interlace":
        return rep.suite_interlace(cfg.max_n or 60, cfg.jobs)
    if t == "tp":
        rows = cfg.rows or 8
        if rows > TP_CAP:
            raise UsageError(f"--rows is capped at {TP_CAP} for full-order TP checks")
        return rep.suite_tp(rows, 6, cfg.jobs)
    if t == "sm":
        return rep.suite_sm(bc[0], bc[1], cfg.depth or 10)
    if t == "criteria":
        return rep.suite_criteria(bc[0], bc[1])
    if t == "riordan":
        return rep.suite_riordan(cfg.depth or 12)
    if t == "binomial":
        a_values = (_num(cfg.a),) if cfg.a is not None else (1, 2, 3)
        return rep.suite_binomial(a_values, cfg.n or 15)
    if t == "tli":
        max_sum = cfg.max_sum or 14
        return rep.suite_tli(max_sum, cfg.max_n or 10, 8, 6)
    if t == "motzkin":
        return rep.suite_motzkin(cfg.max_n or 12, cfg.max_sum)
    if t == "limits":
        return rep.suite_limits(cfg.n_ladder)
    if t == "fundamental":
        return rep.suite_fundamental(cfg.max_sum or cfg.n or 20)
    raise UsageError(f"unknown verify suite {t!r}")


def run(cfg: RunConfig) -> tuple[int, str, rep.Report | None]:
    """Execute ``cfg``; returns ``(exit status, rendered output, report)``."""
    cfg.validate()
    if cfg.command == "gen":
        return 0, render_gen(cfg), None
    if cfg.command == "verify":
        t0 = time.perf_counter()
        try:
            checks = _verify_checks(cfg)
        except UsageError:
            raise
        except Exception as exc:  # surfaces as a failed check, not a traceback
            checks = [rep.Check(f"{cfg.target}.error", {}, rep.FAIL,
                                witness={"error": str(exc), "type": type(exc).__name__})]
        report = rep.Report(cfg.target, checks, time.perf_counter() - t0)
    elif cfg.command == "report":
        try:
            report = rep.report_all(cfg.profile, cfg.suites, cfg.jobs)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    else:
        raise UsageError(f"unknown command {cfg.command!r}")
    if cfg.fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(report.to_csv_rows())
        text = buf.getvalue()
    else:
        text = report.dumps() + "\n"
    return report.exit_code, text, report


# ---------------------------------------------------------------------------
# argument parsing


def _fraction(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}") from None


def _ladder(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad ladder {s!r}") from None


def _suites(s: str) -> list[str]:
    return [x.strip() for x in s.split(",") if x.strip()]


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int)
    p.add_argument("--rows", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-sum", type=int)
    p.add_argument("--depth", type=int)
    p.add_argument("--b", type=_fraction)
    p.add_argument("--c", type=_fraction)
    p.add_argument("--a", type=_fraction)
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("--format", dest="fmt", choices=("csv", "json"))
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--jobs", type=int, help="worker processes (default: $TRINOMIA_JOBS or CPU count)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trinomia", description="Generalized central trinomial coefficients: generation and verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit sequences and triangles (CSV by default)")
    g.add_argument("target", choices=GEN_TARGETS)
    g.add_argument("--kind", choices=("tbc", "mbc", "pascal", "tu"), default="tbc")
    _common(g)

    v = sub.add_parser("verify", help="run one verification suite (JSON report by default)")
    v.add_argument("target", choices=VERIFY_SUITES)
    v.add_argument("--n-ladder", type=_ladder, default=[200, 800, 3200])
    _common(v)

    r = sub.add_parser("report", help="run every suite of a profile")
    r.add_argument("target", choices=("all",))
    r.add_argument("--profile", choices=("quick", "full"), default="quick")
    r.add_argument("--suites", type=_suites, help="comma-separated subset of the profile's suites")
    _common(r)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        target=ns.target,
        n=ns.n,
        rows=ns.rows,
        max_n=ns.max_n,
        max_sum=ns.max_sum,
        depth=ns.depth,
        b=ns.b,
        c=ns.c,
        a=ns.a,
        symbolic=ns.symbolic,
        kind=getattr(ns, "kind", "tbc"),
        fmt=ns.fmt,
        out=ns.out,
        jobs=ns.jobs if ns.jobs is not None else default_jobs(),
        profile=getattr(ns, "profile", "quick"),
        suites=getattr(ns, "suites", None),
        n_ladder=getattr(ns, "n_ladder", [200, 800, 3200]),
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = config_from_args(ns)
    try:
        code, text, _ = run(cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"trinomia: error: {exc}", file=sys.stderr)
        return 2
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def entry() -> None:
    sys.exit(main())
