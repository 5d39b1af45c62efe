"""Command line interface.

    waldlines bound 10                     all bounds for s = 10
    waldlines bound 10 --no-l              skip the (slow) search bound
    waldlines trace-t "7;1,1,1,1,1;15"     plane-reduction trace
    waldlines trace-l "4;8"                degeneration trace
    waldlines table 10,20,50 --format csv  bound table for several s
    waldlines verify chudnovsky --max-s 1000
    waldlines verify thm4 --range 11..60
    waldlines verify invariants --max-s 200

Rationals on the command line are written "p" or "p/q" (e.g. --tau 1/1000).
Exit status is 0 when every requested check passed, 1 on violations, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__, bounds, plane, report, space
from .cache import ResultCache, default_cache_path
from .linform import format_rational
from .reference import TABLE_S


@dataclass(frozen=True)
class RunConfig:
    tau: Fraction = Fraction(1, 1000)
    grid: Fraction = Fraction(1, 1000)
    precision: Fraction = Fraction(1, 10**6)
    cache_path: Path = None  # type: ignore[assignment]
    fmt: str = "md"

    def __post_init__(self) -> None:
        if self.tau <= 0 or self.grid <= 0 or self.precision <= 0:
            raise ValueError("tau, grid and precision must be positive")
        if self.cache_path is None:
            object.__setattr__(self, "cache_path", default_cache_path())


class InputError(ValueError):
    """Malformed command-line literal, with position information."""


def _parse_rational_arg(text: str, *, what: str = "rational") -> Fraction:
    s = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?(\.\d+)?", s) or ("/" in s and "." in s):
        raise InputError(f"invalid {what} literal {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"invalid {what} literal {text!r}: {exc}") from None


def _rational_at(source: str, chunk: str, offset: int, what: str) -> Fraction:
    try:
        return _parse_rational_arg(chunk, what=what)
    except InputError:
        raise InputError(
            f"invalid {what} {chunk.strip()!r} at position {offset} in {source!r}"
        ) from None


def parse_t_input(text: str) -> plane.ThresholdInput:
    """Parse "delta;q1,...,qs;p", e.g. "7;1,1,1,1,1;15" (the q-list may be
    empty: "4;;8")."""
    parts = text.split(";")
    if len(parts) != 3:
        raise InputError(
            f"expected 'delta;q1,...;p' with two semicolons, got {text!r}"
        )
    pos = 0
    delta = _rational_at(text, parts[0], pos, "degree")
    pos += len(parts[0]) + 1
    qs: list[Fraction] = []
    if parts[1].strip():
        for chunk in parts[1].split(","):
            qs.append(_rational_at(text, chunk, pos, "multiplicity"))
            pos += len(chunk) + 1
    else:
        pos += len(parts[1]) + 1
    ptext = parts[2].strip()
    if not re.fullmatch(r"\d+", ptext):
        raise InputError(
            f"invalid line count {parts[2].strip()!r} at position"
            f" {len(parts[0]) + len(parts[1]) + 2} in {text!r}"
        )
    try:
        return plane.ThresholdInput(delta, tuple(qs), int(ptext))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def parse_l_input(text: str) -> tuple[Fraction, int]:
    """Parse "delta;s", e.g. "4;8"."""
    parts = text.split(";")
    if len(parts) != 2:
        raise InputError(f"expected 'delta;s' with one semicolon, got {text!r}")
    delta = _rational_at(text, parts[0], 0, "degree")
    stext = parts[1].strip()
    if not re.fullmatch(r"[1-9]\d*", stext):
        raise InputError(
            f"invalid line count {parts[1].strip()!r} at position"
            f" {len(parts[0]) + 1} in {text!r}"
        )
    return delta, int(stext)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tau", default="1/1000", help="ordering parameter (default 1/1000)")
    p.add_argument("--grid", default="1/1000", help="search step (default 1/1000)")
    p.add_argument("--precision", default="1/1000000", help="root enclosure width")
    p.add_argument("--cache", default=None, help="cache file path")
    p.add_argument(
        "--format", dest="fmt", choices=("csv", "json", "md"), default="md"
    )


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        tau=_parse_rational_arg(args.tau, what="tau"),
        grid=_parse_rational_arg(args.grid, what="grid"),
        precision=_parse_rational_arg(args.precision, what="precision"),
        cache_path=Path(args.cache) if args.cache else default_cache_path(),
        fmt=args.fmt,
    )


def _gather_report(s: int, cfg: RunConfig, with_l: bool) -> report.BoundReport:
    cache = ResultCache(cfg.cache_path)
    hit = cache.get(s, cfg.tau, cfg.grid)
    if hit is not None and (hit.l_bound is not None or not with_l):
        return hit
    rep = report.build_report(s, cfg.tau, cfg.grid, cfg.precision, with_l=with_l)
    cache.put(rep, cfg.tau, cfg.grid)
    return rep


def _emit_reports(reports: list[report.BoundReport], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps([report.report_to_json_dict(r) for r in reports], indent=1))
    elif fmt == "csv":
        sys.stdout.write(report.reports_to_csv(reports))
    else:
        sys.stdout.write(report.reports_to_markdown(reports))


def cmd_bound(args: argparse.Namespace) -> int:
    cfg = _config(args)
    if args.s < 1:
        raise InputError("s must be a positive integer")
    rep = _gather_report(args.s, cfg, with_l=not args.no_l)
    _emit_reports([rep], cfg.fmt)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    cfg = _config(args)
    try:
        s_list = [int(x) for x in args.s_list.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"invalid s list {args.s_list!r}") from None
    if not s_list or any(s < 1 for s in s_list):
        raise InputError("s list must contain positive integers")
    reports = [_gather_report(s, cfg, with_l=not args.no_l) for s in s_list]
    _emit_reports(reports, cfg.fmt)
    return 0


def cmd_trace_t(args: argparse.Namespace) -> int:
    cfg = _config(args)
    inp = parse_t_input(args.input)
    res = plane.quadric_threshold(inp, cfg.tau)
    if args.json:
        payload = {
            "input": {
                "delta": format_rational(inp.delta),
                "qs": [format_rational(q) for q in inp.qs],
                "p": inp.p,
            },
            "tau": format_rational(cfg.tau),
            "steps": [plane.step_to_json(st) for st in res.steps],
            "t0": format_rational(res.t0),
        }
        print(json.dumps(payload, indent=1))
        return 0
    for st in res.steps:
        line = plane.format_system(st.system)
        if st.k is not None:
            line += f"  k={st.k}"
        print(line)
    print(f"t0 = {format_rational(res.t0)}")
    return 0


def cmd_trace_l(args: argparse.Namespace) -> int:
    cfg = _config(args)
    delta, s = parse_l_input(args.input)
    res = space.certify_lower_bound(delta, s, cfg.tau)
    if args.json:
        payload = {
            "delta": format_rational(delta),
            "s": s,
            "tau": format_rational(cfg.tau),
            "steps": [space.step_to_json(st) for st in res.steps],
            "answer": "yes" if res.answer else "no",
        }
        print(json.dumps(payload, indent=1))
        return 0
    print(f"start: {space.format_space_system(res.steps[0].system)}")
    for i, st in enumerate(res.steps[1:], start=1):
        line = f"{i:3d}. {space.format_space_system(st.system)}"
        if st.t0 is not None:
            line += f"  t0={format_rational(st.t0)}"
        print(line)
    print("yes" if res.answer else "no")
    return 0


def _parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text.strip())
    if not m:
        raise InputError(f"invalid range {text!r}, expected 'a..b'")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo < 1 or hi < lo:
        raise InputError(f"invalid range {text!r}")
    return lo, hi


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config(args)
    failures = 0
    if args.target == "chudnovsky":
        violations = bounds.chudnovsky_verify(args.max_s)
        for v in violations:
            print(f"FAIL {v}")
        print(
            f"chudnovsky: {'pass' if not violations else 'FAIL'}"
            f" (s <= {args.max_s}, {len(violations)} violations)"
        )
        failures = len(violations)
    elif args.target == "thm4":
        lo, hi = _parse_range(args.range)
        exceptions: list[int] = []
        for s in range(lo, hi + 1):
            status = bounds.strong_sqrt_check(s, cfg.tau)
            mark = "ok" if status.holds else ("exception" if status.method == "known-exception" else "FAIL")
            if not status.holds and status.method == "known-exception":
                exceptions.append(s)
            elif not status.holds:
                failures += 1
            print(f"s={s}: floor(sqrt(2.5s))={math.isqrt(5 * s // 2)} {mark} [{status.method}]")
        print(
            f"thm4: {'pass' if failures == 0 else 'FAIL'}"
            f" (range {lo}..{hi}, exceptions: {exceptions or 'none'})"
        )
    else:
        failures = _verify_invariants(args.max_s, cfg)
    return 0 if failures == 0 else 1


def _verify_invariants(max_s: int, cfg: RunConfig) -> int:
    failures = 0

    def check(name: str, ok: bool) -> None:
        nonlocal failures
        print(f"{'pass' if ok else 'FAIL'}  {name}")
        if not ok:
            failures += 1

    sq = [bounds.square_specialization_bound(s) for s in range(1, max_s + 1)]
    rt = [bounds.sqrt_lower_bound(s) for s in range(1, max_s + 1)]
    dg = [bounds.plane_degeneration_bound(s) for s in range(1, max_s + 1)]
    am = [bounds.alpha_max(s) for s in range(1, max_s + 1)]
    check("square bound dominates sqrt bound", all(a >= b for a, b in zip(sq, rt)))
    check("alpha_max is non-decreasing", all(a <= b for a, b in zip(am, am[1:])))
    check(
        "alpha_max window is tight",
        all(
            (a + 2) * (a + 1) <= 6 * s < (a + 3) * (a + 2)
            for s, a in zip(range(1, max_s + 1), am)
        ),
    )
    ok = True
    for s in range(1, max_s + 1):
        root = bounds.largest_root(bounds.AsymptoticCubic(s), cfg.precision)
        top = root.hi + cfg.precision
        if not all(
            Fraction(v) <= top
            for v in (sq[s - 1], rt[s - 1], dg[s - 1], bounds.chudnovsky_bound(s))
        ):
            ok = False
            break
    check("every lower bound is at most e_s", ok)
    small_ok = True
    for s in range(1, min(max_s, 5) + 1):
        cap = bounds.small_waldschmidt(s)
        if any(Fraction(v) > cap for v in (sq[s - 1], rt[s - 1], dg[s - 1])):
            small_ok = False
    check("small-s bounds respect known exact values", small_ok)
    print(f"invariants: {'pass' if failures == 0 else 'FAIL'} (s <= {max_s})")
    return failures


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="waldlines",
        description="Certified lower bounds for Waldschmidt constants of very general lines in P^3.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="all bounds for one s")
    p.add_argument("s", type=int)
    p.add_argument("--no-l", action="store_true", help="skip the search bound")
    _add_common(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("table", help="bound table for a comma-separated s list")
    p.add_argument("s_list", metavar="s1,s2,...", nargs="?", default=",".join(map(str, TABLE_S)))
    p.add_argument("--no-l", action="store_true", help="skip the search bounds")
    _add_common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("trace-t", help='plane-reduction trace, input "delta;q1,..;p"')
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_trace_t)

    p = sub.add_parser("trace-l", help='degeneration trace, input "delta;s"')
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_trace_l)

    p = sub.add_parser("verify", help="exact verification sweeps")
    p.add_argument("target", choices=("chudnovsky", "thm4", "invariants"))
    p.add_argument("--max-s", type=int, default=1000)
    p.add_argument("--range", default="11..60", help="s range for thm4, e.g. 11..60")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except plane.IterationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
