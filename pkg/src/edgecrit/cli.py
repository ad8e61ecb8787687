"""Command-line front end.

Exit status: 0 on success, 1 when a check reports a violation (or a script
step or requested coloring fails), 2 on usage and input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, TextIO

from .chromatic import chromatic_index, find_delta_coloring, vizing_plus_one_coloring
from .coloring import Coloring, ColoringError
from .graph import GraphError, VertexPartition, from_graph6, split_vertex, to_graph6
from .script import ScriptError, ScriptSyntaxError, execute_script, parse_script, render_script
from .theorems import CHECKS, CSV_HEADER, DEFAULT_BUDGET, GraphContext

JOBS_ENV = "EDGECRIT_JOBS"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class ScanConfig:
    checks: tuple[str, ...] = tuple(CHECKS)
    budget: int = DEFAULT_BUDGET
    seed: int = 0
    fmt: str = "csv"
    jobs: int = 1
    mode: str = "all"
    timing: bool = False
    universal_fork: bool = False

    def __post_init__(self) -> None:
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise UsageError(f"unknown check id(s): {', '.join(unknown)}; known: {', '.join(CHECKS)}")
        if self.budget < 0:
            raise UsageError("--budget must be >= 0")
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        if self.fmt not in ("csv", "json"):
            raise UsageError("--format must be csv or json")


@dataclass
class ScanResult:
    lines: list[str]
    violations: int = 0
    error: str | None = None
    diagnostics: list[str] = field(default_factory=list)


def _csv_line(fields: Sequence[object]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="").writerow(fields)
    return buf.getvalue()


def scan_line(line: str, config: ScanConfig) -> ScanResult:
    """All requested checks on one graph6 line, rendered as output lines."""
    try:
        graph = from_graph6(line)
    except (GraphError, UnicodeError) as exc:
        msg = str(exc)
        if config.fmt == "csv":
            out = _csv_line([line, "error", 0, 0, 0, 0])
        else:
            out = json.dumps({"graph6": line, "check": "error", "error": msg}, sort_keys=True)
        return ScanResult([out], error=msg, diagnostics=[f"malformed graph6 {line!r}: {msg}"])
    ctx = GraphContext(graph, config.budget, config.seed)
    ctx.delta_critical  # triage before any check
    res = ScanResult([])
    for name in config.checks:
        kw = {}
        if name == "broom_main":
            kw["mode"] = config.mode
        elif name == "fork":
            kw["universal"] = config.universal_fork
        rep = CHECKS[name](graph, ctx=ctx, **kw)
        res.violations += len(rep.violations)
        if config.fmt == "csv":
            res.lines.append(rep.csv_row(config.timing))
        else:
            res.lines.append(rep.to_json_line(config.timing))
        res.diagnostics.extend(f"{rep.graph6} {name}: {v}" for v in rep.violations)
    return res


def _lines(stream: Iterable[str]) -> Iterator[str]:
    for raw in stream:
        line = raw.strip()
        if line:
            yield line


def scan_corpus(config: ScanConfig, stream: Iterable[str]) -> Iterator[ScanResult]:
    """Results in input order.  With several workers at most ``2 * jobs``
    graphs are in flight; completed results wait in submission order."""
    lines = _lines(stream)
    if config.jobs == 1:
        for line in lines:
            yield scan_line(line, config)
        return
    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        pending: deque = deque()
        for line in lines:
            pending.append(pool.submit(scan_line, line, config))
            if len(pending) >= 2 * config.jobs:
                yield pending.popleft().result()
        while pending:
            yield pending.popleft().result()


def run_scan(config: ScanConfig, stream: Iterable[str], out: TextIO, err: TextIO) -> int:
    if config.fmt == "csv":
        out.write(CSV_HEADER + "\n")
    violations = errors = 0
    for res in scan_corpus(config, stream):
        for line in res.lines:
            out.write(line + "\n")
        for d in res.diagnostics:
            err.write(d + "\n")
        violations += res.violations
        errors += res.error is not None
    out.flush()
    if violations:
        return 1
    return 2 if errors else 0


# ---------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # raise so run_cli owns the exit status
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"{JOBS_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="edgecrit", description="Edge-coloring criticality toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_args(sp: argparse.ArgumentParser) -> None:
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--graph6", help="graph in graph6 format")
        g.add_argument("--input", help="file whose first nonblank line is a graph6 string")

    sp = sub.add_parser("chi", help="chromatic index and class")
    graph_args(sp)

    sp = sub.add_parser("critical", help="Delta-criticality and critical edges")
    graph_args(sp)

    sp = sub.add_parser("color", help="print an edge coloring")
    graph_args(sp)
    sp.add_argument("--k", type=int, help="number of colors (default: the chromatic index)")
    sp.add_argument("--vizing", action="store_true", help="constructive (Delta+1)-coloring, no search")

    sp = sub.add_parser("scan", help="run checks over a graph6 stream")
    sp.add_argument("--input", help="graph6 file (default: standard input)")
    sp.add_argument("--checks", default=",".join(CHECKS), help="comma-separated check ids")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="colorings per deleted edge (0: no limit)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=None, help=f"worker processes (default: ${JOBS_ENV} or 1)")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--mode", choices=("all", "maximal"), default="all", help="broom enumeration for broom_main")
    sp.add_argument("--timing", action="store_true", help="fill the millis column (output is then not reproducible)")
    sp.add_argument("--universal-fork", action="store_true", help="also check the fork hypothesis over all colorings")

    sp = sub.add_parser("split", help="split a vertex and test criticality")
    graph_args(sp)
    sp.add_argument("--vertex", type=int, required=True)
    sp.add_argument("--partition", required=True, help="neighbors kept by the vertex / moved to the new one, e.g. 1,2/3")

    sp = sub.add_parser("script", help="run or render a Kempe-change script")
    graph_args(sp)
    sp.add_argument("--coloring", help="coloring file ('k <int>' then '<u> <v> <color|->' lines)")
    sp.add_argument("--script", required=True, help="script file, '-' for standard input")
    sp.add_argument("--render", action="store_true", help="print the matrix form instead of executing")
    return p


def _read_graph(args):
    if args.graph6 is not None:
        return from_graph6(args.graph6)
    with open(args.input, encoding="ascii") as fh:
        for line in fh:
            if line.strip():
                return from_graph6(line.strip())
    raise UsageError(f"{args.input}: no graph6 line found")


def _parse_partition(text: str) -> VertexPartition:
    try:
        left, right = text.split("/")
        return VertexPartition.of(
            (int(t) for t in left.split(",") if t.strip()), (int(t) for t in right.split(",") if t.strip())
        )
    except ValueError:
        raise UsageError(f"--partition must look like 'a,b/c,d', got {text!r}") from None


def _cmd_chi(args, out, err) -> int:
    g = _read_graph(args)
    chi = chromatic_index(g)
    cls = "-" if g.m == 0 else ("1" if chi == g.max_degree else "2")
    out.write(f"chi'={chi} class={cls}\n")
    return 0


def _cmd_critical(args, out, err) -> int:
    g = _read_graph(args)
    ctx = GraphContext(g)
    out.write(f"delta_critical={str(ctx.delta_critical).lower()}\n")
    edges = " ".join(f"{u}-{v}" for u, v in sorted(ctx.critical_edges))
    out.write(f"critical_edges={edges}\n")
    return 0


def _cmd_color(args, out, err) -> int:
    g = _read_graph(args)
    if args.vizing:
        col = vizing_plus_one_coloring(g)
    else:
        k = args.k if args.k is not None else chromatic_index(g)
        if k < g.max_degree:
            err.write(f"no proper {k}-edge-coloring: k is below the maximum degree {g.max_degree}\n")
            return 1
        col = find_delta_coloring(g, k)
        if col is None:
            err.write(f"no proper {k}-edge-coloring exists\n")
            return 1
    out.write(col.to_text())
    return 0


def _cmd_scan(args, out, err) -> int:
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    config = ScanConfig(
        checks, args.budget, args.seed, args.format, jobs, args.mode, args.timing, args.universal_fork
    )
    if args.input:
        with open(args.input, encoding="ascii", errors="replace") as fh:
            return run_scan(config, fh, out, err)
    return run_scan(config, sys.stdin, out, err)


def _cmd_split(args, out, err) -> int:
    g = _read_graph(args)
    h = split_vertex(g, args.vertex, _parse_partition(args.partition))
    out.write(to_graph6(h) + "\n")
    out.write(f"delta_critical={str(GraphContext(h).delta_critical).lower()}\n")
    return 0


def _cmd_script(args, out, err) -> int:
    if args.script == "-":
        text = sys.stdin.read()
    else:
        with open(args.script, encoding="utf-8") as fh:
            text = fh.read()
    program = parse_script(text)
    if args.render:
        out.write(render_script(program))
        return 0
    g = _read_graph(args)
    if args.coloring:
        with open(args.coloring, encoding="utf-8") as fh:
            col = Coloring.from_text(g, fh.read())
    else:
        col = Coloring(g, g.max_degree)
    try:
        result = execute_script(program, g, col)
    except ScriptError as exc:
        err.write(f"{exc}\n")
        return 1
    for step in result.trace:
        out.write(f"{step}\n")
    out.write(result.coloring.to_text())
    return 0


COMMANDS = {
    "chi": _cmd_chi,
    "critical": _cmd_critical,
    "color": _cmd_color,
    "scan": _cmd_scan,
    "split": _cmd_split,
    "script": _cmd_script,
}


def run_cli(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out, err)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return 2
    except (GraphError, ColoringError, ScriptSyntaxError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run_cli())
