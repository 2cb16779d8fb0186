"""``geoprod`` command line.

Exit codes: 0 all checks pass, 1 a check or table row disagrees,
2 parse or usage error, 3 a search hit the time limit.
"""

from __future__ import annotations

import functools
import sys
from typing import Iterable

import click

from . import suites
from .boundary import boundary_report, verify_product_boundary
from .errors import BadParams, Disconnected, OutOfRange, Overflow, ParseError, SelfLoop
from .expr import parse
from .graph import Graph, parse_edge_list
from .product import ProductGraph
from .records import ResultRecord, format_records, solved_record, vertex_labels
from .solvers import DEFAULT_TIME_LIMIT
from .tables import TABLES, run_table

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3
_INPUT_ERRORS = (ParseError, BadParams, Disconnected, OutOfRange, Overflow, SelfLoop)


def _graph_of(built: Graph | ProductGraph) -> Graph:
    return built.graph if isinstance(built, ProductGraph) else built


def _exit_code(records: Iterable[ResultRecord]) -> int:
    records = list(records)
    if any(not r.passed for r in records):
        return EXIT_MISMATCH
    if any(r.timed_out for r in records):
        return EXIT_TIMEOUT
    return EXIT_OK


def _emit(ctx: click.Context, records: list[ResultRecord]) -> None:
    click.echo(format_records(records, ctx.obj["format"]), nl=False)
    ctx.exit(_exit_code(records))


def _parse_or_fail(text: str):
    try:
        ex = parse(text)
        return ex, ex.build()
    except _INPUT_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)


@click.group()
@click.option("--time-limit", type=click.FloatRange(min=0, min_open=True), default=DEFAULT_TIME_LIMIT,
              show_default=True, help="Seconds per exact search.")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True,
              help="Processes used by the exact search.")
@click.option("--format", "fmt", type=click.Choice(["jsonl", "csv"]), default="jsonl", show_default=True)
@click.option("--timing", is_flag=True, help="Include wall-clock milliseconds (output then varies run to run).")
@click.pass_context
def main(ctx: click.Context, time_limit: float, workers: int, fmt: str, timing: bool) -> None:
    """Geodetic and hull numbers, intervals and boundary sets of strong products."""
    ctx.obj = {"time_limit": time_limit, "workers": workers, "format": fmt, "timing": timing}


def shared_options(fn):
    """Let the global flags also follow the subcommand, e.g. ``table t7 --workers 8``."""
    same = "Same as the global flag."
    fn = click.option("--timing", "timing_", is_flag=True, help=same)(fn)
    fn = click.option("--format", "fmt_", type=click.Choice(["jsonl", "csv"]), help=same)(fn)
    fn = click.option("--workers", "workers_", type=click.IntRange(min=1), help=same)(fn)
    fn = click.option("--time-limit", "time_limit_", type=click.FloatRange(min=0, min_open=True), help=same)(fn)

    @functools.wraps(fn)
    def wrapper(*args, time_limit_=None, workers_=None, fmt_=None, timing_=False, **kwargs):
        ctx = click.get_current_context()
        for key, value in (("time_limit", time_limit_), ("workers", workers_), ("format", fmt_)):
            if value is not None:
                ctx.obj[key] = value
        if timing_:
            ctx.obj["timing"] = True
        return fn(*args, **kwargs)

    return wrapper


def _solve(ctx: click.Context, instance: str, graph: Graph) -> ResultRecord:
    o = ctx.obj
    return solved_record(instance, graph, time_limit=o["time_limit"], workers=o["workers"], timing=o["timing"])


@main.command()
@shared_options
@click.argument("expr")
@click.pass_context
def param(ctx: click.Context, expr: str) -> None:
    """Every parameter of one graph or product, e.g. 'C5 x C7'."""
    ex, built = _parse_or_fail(expr)
    graph = _graph_of(built)
    record = _solve(ctx, ex.text, graph)
    rep = boundary_report(graph)
    dist = graph.distances
    record.extras.update({
        "order": graph.n,
        "diameter": dist.diameter,
        "radius": dist.radius,
        "ext": vertex_labels(graph, rep.extreme),
        "boundary": vertex_labels(graph, rep.boundary),
        "eccentric": vertex_labels(graph, rep.eccentric),
        "contour": vertex_labels(graph, rep.contour),
        "periphery": vertex_labels(graph, rep.periphery),
    })
    if not record.timed_out:
        record.checks["h<=g"] = record.h <= record.g
    record.checks.update(rep.containments())
    _emit(ctx, [record])


@main.command("solve-raw")
@shared_options
@click.argument("source", type=click.File("r"))
@click.pass_context
def solve_raw(ctx: click.Context, source) -> None:
    """g and h of an edge-list graph ('n m' header, then m 'u v' lines); '-' reads stdin."""
    try:
        graph = parse_edge_list(source.read())
    except _INPUT_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    name = "stdin" if source.name == "<stdin>" else f"file:{source.name}"
    _emit(ctx, [_solve(ctx, name, graph)])


@main.command()
@shared_options
@click.argument("name", type=click.Choice(TABLES))
@click.pass_context
def table(ctx: click.Context, name: str) -> None:
    """Recompute a reference table and flag rows that disagree."""
    o = ctx.obj
    _emit(ctx, list(run_table(name, time_limit=o["time_limit"], workers=o["workers"], timing=o["timing"])))


@main.command()
@shared_options
@click.argument("suite", type=click.Choice(suites.SUITES + ("all",)))
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--trials", type=click.IntRange(min=0), default=20, show_default=True,
              help="Random connected graphs (or factor pairs) on top of the fixed instances.")
@click.pass_context
def check(ctx: click.Context, suite: str, seed: int, trials: int) -> None:
    """Run a property suite; one record with a pass flag per property."""
    reports = suites.run_suite(suite, seed=seed, trials=trials)
    record = ResultRecord(f"check:{suite}")
    record.checks = {name: rep.passed for name, rep in reports.items()}
    record.extras = {
        "seed": seed,
        "trials": trials,
        "counts": {name: {"checked": rep.checked, "failed": len(rep.failures)} for name, rep in reports.items()},
    }
    failures = {name: repr(rep.failures[0]) for name, rep in reports.items() if rep.failures}
    if failures:
        record.extras["first_failure"] = failures
    _emit(ctx, [record])


@main.command()
@shared_options
@click.argument("expr_g")
@click.argument("expr_h")
@click.pass_context
def boundary(ctx: click.Context, expr_g: str, expr_h: str) -> None:
    """Compare boundary, periphery, eccentric set and contour of G x H with their factor formulas."""
    ex_g, G = _parse_or_fail(expr_g)
    ex_h, H = _parse_or_fail(expr_h)
    if isinstance(G, ProductGraph) or isinstance(H, ProductGraph):
        click.echo("error: boundary takes two single-graph expressions", err=True)
        sys.exit(EXIT_USAGE)
    rep = verify_product_boundary(G, H, strict=False)
    record = ResultRecord(f"{ex_g.text} x {ex_h.text}")
    record.checks = dict(rep.items) if rep.orientation else {"orientation": False}
    record.extras = {"orientation": rep.orientation, "per_orientation": rep.per_orientation}
    _emit(ctx, [record])


if __name__ == "__main__":  # pragma: no cover
    main()
