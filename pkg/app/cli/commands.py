import functools
import sys
from contextlib import contextmanager
from typing import Dict, List, Tuple

import click

from app.algebra.qcalc import triangular
from app.algebra.qpoly import render
from app.cli.render import catalog_rows, format_params, index_matrix, report_line, report_lines
from app.core.config import Config
from app.core.errors import IndexOutOfRange, InvalidParams, PointOutOfRange, UnknownIdentity
from app.core.logger import logger, set_verbose
from app.utils.ranges import parse_param_args, parse_ranges
from app.verify import engine
from app.verify.lattice import Hook, Region, hook_membership, region_membership, render_weight_matrix, weight_of
from app.verify.report import VerificationReport, reports_to_json
from app.verify.suites import SUITES, run_suites

_USAGE_ERRORS = (UnknownIdentity, InvalidParams, IndexOutOfRange, PointOutOfRange)
_EXTRA_ARGS = {"ignore_unknown_options": True, "allow_extra_args": True}


@contextmanager
def _usage_errors():
    try:
        yield
    except _USAGE_ERRORS as e:
        raise click.UsageError(str(e)) from None


def _guarded(fn):
    """Unexpected exceptions are logged with traceback and exit with status 1."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (click.ClickException, click.exceptions.Exit, click.Abort):
            raise
        except Exception as e:
            logger.exception("[cli] unexpected failure: %s", e)
            sys.exit(1)

    return wrapper


def _emit(reports: List[VerificationReport], fmt: str, timings: bool) -> None:
    if fmt == "json":
        click.echo(reports_to_json(reports, timings=timings))
        return
    for r in reports:
        if r.outcome == "fail":
            logger.warning("[cli] %s %s failed: lhs=%s rhs=%s", r.id, format_params(r.params), r.lhs, r.rhs)
    if reports:
        click.echo(report_lines(reports))


@click.group()
@click.option("--verbose", is_flag=True, help="Debug logging on stderr.")
@click.version_option(Config.PROJECT_VERSION, prog_name=Config.PROJECT_NAME)
def cli(verbose: bool) -> None:
    """Exact verification of q-analogues of the sum-of-cubes formulas."""
    set_verbose(verbose)


@cli.command("list")
@click.option("--notes", is_flag=True, help="Add the reading chosen for each identity, where one was needed.")
@_guarded
def list_cmd(notes: bool) -> None:
    """Print the identity catalog: id, equation label, parameters, classical statement."""
    click.echo(catalog_rows(engine.list_identities(), notes=notes))


@cli.command()
@click.option("--id", "ids", multiple=True, help="Identity id; repeatable.")
@click.option("--all", "run_all", is_flag=True, help="Every identity in the catalog, then every suite.")
@click.option("--suite", "suites", multiple=True, type=click.Choice(sorted(SUITES)),
              help="Report suite beside the catalog; repeatable.")
@click.option("--range", "ranges", multiple=True, metavar="NAME=LO..HI", help="Inclusive parameter range.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Process pool size for grids.")
@click.option("--timings/--no-timings", default=Config.REPORT_TIMINGS, help="Report wall time in elapsed_ms.")
@click.pass_context
@_guarded
def verify(ctx: click.Context, ids: Tuple[str, ...], run_all: bool, suites: Tuple[str, ...], ranges: Tuple[str, ...],
           fmt: str, workers: int, timings: bool) -> None:
    """Run verify_grid for the chosen identities, then the chosen suites; exit 0 iff every report passes."""
    if run_all == bool(ids or suites):
        raise click.UsageError("give either --id / --suite (one or more) or --all")
    if suites and ranges and not ids:
        raise click.UsageError("--range applies to catalog identities only")

    with _usage_errors():
        parsed = parse_ranges(ranges)
        targets = [d.id for d in engine.list_identities()] if run_all else [engine.get_descriptor(i).id for i in ids]
        plans: List[Tuple[str, Dict[str, Tuple[int, int]]]] = []
        for ident in targets:
            params = engine.get_descriptor(ident).params
            if run_all:
                plans.append((ident, {k: v for k, v in parsed.items() if k in params}))
            else:
                plans.append((ident, parsed))
        if run_all:
            known = {p for d in engine.list_identities() for p in d.params}
            stray = sorted(set(parsed) - known)
            if stray:
                raise InvalidParams(f"no identity has parameter(s) {stray}")
        # validate every plan before running any of them
        for ident, plan in plans:
            engine.assignments(ident, plan)

    reports: List[VerificationReport] = []
    for ident, plan in plans:
        reports.extend(engine.verify_grid(ident, plan, workers=workers).reports)
    if run_all or suites:
        reports.extend(run_suites(None if run_all else suites))

    _emit(reports, fmt, timings)
    ctx.exit(0 if all(r.passed for r in reports) else 1)


@cli.command(context_settings=_EXTRA_ARGS)
@click.option("--id", "ident", required=True, help="Identity id.")
@click.option("--side", type=click.Choice(["lhs", "rhs", "both"]), default="both", show_default=True)
@click.pass_context
@_guarded
def show(ctx: click.Context, ident: str, side: str) -> None:
    """Print the canonical polynomial of one or both sides, e.g. `show --id eq10_theorem1 --n=3`."""
    with _usage_errors():
        params = parse_param_args(ctx.args)
        engine.get_descriptor(ident).validate_params(params)
    sides = ("lhs", "rhs") if side == "both" else (side,)
    for s in sides:
        try:
            text = engine.render_side(ident, s, params)
        except engine.BUILD_ERRORS as e:
            raise click.ClickException(str(e)) from None
        click.echo(f"{s}: {text}" if side == "both" else text)


@cli.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Side of the square S_n.")
@click.option("--hooks", is_flag=True, help="Hook index of every cell and hook weights.")
@click.option("--regions", is_flag=True, help="Region index of every cell of S_{T(n)} and region weights.")
@_guarded
def lattice(n: int, hooks: bool, regions: bool) -> None:
    """Print the weight matrix of S_n, rows top to bottom."""
    click.echo(render_weight_matrix(n))
    if hooks:
        click.echo("")
        click.echo(index_matrix(hook_membership(n)))
        for k in range(1, n + 1):
            hook = Hook(k=k, n=n)
            click.echo(f"h_{k}: {render(weight_of(hook.points(), n))}")
    if regions:
        side = triangular(n)
        click.echo("")
        click.echo(index_matrix(region_membership(n)))
        for j in range(1, n + 1):
            region = Region(j=j, n=n)
            pts = region.points()
            click.echo(f"R_{j}: |R_{j}|={len(pts)} w={render(weight_of(pts, side))}")


@cli.command(context_settings=_EXTRA_ARGS)
@click.option("--id", "ident", required=True, help="Identity id.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--timings/--no-timings", default=Config.REPORT_TIMINGS, help="Report wall time in elapsed_ms.")
@click.pass_context
@_guarded
def limits(ctx: click.Context, ident: str, fmt: str, timings: bool) -> None:
    """Evaluate both sides at q = 1 against the integer statement, which the text output names."""
    with _usage_errors():
        params = parse_param_args(ctx.args)
        report = engine.classical_limit_check(ident, params)
    if fmt == "json":
        click.echo(reports_to_json([report], timings=timings))
    else:
        line = report_line(report)
        if report.outcome != "error":
            lhs, rhs, classical = engine.classical_values(ident, params)
            line = f"{line} (q=1: {lhs} = {rhs} = {classical})" if report.passed else \
                f"{line} (q=1: lhs {lhs}, rhs {rhs}, classical {classical})"
        click.echo(line)
        click.echo(f"  {engine.get_descriptor(ident).classical}")
    ctx.exit(0 if report.passed else 1)


def main() -> None:
    cli(prog_name=Config.PROJECT_NAME)
