"""
Command-line front end.

Plain output goes to stdout and is byte-identical across runs; logs go to
stderr. `--json` switches any command to a structured document in which exact
values are decimal strings or p/q.
"""
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import click
from pydantic import BaseModel, ValidationError

from app.associated import associated_coefficient, enumerate_euler_rootings
from app.budget import Budget
from app.coefficients import codegree_coefficients, occurrence_count, simple_subgraph_count, threshold_search
from app.config import LOG_LEVEL
from app.exceptions import HypergraphError
from app.hypergraph import parse_hypergraph
from app.polynomial import codegree_coefficient_of, expand_phi_rowling
from app.presets import preset_names, resolve_preset
from app.report import catalogue_report, formula_report_3graphs
from app.schemas import (
    AssociatedCoefficientResponse, CoefficientsResponse, CommandConfig, PolynomialResponse, PresetOut,
    SimplexResponse, ThresholdResponse, VeblenClassesResponse, VeblenClassOut, exact_entries, format_exact,
)
from app.selftest import run_selftest
from app.simplex import asymptotic_ratio, simplex_Ck, simplex_Ck_direct
from app.veblen import all_veblen_class_counts, veblen_classes

logger = logging.getLogger(__name__)


@dataclass
class CommandOutput:
    lines: List[str]
    payload: Any = None
    exit_code: int = 0


def _budget(config: CommandConfig) -> Budget:
    return Budget(config.time_budget, label="time budget")


def _coeffs(config: CommandConfig, options: Dict[str, Any]) -> CommandOutput:
    host = config.load_hypergraph()
    vector = codegree_coefficients(host, config.dmax, _budget(config))
    lines = [f"c_{d} = {format_exact(vector.values[d])}" for d in range(vector.valid_through + 1)]
    if not vector.complete:
        lines.append(f"# valid through d={vector.valid_through}; stopped: {vector.stopped_by}")
    report_lines = None
    if options.get("report"):
        if host.k == 3:
            report_lines = formula_report_3graphs(host, _budget(config)).render().splitlines()
        else:
            report_lines = [f"# no closed-formula report for k={host.k}"]
        lines.extend(report_lines)
    payload = CoefficientsResponse(
        k=host.k, n=host.n, normalized_degree=str(vector.normalized_degree), dmax=config.dmax,
        valid_through=vector.valid_through, complete=vector.complete, stopped_by=vector.stopped_by,
        coefficients=exact_entries(vector.values), report=report_lines,
    )
    return CommandOutput(lines, payload)


def _assoc(config: CommandConfig, options: Dict[str, Any]) -> CommandOutput:
    if options.get("catalogue"):
        report = catalogue_report()
        return CommandOutput(report.render().splitlines(), {"lines": report.render().splitlines()})
    h = config.load_hypergraph()
    value = associated_coefficient(h)
    lines = [f"C = {format_exact(value)}"]
    rootings = None
    if h.is_connected():
        rootings = len(enumerate_euler_rootings(h))
        lines.append(f"rootings = {rootings}")
    payload = AssociatedCoefficientResponse(
        label=h.short_label(), coefficient=format_exact(value),
        component_count=h.component_count(), rooting_count=rootings,
    )
    return CommandOutput(lines, payload)


def _simplex(config: CommandConfig, options: Dict[str, Any]) -> CommandOutput:
    k = config.k
    value = simplex_Ck_direct(k) if options.get("direct") else simplex_Ck(k)
    ratio = asymptotic_ratio(k)
    lines = [str(value), f"# digits = {len(str(value))}"]
    if options.get("ratio"):
        lines.append(f"# C_k / ((k+1)! k^(k+1)) = {format_exact(ratio)}")
    payload = SimplexResponse(k=k, value=str(value), digits=len(str(value)), asymptotic_ratio=format_exact(ratio))
    return CommandOutput(lines, payload)


def _enum_veblen(config: CommandConfig, options: Dict[str, Any]) -> CommandOutput:
    budget = _budget(config)
    classes = veblen_classes(config.k, config.d, connected=config.connected, budget=budget,
                             max_classes=config.max_classes)
    count = len(classes)
    if not config.connected and config.d > 0:
        # multiset construction and Euler transform must agree
        transformed = all_veblen_class_counts(config.k, config.d, budget, config.max_classes)
        if transformed != count:
            logger.warning(f"Euler transform gives {transformed}, construction gives {count}")
    lines = [str(count)]
    if options.get("show"):
        for veblen_class in classes:
            lines.append("")
            lines.extend(veblen_class.representative.to_text().splitlines())
    payload = VeblenClassesResponse(
        k=config.k, d=config.d, connected=config.connected, count=count,
        classes=[
            VeblenClassOut(key=str(c.key), label=c.label(), text=c.representative.to_text(),
                           edge_count=c.edge_count, component_count=c.component_count)
            for c in classes
        ],
    )
    return CommandOutput(lines, payload)


def _count(config: CommandConfig, options: Dict[str, Any]) -> CommandOutput:
    host = config.load_hypergraph()
    if options.get("pattern_preset"):
        pattern = resolve_preset(options["pattern_preset"])
    elif options.get("pattern"):
        pattern = parse_hypergraph(options["pattern"].read_text())
    else:
        raise HypergraphError("give --pattern or --pattern-preset")
    result: Dict[str, str] = {}
    lines = []
    if pattern.is_simple():
        subgraphs = simple_subgraph_count(host, pattern)
        result["subgraphs"] = str(subgraphs)
        lines.append(f"subgraphs = {subgraphs}")
    if pattern.is_veblen():
        occurrences = occurrence_count(host, pattern)
        result["occurrences"] = format_exact(occurrences)
        lines.append(f"occurrences = {format_exact(occurrences)}")
    if not lines:
        raise HypergraphError("pattern is neither simple nor Veblen; nothing to count")
    return CommandOutput(lines, result)


def _threshold(config: CommandConfig, options: Dict[str, Any]) -> CommandOutput:
    host = config.load_hypergraph()
    report = threshold_search(host, config.v, config.dmax, _budget(config))
    lines = [f"f({d}) = {format_exact(report.values[d])}" for d in sorted(report.values)]
    lines.append(f"Th_{config.v} = {report.largest_nonzero if report.largest_nonzero is not None else 'none'}")
    lines.extend(f"# {note}" for note in report.notes)
    payload = ThresholdResponse(
        v=config.v, dmax=config.dmax, threshold=report.largest_nonzero, valid_through=report.valid_through,
        values=exact_entries(report.values), notes=report.notes,
    )
    return CommandOutput(lines, payload)


def _expand_poly(config: CommandConfig, options: Dict[str, Any]) -> CommandOutput:
    if (config.preset or "rowling") != "rowling":
        raise HypergraphError(f"only the rowling factorisation is built in, got {config.preset!r}")
    dmax = 15 if config.dmax is None else config.dmax
    p = expand_phi_rowling(max_codegree=dmax)
    values = {d: codegree_coefficient_of(p, d) for d in range(min(dmax, p.degree) + 1)}
    lines = [f"c_{d} = {values[d]}" for d in sorted(values)]
    payload = PolynomialResponse(degree=p.degree, dmax=dmax, coefficients=exact_entries(values))
    return CommandOutput(lines, payload)


def _show(config: CommandConfig, options: Dict[str, Any]) -> CommandOutput:
    if config.preset is None:
        lines = preset_names()
        return CommandOutput(lines, {"presets": lines})
    h = resolve_preset(config.preset)
    payload = PresetOut(name=config.preset, k=h.k, n=h.n, edge_count=h.edge_count, text=h.to_text())
    return CommandOutput(h.to_text().splitlines(), payload)


def _selftest(config: CommandConfig, options: Dict[str, Any]) -> CommandOutput:
    results = run_selftest(table_dmax=config.dmax or 9, veblen_dmax=config.d or 7, budget=_budget(config))
    lines = [result.render() for result in results]
    failed = [result for result in results if not result.ok]
    payload = {"checks": lines, "failed": len(failed)}
    return CommandOutput(lines, payload, exit_code=1 if failed else 0)


HANDLERS: Dict[str, Callable[[CommandConfig, Dict[str, Any]], CommandOutput]] = {
    "coeffs": _coeffs,
    "assoc": _assoc,
    "simplex-ck": _simplex,
    "enum-veblen": _enum_veblen,
    "count": _count,
    "threshold": _threshold,
    "expand-poly": _expand_poly,
    "show": _show,
    "selftest": _selftest,
}


def run(config: CommandConfig, options: Optional[Dict[str, Any]] = None) -> CommandOutput:
    """Dispatch one command; raises HypergraphError on bad input or exhausted caps."""
    logger.debug(f"running {config.subcommand} with {config.model_dump(exclude_none=True)}")
    return HANDLERS[config.subcommand](config, options or {})


def _emit(output: CommandOutput, structured: bool) -> None:
    if structured:
        payload = output.payload
        if isinstance(payload, BaseModel):
            click.echo(payload.model_dump_json(indent=2))
        else:
            click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in output.lines:
            click.echo(line)


def _execute(ctx: click.Context, options: Optional[Dict[str, Any]] = None, **fields) -> None:
    structured = ctx.obj.get("json", False) if ctx.obj else False
    try:
        config = CommandConfig(subcommand=ctx.command.name, output="structured" if structured else "plain", **fields)
        output = run(config, options)
    except ValidationError as exc:
        messages = "; ".join(error["msg"] for error in exc.errors())
        click.echo(f"error: {messages}", err=True)
        ctx.exit(2)
    except HypergraphError as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(2)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(2)
    _emit(output, structured)
    ctx.exit(output.exit_code)


def input_options(func):
    func = click.option("--preset", default=None, help="Built-in hypergraph (see `show`).")(func)
    func = click.option("--input", "input_path", type=click.Path(dir_okay=False), default=None,
                        help="Hypergraph in the k=/n= text format.")(func)
    return func


def budget_options(func):
    func = click.option("--time-budget", type=float, default=None,
                        help="Seconds before enumeration stops (default HSC_TIME_BUDGET).")(func)
    return func


@click.group()
@click.option("--json", "as_json", is_flag=True, help="Structured output.")
@click.option("--log-level", default=LOG_LEVEL, show_default=True, help="Logging level for stderr.")
@click.pass_context
def cli(ctx: click.Context, as_json: bool, log_level: str):
    """Harary-Sachs codegree coefficients of uniform hypergraphs."""
    logging.basicConfig(stream=sys.stderr, level=log_level.upper(),
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    ctx.ensure_object(dict)
    ctx.obj["json"] = as_json


@cli.command("coeffs")
@input_options
@click.option("--dmax", type=int, required=True)
@click.option("--report", is_flag=True, help="Compare with the printed closed formulas (k=3).")
@budget_options
@click.pass_context
def coeffs_command(ctx, input_path, preset, dmax, report, time_budget):
    """Codegree coefficients c_0..c_dmax."""
    _execute(ctx, {"report": report}, input_path=input_path, preset=preset, dmax=dmax,
             time_budget=time_budget, needs_input=True)


@cli.command("assoc")
@input_options
@click.option("--catalogue", is_flag=True, help="Recompute the built-in catalogue of Veblen 3-graphs.")
@click.pass_context
def assoc_command(ctx, input_path, preset, catalogue):
    """Associated coefficient C_H of a Veblen hypergraph."""
    _execute(ctx, {"catalogue": catalogue}, input_path=input_path, preset=preset, needs_input=not catalogue)


@cli.command("simplex-ck")
@click.option("--k", type=int, required=True)
@click.option("--direct", is_flag=True, help="Sum over all derangements instead of partitions.")
@click.option("--ratio", is_flag=True, help="Also print C_k / ((k+1)! k^(k+1)).")
@click.pass_context
def simplex_command(ctx, k, direct, ratio):
    """The simplex constant C_k."""
    _execute(ctx, {"direct": direct, "ratio": ratio}, k=k)


@cli.command("enum-veblen")
@click.option("--k", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--connected", is_flag=True)
@click.option("--show", is_flag=True, help="Print one representative per class.")
@click.option("--max-classes", type=int, default=None)
@budget_options
@click.pass_context
def enum_veblen_command(ctx, k, d, connected, show, max_classes, time_budget):
    """Count Veblen k-graphs with d edges up to isomorphism."""
    _execute(ctx, {"show": show}, k=k, d=d, connected=connected, max_classes=max_classes,
             time_budget=time_budget)


@cli.command("count")
@input_options
@click.option("--pattern", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Pattern hypergraph in the text format.")
@click.option("--pattern-preset", default=None)
@click.pass_context
def count_command(ctx, input_path, preset, pattern, pattern_preset):
    """Copies of a pattern in a host: subgraph count and occurrence count."""
    _execute(ctx, {"pattern": pattern, "pattern_preset": pattern_preset}, input_path=input_path, preset=preset, needs_input=True)


@cli.command("threshold")
@input_options
@click.option("--v", type=int, required=True)
@click.option("--dmax", type=int, required=True)
@budget_options
@click.pass_context
def threshold_command(ctx, input_path, preset, v, dmax, time_budget):
    """The v-weighted Veblen sum and its largest non-zero codegree."""
    _execute(ctx, None, input_path=input_path, preset=preset, v=v, dmax=dmax, time_budget=time_budget,
             needs_input=True)


@cli.command("expand-poly")
@click.option("--preset", default="rowling", show_default=True)
@click.option("--dmax", type=int, default=15, show_default=True)
@click.pass_context
def expand_poly_command(ctx, preset, dmax):
    """Codegree coefficients of a built-in factored characteristic polynomial."""
    _execute(ctx, None, preset=preset, dmax=dmax)


@cli.command("show")
@click.option("--preset", default=None)
@click.pass_context
def show_command(ctx, preset):
    """Print a preset in the text format, or list the presets."""
    _execute(ctx, None, preset=preset)


@cli.command("selftest")
@click.option("--table-dmax", type=int, default=9, show_default=True)
@click.option("--veblen-dmax", type=int, default=7, show_default=True)
@budget_options
@click.pass_context
def selftest_command(ctx, table_dmax, veblen_dmax, time_budget):
    """Recompute the reference sequences and tables."""
    _execute(ctx, None, dmax=table_dmax, d=veblen_dmax, time_budget=time_budget)


def main():
    cli(obj={})


if __name__ == "__main__":
    main()
