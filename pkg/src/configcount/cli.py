"""Command-line front end: count, enumerate, verify, explain, render.

Exit codes: 0 on success (and on verify when every problem PASSes), 1 when
verification finds a discrepancy, 2 on usage, parse, or budget errors.  All
output is deterministic for fixed inputs and flags; counts appear in JSON as
decimal strings so consumers never round them through a fixed-width type.
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import click

from .budget import DEFAULT_ORACLE_BUDGET, OracleBudgetError
from .geometry import LatticeGrid
from .render import render_problem
from .speclang import ProblemSpec, SpecError, parse_spec
from .squares import count_all_squares, count_axis_squares, enumerate_all_squares, enumerate_axis_squares
from .verify import VerifyReport, build_step_trace, has_registered_closed_form, verify_problem
from .wordgrid import (
    corner_class_decomposition,
    count_word_paths_closed,
    enumerate_word_paths,
    generate_manhattan_rings,
    letter_grid_from_rows,
)


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _load_specs(spec_file: str) -> list[ProblemSpec]:
    try:
        source = Path(spec_file).read_text(encoding="utf-8")
    except UnicodeDecodeError:
        _fail(f"{spec_file}: not valid UTF-8")
    except OSError as exc:
        _fail(f"{spec_file}: {exc.strerror}")
    try:
        return parse_spec(source)
    except SpecError as exc:
        _fail(f"{spec_file}: {exc}")


def _select(specs: list[ProblemSpec], name: str | None) -> list[ProblemSpec]:
    if name is None:
        return specs
    for spec in specs:
        if spec.name == name:
            return [spec]
    _fail(f"no such problem: {name}")


def _describe(spec: ProblemSpec) -> str:
    if spec.kind == "squares":
        return f"squares {spec.variant} {spec.cols}x{spec.rows}"
    parts = [f"word-paths {spec.word!r} {spec.layout} {spec.adjacency}"]
    if spec.distinct_cells:
        parts.append("distinct-cells")
    return " ".join(parts)


def _word_grid(spec: ProblemSpec):
    if spec.layout == "explicit":
        return letter_grid_from_rows(spec.rows_data)
    return generate_manhattan_rings(spec.word)


def _count_classes(spec: ProblemSpec) -> tuple[list[tuple[str, int]], int]:
    """Class labels and counts plus the total, via closed form where registered."""
    if spec.kind == "squares":
        if spec.variant == "axis":
            breakdown = count_axis_squares(spec.cols, spec.rows)
        else:
            breakdown = count_all_squares(spec.cols, spec.rows)
        return [(f"k={k}", n) for k, n in sorted(breakdown.per_k.items())], breakdown.total
    if has_registered_closed_form(spec):
        report = count_word_paths_closed(spec.word)
        return [(f"({x},{y})", n) for (x, y), n in report.per_class.items()], report.total
    witnesses = enumerate_word_paths(
        _word_grid(spec), spec.word, spec.adjacency, spec.distinct_cells,
        max_visits=DEFAULT_ORACLE_BUDGET,
    )
    decomposition = corner_class_decomposition(witnesses)
    classes = [(f"({x},{y})", n) for (x, y), n in decomposition.classes.items()]
    return classes, decomposition.total


def _run_per_problem(specs, worker, parallel: bool) -> list:
    if parallel and len(specs) > 1:
        with ThreadPoolExecutor() as pool:
            return list(pool.map(worker, specs))
    return [worker(spec) for spec in specs]


@click.group()
def main():
    """Exact counting workbench for lattice squares and grid word readings."""
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")


_SPEC_FILE = click.argument("spec_file", type=click.Path(exists=True, dir_okay=False))
_PROBLEM = click.option("--problem", "problem_name", default=None, metavar="NAME",
                        help="Only this problem (default: every problem in the file).")
_PROBLEM_REQUIRED = click.option("--problem", "problem_name", required=True, metavar="NAME",
                                 help="The problem to operate on.")
_FORMAT = click.option("--format", "fmt", type=click.Choice(["text", "json"]),
                       default="text", help="Output format.")
_PARALLEL = click.option("--parallel", is_flag=True,
                         help="Process problems concurrently; output stays in file order.")


@main.command()
@_SPEC_FILE
@_PROBLEM
@_FORMAT
@_PARALLEL
def count(spec_file, problem_name, fmt, parallel):
    """Print the total and class breakdown for each problem."""
    specs = _select(_load_specs(spec_file), problem_name)

    def one(spec: ProblemSpec) -> str:
        classes, total = _count_classes(spec)
        if fmt == "json":
            return json.dumps({
                "problem": spec.name,
                "kind": spec.kind,
                "total": str(total),
                "classes": [{"label": label, "count": str(n)} for label, n in classes],
            })
        lines = [f"problem {spec.name}: {_describe(spec)}"]
        lines += [f"{label}: {n}" for label, n in classes]
        lines.append(f"total {total}")
        return "\n".join(lines)

    try:
        blocks = _run_per_problem(specs, one, parallel)
    except OracleBudgetError as exc:
        _fail(str(exc))
    click.echo("\n\n".join(blocks) if fmt == "text" else "\n".join(blocks))


@main.command("enumerate")
@_SPEC_FILE
@_PROBLEM_REQUIRED
@_FORMAT
@click.option("--limit", type=click.IntRange(min=1), default=None,
              help="Print at most this many witnesses.")
def enumerate_cmd(spec_file, problem_name, fmt, limit):
    """List every witness of a problem in canonical order."""
    spec = _select(_load_specs(spec_file), problem_name)[0]
    try:
        if spec.kind == "squares":
            grid = LatticeGrid(spec.cols, spec.rows)
            if spec.variant == "axis":
                witnesses = enumerate_axis_squares(grid, max_candidates=DEFAULT_ORACLE_BUDGET)
            else:
                witnesses = enumerate_all_squares(grid, max_candidates=DEFAULT_ORACLE_BUDGET)
        else:
            witnesses = enumerate_word_paths(
                _word_grid(spec), spec.word, spec.adjacency, spec.distinct_cells,
                max_visits=DEFAULT_ORACLE_BUDGET,
            )
    except OracleBudgetError as exc:
        _fail(str(exc))

    shown = witnesses if limit is None else witnesses[:limit]
    omitted = len(witnesses) - len(shown)
    if fmt == "json":
        if spec.kind == "squares":
            items = [{"anchor": [s.anchor.x, s.anchor.y], "k": s.k, "a": s.a} for s in shown]
        else:
            items = [{"cells": [[x, y] for x, y in w.cells]} for w in shown]
        click.echo(json.dumps({
            "problem": spec.name,
            "kind": spec.kind,
            "witnesses": items,
            "omitted": str(omitted),
        }))
        return
    lines = []
    if spec.kind == "squares":
        lines += [f"({s.anchor.x},{s.anchor.y}) k={s.k} a={s.a}" for s in shown]
    else:
        lines += [" ".join(f"({x},{y})" for x, y in w.cells) for w in shown]
    if omitted:
        lines.append(f"(omitted {omitted} more)")
    if lines:
        click.echo("\n".join(lines))


def _verify_text(report: VerifyReport) -> str:
    if report.closed_form_total is None:
        head = (f"problem {report.problem.name}: {report.verdict} "
                f"(oracle {report.oracle_total}, enumeration only)")
    else:
        head = (f"problem {report.problem.name}: {report.verdict} "
                f"(closed form {report.closed_form_total}, oracle {report.oracle_total})")
    lines = [head]
    for row in report.partition_rows:
        if row.expected is None:
            lines.append(f"{row.label}: observed {row.observed}")
        else:
            lines.append(f"{row.label}: expected {row.expected}, observed {row.observed}")
    lines.append(f"duplicates: {report.duplicate_witnesses}")
    lines += [f"note: {note}" for note in report.notes]
    return "\n".join(lines)


def _verify_json(report: VerifyReport) -> str:
    return json.dumps({
        "problem": report.problem.name,
        "kind": report.problem.kind,
        "verdict": report.verdict,
        "closed_form_total": None if report.closed_form_total is None
        else str(report.closed_form_total),
        "oracle_total": str(report.oracle_total),
        "partition": [
            {
                "label": row.label,
                "expected": None if row.expected is None else str(row.expected),
                "observed": str(row.observed),
            }
            for row in report.partition_rows
        ],
        "duplicates": str(report.duplicate_witnesses),
        "notes": list(report.notes),
    })


@main.command()
@_SPEC_FILE
@_PROBLEM
@_FORMAT
@_PARALLEL
def verify(spec_file, problem_name, fmt, parallel):
    """Cross-check closed forms against enumeration; exit 1 on any FAIL."""
    specs = _select(_load_specs(spec_file), problem_name)
    try:
        reports = _run_per_problem(specs, verify_problem, parallel)
    except OracleBudgetError as exc:
        _fail(str(exc))
    blocks = [(_verify_json if fmt == "json" else _verify_text)(r) for r in reports]
    click.echo("\n\n".join(blocks) if fmt == "text" else "\n".join(blocks))
    if any(r.verdict != "PASS" for r in reports):
        sys.exit(1)


def _step_iv_text(trace) -> str:
    if trace.step_iv_rule == "enumeration-only":
        return f"enumeration only, no closed form; total {trace.step_iv_total}"
    if trace.step_iv_rule == "product":
        sizes = [n for _, n in trace.step_iv_classes]
        return (f"{len(sizes)} × {sizes[0]} = {trace.step_iv_total} "
                f"(product principle over {len(sizes)} symmetric classes)")
    if not trace.step_iv_classes:
        return f"total {trace.step_iv_total} (no classes fit)"
    terms = " + ".join(str(n) for _, n in trace.step_iv_classes)
    return f"{terms} = {trace.step_iv_total} (addition principle)"


@main.command()
@_SPEC_FILE
@_PROBLEM_REQUIRED
@_FORMAT
def explain(spec_file, problem_name, fmt):
    """Walk through a problem in four steps: objects, constraints, classes, total."""
    spec = _select(_load_specs(spec_file), problem_name)[0]
    try:
        trace = build_step_trace(spec)
    except OracleBudgetError as exc:
        _fail(str(exc))
    if fmt == "json":
        click.echo(json.dumps({
            "problem": trace.problem,
            "step_i": trace.step_i,
            "step_ii": list(trace.step_ii),
            "step_iii": [{"label": label, "note": note} for label, note in trace.step_iii],
            "step_iv": {
                "classes": [{"label": label, "count": str(n)}
                            for label, n in trace.step_iv_classes],
                "rule": trace.step_iv_rule,
                "total": str(trace.step_iv_total),
            },
        }))
        return
    lines = [f"problem {trace.problem}"]
    lines.append(f"Step i) {trace.step_i}")
    lines.append("Step ii) constraints:")
    lines += [f"  - {item}" for item in trace.step_ii]
    lines.append("Step iii) classes:")
    lines += [f"  - {label}: {note}" for label, note in trace.step_iii]
    lines.append(f"Step iv) {_step_iv_text(trace)}")
    click.echo("\n".join(lines))


def _parse_highlight(text: str):
    if text.startswith("k="):
        try:
            return "class", int(text[2:])
        except ValueError:
            _fail(f"invalid highlight: {text!r}")
    try:
        return "witness", int(text)
    except ValueError:
        _fail(f"invalid highlight: {text!r} (use an index or k=SIZE)")


@main.command()
@_SPEC_FILE
@_PROBLEM_REQUIRED
@click.option("--highlight", default=None, metavar="SPEC",
              help="Witness index, or k=SIZE for one square size class.")
@click.option("--cell-size", type=click.IntRange(min=1), default=40,
              help="Pixels per lattice unit.")
@click.option("-o", "--output", "output_path", required=True,
              type=click.Path(dir_okay=False, writable=True),
              help="Where to write the SVG.")
def render(spec_file, problem_name, highlight, cell_size, output_path):
    """Draw a problem (and optionally one witness or size class) as an SVG."""
    spec = _select(_load_specs(spec_file), problem_name)[0]
    parsed = None if highlight is None else _parse_highlight(highlight)
    try:
        svg = render_problem(spec, cell_size=cell_size, highlight=parsed)
    except (ValueError, OracleBudgetError) as exc:
        _fail(str(exc))
    try:
        with open(output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    except OSError as exc:
        _fail(f"{output_path}: {exc.strerror}")


if __name__ == "__main__":
    main()
