"""Command-line interface.

Exit codes: 0 on success / "yes" answers, 1 on "no" answers, 2 on input
errors. All commands are deterministic given identical inputs and flags;
randomized commands accept --seed.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import io as pio
from .blockers import phi, phi_embedding
from .core import diameter, hamiltonian_cycle, realizes, visibility_graph
from .domination import min_degree_dominating
from .errors import NotNonPathError, SchemaError
from .graphs import Graph
from .grid import GridSpec, bounds_csv, bounds_table, grid_min_dominating, grid_pvg
from .reductions import (Family, reduce_bisection, reduce_ffvd, reduce_fvs,
                         reduce_lip)
from .solvers import (solve_bisection, solve_dominating, solve_ffvd,
                      solve_fvs, solve_lip, solve_max_cut)
from .verify import verify_reduction


def _read_graph(path: str) -> Graph:
    return pio.parse_graph(Path(path).read_text())


def _read_points(path: str):
    return pio.parse_points(Path(path).read_text())


def _fail(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(2)


class _Schema(click.Group):
    """Translates schema/validation errors into exit code 2 globally."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (SchemaError, ValueError, OSError) as exc:
            _fail(exc)


@click.group(cls=_Schema)
def main() -> None:
    """Exact-arithmetic toolkit for point visibility graphs."""


@main.command()
@click.argument("points_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--dot", type=click.Path(dir_okay=False), default=None,
              help="Also write the graph in DOT format to this path.")
def build(points_file: str, dot: str | None) -> None:
    """Visibility graph of a point set (JSON on stdout)."""
    emb = _read_points(points_file)
    g = visibility_graph(emb)
    if dot is not None:
        Path(dot).write_text(pio.emit_dot(g))
    click.echo(pio.emit_graph(g), nl=False)


@main.command()
@click.option("--n", required=True, type=click.IntRange(min=1))
@click.option("--m", required=True, type=click.IntRange(min=1))
@click.option("--dot", type=click.Path(dir_okay=False), default=None)
def grid(n: int, m: int, dot: str | None) -> None:
    """Grid visibility graph under the coprimality rule."""
    g = grid_pvg(GridSpec(n, m))
    if dot is not None:
        Path(dot).write_text(pio.emit_dot(g))
    click.echo(pio.emit_graph(g, name=f"grid-{n}x{m}"), nl=False)


@main.group()
def transform() -> None:
    """Graph transformations."""


@transform.command("phi")
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--embed", type=click.Path(dir_okay=False), default=None,
              help="Write a certified visibility embedding to this path.")
def transform_phi(graph_file: str, embed: str | None) -> None:
    """Blocker transformation: one universal blocker per non-edge."""
    g = _read_graph(graph_file)
    res = phi(g)
    if embed is not None:
        emb = phi_embedding(g)
        if not realizes(emb, res.graph):
            _fail(RuntimeError("embedding failed certification"))
        Path(embed).write_text(pio.emit_points(emb))
    obj = pio.graph_to_obj(res.graph)
    obj["blockers"] = sorted(res.blockers)
    obj["blocked_pairs"] = [list(p) for p in res.blocked_pairs]
    click.echo(json.dumps(obj))


def _family_option(path: str | None) -> Family | None:
    if path is None:
        return None
    return pio.parse_family(Path(path).read_text())


@main.command()
@click.argument("problem", type=click.Choice(["fvs", "lip", "bisection", "ffvd"]))
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--k", required=True, type=click.IntRange(min=0))
@click.option("--family", "family_file", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Forbidden-subgraph family JSON (ffvd only).")
@click.option("--case", "case_", type=click.Choice(["i", "ii", "iii"]), default=None,
              help="Reduction case for ffvd.")
def reduce(problem: str, graph_file: str, k: int,
           family_file: str | None, case_: str | None) -> None:
    """Reduce a source instance onto a point visibility graph."""
    g = _read_graph(graph_file)
    if problem == "ffvd":
        fam = _family_option(family_file)
        if fam is None or case_ is None:
            _fail(ValueError("ffvd requires --family and --case"))
        red = reduce_ffvd(g, k, fam, case_)
    else:
        if family_file is not None or case_ is not None:
            _fail(ValueError("--family/--case apply to ffvd only"))
        red = {"fvs": reduce_fvs, "lip": reduce_lip,
               "bisection": reduce_bisection}[problem](g, k)
    click.echo(json.dumps(pio.reduced_instance_to_obj(red)))


@main.command()
@click.argument("problem", type=click.Choice(
    ["fvs", "lip", "bisection", "maxcut", "ffvd", "domset"]))
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--k", required=True, type=click.IntRange(min=0))
@click.option("--family", "family_file", type=click.Path(exists=True, dir_okay=False),
              default=None)
def solve(problem: str, graph_file: str, k: int, family_file: str | None) -> None:
    """Solve a decision problem exactly; exit 0 yes / 1 no."""
    g = _read_graph(graph_file)
    if problem == "ffvd":
        fam = _family_option(family_file)
        if fam is None:
            _fail(ValueError("ffvd requires --family"))
        w = solve_ffvd(g, k, fam.members)
    else:
        if family_file is not None:
            _fail(ValueError("--family applies to ffvd only"))
        w = {"fvs": solve_fvs, "lip": solve_lip, "bisection": solve_bisection,
             "maxcut": solve_max_cut, "domset": solve_dominating}[problem](g, k)
    click.echo(json.dumps(pio.witness_to_obj(w)))
    sys.exit(0 if w.answer else 1)


@main.command("verify-reduction")
@click.argument("problem", type=click.Choice(["fvs", "lip", "bisection", "ffvd"]))
@click.option("--nmax", required=True, type=click.IntRange(min=1))
@click.option("--samples", type=click.IntRange(min=1), default=None)
@click.option("--seed", type=click.IntRange(min=0, max=2**64 - 1), default=0)
def verify_reduction_cmd(problem: str, nmax: int, samples: int | None, seed: int) -> None:
    """Check source/reduced oracle agreement; exit 0 iff 100%."""
    report = verify_reduction(problem, nmax, samples=samples, seed=seed)
    click.echo(json.dumps(report))
    sys.exit(0 if not report["mismatches"] else 1)


@main.group()
def dominate() -> None:
    """Dominating-set computations."""


@dominate.command("grid")
@click.option("--n", type=click.IntRange(min=1), default=None,
              help="Exact f(n) for one n.")
@click.option("--table", "table_nmax", type=click.IntRange(min=2), default=None,
              help="Emit the f(n)/bounds table for n = 2..NMAX as CSV.")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None,
              help="Write the CSV table to this path as well.")
@click.option("--plot", "plot_path", type=click.Path(dir_okay=False), default=None,
              help="Render the table as a figure to this path.")
def dominate_grid(n: int | None, table_nmax: int | None,
                  csv_path: str | None, plot_path: str | None) -> None:
    """Minimum dominating sets of n x n grid visibility graphs."""
    if (n is None) == (table_nmax is None):
        _fail(ValueError("exactly one of --n and --table is required"))
    if n is not None:
        if csv_path or plot_path:
            _fail(ValueError("--csv/--plot require --table"))
        w = grid_min_dominating(n)
        click.echo(json.dumps({"n": n, "f": len(w.set), "set": sorted(w.set),
                               "verified": w.verified}))
        return
    rows = bounds_table(table_nmax)
    text = bounds_csv(rows)
    if csv_path is not None:
        Path(csv_path).write_text(text)
    if plot_path is not None:
        from .plots import render_bounds_figure
        render_bounds_figure(rows, plot_path)
    click.echo(text, nl=False)


@dominate.command("embed")
@click.argument("points_file", type=click.Path(exists=True, dir_okay=False))
def dominate_embed(points_file: str) -> None:
    """Min-degree dominating construction for a non-path embedding."""
    emb = _read_points(points_file)
    try:
        w = min_degree_dominating(emb)
    except NotNonPathError as exc:
        _fail(exc)
    g = visibility_graph(emb)
    delta = min(g.degrees())
    click.echo(json.dumps({"set": sorted(w.set), "size": len(w.set),
                           "delta": delta, "bound": delta // 2 + 1,
                           "verified": w.verified}))


@main.group()
def check() -> None:
    """Structural checks; exit 0 yes / 1 no."""


@check.command("diameter")
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--at-most", type=click.IntRange(min=0), default=None,
              help="Exit 0 iff the diameter is at most this value.")
def check_diameter(graph_file: str, at_most: int | None) -> None:
    """Print the diameter (inf if disconnected)."""
    d = diameter(_read_graph(graph_file))
    click.echo(json.dumps({"diameter": None if d != d or d == float("inf") else d}))
    if at_most is not None:
        sys.exit(0 if d <= at_most else 1)


@check.command("hamiltonian")
@click.argument("points_file", type=click.Path(exists=True, dir_okay=False))
def check_hamiltonian(points_file: str) -> None:
    """Verified Hamiltonian cycle of a non-path PVG embedding."""
    emb = _read_points(points_file)
    try:
        cycle = hamiltonian_cycle(emb)
    except NotNonPathError as exc:
        _fail(exc)
    click.echo(json.dumps({"cycle": list(cycle)}))


@check.command("realizes")
@click.argument("points_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
def check_realizes(points_file: str, graph_file: str) -> None:
    """Exit 0 iff the point set's visibility graph equals the graph."""
    ok = realizes(_read_points(points_file), _read_graph(graph_file))
    click.echo(json.dumps({"realizes": ok}))
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
