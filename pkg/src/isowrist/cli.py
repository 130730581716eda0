"""Command-line interface.

Subcommands: enumerate (the 32-solution catalog), classify (the eight
wrist classes plus symmetry maps), verify (the full invariant suite),
posture (geometry of one wrist at its isotropic posture), and platonic
(vertex sets of the Platonic solids).  Exit codes: 0 success, 1
verification failure, 2 usage error.
"""

from __future__ import annotations

import json
import math
import sys

import click

from . import documents
from .checks import run_checks
from .classify import distinct_wrists, isotropic_posture_geometry
from .solver import enumerate_solutions
from .spheregeom import PlatonicSolid


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _json_text(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


@click.group()
def cli():
    """Isotropic four-revolute spherical wrists: enumerate, classify, verify."""


@cli.command("enumerate")
@click.option("--format", "fmt", type=click.Choice(["table", "json", "csv"]), default="table", show_default=True)
@click.option("--tolerance", type=float, default=1e-12, show_default=True, help="Catalog matching tolerance.")
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write to a file instead of stdout.")
def cmd_enumerate(fmt: str, tolerance: float, output: str | None):
    """Emit all 32 solutions of the isotropy system in catalog order."""
    try:
        solutions = enumerate_solutions(tolerance)
    except ArithmeticError as exc:
        click.echo(f"internal consistency failure: {exc}", err=True)
        sys.exit(1)
    if fmt == "csv":
        text = documents.solution_csv(solutions)
    elif fmt == "json":
        text = _json_text(documents.solution_document(solutions, tolerance))
    else:
        text = documents.solution_table(solutions)
    _emit(text, output)


@cli.command("classify")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write to a file instead of stdout.")
def cmd_classify(fmt: str, output: str | None):
    """Emit the eight distinct wrist classes and the symmetry-map tables."""
    try:
        solutions = enumerate_solutions()
        wrists = distinct_wrists(solutions)
        if fmt == "json":
            text = _json_text(documents.wrist_catalog_document(wrists, solutions))
        else:
            text = documents.wrist_catalog_table(wrists)
    except ArithmeticError as exc:
        click.echo(f"internal consistency failure: {exc}", err=True)
        sys.exit(1)
    _emit(text, output)


@cli.command("verify")
@click.option("--tolerance", type=float, default=1e-12, show_default=True, help="Residual and matching tolerance.")
@click.option("--oracle-starts", type=int, default=20000, show_default=True, help="Newton starts; 0 skips the hunt.")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for all randomized checks.")
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Also write the report to a file.")
def cmd_verify(tolerance: float, oracle_starts: int, seed: int, output: str | None):
    """Run every invariant check and report worst-case margins."""
    if tolerance <= 0:
        raise click.UsageError("tolerance must be positive")
    results = run_checks(tolerance=tolerance, oracle_starts=oracle_starts, seed=seed)
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        lines.append(f"[{r.status}] {r.name:<{width}}  worst {r.worst:.3e}  tol {r.tolerance:.1e}  {r.detail}")
    failures = [r for r in results if not r.skipped and not r.passed]
    lines.append(f"{len(results) - len(failures)}/{len(results)} checks passed")
    if failures:
        lines.append("failed: " + ", ".join(r.name for r in failures))
    text = "\n".join(lines) + "\n"
    click.echo(text, nl=False)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.exit(1 if failures else 0)


@cli.command("posture")
@click.argument("label", type=click.Choice(list("abcdefgh")))
@click.option("--theta1", type=float, default=0.0, show_default=True, help="Free joint 1 angle in degrees.")
@click.option("--theta4", type=float, default=0.0, show_default=True, help="Free joint 4 angle in degrees.")
@click.option("--format", "fmt", type=click.Choice(["json", "obj-lines"]), default="json", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write to a file instead of stdout.")
def cmd_posture(label: str, theta1: float, theta4: float, fmt: str, output: str | None):
    """Emit one wrist class's geometry at its isotropic posture."""
    theta1 %= 360.0
    theta4 %= 360.0
    wrist = next(w for w in distinct_wrists() if w.label == label)
    geometry = isotropic_posture_geometry(wrist, math.radians(theta1), math.radians(theta4))
    if fmt == "obj-lines":
        text = documents.posture_obj_lines(geometry)
    else:
        text = _json_text(documents.posture_document(label, theta1, theta4, geometry))
    _emit(text, output)


@cli.command("platonic")
@click.argument("kind", type=click.Choice([k.name for k in PlatonicSolid]))
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write to a file instead of stdout.")
def cmd_platonic(kind: str, fmt: str, output: str | None):
    """Emit a Platonic vertex set with its isotropy constants."""
    solid = PlatonicSolid[kind]
    if fmt == "json":
        text = _json_text(documents.platonic_document(solid))
    else:
        text = documents.platonic_table(solid)
    _emit(text, output)


def main():
    """Entry point for the console script."""
    cli()


if __name__ == "__main__":
    main()
