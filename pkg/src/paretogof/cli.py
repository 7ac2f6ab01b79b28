"""Command-line interface: test a dataset, run a power study, or rerun the
built-in golfer-earnings analysis.

Exit codes signal operational failures only; a statistical rejection is
part of the report, not an error.
"""

from __future__ import annotations

import json
import sys

import click

from . import __version__
from ._backend import backend_name
from .battery import default_battery, parse_tests
from .bootstrap import BootstrapConfig, pvalue_many
from .datasets import (
    GOLFER_EARNINGS,
    GOLFER_THRESHOLD,
    REFERENCE_GOLFER,
    load_dataset,
)
from .distributions import mom_estimate
from .errors import ConfigError, DomainError, EstimationError
from .power_study import load_config, run_power_study

_FORMATS = click.Choice(["pretty", "csv", "json"])


@click.group()
@click.version_option(__version__, message=f"%(prog)s %(version)s ({backend_name()} kernels)")
def main():
    """Goodness-of-fit tests for the Pareto type I distribution."""


def _render_reports(reports, beta, fmt):
    if fmt == "json":
        payload = {
            "beta": beta,
            "backend": backend_name(),
            "tests": [
                {
                    "test": r.test.display,
                    "statistic": r.statistic,
                    "p_value": r.p_value,
                    "b": r.b,
                    "seed": r.seed,
                    "refit": r.refit,
                }
                for r in reports
            ],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        lines = ["test,statistic,p_value"]
        lines += [f"{r.test.display},{r.statistic:.6g},{r.p_value:.4f}" for r in reports]
        return "\n".join(lines) + "\n"
    lines = [
        f"fitted shape: {beta:.4f}    (B={reports[0].b}, seed={reports[0].seed}, "
        f"refit={'yes' if reports[0].refit else 'no'})",
        f"{'test':<6}{'statistic':>14}{'p-value':>10}",
    ]
    for r in reports:
        lines.append(f"{r.test.display:<6}{r.statistic:>14.6g}{r.p_value:>10.4f}")
    return "\n".join(lines) + "\n"


@main.command("test")
@click.argument("dataset", type=click.Path(exists=True, dir_okay=False))
@click.option("--threshold", type=float, default=None,
              help="Divide every value by this before testing.")
@click.option("--tests", "tests_text", default=",".join(t.label for t in default_battery()),
              show_default=True, help="Comma-separated test labels.")
@click.option("--m", type=int, default=3, show_default=True,
              help="Block size of the characteristic-function tests.")
@click.option("--a", type=float, default=2.0, show_default=True,
              help="Kernel decay of the characteristic-function tests.")
@click.option("--mellin-a", type=float, default=1.0, show_default=True,
              help="Weight decay of the Mellin-transform test.")
@click.option("-B", "--b", "b", type=int, default=10_000, show_default=True,
              help="Bootstrap replications.")
@click.option("--alpha", type=float, default=0.05, show_default=True,
              help="Significance level (reported only; no exit-code effect).")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--refit/--no-refit", default=True, show_default=True,
              help="Re-estimate the shape inside each bootstrap sample.")
@click.option("--format", "fmt", type=_FORMATS, default="pretty", show_default=True)
def cmd_test(dataset, threshold, tests_text, m, a, mellin_a, b, alpha, seed, refit, fmt):
    """Bootstrap p-values for one dataset (one number per line, # comments)."""
    try:
        values = load_dataset(dataset, threshold)
        tests = parse_tests(tests_text, m=m, a=a, mellin_a=mellin_a)
        cfg = BootstrapConfig(b=b, alpha=alpha, seed=seed, refit=refit)
        reports = pvalue_many(values, tests, cfg)
        beta = mom_estimate(values)
    except (ValueError, DomainError, EstimationError) as exc:
        raise click.ClickException(str(exc)) from None
    click.echo(_render_reports(reports, beta, fmt), nl=False)


@main.command("power")
@click.argument("config", type=click.Path(exists=True, dir_okay=False))
@click.option("--output", type=click.Path(dir_okay=False), default=None,
              help="Write CSV here instead of standard output.")
@click.option("--pretty", is_flag=True, help="Also print a fixed-width table.")
def cmd_power(config, output, pretty):
    """Run the power study described by an INI config file."""
    try:
        cfg = load_config(config)
    except ConfigError as exc:
        raise click.ClickException(str(exc)) from None
    click.echo(f"# config {cfg.digest()}", err=True)
    table = run_power_study(cfg)
    csv_text = table.to_csv()
    if output:
        with open(output, "w") as fh:
            fh.write(csv_text)
        click.echo(f"# wrote {output}", err=True)
    else:
        click.echo(csv_text, nl=False)
    if pretty:
        click.echo(table.render_pretty(), nl=False, err=output is None)


@main.command("golfer")
@click.option("-B", "--b", "b", type=int, default=10_000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--format", "fmt", type=_FORMATS, default="pretty", show_default=True)
def cmd_golfer(b, seed, fmt):
    """Rerun the built-in golfer-earnings analysis and compare against the
    published reference values.

    The pipeline divides the earnings by 700, fits the shape by the method
    of moments and bootstraps p-values with the shape held fixed.
    """
    import numpy as np

    values = np.asarray(GOLFER_EARNINGS, dtype=float) / GOLFER_THRESHOLD
    beta = mom_estimate(values)
    cfg = BootstrapConfig(b=b, alpha=0.05, seed=seed, refit=False)
    reports = pvalue_many(values, default_battery(), cfg)

    ref_stats = REFERENCE_GOLFER["statistics"]
    ref_stat_tol = REFERENCE_GOLFER["statistic_tolerances"]
    ref_p = REFERENCE_GOLFER["p_values"]
    p_tol = REFERENCE_GOLFER["p_value_tolerance"]
    if fmt == "json":
        payload = {
            "beta": beta,
            "reference_beta": REFERENCE_GOLFER["beta"],
            "tests": [
                {
                    "test": r.test.display,
                    "statistic": r.statistic,
                    "p_value": r.p_value,
                    "reference_statistic": ref_stats[r.test.display],
                    "reference_p_value": ref_p[r.test.display],
                }
                for r in reports
            ],
        }
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
        return
    lines = [
        f"fitted shape: {beta:.4f}   reference: {REFERENCE_GOLFER['beta']}   "
        f"[{'PASS' if abs(beta - REFERENCE_GOLFER['beta']) <= 1e-3 else 'FAIL'}]",
        f"{'test':<6}{'statistic':>12}{'reference':>12}{'p-value':>10}{'ref p':>9}"
        "  stat    p",
    ]
    for r in reports:
        label = r.test.display
        s_ok = abs(r.statistic - ref_stats[label]) <= ref_stat_tol[label]
        p_ok = abs(r.p_value - ref_p[label]) <= p_tol
        lines.append(
            f"{label:<6}{r.statistic:>12.4g}{ref_stats[label]:>12.4g}"
            f"{r.p_value:>10.4f}{ref_p[label]:>9.4f}  "
            f"{'PASS' if s_ok else 'FAIL'}  {'PASS' if p_ok else 'FAIL'}"
        )
    rejections = [r.test.display for r in reports if r.p_value < cfg.alpha]
    lines.append(
        "rejections at the 5% level: "
        + (", ".join(rejections) if rejections else "none")
    )
    click.echo("\n".join(lines))


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
