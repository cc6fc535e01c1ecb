"""
Command line entry points of aluffi-kit.

    aluffi-kit analyze --vars x,y --poly "x^4 - x^2*y^2 + y^5"
    aluffi-kit analyze --vars x,y,z,w --poly "x*y*z + x*y*w + x*z*w + y*z*w" --projective
    aluffi-kit family-scan --a-max 6 --b-max 6
    aluffi-kit corpus
    aluffi-kit cubic-experiment --trials 20 --seed 0

Exit codes: 0 success, 1 parse or usage error (and failed batch checks),
2 violated precondition, 3 resource limit exceeded.
"""

import asyncio
import logging
import sys
from collections import Counter
from dataclasses import asdict

import click

from aluffi_kit import __version__

from .corpus import corpus_curves, cubic_samples
from .errors import AluffiKitError
from .groebner import ResourceLimits
from .hypersurfaces import family_polynomial, family_prediction
from .reports import (
    CorpusRecord,
    CubicTrialRecord,
    FamilyScanRecord,
    analyze,
    corpus_worker,
    cubic_worker,
    family_worker,
    render_text,
    write_json,
)
from .settings import settings
from .utils import run_bounded

__author__ = "aluffi-kit developers"
__license__ = "mit"

LOGGER = logging.getLogger(__name__)


def setup_logging(verbose):
    """Setup basic logging on stderr; stdout only carries reports.

    Args:
      verbose (int): 0 warnings, 1 info, 2 and more debug
    """
    loglevel = [logging.WARNING, logging.INFO, logging.DEBUG][min(verbose, 2)]
    logformat = "[%(asctime)s] %(levelname)s:%(name)s:%(message)s"
    logging.basicConfig(
        level=loglevel, stream=sys.stderr, format=logformat, datefmt="%Y-%m-%d %H:%M:%S"
    )


def _jobs(jobs):
    return settings.jobs if jobs is None else jobs


@click.group()
@click.option("-v", "--verbose", count=True)
@click.option("--limit-pairs", type=int, default=None, help="Ceiling on the critical pair queue")
@click.option("--limit-terms", type=int, default=None, help="Ceiling on the terms held by a basis")
@click.version_option(version=__version__)
def main(verbose, limit_pairs, limit_terms):
    """
    aluffi-kit: Euler-type and linear-type verdicts for hypersurfaces over QQ
    """
    setup_logging(verbose)
    if limit_pairs is not None:
        settings.limit_pairs = limit_pairs
    if limit_terms is not None:
        settings.limit_terms = limit_terms
    LOGGER.debug(f"limits: {settings.limit_pairs} pairs, {settings.limit_terms} terms")


@main.command("analyze")
@click.option("--vars", "variables", required=True, help="Comma separated variable names")
@click.option("--poly", "polynomial", required=True, help="Polynomial to analyze")
@click.option("--projective", is_flag=True, help="Treat the polynomial as homogeneous in projective space")
@click.option("--presentations", is_flag=True, help="Emit Sym, Rees and Aluffi presentations")
@click.option("--deep", is_flag=True, help="Projective only: also compare Sym and Rees of J(f) directly")
@click.option("--json", "json_path", default=None, help="Write the JSON report to this path")
def analyze_command(variables, polynomial, projective, presentations, deep, json_path):
    """
    Analyze one hypersurface.
    """
    report = analyze(polynomial, variables, projective, presentations, deep)
    click.echo(render_text(report))
    if json_path:
        write_json(json_path, report.to_dict())
    return 0


def _family_grid(a_max, b_max):
    return [
        (a, b, c, d)
        for a in range(2, a_max + 1)
        for b in range(2, b_max + 1)
        for c in range(a + 1)
        for d in range(b + 1)
    ]


def _family_timeout(payload):
    (a, b, c, d), _ = payload
    predicted, rule = family_prediction(a, b, c, d)
    return asdict(
        FamilyScanRecord(
            a, b, c, d, str(family_polynomial(a, b, c, d)), "timeout", None, None,
            predicted, rule, None, None, f"no answer within {settings.trial_timeout}s",
        )
    )


@main.command("family-scan")
@click.option("--a-max", type=int, default=None, help="Largest a (default from settings)")
@click.option("--b-max", type=int, default=None, help="Largest b (default from settings)")
@click.option("--jobs", type=int, default=None, help="Concurrent analyses (env ALUFFI_KIT_JOBS)")
@click.option("--json", "json_path", default=None, help="Write the records to this path")
def family_scan(a_max, b_max, jobs, json_path):
    """
    Compare computed verdicts with the predicted cases and regions of the family
    x^a + y^b + x^c*y^d.
    """
    a_max = settings.family_a_max if a_max is None else a_max
    b_max = settings.family_b_max if b_max is None else b_max
    limits = ResourceLimits.from_settings()
    payloads = [(member, limits) for member in _family_grid(a_max, b_max)]
    LOGGER.info(f"scanning {len(payloads)} family members")
    rows = asyncio.run(
        run_bounded(family_worker, payloads, _jobs(jobs), settings.trial_timeout, _family_timeout)
    )
    records = [FamilyScanRecord(**row) for row in rows]
    for r in records:
        verdict = "-" if r.locally_eulerian is None else str(r.locally_eulerian).lower()
        agreement = {True: "agree", False: "DISAGREE", None: ""}[r.agreement]
        if r.agreement is None and r.status == "ok" and r.reason:
            agreement = "inconclusive"
        click.echo(
            f"({r.a},{r.b},{r.c},{r.d}) {r.polynomial}: {r.status} {verdict}"
            f" predicted {r.predicted} [{r.rule or '-'}] {agreement}"
        )
    statuses = Counter(r.status for r in records)
    agreements = sum(1 for r in records if r.agreement)
    disagreements = [r for r in records if r.disagrees]
    inconclusive = sum(1 for r in records if r.agreement is None and r.status == "ok" and r.reason)
    click.echo(
        f"{len(records)} members: "
        + ", ".join(f"{count} {status}" for status, count in sorted(statuses.items()))
        + f"; {agreements} agreements, {inconclusive} inconclusive, {len(disagreements)} disagreements"
    )
    if json_path:
        write_json(json_path, {"records": rows, "disagreements": len(disagreements)})
    return 1 if disagreements else 0


def _corpus_timeout(payload):
    curve, _ = payload
    return asdict(
        CorpusRecord(
            curve.name, curve.polynomial, curve.variables.split(","), "timeout", None,
            curve.expected, [], None if curve.labels is None else sorted(curve.labels), False,
            f"no answer within {settings.trial_timeout}s",
        )
    )


@main.command("corpus")
@click.option("--jobs", type=int, default=None, help="Concurrent analyses (env ALUFFI_KIT_JOBS)")
@click.option("--json", "json_path", default=None, help="Write the records to this path")
def corpus(jobs, json_path):
    """
    Check the gradient-linear-type verdict of every shipped curve.
    """
    limits = ResourceLimits.from_settings()
    curves = corpus_curves(settings.nodal_quartics, settings.corpus_seed)
    payloads = [(curve, limits) for curve in curves]
    rows = asyncio.run(
        run_bounded(corpus_worker, payloads, _jobs(jobs), settings.trial_timeout, _corpus_timeout)
    )
    records = [CorpusRecord(**row) for row in rows]
    for r in records:
        verdict = "-" if r.gradient_linear_type is None else str(r.gradient_linear_type).lower()
        click.echo(
            f"{r.name}: {r.polynomial}: gradient linear type {verdict}"
            f" (expected {str(r.expected).lower()}) {' '.join(r.labels)}"
            f" {'ok' if r.match else 'MISMATCH'}"
        )
    mismatches = [r for r in records if not r.match]
    click.echo(f"{len(records)} curves, {len(mismatches)} mismatches")
    if json_path:
        write_json(json_path, {"seed": settings.corpus_seed, "records": rows})
    return 1 if mismatches else 0


def _cubic_timeout(payload):
    (trial, text, _), _ = payload
    return asdict(
        CubicTrialRecord(trial, text, "timeout", None, [], f"no answer within {settings.trial_timeout}s")
    )


@main.command("cubic-experiment")
@click.option("--trials", type=int, default=None, help="Number of cubics, Cayley's included")
@click.option("--seed", type=int, default=None, help="Seed of the sampler")
@click.option("--bound", type=int, default=None, help="Coefficients are drawn from [-bound, bound]")
@click.option(
    "--force-singular/--no-force-singular",
    default=True,
    help="Force a singular point at [0:0:0:1]",
)
@click.option("--jobs", type=int, default=None, help="Concurrent analyses (env ALUFFI_KIT_JOBS)")
@click.option("--json", "json_path", default=None, help="Write the records to this path")
def cubic_experiment(trials, seed, bound, force_singular, jobs, json_path):
    """
    Gradient linear type of random cubic surfaces. Reports counts only, no claim
    beyond the sample.
    """
    trials = settings.cubic_trials if trials is None else trials
    seed = settings.cubic_seed if seed is None else seed
    bound = settings.cubic_coefficient_bound if bound is None else bound
    limits = ResourceLimits.from_settings()
    samples = cubic_samples(trials, seed, bound, force_singular)
    payloads = [((i, text, "x,y,z,w"), limits) for i, text in enumerate(samples)]
    rows = asyncio.run(
        run_bounded(cubic_worker, payloads, _jobs(jobs), settings.trial_timeout, _cubic_timeout)
    )
    records = [CubicTrialRecord(**row) for row in rows]
    counts = Counter(
        r.status if r.gradient_linear_type is None else str(r.gradient_linear_type).lower()
        for r in records
    )
    candidates = [r for r in records if r.gradient_linear_type is False]
    click.echo(f"seed {seed}, {len(records)} trials: " + ", ".join(
        f"{count} {key}" for key, count in sorted(counts.items())
    ))
    for r in candidates:
        click.echo(f"counterexample candidate (trial {r.trial}): {r.polynomial} {' '.join(r.labels)}")
    if json_path:
        write_json(
            json_path,
            {"seed": seed, "trials": trials, "bound": bound, "force_singular": force_singular, "records": rows},
        )
    return 0


def execute(argv) -> int:
    """Run the command line and return its exit code instead of exiting."""
    try:
        result = main.main(args=list(argv), prog_name="aluffi-kit", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except AluffiKitError as exc:
        LOGGER.debug("command failed", exc_info=True)
        click.echo(f"error: {exc}", err=True)
        return exc.exit_code
    return result or 0


def run():
    """Entry point for console_scripts"""
    sys.exit(execute(sys.argv[1:]))


if __name__ == "__main__":
    run()
