"""Click-based CLI for the Lorentzian polynomial verifier."""

import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Literal, Optional

import click
from pydantic import BaseModel, Field, ValidationError

from . import __version__
from .config import SETTINGS_FILENAME, VerifierConfig, create_default_settings_file, load_config
from .convgeom.mixed import (
    MixedVolumeSpec,
    mixed_volume,
    volume_polynomial,
    volume_polynomial_by_polarization,
)
from .convgeom.polytope import Polytope
from .errors import BudgetError, VerifierInputError
from .harness.fuzz import FuzzSettings, run_fuzz
from .harness.pool import resolve_workers
from .harness.registry import CheckerRegistry, ReproductionRegistry
from .harness.report import (
    Stopwatch,
    build_report,
    fuzz_report,
    sha256_file,
    write_margin_csv,
    write_report,
)
from .ineq.sweep import SweepPlan, af_form_sweep, pr_sweep, rkt_sweep, supermodularity_sweep
from .lorentz.membership import af_coefficient_check, is_lorentzian, m_convex_support
from .lorentz.rayleigh import c_rayleigh_check, default_rayleigh_constant
from .lorentz.verdict import Verdict
from .matroid.ground import GroundSet
from .matroid.polymatroid import RankOracle, check_polymatroid, is_matroid, rank_vector
from .polycore.codec import (
    matrix_from_json,
    parse_point_groups,
    parse_points,
    poly_from_json,
    read_json,
    require,
)
from .polycore.polynomial import HomPoly
from .polycore.rational import parse_rat
from .schurmix.discriminant import mixed_discriminant_with
from .schurmix.partitions import Partition
from .schurmix.schur import derived_schur, derived_schur_all, determinant_matches_bialternant, schur
from .schurmix.valuation import SchurValuationSpec, schur_af_check, schur_valuation
from .verifier_logging import get_logger, setup_logging

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2

Command = Literal[
    "check-lorentzian", "check-rayleigh", "check-rkt", "check-pr", "check-supermod",
    "check-af-form", "mixed-volume", "volume-poly", "schur", "derived-schur", "mixed-disc",
    "schur-af", "polymatroid", "fuzz", "reproduce",
]


class RunConfig(BaseModel):
    """One CLI invocation after option parsing and config merging."""

    command: Command
    inputs: List[Path] = Field(default_factory=list)
    seed: int = Field(default=0, ge=0, lt=2**64)
    trials: int = Field(default=100, ge=1)
    out: Optional[Path] = None
    sweep: Optional[str] = None
    budget_ms: Optional[int] = Field(default=None, ge=1)
    workers: int = Field(default=1, ge=1, le=64)
    csv: Optional[Path] = None


@dataclass
class CommandOutcome:
    results: Any
    summary: Dict[str, Any] = field(default_factory=dict)
    holds: bool = True
    expected_violation: bool = False
    inputs: Dict[str, str] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.holds else EXIT_VIOLATION


Action = Callable[[RunConfig, VerifierConfig], CommandOutcome]


def _describe_validation(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        location = ".".join(str(p) for p in item.get("loc", ())) or "config"
        parts.append(f"{location}: {item.get('msg', 'invalid value')}")
    return "; ".join(parts)


def verdict_outcome(verdict: Verdict, **extra: Any) -> CommandOutcome:
    summary = {"holds": verdict.holds, "checked": verdict.checked, "margin": verdict.margin}
    return CommandOutcome(results={"verdict": verdict, **extra}, summary=summary,
                          holds=verdict.holds)


def execute(command: str, options: Dict[str, Any], action: Action,
            inputs: Optional[List[str]] = None, **fields: Any) -> None:
    """Shared driver: config, logging, the action, the report and the exit code."""
    verbose, quiet = options.get("verbose", False), options.get("quiet", False)
    if quiet and verbose:
        click.echo("Error: --quiet and --verbose are mutually exclusive", err=True)
        sys.exit(EXIT_INPUT)

    try:
        config_path = options.get("config")
        config = load_config(
            Path(config_path) if config_path else None,
            seed=fields.get("seed"),
            trials=fields.get("trials"),
            workers=fields.get("workers"),
            budget_ms=fields.get("budget_ms"),
        )
        log_file = options.get("log_file")
        setup_logging(config.log_level, quiet=quiet, verbose=verbose,
                      log_file=Path(log_file) if log_file else None)
        logger = get_logger()

        run = RunConfig(
            command=command,
            inputs=[Path(p) for p in inputs or []],
            seed=config.seed,
            trials=config.trials,
            out=options.get("out"),
            sweep=fields.get("sweep"),
            budget_ms=config.budget_ms,
            workers=resolve_workers(fields.get("workers") or config.workers),
            csv=fields.get("csv"),
        )
        logger.debug(f"{command}: {run.model_dump(exclude_none=True)}")

        stopwatch = Stopwatch()
        outcome = action(run, config)
        digests = {str(p): sha256_file(p) for p in run.inputs}
        digests.update(outcome.inputs)
        report = build_report(command, outcome.results, outcome.summary, digests,
                              outcome.expected_violation, stopwatch)
        text = write_report(report, run.out)
        if run.out is None:
            click.echo(text, nl=False)
        elif not quiet:
            click.echo(f"Report written to {run.out}", err=True)
        if outcome.exit_code != EXIT_OK:
            logger.warning(f"{command}: violation found")
        sys.exit(outcome.exit_code)

    except ValidationError as e:
        click.echo(f"Error: {_describe_validation(e)}", err=True)
        sys.exit(EXIT_INPUT)
    except (VerifierInputError, BudgetError, json.JSONDecodeError) as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_INPUT)


def _poly_of(data: Any) -> HomPoly:
    """An instance file holds either a bare polynomial or ``{"poly": ...}``."""
    if isinstance(data, dict) and "poly" in data:
        return poly_from_json(data["poly"])
    return poly_from_json(data)


def _load(run: RunConfig) -> Any:
    return read_json(run.inputs[0])


# Common options as decorators
def common_options(f):
    """Options shared by every command."""
    f = click.option('--verbose', '-v', is_flag=True, help='Enable debug logging')(f)
    f = click.option('--quiet', '-q', is_flag=True, help='Only log errors')(f)
    f = click.option('--config', type=click.Path(exists=True),
                     help='Settings file (key=value)')(f)
    f = click.option('--out', '-o', type=click.Path(), help='Write the JSON report here')(f)
    f = click.option('--log-file', type=click.Path(), help='Also log to this file')(f)
    return f


def input_argument(f):
    return click.argument('input_file', type=click.Path(exists=True, dir_okay=False))(f)


@click.group(invoke_without_command=True)
@click.version_option(version=__version__)
@click.pass_context
def cli(ctx):
    """Exact verifier for Lorentzian polynomials and mixed-volume inequalities."""
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


@cli.command('init-config')
@click.argument('path', type=click.Path(dir_okay=False), default=SETTINGS_FILENAME)
@click.option('--force', is_flag=True, help='Overwrite an existing settings file')
def init_config(path, force):
    """Write a commented settings template (default: ./lorentz-verifier.settings)."""
    target = Path(path)
    if target.exists() and not force:
        click.echo(f"Error: {target} already exists; use --force to overwrite", err=True)
        sys.exit(EXIT_INPUT)
    target.parent.mkdir(parents=True, exist_ok=True)
    create_default_settings_file(target)
    click.echo(f"Settings written to {target}", err=True)


@cli.command('check-lorentzian')
@common_options
@input_argument
def check_lorentzian(input_file, **options):
    """Decide membership of a polynomial in the Lorentzian class."""

    def action(run, config):
        f = _poly_of(_load(run))
        verdict = is_lorentzian(f)
        return verdict_outcome(
            verdict,
            poly=f,
            m_convex_support=m_convex_support(f.support),
            af_coefficients=af_coefficient_check(f),
        )

    execute('check-lorentzian', options, action, inputs=[input_file])


@cli.command('check-rayleigh')
@common_options
@input_argument
@click.option('--c', 'constant', help='Rayleigh constant (default 2(1-1/d))')
def check_rayleigh(input_file, constant, **options):
    """Check the c-Rayleigh inequalities at the given points."""

    def action(run, config):
        data = _load(run)
        f = _poly_of(data)
        raw = constant
        if raw is None and isinstance(data, dict):
            raw = data.get("c")
        c = parse_rat(raw, "c") if raw is not None else default_rayleigh_constant(f.degree)
        points = parse_points(require(data, "points"), f.nvars)
        return verdict_outcome(c_rayleigh_check(f, c, points), c=c)

    execute('check-rayleigh', options, action, inputs=[input_file])


@cli.command('check-rkt')
@common_options
@input_argument
@click.option('--optimal', is_flag=True, help='Use the binomial (volume polynomial) constant')
@click.option('--sweep', help='full, auto or sample:N (overrides the instance file)')
@click.option('--seed', type=int, help='Seed for sampled sweeps')
def check_rkt(input_file, optimal, sweep, seed, **options):
    """Check the rKT inequality at every point and splitting."""

    def action(run, config):
        data = _load(run)
        f = _poly_of(data)
        points = parse_points(require(data, "points"), f.nvars)
        use_optimal = optimal or data.get("mode") == "rkt-optimal"
        if run.sweep is not None:
            plan = SweepPlan.parse(run.sweep, run.seed)
        else:
            plan = SweepPlan.from_json(data.get("sweep"), run.seed)
        if plan.mode == "auto":
            plan = SweepPlan(mode="auto", samples=config.sample_splittings, seed=plan.seed)
        verdict = rkt_sweep(f, points, optimal=use_optimal, plan=plan,
                            max_splittings=config.max_splittings)
        return verdict_outcome(verdict, optimal=use_optimal)

    execute('check-rkt', options, action, inputs=[input_file], sweep=sweep, seed=seed)


def _triple_command(name: str, sweep_fn, doc: str):
    @cli.command(name, help=doc)
    @common_options
    @input_argument
    def command(input_file, **options):
        def action(run, config):
            data = _load(run)
            f = _poly_of(data)
            triples = parse_point_groups(require(data, "triples"), f.nvars, 3, "triples")
            return verdict_outcome(sweep_fn(f, triples))

        execute(name, options, action, inputs=[input_file])

    return command


check_pr = _triple_command(
    'check-pr', pr_sweep, "Check f(x)f(x+y+z) <= c_d f(x+y)f(x+z) on every triple.")
check_supermod = _triple_command(
    'check-supermod', supermodularity_sweep, "Check f(x+y) + f(x+z) <= f(x+y+z) + f(x).")


@cli.command('check-af-form')
@common_options
@input_argument
def check_af_form(input_file, **options):
    """Check the Alexandrov-Fenchel form of the polarization on vector groups."""

    def action(run, config):
        data = _load(run)
        f = _poly_of(data)
        groups = parse_point_groups(require(data, "vectors"), f.nvars, f.degree, "vectors")
        return verdict_outcome(af_form_sweep(f, groups))

    execute('check-af-form', options, action, inputs=[input_file])


@cli.command('mixed-volume')
@common_options
@input_argument
def mixed_volume_command(input_file, **options):
    """Exact mixed volume V(K_1[i_1], ..., K_r[i_r])."""

    def action(run, config):
        spec = MixedVolumeSpec.from_json(_load(run))
        value = mixed_volume(spec)
        return CommandOutcome(results={"mixed_volume": value,
                                       "multiplicities": list(spec.multiplicities)},
                              summary={"mixed_volume": value})

    execute('mixed-volume', options, action, inputs=[input_file])


@cli.command('volume-poly')
@common_options
@input_argument
@click.option('--polarization', is_flag=True,
              help='Cross-check interpolation against polarization')
def volume_poly(input_file, polarization, **options):
    """Volume polynomial vol(x_1 P_1 + ... + x_k P_k) and its Lorentzian verdict."""

    def action(run, config):
        data = _load(run)
        bodies = [Polytope.from_json(b) for b in require(data, "bodies")]
        f = volume_polynomial(bodies)
        verdict = is_lorentzian(f)
        extra: Dict[str, Any] = {"poly": f}
        if polarization:
            other = volume_polynomial_by_polarization(bodies)
            agreement = Verdict.passed() if other == f else Verdict.failed(
                {"interpolation": f, "polarization": other})
            extra["polarization"] = agreement
            verdict = verdict.combine_with(agreement)
        return verdict_outcome(verdict, **extra)

    execute('volume-poly', options, action, inputs=[input_file])


def _partition(parts: str, e: Optional[int]) -> Partition:
    if e is None:
        try:
            e = max((int(p) for p in parts.split(",") if p.strip()), default=1)
        except ValueError as exc:
            raise VerifierInputError(f"cannot parse partition {parts!r}", "parts") from exc
    return Partition.parse(parts, e)


@cli.command('schur')
@common_options
@click.option('--parts', required=True, help='Partition, e.g. 2,1')
@click.option('--e', 'e', type=int, help='Number of variables (default: largest part)')
def schur_command(parts, e, **options):
    """Schur polynomial det[sigma_(lambda_i - i + j)] in e variables."""

    def action(run, config):
        lam = _partition(parts, e)
        cross_check = determinant_matches_bialternant(lam)
        return verdict_outcome(cross_check, partition=lam, poly=schur(lam))

    execute('schur', options, action)


@cli.command('derived-schur')
@common_options
@click.option('--parts', required=True, help='Partition, e.g. 2,1')
@click.option('--e', 'e', type=int, help='Number of variables (default: largest part)')
@click.option('--i', 'index', type=int, help='Derivative order (default: all)')
def derived_schur_command(parts, e, index, **options):
    """Coefficients of t^i in s_lambda(x_1 + t, ..., x_e + t)."""

    def action(run, config):
        lam = _partition(parts, e)
        if index is None:
            polys = {str(i): p for i, p in enumerate(derived_schur_all(lam))}
        else:
            polys = {str(index): derived_schur(lam, None, index)}
        return CommandOutcome(results={"partition": lam, "derived": polys},
                              summary={"computed": len(polys)})

    execute('derived-schur', options, action)


@cli.command('mixed-disc')
@common_options
@input_argument
def mixed_disc(input_file, **options):
    """Mixed discriminant D(A_1[i_1], ..., A_r[i_r])."""

    def action(run, config):
        data = _load(run)
        raw = require(data, "matrices")
        if not isinstance(raw, list) or not raw:
            raise VerifierInputError("'matrices' must be a nonempty list", "matrices")
        matrices = [matrix_from_json(m, "matrices") for m in raw]
        multiplicities = data.get("multiplicities", [1] * len(matrices))
        value = mixed_discriminant_with(matrices, multiplicities)
        return CommandOutcome(results={"mixed_discriminant": value},
                              summary={"mixed_discriminant": value})

    execute('mixed-disc', options, action, inputs=[input_file])


@cli.command('schur-af')
@common_options
@input_argument
def schur_af(input_file, **options):
    """Alexandrov-Fenchel inequality for a Schur-type valuation."""

    def action(run, config):
        data = _load(run)
        spec = SchurValuationSpec.from_json(data)
        m_body = Polytope.from_json(require(data, "M"))
        n_body = Polytope.from_json(require(data, "N"))
        verdict = schur_af_check(spec, m_body, n_body)
        return verdict_outcome(verdict, theta_MN=schur_valuation(spec, m_body, n_body))

    execute('schur-af', options, action, inputs=[input_file])


@cli.command('polymatroid')
@common_options
@input_argument
def polymatroid(input_file, **options):
    """Rank vector of nd on a ground set and the polymatroid axioms."""

    def action(run, config):
        oracle = RankOracle(GroundSet.from_json(_load(run)))
        verdict = check_polymatroid(oracle, config.max_ground_set)
        ranks = rank_vector(oracle, config.max_ground_set)
        return verdict_outcome(verdict, ranks=ranks,
                               is_matroid=is_matroid(oracle, config.max_ground_set))

    execute('polymatroid', options, action, inputs=[input_file])


@cli.command('fuzz')
@common_options
@click.argument('mode')
@click.option('--seed', type=int, help='Corpus seed')
@click.option('--trials', type=int, help='Number of trials')
@click.option('--workers', type=int,
              help='Worker processes (default: LORENTZ_VERIFIER_WORKERS or 1)')
@click.option('--budget-ms', type=int, help='Stop starting new trials after this many ms')
@click.option('--csv', 'csv_path', type=click.Path(), help='Write per-trial margins as CSV')
def fuzz(mode, seed, trials, workers, budget_ms, csv_path, **options):
    """Run a deterministic fuzz campaign for MODE."""

    def action(run, config):
        trial = CheckerRegistry().get_trial(mode)
        settings = FuzzSettings(points_per_instance=config.points_per_instance,
                                max_dim=config.max_dim,
                                max_vertices=config.max_vertices,
                                sample_splittings=config.sample_splittings,
                                max_splittings=config.max_splittings)
        result = run_fuzz(mode, trial, run.seed, run.trials, settings, run.workers, run.budget_ms)
        csv_target = run.csv
        if csv_target is None and config.emit_csv and run.out is not None:
            csv_target = run.out.with_suffix(".csv")
        if csv_target is not None:
            write_margin_csv(result, csv_target)
        report = fuzz_report(result, f"fuzz {mode}")
        return CommandOutcome(results=report["results"], summary=report["summary"],
                              holds=result.holds, inputs=report["inputs"])

    execute('fuzz', options, action, seed=seed, trials=trials, workers=workers,
            budget_ms=budget_ms, csv=csv_path)


@cli.command('reproduce')
@common_options
@click.argument('name')
def reproduce(name, **options):
    """Run a named reproduction; expected violations count as success."""

    def action(run, config):
        result = ReproductionRegistry().run(name)
        return CommandOutcome(
            results=result.to_json(),
            summary={"violation_found": result.violation_found,
                     "matches_expectation": result.matches_expectation},
            holds=result.matches_expectation,
            expected_violation=result.expected_violation,
        )

    execute('reproduce', options, action)


if __name__ == '__main__':
    cli()
