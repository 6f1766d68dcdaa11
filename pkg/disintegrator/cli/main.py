"""
Command-Line Interface - Disintegrator

Batch front end over the library. Every subcommand loads its inputs,
computes, and writes one report (JSON or CSV) to stdout or --out. Failures
are reported as an error object in the same report; the exit code is 2 for
broken contracts and 3 for exhausted fuel. Progress and logs go to stderr.

Usage:
    python -m disintegrator reduce-demo --x 101 --k-max 8
    python -m disintegrator converge-table --n 8..12 --atom 0 --format csv

Author: Disintegrator Team
Date: 2026-10-17
"""

import functools
import logging
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import click
from dotenv import load_dotenv
from pydantic import ValidationError
from tqdm import tqdm

from disintegrator.conditioning import condition as condition_measure, condition_fiber, marginal
from disintegrator.constructions import (
    DyadicBasis, MuX, cell_ratio, iota_modulus, iota_of, mixture, nu_at_zero, reduce_demo as run_reduction,
    rho_inverse,
)
from disintegrator.disintegration import (
    DisintegrationResult, claim_rate, cylinder_scheme, fraser_naderi, modulus_disintegrate, tjur_disintegrate,
    trivial_modulus,
)
from disintegrator.exact_reals import dyadic
from disintegrator.measures import (
    ContinuitySetName, FiniteDiscreteMeasure, continuity_basis, load_spec, prokhorov, validate_spec as diagnose,
)
from disintegrator.oracle_harness import Enumeration, FuelPolicy
from disintegrator.shared.config import get_config
from disintegrator.shared.exceptions import ConfigException, DisintegratorException, SpaceMismatch
from disintegrator.shared.logging_setup import configure_logging
from disintegrator.shared.utils import bits_to_str, log_section, log_subsection
from disintegrator.spaces import NatSet, ProductSpace, UltrametricPair, UnitInterval
from .parsing import parse_bits, parse_point, parse_range, parse_region, probe_regions, region_label
from .reports import ErrorObject, Report, RunConfig, enclosure, failure, rational, write_report

logger = logging.getLogger(__name__)

SPEC = click.Path(exists=True, dir_okay=False, path_type=Path)


def common_options(command: Callable) -> Callable:
    """--precision, --fuel, --out, --format, --quiet."""
    options = [
        click.option("--precision", "-p", type=int, default=None, help="Precision k (enclosures to 2^-k)"),
        click.option("--fuel", type=int, default=None, help="Stages spent on semidecisions and searches"),
        click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None),
        click.option("--format", "format", type=click.Choice(["json", "csv"]), default="json"),
        click.option("--quiet", is_flag=True, help="No progress bars"),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _inputs(options: Dict[str, Any]) -> Dict[str, Any]:
    out = {}
    for key, value in sorted(options.items()):
        if value is None or key in ("out", "quiet", "format"):
            continue
        out[key] = str(value) if isinstance(value, Path) else list(value) if isinstance(value, tuple) else value
    return out


def run(ctx: click.Context, command: str, options: Dict[str, Any], body: Callable[[RunConfig, Report], None]) -> None:
    """Validate options, run body, write the report, exit with its code."""
    started = time.perf_counter()
    inputs = _inputs(options)
    fields = {k: v for k, v in options.items() if v is not None and k in RunConfig.model_fields}
    try:
        config = RunConfig(command=command, **fields)
    except ValidationError as e:
        problems = "; ".join(f"{'.'.join(map(str, item['loc']))}: {item['msg']}" for item in e.errors())
        report = failure(command, ConfigException(problems), inputs)
        click.echo(report.to_json())
        ctx.exit(report.error.exit_code)
        return

    report = Report(command=command, inputs=inputs)
    try:
        body(config, report)
    except DisintegratorException as e:
        report = failure(command, e, inputs)
    except ValueError as e:
        report = failure(command, ConfigException(str(e)), inputs)
    report.timing["seconds"] = round(time.perf_counter() - started, 6)
    write_report(report, config, click.echo)
    if report.error is not None:
        ctx.exit(report.error.exit_code)


def command(name: str):
    """click command whose body receives (config, report, options)."""
    def decorate(fn):
        @cli.command(name)
        @common_options
        @click.pass_context
        @functools.wraps(fn)
        def wrapper(ctx, **options):
            run(ctx, name, options, lambda config, report: fn(config, report, options))
        return wrapper
    return decorate


def _policy(witness_bound: Optional[int], oracle_fuel: Optional[int]) -> FuelPolicy:
    if oracle_fuel is not None:
        return FuelPolicy.fuel_bounded(oracle_fuel)
    return FuelPolicy.exact(witness_bound)


# ===== GROUP =====


@click.group()
@click.option("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR")
@click.option("--log-json/--log-plain", default=None)
def cli(log_level: Optional[str], log_json: Optional[bool]) -> None:
    """Exact conditioning and disintegration of measures."""
    load_dotenv()
    configure_logging(log_level, log_json)


# ===== SUBCOMMANDS =====


@command("condition")
@click.option("--spec", type=SPEC, required=True)
@click.option("--on", "on", required=True, help="Conditioning region, e.g. 0:1/2 or w:01")
@click.option("--fiber", is_flag=True, help="Condition on the second factor only")
@click.option("--probe", multiple=True, help="Region to evaluate (repeatable)")
def condition(config: RunConfig, report: Report, options: Dict[str, Any]) -> None:
    """Conditioned masses of probe regions."""
    space, mu = load_spec(config.spec)
    target = space
    if options["fiber"]:
        if not isinstance(space, ProductSpace) or len(space.factors) != 2:
            raise SpaceMismatch(f"--fiber needs a two-factor product, got {space}")
        target = space.factors[1]
    h = ContinuitySetName.from_region(target, parse_region(target, options["on"]), label=options["on"])
    if options["fiber"]:
        conditioned = condition_fiber(mu, h, config.fuel)
    else:
        conditioned = condition_measure(mu, h, config.fuel)

    if options["probe"]:
        probes = [parse_region(space, p) for p in options["probe"]]
    elif isinstance(space, ProductSpace):
        probes = [space.whole]
    else:
        probes = probe_regions(space, 4)
    for region in tqdm(probes, desc="probes", disable=config.quiet):
        value = conditioned.box_mass(region).refine(config.precision)
        report.rows.append({"region": region_label(region), "lo": rational(value.lo), "hi": rational(value.hi)})
    report.result = {
        "measure": mu.describe(),
        "certified_at": conditioned.certified_at,
        "masses": {row["region"]: [row["lo"], row["hi"]] for row in report.rows},
    }


@command("disintegrate")
@click.option("--spec", type=SPEC, required=True)
@click.option("--point", required=True, help="Point of the second factor")
@click.option("--mode", type=click.Choice(["tjur", "modulus", "fn"]), default="tjur")
@click.option("--atoms", type=int, default=8, help="Probe regions reported")
@click.option("--witness-bound", type=int, default=None, help="Exact oracle stage bound")
@click.option("--oracle-fuel", type=int, default=None, help="Use a fuel-bounded oracle instead")
@click.option("--fallback-after", type=int, default=None, help="Fraser-Naderi stage budget before the marginal")
def disintegrate(config: RunConfig, report: Report, options: Dict[str, Any]) -> None:
    """Disintegration at a point, with error tag and verified flag."""
    space, mu = load_spec(config.spec)
    if not isinstance(space, ProductSpace) or len(space.factors) != 2:
        raise SpaceMismatch(f"disintegration needs a measure on S x T, got {space}")
    source, target = space.factors
    if config.point is None:
        raise ConfigException("--point is required")
    t = parse_point(target, config.point)
    k = config.precision
    policy = _policy(options["witness_bound"], options["oracle_fuel"])
    basis = DyadicBasis() if isinstance(target, UnitInterval) else None

    mode = options["mode"]
    if mode == "tjur":
        result = tjur_disintegrate(mu, t, k, policy, basis, config.fuel)
    elif mode == "modulus":
        if isinstance(mu, MuX):
            bound = options["witness_bound"] or get_config().witness_bound
            mod = iota_modulus(iota_of(mu.table, bound), basis)
        else:
            mod = trivial_modulus(basis or continuity_basis(marginal(mu, 1)))
        result = modulus_disintegrate(mu, mod, t, k)
    else:
        if target != UltrametricPair():
            raise SpaceMismatch(f"Fraser-Naderi cylinders live on 2^w x 2^w, not {target}")
        stream = fraser_naderi(mu, cylinder_scheme(), t)
        budget = options["fallback_after"]
        if budget is not None:
            measure, how = stream.settle(budget, k)
            error = dyadic(k) if how == "term" else Fraction(1)
            result = DisintegrationResult(
                measure, index=budget, error=error, verified=False, method="fraser-naderi", details={"settled": how},
            )
        else:
            result = stream.limit(k, claim_rate)
            result.details["rate"] = "claimed p+3"

    for region in tqdm(probe_regions(source, options["atoms"]), desc="atoms", disable=config.quiet):
        value = result.enclose(region, k + 4)
        report.rows.append({"region": region_label(region), "lo": rational(value.lo), "hi": rational(value.hi)})
    report.result = {
        **result.to_dict(),
        "measure": mu.describe(),
        "enclosures": {row["region"]: [row["lo"], row["hi"]] for row in report.rows},
    }
    report.verified = result.verified


@command("prokhorov")
@click.option("--spec", type=SPEC, required=True)
@click.option("--other", type=SPEC, required=True, help="Second measure-spec file")
def prokhorov_distance(config: RunConfig, report: Report, options: Dict[str, Any]) -> None:
    """Prokhorov distance of two finite-discrete measures."""
    _, mu = load_spec(config.spec)
    _, nu = load_spec(options["other"])
    if not isinstance(mu, FiniteDiscreteMeasure) or not isinstance(nu, FiniteDiscreteMeasure):
        raise ConfigException("prokhorov compares two finite-discrete measures")
    if mu.space != nu.space:
        raise SpaceMismatch(f"{mu.space} and {nu.space}")
    distance = prokhorov(mu, nu).refine(config.precision)
    report.result = {"distance": enclosure(distance)}


@command("reduce-demo")
@click.option("--x", "x", required=True, help="Bits of x, e.g. 101")
@click.option("--k-max", type=int, default=8, help="Bits recovered")
@click.option("--witness-bound", type=int, default=None)
@click.option("--oracle-fuel", type=int, default=None, help="Use a fuel-bounded oracle instead")
def reduce_demo(config: RunConfig, report: Report, options: Dict[str, Any]) -> None:
    """Recover x through disintegration of mu_x at 0."""
    bits = parse_bits(options["x"])
    if options["k_max"] < 1:
        raise ConfigException("--k-max must be >= 1")
    policy = _policy(options["witness_bound"], options["oracle_fuel"])
    log_section(f"REDUCTION: x = {bits_to_str(bits)}")
    outcome = run_reduction(Enumeration.from_bits(bits), options["k_max"], policy, fuel=config.fuel)
    report.result = {
        "bits": bits_to_str(outcome.bits),
        "oracle": policy.describe(),
        "inputs": outcome.inputs,
        "stages": outcome.stages,
    }
    report.verified = outcome.verified


@command("converge-table")
@click.option("--x", "x", default="0101", help="Bits of x; the point is (0^w, rho_inverse(x))")
@click.option("--n", "n", default="8..12", help="Prefix lengths, e.g. 8..12")
@click.option("--atom", "atom", type=int, multiple=True, help="k for the atom {2k} (repeatable; default 0..5)")
def converge_table(config: RunConfig, report: Report, options: Dict[str, Any]) -> None:
    """Mixture ratios at a faithful point against the closed form."""
    bits = parse_bits(options["x"])
    lengths = parse_range(options["n"])
    if not lengths or min(lengths) < 1:
        raise ConfigException("--n needs at least one positive prefix length")
    atoms = list(options["atom"]) or list(range(6))
    s = rho_inverse(Enumeration.from_bits(bits))
    mu = mixture()
    iotas = lambda m: 0 if m < len(bits) and bits[m] else None  # noqa: E731
    log_subsection(f"CONVERGENCE: x = {bits_to_str(bits)}, n in {lengths[0]}..{lengths[-1]}")
    cells = [(n, k) for n in lengths for k in atoms]
    all_within = True
    for n, k in tqdm(cells, desc="ratios", disable=config.quiet):
        ratio = cell_ratio(mu, NatSet.of(2 * k), "0" * n, s.prefix(n)).refine(n + 6)
        target = nu_at_zero(iotas, 2 * k)
        deviation = max(abs(ratio.hi - target), abs(ratio.lo - target))
        bound = dyadic(n - 3)
        all_within &= deviation <= bound
        report.rows.append({
            "n": n, "k": k, "lo": rational(ratio.lo), "hi": rational(ratio.hi),
            "closed_form": rational(target), "deviation": rational(deviation), "bound": rational(bound),
            "within": deviation <= bound,
        })
    report.result = {"point": s.prefix(max(lengths)), "all_within": all_within}


@cli.command("validate-spec")
@click.argument("path", type=click.Path(dir_okay=False, path_type=Path))
@click.pass_context
def validate_spec(ctx: click.Context, path: Path) -> None:
    """Check a measure-spec file."""
    diagnostics = diagnose(path) if path.exists() else [f"{path}: no such file"]
    report = Report(command="validate-spec", inputs={"path": str(path)})
    report.result = {"valid": not diagnostics, "diagnostics": diagnostics}
    if diagnostics:
        report.verified = False
        report.error = ErrorObject(
            type="SpecValidationError", message="; ".join(diagnostics), exit_code=2, diagnostics=diagnostics,
        )
    click.echo(report.to_json())
    if diagnostics:
        ctx.exit(2)
