### becqubits command-line entry point
### -----------------------------------

import json
import sys
import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

import click
import numpy as np
from pydantic import ValidationError
from rich.console import Console
from rich.panel import Panel
from rich.progress import Progress
from rich.table import Table

from core import __version__, parse_state_spec
from core.errors import BecQubitsError, EXIT_CONFIG, EXIT_INTERRUPTED, EXIT_OK, EXIT_USAGE, InconclusiveError, ValidationFailure
from config.run_config import RunConfig, build_run_config, load_parameter_file, load_preset
from config.presets_util import presets as presets_group
from cache.profile_cache import ProfileCache
from decoherence import DEFAULT_QUADRATURE
from decoherence.profile import build_profile, uniform_grid
from dynamics.dephasing_map import evolve_on_grid, write_density_trajectory
from dynamics.master_equation import integrate_me
from dynamics.non_markov import non_markov_report
from correlations.trajectory import correlation_trajectory
from monitor import resources
from logs import default_log_dir, get_log_manager, setup_logging
from scenarios import DEFAULT_SCENARIO_OPTIONS
from scenarios.runner import ScenarioRunner

console = Console()
logger = logging.getLogger("becqubits")

DEFAULT_PRESET = "cs-rb-default"
SIDECAR_SUFFIX = ".meta.json"
PEAK_QUADRATURE_NODES = 200_000
# click parameters that locate inputs and outputs rather than define the run
_LOCATION_PARAMS = ("config", "preset", "output", "cache_dir", "no_cache")


def sidecar_path(output: Path) -> Path:
    return Path(str(output) + SIDECAR_SUFFIX)


def write_sidecar(output: Path, command: str, run_config: RunConfig, cli_params: Dict,
                  cache_key: Optional[str] = None, extra_outputs: Optional[List[str]] = None) -> Path:
    """Everything needed to re-run ``command``; no timestamps so reruns are byte-identical."""
    block, parameters = run_config.parameter_block()
    meta = {
        "becqubits_version": __version__,
        "command": command,
        "block": block,
        "parameters": parameters,
        "reservoir": run_config.reservoir().as_dict(),
        "time_unit_seconds": run_config.time_unit_seconds(),
        "options": run_config.options.model_dump(),
        "cli_params": {k: v for k, v in cli_params.items() if k not in _LOCATION_PARAMS},
        "profile_cache_key": cache_key,
        "outputs": [str(output)] + list(extra_outputs or []),
    }
    path = sidecar_path(output)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        json.dump(meta, f, indent=2, sort_keys=True)
        f.write("\n")
    return path


def load_block(config: Optional[str], preset: Optional[str]) -> Tuple[str, Dict]:
    if config and preset:
        raise click.UsageError("use either --config or --preset, not both")
    if config:
        return load_parameter_file(config)
    return load_preset(preset or DEFAULT_PRESET)


def make_run_config(command: str, config: Optional[str], preset: Optional[str], options: Dict,
                    output: Optional[str] = None, cache_dir: Optional[str] = None) -> RunConfig:
    block, parameters = load_block(config, preset)
    data = {block: parameters, "scenario": command, "options": options,
            "output": output, "cache_dir": cache_dir}
    return build_run_config(data)


def show_resource_warnings(output: Optional[str], n_points: int = 0):
    checks = [resources.check_memory_usage()]
    if output:
        checks.append(resources.check_disk_usage(Path(output).parent))
    if n_points:
        checks.append(resources.estimate_grid_memory(n_points, n_nodes=PEAK_QUADRATURE_NODES))
    warnings = [c["warning"] for c in checks if "warning" in c]
    if warnings:
        console.print(Panel("\n".join(warnings), title="Resource Warning", border_style="yellow"))


def build_cached_profile(run_config: RunConfig, t_grid, no_cache: bool):
    """Profile for the configured reservoir, through the cache unless disabled."""
    p = run_config.reservoir()
    opts = run_config.options
    with Progress(console=console, transient=True) as progress:
        task = progress.add_task("[cyan]Computing decoherence factors...", total=len(t_grid))
        advance = lambda done, total: progress.update(task, completed=done)
        if no_cache:
            return build_profile(p, t_grid, tol=opts.tol, cross_talk=opts.cross_talk, progress=advance), None
        profile, key, hit = ProfileCache(run_config.cache_dir).get_or_build(
            p, t_grid, tol=opts.tol, cross_talk=opts.cross_talk, progress=advance)
    if hit:
        console.print(f"[dim]Profile loaded from cache ({key[:12]})[/dim]")
    return profile, key


def dispatch(ctx: click.Context, command: str, work: Callable[[], Tuple[List[str], object, str]]) -> int:
    """
    Run ``work`` under the scenario runner, record the run in the ledger and
    render its summary. ``work`` returns (outputs, summary renderable, config hash).
    """
    if ctx.params.get("config") and ctx.params.get("preset"):
        raise click.UsageError("use either --config or --preset, not both")
    runner = ScenarioRunner()
    result = runner.execute(command, work)
    outputs, config_hash, message = [], "", ""
    if result.success:
        outputs, summary, config_hash = result.value
        console.print(summary)
    else:
        message = result.error_message or result.status.value
        if isinstance(result.error, ValidationError):
            message = f"invalid configuration: {result.error.errors()[0]['msg']}"
        console.print(f"[red]Error ({result.status.value}):[/red] {message}")
        if ctx.obj.get("verbose") and result.error is not None:
            logger.exception("Run failed", exc_info=result.error)

    get_log_manager(log_dir=str(default_log_dir())).log_run(
        command=command,
        status=result.status.name,
        exit_code=result.exit_code,
        elapsed=result.elapsed,
        config_hash=config_hash,
        outputs=outputs,
        resource_usage=result.resource_usage,
        message=message,
    )
    if result.exit_code == EXIT_INTERRUPTED:
        raise click.Abort()
    return result.exit_code


def parameter_options(default_output: str):
    def decorator(f):
        f = click.option('--no-cache', is_flag=True, help='Recompute the decoherence profile even if cached')(f)
        f = click.option('--cache-dir', type=click.Path(file_okay=False), default=None,
                         help='Profile cache directory (default: $BECQUBITS_CACHE_DIR or a temp dir)')(f)
        f = click.option('--output', '-o', type=click.Path(dir_okay=False), default=default_output,
                         show_default=True, help='CSV output path')(f)
        f = click.option('--preset', '-p', default=None, help=f'Named parameter preset (default {DEFAULT_PRESET})')(f)
        f = click.option('--config', '-c', 'config', type=click.Path(exists=True, dir_okay=False), default=None,
                         help='JSON parameter file or a run sidecar')(f)
        return f
    return decorator


@click.group()
@click.option('--verbose', '-v', is_flag=True, help='Verbose output')
@click.version_option(version=__version__)
@click.pass_context
def cli(ctx, verbose):
    """Exact dephasing dynamics of two double-well qubits in a Bose-Einstein condensate."""
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    setup_logging(verbose)


@cli.command()
@parameter_options("rates.csv")
@click.option('--t-max', type=float, required=True, help='Last time point (dimensionless)')
@click.option('--dt', type=float, required=True, help='Grid spacing')
@click.option('--tol', type=float, default=DEFAULT_QUADRATURE["tol"], show_default=True, help='Quadrature tolerance')
@click.option('--no-cross-talk', is_flag=True, help='Independent environments (delta = 0, no phase)')
@click.pass_context
def rates(ctx, config, preset, output, cache_dir, no_cache, t_max, dt, tol, no_cross_talk):
    """Tabulate Gamma_0, delta, Gamma_+-, their rates and Pi_zz on a uniform grid."""
    def work():
        rc = make_run_config("rates", config, preset,
                             {"t_max": t_max, "dt": dt, "tol": tol, "cross_talk": not no_cross_talk},
                             output, cache_dir)
        t_grid = uniform_grid(t_max, dt)
        show_resource_warnings(output, t_grid.size)
        profile, key = build_cached_profile(rc, t_grid, no_cache)
        profile.to_csv(output)
        write_sidecar(Path(output), "rates", rc, ctx.params, key)
        report = non_markov_report(profile)

        summary = Table(title="Decoherence factors at t_max")
        summary.add_column("Quantity", style="cyan")
        summary.add_column("Value", justify="right")
        for name in ("gamma0", "delta", "gamma_plus", "gamma_minus", "pi_zz"):
            summary.add_row(name, f"{getattr(profile, name)[-1]:.8g}")
        summary.add_row("negative Gamma_+ rate", str(report.negative_plus or "none"))
        summary.add_row("negative Gamma_- rate", str(report.negative_minus or "none"))
        summary.add_row("Gamma_+- >= 0", "yes" if report.cp else "[red]no[/red]")
        seconds = rc.time_unit_seconds()
        if seconds is not None:
            summary.add_row("t_max in seconds", f"{profile.t_end * seconds:.6g}")
        return [output], summary, rc.config_hash()

    return dispatch(ctx, "rates", work)


@cli.command()
@parameter_options("trajectory.csv")
@click.option('--state', '-s', default="werner:+:0.5", show_default=True,
              help='Initial state: werner:{+|-}:{c}, product+ or basis:{LL|LR|RL|RR}')
@click.option('--t-max', type=float, required=True, help='Last time point (dimensionless)')
@click.option('--dt', type=float, default=0.05, show_default=True, help='Grid spacing')
@click.option('--tol', type=float, default=DEFAULT_QUADRATURE["tol"], show_default=True, help='Quadrature tolerance')
@click.option('--no-phase', is_flag=True, help='Drop the Pi_zz phase')
@click.option('--no-cross-talk', is_flag=True, help='Independent environments (delta = 0, no phase)')
@click.option('--integrator', type=click.Choice(["map", "me"]), default="map", show_default=True,
              help='Exact map or time-local master equation')
@click.option('--discord', 'with_discord', is_flag=True, help='Also compute quantum discord')
@click.option('--density-output', type=click.Path(dir_okay=False), default=None,
              help='Also write the density matrices (re/im columns)')
@click.pass_context
def evolve(ctx, config, preset, output, cache_dir, no_cache, state, t_max, dt, tol, no_phase,
           no_cross_talk, integrator, with_discord, density_output):
    """Evolve a two-qubit state and write its correlation trajectory."""
    def work():
        rc = make_run_config("evolve", config, preset,
                             {"state": state, "t_max": t_max, "dt": dt, "tol": tol,
                              "include_phase": not no_phase, "cross_talk": not no_cross_talk,
                              "integrator": integrator},
                             output, cache_dir)
        rho0 = parse_state_spec(state)
        t_grid = uniform_grid(t_max, dt)
        profile, key = build_cached_profile(rc, t_grid, no_cache)
        if integrator == "me":
            states = integrate_me(rho0, profile, profile.t_end, include_phase=not no_phase).states
        else:
            states = evolve_on_grid(rho0, profile, include_phase=not no_phase)
        trajectory = correlation_trajectory(states, profile.t_grid, with_discord=with_discord)
        trajectory.to_csv(output)
        outputs = [output]
        if density_output:
            write_density_trajectory(density_output, profile.t_grid, states)
            outputs.append(density_output)
        write_sidecar(Path(output), "evolve", rc, ctx.params, key, outputs[1:])

        i_peak = int(np.argmax(trajectory.concurrence))
        body = (f"[bold]State:[/bold] {state}\n"
                f"[bold]Integrator:[/bold] {integrator}\n"
                f"[bold]Concurrence:[/bold] {trajectory.concurrence[0]:.6f} at t=0, "
                f"{trajectory.concurrence[-1]:.6f} at t={profile.t_end:g}\n"
                f"[bold]Peak:[/bold] {trajectory.concurrence[i_peak]:.6f} at t={profile.t_grid[i_peak]:g}")
        return outputs, Panel(body, title="Evolution", border_style="green"), rc.config_hash()

    return dispatch(ctx, "evolve", work)


@cli.command("phase-diagram")
@parameter_options("phase_diagram.csv")
@click.option('--sign', type=click.Choice(["+", "-"]), default=DEFAULT_SCENARIO_OPTIONS["sign"], show_default=True,
              help='Werner state sign')
@click.option('--c-min', type=float, default=DEFAULT_SCENARIO_OPTIONS["c_min"], show_default=True)
@click.option('--c-max', type=float, default=DEFAULT_SCENARIO_OPTIONS["c_max"], show_default=True)
@click.option('--c-points', type=int, default=DEFAULT_SCENARIO_OPTIONS["c_points"], show_default=True)
@click.option('--a-min', type=float, default=DEFAULT_SCENARIO_OPTIONS["a_min"], show_default=True, help='a_B in units of a_Rb')
@click.option('--a-max', type=float, default=DEFAULT_SCENARIO_OPTIONS["a_max"], show_default=True)
@click.option('--a-points', type=int, default=DEFAULT_SCENARIO_OPTIONS["a_points"], show_default=True)
@click.option('--horizon', type=float, default=None, help='Classification horizon (default: per column)')
@click.option('--eps-c', type=float, default=DEFAULT_SCENARIO_OPTIONS["eps_c"], show_default=True, help='Concurrence threshold')
@click.option('--tol', type=float, default=DEFAULT_QUADRATURE["tol"], show_default=True, help='Quadrature tolerance')
@click.option('--compare-temperature', type=float, default=None,
              help='Also run at FACTOR times the temperature and compare')
@click.pass_context
def phase_diagram_cmd(ctx, config, preset, output, cache_dir, no_cache, sign, c_min, c_max, c_points,
                      a_min, a_max, a_points, horizon, eps_c, tol, compare_temperature):
    """Classify Werner dynamics over (a_B, c): sudden death, revivals or trapping."""
    from scenarios.classify import DynamicsLabel
    from scenarios.phase_diagram import phase_diagram, sensitive_band, boundary_violations, temperature_comparison

    def work():
        c_values = np.linspace(c_min, c_max, c_points).tolist()
        a_values = np.linspace(a_min, a_max, a_points).tolist()
        rc = make_run_config("phase-diagram", config, preset,
                             {"sign": sign, "c_values": c_values, "a_values": a_values, "horizon": horizon,
                              "eps_c": eps_c, "tol": tol, "temperature_factor": compare_temperature},
                             output, cache_dir)
        template = rc.reservoir()
        common = dict(a_ref_ratio=rc.a_ref_ratio(), horizon=horizon, eps_c=eps_c, tol=tol)
        outputs = [output]
        if compare_temperature:
            comparison = temperature_comparison(template, c_values, a_values, sign,
                                                factor=compare_temperature, **common)
            diagram = comparison["cold"]
            hot_path = str(Path(output).with_name(Path(output).stem + "_hot.csv"))
            comparison["hot"].to_csv(hot_path)
            outputs.append(hot_path)
        else:
            comparison = None
            diagram = phase_diagram(template, c_values, a_values, sign, **common)
        diagram.to_csv(output)
        write_sidecar(Path(output), "phase-diagram", rc, ctx.params, None, outputs[1:])

        table = Table(title=f"Phase diagram ({len(a_values)} x {len(c_values)}, sign {sign})")
        table.add_column("Label", style="cyan")
        table.add_column("Cells", justify="right")
        for label in DynamicsLabel:
            table.add_row(label.value, str(diagram.count(label)))
        if comparison:
            table.add_row(f"SUDDEN_DEATH at x{compare_temperature:g} T", str(comparison["sudden_death_hot"]))
        widths = [b["width"] for b in sensitive_band(diagram) if b["width"] is not None]
        if widths:
            table.add_row("widest transition band", f"{max(widths):.4f}")
        violations = boundary_violations(diagram)
        if violations:
            table.add_row("[yellow]boundary violations[/yellow]", str(len(violations)))
        if diagram.inconclusive:
            console.print(table)
            raise InconclusiveError(f"{diagram.inconclusive} cells did not converge within the horizon; "
                                    f"results written to {output}")
        return outputs, table, rc.config_hash()

    return dispatch(ctx, "phase-diagram", work)


def _scan_values(variable: str, lo: Optional[float], hi: Optional[float], points: int) -> List[float]:
    defaults = {"a_B": (0.5, 4.0), "D": (2.0, 40.0)}[variable]
    return np.linspace(defaults[0] if lo is None else lo, defaults[1] if hi is None else hi, points).tolist()


@cli.command("scan-stationary")
@parameter_options("stationary_scan.csv")
@click.option('--variable', type=click.Choice(["a_B", "D"]), default="a_B", show_default=True,
              help='a_B in units of a_Rb, or D in units of L')
@click.option('--min', 'lo', type=float, default=None)
@click.option('--max', 'hi', type=float, default=None)
@click.option('--points', type=int, default=20, show_default=True)
@click.option('--c', 'c', type=float, default=1.0, show_default=True, help='Werner mixing parameter')
@click.option('--sign', type=click.Choice(["+", "-"]), default="+", show_default=True)
@click.option('--tol', type=float, default=DEFAULT_QUADRATURE["tol"], show_default=True)
@click.option('--no-cross-talk', is_flag=True, help='Independent environments')
@click.pass_context
def scan_stationary(ctx, config, preset, output, cache_dir, no_cache, variable, lo, hi, points, c, sign, tol,
                    no_cross_talk):
    """Stationary Werner concurrence against a_B or D."""
    from scenarios.scans import stationary_scan, independent_limit

    def work():
        values = _scan_values(variable, lo, hi, points)
        rc = make_run_config("scan-stationary", config, preset,
                             {"variable": variable, "values": values, "c": c, "sign": sign, "tol": tol,
                              "cross_talk": not no_cross_talk},
                             output, cache_dir)
        series = stationary_scan(rc.reservoir(), variable, values, c, sign, a_ref_ratio=rc.a_ref_ratio(),
                                 tol=tol, cross_talk=not no_cross_talk)
        series.to_csv(output, value_name="residual")
        write_sidecar(Path(output), "scan-stationary", rc, ctx.params)

        table = Table(title=f"Stationary concurrence vs {variable}")
        table.add_column("x", justify="right")
        table.add_column("residual", justify="right")
        for x, v in zip(series.x, series.value):
            table.add_row(f"{x:.4g}", f"{v:.6f}")
        worst = max((chk["deviation"] for chk in series.cross_checks), default=0.0)
        table.caption = f"horizon cross-check deviation {worst:.2e}"
        if variable == "D":
            table.caption += f"; independent-environment limit {independent_limit(rc.reservoir(), c, sign, tol):.6f}"
        return [output], table, rc.config_hash()

    return dispatch(ctx, "scan-stationary", work)


@cli.command("scan-generation")
@parameter_options("generation_scan.csv")
@click.option('--variable', type=click.Choice(["a_B", "D"]), default="a_B", show_default=True)
@click.option('--min', 'lo', type=float, default=None)
@click.option('--max', 'hi', type=float, default=None)
@click.option('--points', type=int, default=6, show_default=True)
@click.option('--tol', type=float, default=DEFAULT_QUADRATURE["tol"], show_default=True)
@click.pass_context
def scan_generation(ctx, config, preset, output, cache_dir, no_cache, variable, lo, hi, points, tol):
    """Peak generated concurrence and its time against a_B or D."""
    from scenarios.scans import generation_scan

    def work():
        values = _scan_values(variable, lo, hi, points)
        rc = make_run_config("scan-generation", config, preset,
                             {"variable": variable, "values": values, "tol": tol}, output, cache_dir)
        series = generation_scan(rc.reservoir(), variable, values, a_ref_ratio=rc.a_ref_ratio(), tol=tol)
        series.to_csv(output, value_name="c_max")
        write_sidecar(Path(output), "scan-generation", rc, ctx.params)

        table = Table(title=f"Entanglement generation vs {variable}")
        table.add_column("x", justify="right")
        table.add_column("C_max", justify="right")
        table.add_column("t_max", justify="right")
        for x, cm, tm in zip(series.x, series.value, series.t_max):
            table.add_row(f"{x:.4g}", f"{cm:.6f}", f"{tm:.4g}")
        return [output], table, rc.config_hash()

    return dispatch(ctx, "scan-generation", work)


@cli.command("discord-compare")
@parameter_options("discord.csv")
@click.option('--c', 'c', type=float, default=0.5, show_default=True, help='Werner mixing parameter')
@click.option('--sign', type=click.Choice(["+", "-"]), default="+", show_default=True)
@click.option('--t-max', type=float, default=30.0, show_default=True)
@click.option('--dt', type=float, default=0.1, show_default=True)
@click.option('--eps-c', type=float, default=DEFAULT_SCENARIO_OPTIONS["eps_c"], show_default=True)
@click.option('--tol', type=float, default=DEFAULT_QUADRATURE["tol"], show_default=True)
@click.pass_context
def discord_compare(ctx, config, preset, output, cache_dir, no_cache, c, sign, t_max, dt, eps_c, tol):
    """Concurrence and discord of an evolving Werner state."""
    from scenarios.scans import discord_comparison_run

    def work():
        rc = make_run_config("discord-compare", config, preset,
                             {"c": c, "sign": sign, "t_max": t_max, "dt": dt, "eps_c": eps_c, "tol": tol},
                             output, cache_dir)
        trajectory, comparison = discord_comparison_run(rc.reservoir(), c, sign, uniform_grid(t_max, dt),
                                                        eps_c=eps_c, tol=tol)
        trajectory.to_csv(output)
        write_sidecar(Path(output), "discord-compare", rc, ctx.params)
        body = (f"[bold]Concurrence-zero points:[/bold] {comparison.gap_times.size}\n"
                f"[bold]...with discord > {10 * eps_c:g}:[/bold] {comparison.discord_only_times.size}\n"
                f"[bold]Concurrence peaks:[/bold] {np.round(comparison.concurrence_peaks, 3).tolist()}\n"
                f"[bold]Discord peaks:[/bold] {np.round(comparison.discord_peaks, 3).tolist()}")
        unmatched = comparison.unmatched_peaks(dt)
        if unmatched.size:
            body += ("\n[yellow]Concurrence peaks without a discord peak within dt:[/yellow] "
                     f"{np.round(unmatched, 3).tolist()}")
        return [output], Panel(body, title="Discord comparison", border_style="green"), rc.config_hash()

    return dispatch(ctx, "discord-compare", work)


@cli.command()
@click.option('--level', type=click.Choice(["quick", "full"]), default="quick", show_default=True)
@click.option('--report', type=click.Path(dir_okay=False), default=None, help='Write the JSON report here')
@click.option('--tol', type=float, default=DEFAULT_QUADRATURE["tol"], show_default=True)
@click.pass_context
def validate(ctx, level, report, tol):
    """
    Cross-check the quadrature against the discretised-bath oracle.

    Exits nonzero only when an oracle deviation exceeds 1%. The second
    integration path (QUADPACK on the printed bracket, 1e-5) is reported
    as a warning.
    """
    from validation.oracle_suite import evaluate_oracle_agreement

    def work():
        results = evaluate_oracle_agreement(level, report_path=report, tol=tol)
        if results["oracle_failed"]:
            raise ValidationFailure(f"{results['oracle_failed']} oracle checks failed "
                                    f"(max deviation {results['max_deviation']:.2e})")
        body = f":white_check_mark: [green]{results['tests_passed']} checks passed[/green]"
        if results["direct_failed"]:
            body += (f"\n[yellow]{results['direct_failed']} direct-path checks exceeded "
                     f"the 1e-5 agreement limit[/yellow]")
        summary = Panel(body, title="Validation Passed", border_style="green")
        return [report] if report else [], summary, ""

    return dispatch(ctx, "validate", work)


REPLAYABLE = {
    "rates": rates,
    "evolve": evolve,
    "phase-diagram": phase_diagram_cmd,
    "scan-stationary": scan_stationary,
    "scan-generation": scan_generation,
    "discord-compare": discord_compare,
}


@cli.command()
@click.argument('sidecar', type=click.Path(exists=True, dir_okay=False))
@click.option('--output', '-o', type=click.Path(dir_okay=False), default=None,
              help='Write here instead of the recorded output path')
@click.pass_context
def replay(ctx, sidecar, output):
    """Re-run the command recorded in a SIDECAR file."""
    try:
        with open(sidecar, "r") as f:
            meta = json.load(f)
        command = REPLAYABLE[meta["command"]]
    except (json.JSONDecodeError, KeyError) as e:
        raise BecQubitsError(f"{sidecar} is not a replayable sidecar ({e})")
    params = dict(meta["cli_params"])
    params.update(config=sidecar, preset=None, output=output or meta["outputs"][0],
                  cache_dir=None, no_cache=False)
    console.print(f"[dim]Replaying {meta['command']} from {sidecar}[/dim]")
    return ctx.invoke(command, **params)


cli.add_command(presets_group, name="presets")


@cli.command()
@click.option('--count', '-n', default=10, help='Show last N runs')
@click.option('--stats', is_flag=True, help='Show ledger statistics instead')
def history(count, stats):
    """Show the run ledger."""
    from logs import show_history, show_stats
    get_log_manager(log_dir=str(default_log_dir()))
    if stats:
        show_stats()
    else:
        show_history(count)


@cli.command()
def test():
    """Run the becqubits test suite."""
    import subprocess
    console.print("[green]Running test suite...[/green]")
    result = subprocess.run(['pytest', 'tests/', '-v'])
    sys.exit(result.returncode)


def run(argv: Optional[List[str]] = None) -> int:
    """Invoke the CLI and return its exit status instead of exiting."""
    try:
        rv = cli.main(args=argv, prog_name="becqubits", standalone_mode=False)
    except click.exceptions.Abort:
        console.print("[yellow]Interrupted.[/yellow]")
        return EXIT_INTERRUPTED
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except BecQubitsError as e:
        console.print(f"[red]Error:[/red] {e}")
        return e.exit_code
    except ValidationError as e:
        console.print(f"[red]Invalid configuration:[/red] {e}")
        return EXIT_CONFIG
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else (EXIT_OK if e.code is None else 1)
    return rv if isinstance(rv, int) else EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
