"""
Oracle Agreement Validation
===========================
Cross-checks the panel quadrature against the discretised-bath oracle and the
adaptive second integration path on three reservoir sets.
"""

import json
import logging
from dataclasses import dataclass, asdict
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

from rich.console import Console
from rich.progress import Progress
from rich.table import Table

from core.params import ReservoirParams
from decoherence.kernels import Channel, KernelEvaluator, gamma_pm_direct, DEFAULT_TOL
from decoherence.oracle import discrete_bath_oracle, DEFAULT_ORACLE

logger = logging.getLogger(__name__)
console = Console()

BENCHMARK_SETS = {
    "strong": ReservoirParams(u=12.566370614359172, gAB=12.566370614359172, n0d=1.0, theta=0.0, Ld=2.0, Dd=4.0),
    "cs-rb": ReservoirParams(u=0.26705, gAB=1.78719, n0d=0.8, theta=0.071665, Ld=1.33, Dd=2.66),
    "moderate": ReservoirParams(u=1.0, gAB=2.0, n0d=1.0, theta=0.5, Ld=1.0, Dd=2.0),
}

LEVEL_TIMES = {
    "quick": (0.5, 1.0, 2.0),
    "full": (0.5, 1.0, 2.0, 5.0, 10.0),
}

DEVIATION_LIMIT = 0.01
DIRECT_PATH_LIMIT = 1e-5
# delta and Pi_zz deviations are measured against max(|oracle|, FLOOR * |Gamma_0|)
SMALL_VALUE_FLOOR = 1e-2


@dataclass
class OracleCheckResult:
    check_name: str
    parameter_set: str
    t: float
    quadrature: float
    reference: float
    deviation: float
    passed: bool
    details: str


def relative_deviation(value: float, reference: float, floor: float = 0.0) -> float:
    scale = max(abs(reference), floor)
    if scale == 0.0:
        return abs(value)
    return abs(value - reference) / scale


class OracleValidator:
    """Runs the quadrature-versus-oracle checks"""

    def __init__(self, tol: float = DEFAULT_TOL, n_modes: int = DEFAULT_ORACLE["n_modes"],
                 limit: float = DEVIATION_LIMIT):
        self.tol = tol
        self.n_modes = n_modes
        self.limit = limit
        self.results: List[OracleCheckResult] = []

    def _record(self, name: str, set_name: str, t: float, value: float, reference: float,
                deviation: float, limit: float):
        passed = deviation <= limit
        details = "✓" if passed else f"✗ deviation {deviation:.2e} > {limit:.0e}"
        self.results.append(OracleCheckResult(name, set_name, t, value, reference, deviation, passed, details))

    def check_point(self, set_name: str, params: ReservoirParams, t: float):
        quad = KernelEvaluator(params, self.tol).evaluate(t)
        oracle = discrete_bath_oracle(t, params, n_modes=self.n_modes)
        floor = SMALL_VALUE_FLOOR * abs(oracle.gamma0)

        self._record("gamma0", set_name, t, quad.gamma0, oracle.gamma0,
                     relative_deviation(quad.gamma0, oracle.gamma0), self.limit)
        self._record("delta", set_name, t, quad.delta, oracle.delta,
                     relative_deviation(quad.delta, oracle.delta, floor), self.limit)
        self._record("pi_zz", set_name, t, quad.pi_zz, oracle.pi_zz,
                     relative_deviation(quad.pi_zz, oracle.pi_zz, floor), self.limit)

        direct = gamma_pm_direct(t, params, self.tol, which=Channel.PLUS)
        self._record("gamma_plus_direct", set_name, t, quad.gamma_plus, direct,
                     relative_deviation(quad.gamma_plus, direct), DIRECT_PATH_LIMIT)

    def run_all_tests(self, level: str = "quick", sets: Optional[Sequence[str]] = None) -> Dict:
        if level not in LEVEL_TIMES:
            raise ValueError(f"level must be one of {sorted(LEVEL_TIMES)}, got {level!r}")
        names = list(sets or BENCHMARK_SETS)
        times = LEVEL_TIMES[level]

        console.print("\n[bold cyan]═══ Running Oracle Agreement Checks ═══[/bold cyan]\n")
        with Progress(console=console, transient=True) as progress:
            task = progress.add_task("[cyan]Comparing against the discretised bath...", total=len(names) * len(times))
            for name in names:
                for t in times:
                    try:
                        self.check_point(name, BENCHMARK_SETS[name], t)
                    except ArithmeticError as e:
                        self.results.append(OracleCheckResult("quadrature", name, t, float("nan"),
                                                              float("nan"), float("inf"), False, f"✗ {e}"))
                    progress.advance(task)

        passed = sum(1 for r in self.results if r.passed)
        total = len(self.results)
        direct_failed = sum(1 for r in self.results if r.check_name == "gamma_plus_direct" and not r.passed)
        return {
            "level": level,
            "total_tests": total,
            "tests_passed": passed,
            "tests_failed": total - passed,
            "oracle_failed": total - passed - direct_failed,
            "direct_failed": direct_failed,
            "success_rate": (passed / total * 100) if total > 0 else 0,
            "max_deviation": max((r.deviation for r in self.results if r.check_name != "gamma_plus_direct"),
                                 default=0.0),
            "test_details": [asdict(r) for r in self.results],
        }

    def display_results(self, results: Dict):
        table = Table(title="Oracle Agreement Results")
        table.add_column("Check", style="cyan")
        table.add_column("Set", style="magenta")
        table.add_column("t", justify="right")
        table.add_column("Quadrature", justify="right")
        table.add_column("Reference", justify="right")
        table.add_column("Deviation", justify="right")
        table.add_column("Status", style="bold")

        for r in results["test_details"]:
            status = "[green]PASS[/green]" if r["passed"] else "[red]FAIL[/red]"
            table.add_row(r["check_name"], r["parameter_set"], f"{r['t']:g}", f"{r['quadrature']:.6g}",
                          f"{r['reference']:.6g}", f"{r['deviation']:.2e}", status)

        console.print(table)
        console.print(f"\n[bold]Passed {results['tests_passed']}/{results['total_tests']} "
                      f"({results['success_rate']:.1f}%), max oracle deviation {results['max_deviation']:.2e}[/bold]")


def evaluate_oracle_agreement(level: str = "quick", report_path: Union[str, Path, None] = None,
                              display: bool = True, **validator_options) -> Dict:
    validator = OracleValidator(**validator_options)
    results = validator.run_all_tests(level)
    if display:
        validator.display_results(results)
    if report_path:
        path = Path(report_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            json.dump(results, f, indent=2)
        logger.info(f"Wrote oracle report to {path}")
    return results
