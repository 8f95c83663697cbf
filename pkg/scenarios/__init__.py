from .classify import (
    DynamicsLabel,
    DynamicsClass,
    classify,
    classify_profile,
    classification_grid,
    decay_channel,
    horizon_drift,
    suggest_horizon,
    DEFAULT_EPS_C,
)
from .phase_diagram import (
    PhaseDiagram,
    phase_diagram,
    boundary_violations,
    sensitive_band,
    temperature_comparison,
)
from .scans import (
    ScanSeries,
    GenerationResult,
    DiscordComparison,
    stationary_scan,
    independent_limit,
    generation_run,
    generation_scan,
    generation_horizon,
    discord_comparison_run,
    peak_times,
)
from .runner import RunStatus, RunResult, ScenarioRunner

__all__ = [
    'DynamicsLabel', 'DynamicsClass', 'classify', 'classify_profile', 'classification_grid',
    'decay_channel', 'horizon_drift', 'suggest_horizon',
    'PhaseDiagram', 'phase_diagram', 'boundary_violations', 'sensitive_band', 'temperature_comparison',
    'ScanSeries', 'GenerationResult', 'DiscordComparison', 'stationary_scan', 'independent_limit',
    'generation_run', 'generation_scan', 'generation_horizon', 'discord_comparison_run', 'peak_times',
    'RunStatus', 'RunResult', 'ScenarioRunner',
]

__version__ = "0.1.0"

# Default scenario options, merged with user overrides
DEFAULT_SCENARIO_OPTIONS = {
    "sign": "+",
    "eps_c": DEFAULT_EPS_C,
    "c_min": 0.3,
    "c_max": 0.6,
    "c_points": 31,
    "a_min": 0.5,
    "a_max": 4.0,
    "a_points": 8,
    "temperature_factor": 10.0,
    "cross_check": 3,
}
