"""
Parameter files, presets and the validated run configuration.

A parameter file is a flat JSON object holding either the physical fields
(m_A, m_B, a_B, a_AB, n0, sigma, L, D, T and optionally wavelength) or the
dimensionless fields (u, gAB, n0d, theta, Ld, Dd). Physical values may be SI
numbers or "value unit" strings.
"""

import json
import hashlib
import logging
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from core.errors import ConfigError
from core.params import A_RB, AMU, BOHR_RADIUS, PhysicalParams, ReservoirParams, physical_from_dict, to_dimensionless

logger = logging.getLogger(__name__)

PRESETS_PATH = Path(__file__).parent / "presets.json"

PHYSICAL_FIELDS = ("m_A", "m_B", "a_B", "a_AB", "n0", "sigma", "L", "D", "T")
DIMENSIONLESS_FIELDS = ("u", "gAB", "n0d", "theta", "Ld", "Dd")

UNITS = {
    "mass": {"kg": 1.0, "amu": AMU},
    "length": {"m": 1.0, "nm": 1e-9, "um": 1e-6, "a0": BOHR_RADIUS, "a_Rb": A_RB},
    "density": {"m^-3": 1.0, "cm^-3": 1e6},
    "temperature": {"K": 1.0, "mK": 1e-3, "uK": 1e-6, "nK": 1e-9},
}

FIELD_KINDS = {
    "m_A": "mass", "m_B": "mass",
    "a_B": "length", "a_AB": "length", "sigma": "length", "L": "length", "D": "length",
    "wavelength": "length",
    "n0": "density",
    "T": "temperature",
}

SCENARIOS = ("rates", "evolve", "phase-diagram", "scan-stationary", "scan-generation",
             "discord-compare", "validate")


def parse_quantity(name: str, value: Union[str, float, int], wavelength: Optional[float] = None) -> float:
    """Convert a number or a "value unit" string to SI for field ``name``."""
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    if not isinstance(value, str):
        raise ConfigError(f"{name}: expected a number or 'value unit' string, got {value!r}")
    parts = value.split()
    try:
        number = float(parts[0])
    except (IndexError, ValueError):
        raise ConfigError(f"{name}: cannot parse {value!r}")
    if len(parts) == 1:
        return number
    if len(parts) != 2:
        raise ConfigError(f"{name}: expected 'value unit', got {value!r}")

    unit = parts[1]
    kind = FIELD_KINDS.get(name)
    if kind is None:
        raise ConfigError(f"{name} does not take units")
    if kind == "length" and unit == "lambda":
        if wavelength is None:
            raise ConfigError(f"{name} is given in lambda but no wavelength is set")
        return number * wavelength
    scale = UNITS[kind].get(unit)
    if scale is None:
        raise ConfigError(f"{name}: unknown {kind} unit {unit!r}; expected one of {sorted(UNITS[kind])}")
    return number * scale


def resolve_physical(data: Dict[str, Any]) -> Dict[str, float]:
    wavelength = None
    if "wavelength" in data:
        wavelength = parse_quantity("wavelength", data["wavelength"])
    resolved = {name: parse_quantity(name, value, wavelength) for name, value in data.items()
                if name != "wavelength"}
    if wavelength is not None:
        resolved["wavelength"] = wavelength
    return resolved


class PhysicalBlock(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    m_A: float = Field(gt=0)
    m_B: float = Field(gt=0)
    a_B: float = Field(gt=0)
    a_AB: float = Field(gt=0)
    n0: float = Field(gt=0)
    sigma: float = Field(gt=0)
    L: float = Field(gt=0)
    D: float = Field(gt=0)
    T: float = Field(gt=0)
    wavelength: Optional[float] = Field(default=None, gt=0)

    @model_validator(mode="before")
    @classmethod
    def _resolve_units(cls, data):
        if isinstance(data, dict):
            return resolve_physical(data)
        return data

    def to_params(self) -> PhysicalParams:
        return physical_from_dict(self.model_dump())


class DimensionlessBlock(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    u: float = Field(gt=0)
    gAB: float = Field(gt=0)
    n0d: float = Field(gt=0)
    theta: float = Field(ge=0)
    Ld: float = Field(gt=0)
    Dd: float = Field(gt=0)

    def to_params(self) -> ReservoirParams:
        return ReservoirParams(**self.model_dump())


class ScenarioOptions(BaseModel):
    model_config = ConfigDict(extra="forbid")

    c: Optional[float] = Field(default=None, ge=0, le=1)
    sign: Literal["+", "-"] = "+"
    state: Optional[str] = None
    t_max: Optional[float] = Field(default=None, gt=0)
    dt: Optional[float] = Field(default=None, gt=0)
    tol: float = Field(default=1e-8, gt=0)
    eps_c: float = Field(default=1e-6, gt=0)
    horizon: Optional[float] = Field(default=None, gt=0)
    c_values: Optional[List[float]] = None
    a_values: Optional[List[float]] = None
    variable: Optional[Literal["a_B", "D"]] = None
    values: Optional[List[float]] = None
    a_ref_ratio: float = Field(default=1.0, gt=0)
    cross_talk: bool = True
    include_phase: bool = True
    integrator: Literal["map", "me"] = "map"
    temperature_factor: Optional[float] = Field(default=None, gt=0)
    level: Literal["quick", "full"] = "quick"

    @model_validator(mode="after")
    def _check_ranges(self):
        for name in ("c_values", "a_values", "values"):
            seq = getattr(self, name)
            if seq is not None and not seq:
                raise ValueError(f"{name} must be nonempty")
        if self.c_values and any(not 0.0 <= c <= 1.0 for c in self.c_values):
            raise ValueError("c_values must lie in [0, 1]")
        if self.a_values and any(a <= 0 for a in self.a_values):
            raise ValueError("a_values must be > 0")
        return self


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    physical: Optional[PhysicalBlock] = None
    dimensionless: Optional[DimensionlessBlock] = None
    scenario: Literal[SCENARIOS]
    options: ScenarioOptions = Field(default_factory=ScenarioOptions)
    output: Optional[str] = None
    cache_dir: Optional[str] = None

    @model_validator(mode="after")
    def _exactly_one_block(self):
        if (self.physical is None) == (self.dimensionless is None):
            raise ValueError("exactly one of 'physical' or 'dimensionless' parameter blocks is required")
        return self

    def reservoir(self) -> ReservoirParams:
        if self.physical is not None:
            return to_dimensionless(self.physical.to_params())
        return self.dimensionless.to_params()

    def a_ref_ratio(self) -> float:
        """Scattering length of the parameter block in units of a_Rb."""
        if self.physical is not None:
            return self.physical.to_params().a_B_over_aRb
        return self.options.a_ref_ratio

    def time_unit_seconds(self) -> Optional[float]:
        """Seconds per dimensionless time unit, when the run is set up in SI units."""
        if self.physical is not None:
            return self.physical.to_params().time_unit_seconds()
        return None

    def parameter_block(self) -> Tuple[str, Dict[str, float]]:
        if self.physical is not None:
            return "physical", self.physical.model_dump(exclude_none=True)
        return "dimensionless", self.dimensionless.model_dump()

    def config_hash(self) -> str:
        return hashlib.sha256(self.model_dump_json(exclude={"output", "cache_dir"}).encode()).hexdigest()


def build_run_config(data: Dict[str, Any]) -> RunConfig:
    try:
        return RunConfig.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"]) or "config"
        raise ConfigError(f"invalid configuration at {where}: {first['msg']}") from e


def classify_block(data: Dict[str, Any]) -> str:
    keys = set(data)
    physical = keys & (set(PHYSICAL_FIELDS) | {"wavelength"})
    dimensionless = keys & set(DIMENSIONLESS_FIELDS)
    if physical and dimensionless:
        raise ConfigError(f"parameter file mixes physical {sorted(physical)} and dimensionless {sorted(dimensionless)} keys")
    if dimensionless:
        return "dimensionless"
    if physical:
        return "physical"
    raise ConfigError(f"no parameter keys found; expected {PHYSICAL_FIELDS} or {DIMENSIONLESS_FIELDS}")


def load_parameter_file(path: Union[str, Path]) -> Tuple[str, Dict[str, Any]]:
    """
    Read a parameter file or a run sidecar.

    Returns the block kind ('physical' or 'dimensionless') and its raw values.
    """
    path = Path(path)
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except OSError as e:
        raise ConfigError(f"cannot read parameter file {path}: {e}")
    except json.JSONDecodeError as e:
        raise ConfigError(f"malformed JSON in {path}: {e}")
    if not isinstance(data, dict):
        raise ConfigError(f"{path} must contain a JSON object")
    if "block" in data and "parameters" in data:
        logger.debug(f"Reading parameters from sidecar {path}")
        return data["block"], data["parameters"]
    return classify_block(data), data


def load_presets(path: Union[str, Path] = PRESETS_PATH) -> Dict[str, Dict[str, Any]]:
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"preset file {path} not found")
    with open(path, "r") as f:
        return json.load(f)


def load_preset(name: str, path: Union[str, Path] = PRESETS_PATH) -> Tuple[str, Dict[str, Any]]:
    presets = load_presets(path)
    if name not in presets:
        raise ConfigError(f"unknown preset {name!r}; available: {', '.join(sorted(presets))}")
    data = presets[name]["parameters"]
    return classify_block(data), data
