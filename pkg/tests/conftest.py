"""
Shared fixtures for the becqubits test suite
============================================
Reservoir parameter sets, an isolated log/cache directory per test and a
small session-wide decoherence profile.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

REPO_ROOT = Path(__file__).resolve().parent.parent
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))


@pytest.fixture(autouse=True)
def isolated_dirs(tmp_path, monkeypatch):
    """Keep the run ledger and the profile cache out of the home directory"""
    monkeypatch.setenv("BECQUBITS_LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.setenv("BECQUBITS_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path


@pytest.fixture(scope="session")
def bench_strong():
    from core.params import ReservoirParams
    return ReservoirParams(u=4 * np.pi, gAB=4 * np.pi, n0d=1.0, theta=0.0, Ld=2.0, Dd=4.0)


@pytest.fixture(scope="session")
def bench_moderate():
    from core.params import ReservoirParams
    return ReservoirParams(u=1.0, gAB=2.0, n0d=1.0, theta=0.5, Ld=1.0, Dd=2.0)


@pytest.fixture(scope="session")
def cs_rb():
    from config.run_config import PhysicalBlock, load_preset
    from core.params import to_dimensionless

    _, data = load_preset("cs-rb-default")
    return to_dimensionless(PhysicalBlock(**data).to_params())


@pytest.fixture(scope="session")
def strong_profile(bench_strong):
    """Benchmark reservoir on [0, 5] with dt = 0.05"""
    from decoherence.profile import build_profile, uniform_grid
    return build_profile(bench_strong, uniform_grid(5.0, 0.05))


@pytest.fixture(scope="session")
def cs_rb_profile(cs_rb):
    """Cs-Rb reservoir on its classification grid"""
    from decoherence.profile import build_profile
    from scenarios.classify import classification_grid, suggest_horizon
    return build_profile(cs_rb, classification_grid(cs_rb, suggest_horizon(cs_rb)))
