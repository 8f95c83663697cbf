import os
import json
import hashlib
import logging
import tempfile
import threading
import zipfile
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from core.params import reservoir_from_dict
from decoherence.kernels import DEFAULT_TOL, K_MAX
from decoherence.profile import DecoherenceProfile, build_profile

logger = logging.getLogger(__name__)

CACHE_DIR_ENV = "BECQUBITS_CACHE_DIR"
_ARRAYS = ("t_grid", "gamma0", "delta", "gamma_plus", "gamma_minus",
           "rate_plus", "rate_minus", "pi_zz", "pi_rate")


def profile_key(params, t_grid, tol: float = DEFAULT_TOL, cross_talk: bool = True, k_max: float = K_MAX) -> str:
    """Content hash of everything a profile depends on."""
    header = json.dumps({
        "params": {name: repr(float(v)) for name, v in params.as_dict().items()},
        "tol": repr(float(tol)),
        "cross_talk": bool(cross_talk),
        "k_max": repr(float(k_max)),
    }, sort_keys=True)
    digest = hashlib.sha256(header.encode())
    digest.update(np.ascontiguousarray(t_grid, dtype=np.float64).tobytes())
    return digest.hexdigest()


class ProfileCache:
    """Decoherence profiles stored as .npz files keyed by content hash."""

    def __init__(self, cache_dir: str = None):
        if cache_dir is None:
            cache_dir = os.environ.get(CACHE_DIR_ENV) or os.path.join(tempfile.gettempdir(), "becqubits_cache")
        self.cache_dir = Path(cache_dir)
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    def path_for(self, key: str) -> Path:
        return self.cache_dir / f"{key}.npz"

    def store(self, key: str, profile: DecoherenceProfile) -> Path:
        path = self.path_for(key)
        meta = {
            "params": profile.params.as_dict(),
            "tol": profile.tol,
            "cross_talk": profile.cross_talk,
            "metadata": profile.metadata,
        }
        with self._lock:
            tmp = path.with_suffix(".tmp.npz")
            np.savez(tmp, meta=np.array(json.dumps(meta)), **{name: getattr(profile, name) for name in _ARRAYS})
            os.replace(tmp, path)
        logger.debug(f"Cached profile {key[:12]} at {path}")
        return path

    def load(self, key: str) -> Optional[DecoherenceProfile]:
        """Cached profile or None; unreadable entries count as misses and are removed."""
        path = self.path_for(key)
        with self._lock:
            if not path.exists():
                return None
            try:
                with np.load(path, allow_pickle=False) as data:
                    meta = json.loads(str(data["meta"]))
                    arrays = {name: np.array(data[name]) for name in _ARRAYS}
                return DecoherenceProfile(
                    params=reservoir_from_dict(meta["params"]),
                    tol=meta["tol"],
                    cross_talk=meta["cross_talk"],
                    metadata=meta["metadata"],
                    **arrays,
                )
            except (OSError, ValueError, KeyError, zipfile.BadZipFile) as e:
                logger.warning(f"Corrupt cache entry {path.name} ({e}); it will be recomputed")
                path.unlink(missing_ok=True)
                return None

    def get_or_build(self, params, t_grid, tol: float = DEFAULT_TOL, cross_talk: bool = True,
                     k_max: float = K_MAX, progress: Optional[Callable[[int, int], None]] = None):
        """Returns (profile, key, hit)."""
        t_grid = np.asarray(t_grid, dtype=float)
        key = profile_key(params, t_grid, tol, cross_talk, k_max)
        cached = self.load(key)
        if cached is not None:
            logger.info(f"Profile cache hit {key[:12]}")
            return cached, key, True
        profile = build_profile(params, t_grid, tol=tol, cross_talk=cross_talk, k_max=k_max, progress=progress)
        self.store(key, profile)
        return profile, key, False

    def clear(self) -> int:
        removed = 0
        with self._lock:
            for entry in self.cache_dir.glob("*.npz"):
                try:
                    entry.unlink()
                    removed += 1
                except OSError:
                    pass
        return removed


def cache_profile(key: str, profile: DecoherenceProfile, cache_dir: str = None) -> Path:
    return ProfileCache(cache_dir).store(key, profile)


def load_profile(key: str, cache_dir: str = None) -> Optional[DecoherenceProfile]:
    return ProfileCache(cache_dir).load(key)
