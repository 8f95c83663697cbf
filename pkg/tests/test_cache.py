"""
Profile Cache Testing
=====================
Content-hash keys, npz storage and recovery from corrupt entries.
"""

import logging

import numpy as np
import pytest


@pytest.fixture
def small_grid():
    return np.linspace(0.0, 1.0, 11)


class TestProfileKey:

    # ========== Key Tests ==========

    def test_key_stable(self, bench_moderate, small_grid):
        """Test 1: Equal inputs hash equally"""
        from cache.profile_cache import profile_key
        assert profile_key(bench_moderate, small_grid) == profile_key(bench_moderate, small_grid.copy())

    def test_key_sensitivity(self, bench_moderate, small_grid):
        """Test 2: Parameters, grid, tolerance and cross-talk all change the key"""
        from cache.profile_cache import profile_key
        base = profile_key(bench_moderate, small_grid)
        variants = [
            profile_key(bench_moderate.replace(u=1.0 + 1e-12), small_grid),
            profile_key(bench_moderate, np.linspace(0.0, 1.0, 12)),
            profile_key(bench_moderate, small_grid, tol=1e-6),
            profile_key(bench_moderate, small_grid, cross_talk=False),
        ]
        assert len(set(variants + [base])) == 5


class TestProfileCache:

    # ========== Storage Tests ==========

    def test_store_and_load(self, bench_moderate, small_grid, tmp_path):
        """Test 1: Loaded profiles equal the stored ones"""
        from cache.profile_cache import ProfileCache, profile_key
        from decoherence.profile import build_profile
        cache = ProfileCache(tmp_path)
        profile = build_profile(bench_moderate, small_grid)
        key = profile_key(bench_moderate, small_grid)
        cache.store(key, profile)
        loaded = cache.load(key)
        assert loaded is not None
        assert loaded.params == profile.params
        for name in ("t_grid", "gamma0", "gamma_minus", "pi_zz", "rate_plus"):
            assert np.array_equal(getattr(loaded, name), getattr(profile, name)), name

    def test_miss(self, tmp_path):
        """Test 2: Unknown keys return None"""
        from cache.profile_cache import ProfileCache
        assert ProfileCache(tmp_path).load("0" * 64) is None

    def test_get_or_build(self, bench_moderate, small_grid, tmp_path):
        """Test 3: First call builds, second call hits"""
        from cache.profile_cache import ProfileCache
        cache = ProfileCache(tmp_path)
        first, key1, hit1 = cache.get_or_build(bench_moderate, small_grid)
        second, key2, hit2 = cache.get_or_build(bench_moderate, small_grid)
        assert (hit1, hit2) == (False, True)
        assert key1 == key2
        assert np.array_equal(first.gamma_plus, second.gamma_plus)

    def test_corrupt_entry_recomputed(self, bench_moderate, small_grid, tmp_path, caplog):
        """Test 4: A corrupt file is logged, removed and rebuilt"""
        from cache.profile_cache import ProfileCache
        cache = ProfileCache(tmp_path)
        _, key, _ = cache.get_or_build(bench_moderate, small_grid)
        cache.path_for(key).write_bytes(b"not a zip archive")
        with caplog.at_level(logging.WARNING, logger="cache.profile_cache"):
            profile, _, hit = cache.get_or_build(bench_moderate, small_grid)
        assert not hit
        assert "Corrupt cache entry" in caplog.text
        assert profile.gamma0[-1] > 0
        assert cache.load(key) is not None

    def test_env_directory(self, monkeypatch, tmp_path):
        """Test 5: Default directory comes from the environment"""
        from cache.profile_cache import ProfileCache, CACHE_DIR_ENV
        target = tmp_path / "env_cache"
        monkeypatch.setenv(CACHE_DIR_ENV, str(target))
        assert ProfileCache().cache_dir == target
        assert target.is_dir()

    def test_clear(self, bench_moderate, small_grid, tmp_path):
        """Test 6: clear removes every entry"""
        from cache.profile_cache import ProfileCache
        cache = ProfileCache(tmp_path)
        cache.get_or_build(bench_moderate, small_grid)
        cache.get_or_build(bench_moderate, small_grid, cross_talk=False)
        assert cache.clear() == 2
        assert list(tmp_path.glob("*.npz")) == []
