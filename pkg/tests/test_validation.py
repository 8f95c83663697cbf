"""
Oracle Validation Testing
=========================
Quadrature versus discretised bath and the second integration path.
"""

import json

import pytest


class TestOracleValidator:

    # ========== Check Point Tests ==========

    def test_check_point(self):
        """Test 1: One time point records four checks and all of them pass"""
        from validation.oracle_suite import OracleValidator, BENCHMARK_SETS
        validator = OracleValidator()
        validator.check_point("moderate", BENCHMARK_SETS["moderate"], 1.0)
        by_name = {r.check_name: r for r in validator.results}
        assert set(by_name) == {"gamma0", "delta", "pi_zz", "gamma_plus_direct"}
        assert by_name["gamma0"].passed, by_name["gamma0"].details
        assert by_name["delta"].passed, by_name["delta"].details
        assert by_name["pi_zz"].passed, by_name["pi_zz"].details
        assert by_name["gamma_plus_direct"].passed, by_name["gamma_plus_direct"].details

    @pytest.mark.parametrize("set_name", ["strong", "cs-rb", "moderate"])
    @pytest.mark.parametrize("t", [0.5, 1.0, 2.0, 5.0, 10.0])
    def test_oracle_agreement_full_level(self, set_name, t):
        """Test 2: Gamma_0, delta and Pi_zz agree with the oracle within 1% on every benchmark set"""
        from validation.oracle_suite import OracleValidator, BENCHMARK_SETS, LEVEL_TIMES
        assert t in LEVEL_TIMES["full"]
        validator = OracleValidator()
        validator.check_point(set_name, BENCHMARK_SETS[set_name], t)
        for result in validator.results:
            if result.check_name != "gamma_plus_direct":
                assert result.passed, f"{result.check_name} at t={t}: {result.details}"

    def test_relative_deviation(self):
        """Test 3: Deviation uses the floor when the reference is small"""
        from validation.oracle_suite import relative_deviation
        assert relative_deviation(1.01, 1.0) == pytest.approx(0.01)
        assert relative_deviation(1e-4, 0.0, floor=1e-2) == pytest.approx(1e-2)
        assert relative_deviation(3.0, 0.0) == 3.0

    # ========== Suite Tests ==========

    def test_run_quick_subset(self):
        """Test 4: Quick level covers every requested set and time"""
        from validation.oracle_suite import OracleValidator, LEVEL_TIMES
        results = OracleValidator().run_all_tests("quick", sets=["moderate"])
        assert results["total_tests"] == 4 * len(LEVEL_TIMES["quick"])
        assert results["tests_passed"] + results["tests_failed"] == results["total_tests"]
        assert results["oracle_failed"] + results["direct_failed"] == results["tests_failed"]
        assert {d["parameter_set"] for d in results["test_details"]} == {"moderate"}

    def test_unknown_level(self):
        """Test 5: Unknown levels are rejected"""
        from validation.oracle_suite import OracleValidator
        with pytest.raises(ValueError):
            OracleValidator().run_all_tests("exhaustive")

    def test_report_written(self, tmp_path, monkeypatch):
        """Test 6: The JSON report mirrors the returned summary"""
        from validation import oracle_suite
        monkeypatch.setitem(oracle_suite.LEVEL_TIMES, "quick", (1.0,))
        monkeypatch.setattr(oracle_suite, "BENCHMARK_SETS", {"moderate": oracle_suite.BENCHMARK_SETS["moderate"]})
        report = tmp_path / "oracle.json"
        results = oracle_suite.evaluate_oracle_agreement("quick", report_path=report, display=False)
        assert json.loads(report.read_text())["total_tests"] == results["total_tests"] == 4


class TestResourceMonitor:

    # ========== Status Dict Tests ==========

    def test_disk_usage(self, tmp_path):
        """Test 1: Disk check reports ok, percent free and a message"""
        from monitor import check_disk_usage
        status = check_disk_usage(tmp_path / "not" / "yet" / "created", threshold=0.0)
        assert status["ok"]
        assert {"percent_free", "free_gb", "message"} <= set(status)
        assert "warning" not in status

    def test_disk_warning(self, tmp_path):
        """Test 2: A threshold above 100% always warns"""
        from monitor import check_disk_usage
        status = check_disk_usage(tmp_path, threshold=101.0)
        assert not status["ok"] and "warning" in status

    def test_memory_usage(self):
        """Test 3: Memory check reports usage"""
        from monitor import check_memory_usage
        status = check_memory_usage(threshold=100.1)
        assert status["ok"] and 0.0 <= status["used_percent"] <= 100.0

    def test_grid_estimate(self):
        """Test 4: Small grids fit, absurd ones warn"""
        from monitor import estimate_grid_memory
        assert estimate_grid_memory(1000, 10_000)["ok"]
        huge = estimate_grid_memory(10, 10 ** 15)
        assert not huge["ok"] and "warning" in huge

    def test_snapshot(self):
        """Test 5: Process snapshot has RSS and CPU times"""
        from monitor import process_snapshot
        snap = process_snapshot()
        assert snap["rss_mb"] > 0
        assert snap["cpu_user_s"] >= 0
