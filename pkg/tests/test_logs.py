"""
Run Ledger Testing
==================
JSON and SQLite run ledgers, history, failures and statistics.
"""

import json
import logging

import pytest
from freezegun import freeze_time


@pytest.fixture(params=["json", "sqlite"])
def manager(request, tmp_path):
    from logs import RunLogManager
    return RunLogManager(request.param, str(tmp_path / request.param))


def _fill(manager):
    manager.log_run("rates", "SUCCESS", 0, elapsed=1.5, config_hash="abc", outputs=["rates.csv"])
    manager.log_run("phase-diagram", "INCONCLUSIVE", 5, elapsed=2.0, message="drift 3%")
    manager.log_run("rates", "SUCCESS", 0, elapsed=0.5, resource_usage={"rss_mb": 80.0})
    manager.log_run("evolve", "FAILED", 4, elapsed=0.25, message="quadrature")


class TestRunLedger:

    # ========== Recording Tests ==========

    @freeze_time("2026-03-14 09:26:53.589793")
    def test_entry_fields(self, manager):
        """Test 1: Entries carry a timestamp-derived id and the given fields"""
        entry = manager.log_run("rates", "SUCCESS", 0, outputs=["out.csv"], resource_usage={"rss_mb": 1.0})
        assert entry.run_id == "20260314-092653-589793"
        assert entry.timestamp == "2026-03-14T09:26:53.589793"
        stored = manager.get_history(1)[0]
        assert stored.outputs == ["out.csv"]
        assert stored.resource_usage == {"rss_mb": 1.0}
        assert stored.timestamp == entry.timestamp

    def test_history_order(self, manager):
        """Test 2: History returns the most recent run first"""
        _fill(manager)
        history = manager.get_history(3)
        assert [e.command for e in history] == ["evolve", "rates", "phase-diagram"]
        assert manager.get_history(0) == []

    def test_failures(self, manager):
        """Test 3: Every non-SUCCESS status counts as a failure"""
        _fill(manager)
        failures = manager.get_failures()
        assert [(e.status, e.exit_code) for e in failures] == [("FAILED", 4), ("INCONCLUSIVE", 5)]
        assert failures[1].message == "drift 3%"

    def test_stats(self, manager):
        """Test 4: Statistics aggregate counts and compute time"""
        assert manager.get_stats() == {}
        _fill(manager)
        stats = manager.get_stats()
        assert stats["total_runs"] == 4
        assert stats["success_rate"] == pytest.approx(50.0)
        assert stats["total_elapsed"] == pytest.approx(4.25)
        assert list(stats["common_commands"])[0] == "rates"

    # ========== Backend Tests ==========

    def test_backend_files(self, tmp_path):
        """Test 5: Each backend writes its own file"""
        from logs import RunLogManager
        RunLogManager("json", str(tmp_path)).log_run("rates", "SUCCESS", 0)
        RunLogManager("sqlite", str(tmp_path)).log_run("rates", "SUCCESS", 0)
        assert (tmp_path / "runs.json").exists()
        assert (tmp_path / "becqubits.db").exists()
        assert json.loads((tmp_path / "runs.json").read_text())[0]["command"] == "rates"

    def test_invalid_format(self, tmp_path):
        """Test 6: Unknown backends are rejected"""
        from logs import RunLogManager
        with pytest.raises(ValueError):
            RunLogManager("yaml", str(tmp_path))

    def test_corrupt_json_ledger(self, tmp_path):
        """Test 7: A corrupt JSON ledger is replaced rather than fatal"""
        from logs import RunLogManager
        (tmp_path / "runs.json").write_text("{oops")
        manager = RunLogManager("json", str(tmp_path))
        manager.log_run("rates", "SUCCESS", 0)
        assert len(manager.get_history()) == 1

    def test_default_directory(self, tmp_path, monkeypatch):
        """Test 8: The ledger directory follows the environment override"""
        from logs import RunLogManager, default_log_dir
        monkeypatch.setenv("BECQUBITS_LOG_DIR", str(tmp_path / "ledger"))
        assert default_log_dir() == tmp_path / "ledger"
        assert RunLogManager().log_dir == tmp_path / "ledger"


class TestLoggingSetup:

    # ========== Handler Tests ==========

    def test_file_handler(self, tmp_path):
        """Test 1: Messages go to becqubits.log in the log directory"""
        from logs import setup_logging
        setup_logging(verbose=False, log_dir=str(tmp_path))
        logging.getLogger("decoherence.kernels").info("kernel message")
        for handler in logging.getLogger().handlers:
            handler.flush()
        assert "kernel message" in (tmp_path / "becqubits.log").read_text()

    def test_verbose_level(self, tmp_path):
        """Test 2: Verbose mode lowers the root level to DEBUG"""
        from logs import setup_logging
        setup_logging(verbose=True, log_dir=str(tmp_path))
        assert logging.getLogger().level == logging.DEBUG
        setup_logging(verbose=False, log_dir=str(tmp_path))
        assert logging.getLogger().level == logging.INFO
