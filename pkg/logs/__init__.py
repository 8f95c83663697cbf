import os
import json
import sqlite3
import logging
from datetime import datetime
from pathlib import Path
from typing import List, Dict, Optional, Any
from dataclasses import dataclass, asdict, field
from rich.console import Console
from rich.table import Table
from rich.panel import Panel

console = Console()

LOG_DIR_ENV = "BECQUBITS_LOG_DIR"
MAX_JSON_ENTRIES = 1000

STATUS_COLORS = {
    "SUCCESS": "green",
    "FAILED": "red",
    "INCONCLUSIVE": "yellow",
    "INTERRUPTED": "yellow",
    "ERROR": "red bold",
}


def default_log_dir() -> Path:
    override = os.environ.get(LOG_DIR_ENV)
    return Path(override) if override else Path.home() / ".becqubits" / "logs"


@dataclass
class RunLogEntry:
    run_id: str
    timestamp: str
    command: str
    status: str
    exit_code: int
    elapsed: float = 0.0
    config_hash: str = ""
    outputs: List[str] = field(default_factory=list)
    resource_usage: Dict[str, Any] = field(default_factory=dict)
    message: str = ""


class RunLogManager:
    """Ledger of CLI invocations, kept as a JSON list or an SQLite table."""

    def __init__(self, log_format: str = "json", log_dir: str = None):
        if log_format not in ("json", "sqlite"):
            raise ValueError(f"log_format must be 'json' or 'sqlite', got {log_format!r}")
        self.log_format = log_format
        self.log_dir = Path(log_dir) if log_dir else default_log_dir()
        self.log_dir.mkdir(parents=True, exist_ok=True)

        if log_format == "sqlite":
            self.db_path = self.log_dir / "becqubits.db"
            self._init_sqlite_db()
        else:
            self.json_log_path = self.log_dir / "runs.json"

    def _init_sqlite_db(self):
        with sqlite3.connect(self.db_path) as conn:
            conn.execute('''
                CREATE TABLE IF NOT EXISTS runs (
                    id INTEGER PRIMARY KEY AUTOINCREMENT,
                    run_id TEXT NOT NULL,
                    timestamp TEXT NOT NULL,
                    command TEXT NOT NULL,
                    status TEXT NOT NULL,
                    exit_code INTEGER NOT NULL,
                    elapsed REAL DEFAULT 0.0,
                    config_hash TEXT DEFAULT '',
                    outputs TEXT DEFAULT '[]',
                    resource_usage TEXT DEFAULT '{}',
                    message TEXT DEFAULT ''
                )
            ''')
            conn.commit()

    def log_run(self, command: str, status: str, exit_code: int, elapsed: float = 0.0,
                config_hash: str = "", outputs: Optional[List[str]] = None,
                resource_usage: Optional[Dict[str, Any]] = None, message: str = "") -> RunLogEntry:
        now = datetime.now()
        entry = RunLogEntry(
            run_id=now.strftime("%Y%m%d-%H%M%S-%f"),
            timestamp=now.isoformat(),
            command=command,
            status=status,
            exit_code=exit_code,
            elapsed=elapsed,
            config_hash=config_hash,
            outputs=[str(p) for p in (outputs or [])],
            resource_usage=resource_usage or {},
            message=message,
        )
        if self.log_format == "sqlite":
            self._log_to_sqlite(entry)
        else:
            self._log_to_json(entry)
        return entry

    def _log_to_sqlite(self, entry: RunLogEntry):
        try:
            with sqlite3.connect(self.db_path) as conn:
                conn.execute('''
                    INSERT INTO runs
                    (run_id, timestamp, command, status, exit_code, elapsed,
                     config_hash, outputs, resource_usage, message)
                    VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?)
                ''', (
                    entry.run_id, entry.timestamp, entry.command, entry.status,
                    entry.exit_code, entry.elapsed, entry.config_hash,
                    json.dumps(entry.outputs), json.dumps(entry.resource_usage), entry.message
                ))
                conn.commit()
        except sqlite3.Error as e:
            logging.error(f"Failed to log run to SQLite: {e}")

    def _read_json(self) -> List[Dict[str, Any]]:
        if not self.json_log_path.exists():
            return []
        with open(self.json_log_path, 'r') as f:
            try:
                return json.load(f)
            except json.JSONDecodeError:
                logging.warning(f"Run ledger {self.json_log_path} is corrupt; starting a new one")
                return []

    def _log_to_json(self, entry: RunLogEntry):
        try:
            logs = self._read_json()
            logs.append(asdict(entry))
            logs = logs[-MAX_JSON_ENTRIES:]
            with open(self.json_log_path, 'w') as f:
                json.dump(logs, f, indent=2)
        except OSError as e:
            logging.error(f"Failed to log run to JSON: {e}")

    def _row_to_entry(self, row: sqlite3.Row) -> RunLogEntry:
        return RunLogEntry(
            run_id=row['run_id'],
            timestamp=row['timestamp'],
            command=row['command'],
            status=row['status'],
            exit_code=row['exit_code'],
            elapsed=row['elapsed'] or 0.0,
            config_hash=row['config_hash'] or "",
            outputs=json.loads(row['outputs']) if row['outputs'] else [],
            resource_usage=json.loads(row['resource_usage']) if row['resource_usage'] else {},
            message=row['message'] or "",
        )

    def get_history(self, count: int = 10) -> List[RunLogEntry]:
        """Most recent runs first."""
        if self.log_format == "sqlite":
            with sqlite3.connect(self.db_path) as conn:
                conn.row_factory = sqlite3.Row
                cursor = conn.execute('SELECT * FROM runs ORDER BY id DESC LIMIT ?', (count,))
                return [self._row_to_entry(row) for row in cursor]
        logs = self._read_json()
        return [RunLogEntry(**log) for log in reversed(logs[-count:])] if count > 0 else []

    def get_failures(self, limit: int = 5) -> List[RunLogEntry]:
        if self.log_format == "sqlite":
            with sqlite3.connect(self.db_path) as conn:
                conn.row_factory = sqlite3.Row
                cursor = conn.execute(
                    "SELECT * FROM runs WHERE status != 'SUCCESS' ORDER BY id DESC LIMIT ?", (limit,)
                )
                return [self._row_to_entry(row) for row in cursor]
        failures = [log for log in reversed(self._read_json()) if log.get('status') != 'SUCCESS']
        return [RunLogEntry(**log) for log in failures[:limit]]

    def get_stats(self) -> Dict[str, Any]:
        if self.log_format == "sqlite":
            with sqlite3.connect(self.db_path) as conn:
                rows = conn.execute('SELECT command, status, elapsed FROM runs').fetchall()
        else:
            rows = [(log['command'], log['status'], log.get('elapsed', 0.0)) for log in self._read_json()]

        if not rows:
            return {}
        command_counts: Dict[str, int] = {}
        for command, _, _ in rows:
            command_counts[command] = command_counts.get(command, 0) + 1
        successful = sum(1 for _, status, _ in rows if status == 'SUCCESS')
        return {
            'total_runs': len(rows),
            'success_rate': successful / len(rows) * 100,
            'total_elapsed': sum(elapsed or 0.0 for _, _, elapsed in rows),
            'common_commands': dict(sorted(command_counts.items(), key=lambda x: x[1], reverse=True)[:5]),
        }


_log_manager = None


def get_log_manager(log_format: str = "json", log_dir: str = None) -> RunLogManager:
    global _log_manager
    if _log_manager is None or (log_dir and Path(log_dir) != _log_manager.log_dir):
        _log_manager = RunLogManager(log_format, log_dir)
    return _log_manager


def setup_logging(verbose: bool = False, log_dir: str = None) -> logging.Logger:
    log_level = logging.DEBUG if verbose else logging.INFO

    directory = Path(log_dir) if log_dir else default_log_dir()
    directory.mkdir(parents=True, exist_ok=True)

    logging.basicConfig(
        level=log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(directory / "becqubits.log"),
            logging.StreamHandler() if verbose else logging.NullHandler()
        ],
        force=True,
    )

    return logging.getLogger(__name__)


def log_run(command: str, status: str, exit_code: int, **details) -> RunLogEntry:
    return get_log_manager().log_run(command, status, exit_code, **details)


def show_history(count: int = 10):
    history = get_log_manager().get_history(count)

    if not history:
        console.print("[yellow]No run history found.[/yellow]")
        return

    table = Table(title=f"Recent {len(history)} Runs")
    table.add_column("Time", style="cyan")
    table.add_column("Command", style="white")
    table.add_column("Status", style="bold")
    table.add_column("Exit", justify="right")
    table.add_column("Elapsed", justify="right")
    table.add_column("Outputs", style="green")

    for entry in history:
        try:
            time_str = datetime.fromisoformat(entry.timestamp).strftime("%m-%d %H:%M")
        except ValueError:
            time_str = entry.timestamp[:16]
        color = STATUS_COLORS.get(entry.status, "white")
        outputs = ", ".join(entry.outputs)
        table.add_row(
            time_str,
            entry.command,
            f"[{color}]{entry.status}[/{color}]",
            str(entry.exit_code),
            f"{entry.elapsed:.2f}s",
            outputs[:60] + "..." if len(outputs) > 60 else outputs,
        )

    console.print(table)


def show_stats():
    stats = get_log_manager().get_stats()

    if not stats:
        console.print("[yellow]No statistics available.[/yellow]")
        return

    console.print(Panel(
        f"[bold]Total Runs:[/bold] {stats['total_runs']}\n"
        f"[bold]Success Rate:[/bold] {stats['success_rate']:.1f}%\n"
        f"[bold]Total Compute:[/bold] {stats['total_elapsed']:.1f}s",
        title="Run Statistics",
        border_style="green"
    ))
    for command, count in stats['common_commands'].items():
        console.print(f"  • {command}: {count} runs")


__all__ = [
    'RunLogManager', 'RunLogEntry', 'setup_logging', 'log_run',
    'show_history', 'show_stats', 'get_log_manager', 'default_log_dir'
]
