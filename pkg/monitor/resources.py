import os
import shutil
from pathlib import Path
from typing import Any, Dict, Union

import psutil

# complex128 entries per quadrature node: six kernel rows plus shared factors
_BYTES_PER_NODE = 8 * 12


def check_disk_usage(path: Union[str, Path] = ".", threshold: float = 10.0) -> Dict[str, Any]:
    """Free space on the filesystem holding ``path``; warn below threshold (%)."""
    target = Path(path)
    while not target.exists() and target != target.parent:
        target = target.parent
    usage = shutil.disk_usage(target)
    percent_free = (usage.free / usage.total) * 100
    status = {
        "ok": percent_free > threshold,
        "percent_free": percent_free,
        "free_gb": round(usage.free / (1024 ** 3), 2),
        "message": f"Disk free at {target}: {percent_free:.2f}%"
    }
    if percent_free <= threshold:
        status["warning"] = f"Low disk space for outputs: only {percent_free:.2f}% free."
    return status


def check_memory_usage(threshold: float = 85.0) -> Dict[str, Any]:
    mem = psutil.virtual_memory()
    used_percent = mem.percent
    status = {
        "ok": used_percent < threshold,
        "used_percent": used_percent,
        "available_gb": round(mem.available / (1024 ** 3), 2),
        "message": f"Memory usage: {used_percent:.2f}%"
    }
    if used_percent >= threshold:
        status["warning"] = f"High memory usage: {used_percent:.2f}%."
    return status


def process_snapshot() -> Dict[str, float]:
    """RSS and CPU times of the current process."""
    proc = psutil.Process(os.getpid())
    cpu = proc.cpu_times()
    return {
        "rss_mb": proc.memory_info().rss / (1024 ** 2),
        "cpu_user_s": cpu.user,
        "cpu_system_s": cpu.system,
    }


def estimate_grid_memory(n_points: int, n_nodes: int, available_fraction: float = 0.5) -> Dict[str, Any]:
    """Peak working set of one kernel evaluation plus the stored profile rows."""
    needed = n_nodes * _BYTES_PER_NODE + n_points * 10 * 8
    available = psutil.virtual_memory().available
    status = {
        "ok": needed < available * available_fraction,
        "estimated_mb": needed / (1024 ** 2),
        "message": f"Estimated working set: {needed / (1024 ** 2):.1f} MB"
    }
    if not status["ok"]:
        status["warning"] = (f"Run needs about {needed / (1024 ** 2):.0f} MB, "
                             f"more than half of the {available / (1024 ** 2):.0f} MB available.")
    return status
