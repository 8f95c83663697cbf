import time
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, Optional

from pydantic import ValidationError

from core.errors import (
    BecQubitsError,
    InconclusiveError,
    EXIT_CONFIG,
    EXIT_ERROR,
    EXIT_INTERRUPTED,
    EXIT_OK,
)
from monitor.resources import process_snapshot

logger = logging.getLogger(__name__)


class RunStatus(Enum):
    SUCCESS = "success"
    FAILED = "failed"
    INCONCLUSIVE = "inconclusive"
    INTERRUPTED = "interrupted"
    ERROR = "error"


@dataclass
class RunResult:
    scenario: str
    success: bool
    exit_code: int
    status: RunStatus
    elapsed: float
    value: Any = None
    resource_usage: Optional[Dict] = None
    error: Optional[BaseException] = None
    error_message: Optional[str] = None


class ScenarioRunner:
    """Runs scenario callables and turns their outcome into a RunResult."""

    def __init__(self, monitor_resources: bool = True):
        self.monitor_resources = monitor_resources

    def _usage(self, before: Optional[Dict]) -> Optional[Dict]:
        if not self.monitor_resources or before is None:
            return None
        after = process_snapshot()
        return {
            "rss_mb": after["rss_mb"],
            "rss_delta_mb": after["rss_mb"] - before["rss_mb"],
            "cpu_user_s": after["cpu_user_s"] - before["cpu_user_s"],
            "cpu_system_s": after["cpu_system_s"] - before["cpu_system_s"],
        }

    def execute(self, name: str, func: Callable, *args, **kwargs) -> RunResult:
        start_time = time.time()
        before = process_snapshot() if self.monitor_resources else None
        logger.info(f"Running scenario: {name}")

        def finish(status: RunStatus, exit_code: int, value=None, error=None) -> RunResult:
            elapsed = time.time() - start_time
            return RunResult(
                scenario=name,
                success=status is RunStatus.SUCCESS,
                exit_code=exit_code,
                status=status,
                elapsed=elapsed,
                value=value,
                resource_usage=self._usage(before),
                error=error,
                error_message=str(error) if error is not None else None,
            )

        try:
            value = func(*args, **kwargs)
            result = finish(RunStatus.SUCCESS, EXIT_OK, value=value)
            logger.info(f"Scenario {name} completed in {result.elapsed:.2f}s")
            return result
        except KeyboardInterrupt as e:
            logger.info(f"Scenario {name} interrupted by user")
            return finish(RunStatus.INTERRUPTED, EXIT_INTERRUPTED, error=e)
        except InconclusiveError as e:
            logger.warning(f"Scenario {name} inconclusive: {e}")
            return finish(RunStatus.INCONCLUSIVE, e.exit_code, error=e)
        except BecQubitsError as e:
            logger.error(f"Scenario {name} failed: {e}")
            return finish(RunStatus.FAILED, e.exit_code, error=e)
        except ValidationError as e:
            logger.error(f"Scenario {name} rejected its configuration: {e}")
            return finish(RunStatus.FAILED, EXIT_CONFIG, error=e)
        except Exception as e:
            logger.exception(f"Scenario {name} raised an unexpected error")
            return finish(RunStatus.ERROR, EXIT_ERROR, error=e)
