"""
Timing utilities for verification runs
"""
import logging
import sys
import time
from contextlib import contextmanager
from functools import wraps
from typing import Any, Callable, Dict, Iterator, List, Optional

import structlog

from boolcat.core.config import get_settings

logger = structlog.get_logger(__name__)


class Stopwatch:
    """Elapsed wall-clock time of a timed block"""

    def __init__(self):
        self.start = time.perf_counter()
        self.seconds = 0.0

    @property
    def millis(self) -> float:
        return self.seconds * 1000.0


class PerformanceMonitor:
    """Record per-step timings and flag slow steps"""

    def __init__(self, slow_seconds: Optional[float] = None):
        self.slow_seconds = get_settings().slow_row_seconds if slow_seconds is None else slow_seconds
        self.timings: List[Dict[str, Any]] = []

    def log_timing(self, step: str, duration: float):
        """Log a step timing"""
        self.timings.append({
            'step': step,
            'duration': duration,
            'timestamp': time.time()
        })

        if duration > self.slow_seconds:
            logger.warning("slow_step", step=step, seconds=round(duration, 3))
        else:
            logger.debug("step_timed", step=step, seconds=round(duration, 3))

    @contextmanager
    def timed(self, step: str) -> Iterator[Stopwatch]:
        watch = Stopwatch()
        try:
            yield watch
        finally:
            watch.seconds = time.perf_counter() - watch.start
            self.log_timing(step, watch.seconds)

    def get_performance_stats(self) -> dict:
        """Summary of recorded timings"""
        durations = [t['duration'] for t in self.timings]
        if not durations:
            return {'steps': 0, 'total_seconds': 0.0, 'max_seconds': 0.0}
        return {
            'steps': len(durations),
            'total_seconds': sum(durations),
            'max_seconds': max(durations),
        }


def monitor_performance(func: Callable) -> Callable:
    """Decorator to time a function through the global monitor"""
    @wraps(func)
    def wrapper(*args, **kwargs) -> Any:
        with monitor.timed(getattr(func, '__name__', 'unknown')):
            return func(*args, **kwargs)

    return wrapper


# Global monitor instance
monitor = PerformanceMonitor()


def configure_logging(level: str = "WARNING") -> None:
    """Send stdlib and structlog output to stderr at the given level"""
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        numeric = logging.WARNING
    logging.basicConfig(
        level=numeric,
        stream=sys.stderr,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        force=True,
    )
    structlog.configure(
        wrapper_class=structlog.make_filtering_bound_logger(numeric),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
    )
