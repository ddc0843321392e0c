"""
Logger configuration for egcdkit.

Logging goes through loguru. Console records are written to stderr so that
command results on stdout stay byte-for-byte reproducible; file records are
serialized as JSON for easier parsing.

Environment Variables:
    - EGCDKIT_LOG_DISABLED: Disable logging (default: false).
    - EGCDKIT_CLEAR_LOGGERS: Clear existing loguru sinks (default: true).
    - EGCDKIT_LOG_LEVEL: Log level for console logging
        (default: WARNING, options: DEBUG, INFO, WARNING, ERROR, CRITICAL).
    - EGCDKIT_LOG_FILE: Path to the log file for file logging
        (default: egcdkit.log if a log file level is set, else none)
    - EGCDKIT_LOG_FILE_LEVEL: Log level for file logging
        (default: INFO if a log file is set, else none).

Usage:
    from egcdkit import logger, configure_logger, LoggerConfig

    configure_logger(config=LoggerConfig(console_log_level="DEBUG"))
    logger.debug("iterative egcd finished in {} steps", 12)

Benchmark aggregates are logged at the custom METRIC level:
    logger.log("METRIC", "iterative 2048 bits: mean 1196.4 iterations")
"""

import os
import sys
from dataclasses import dataclass
from typing import Optional

from loguru import logger

__all__ = ["LoggerConfig", "configure_logger", "logger", "METRIC_LEVEL"]

METRIC_LEVEL = "METRIC"


@dataclass
class LoggerConfig:
    disabled: bool = False
    clear_loggers: bool = True
    console_log_level: Optional[str] = "WARNING"
    log_file: Optional[str] = None
    log_file_level: Optional[str] = None
    metrics_disabled: bool = False


def _env_flag(value: str) -> bool:
    return value.strip().lower() in ("1", "true", "t", "yes", "y", "on")


def configure_logger(config: Optional[LoggerConfig] = None):
    """
    Configure loguru sinks for egcdkit.
    Environment variables take precedence over the passed config.

    :param config: The configuration for the logger to use, defaults to
        LoggerConfig()
    """
    logger_config = config or LoggerConfig()

    # env vars get priority
    if (disabled := os.getenv("EGCDKIT_LOG_DISABLED")) is not None:
        logger_config.disabled = _env_flag(disabled)
    if (clear_loggers := os.getenv("EGCDKIT_CLEAR_LOGGERS")) is not None:
        logger_config.clear_loggers = _env_flag(clear_loggers)
    if (console_log_level := os.getenv("EGCDKIT_LOG_LEVEL")) is not None:
        logger_config.console_log_level = console_log_level.upper()
    if (log_file := os.getenv("EGCDKIT_LOG_FILE")) is not None:
        logger_config.log_file = log_file
    if (log_file_level := os.getenv("EGCDKIT_LOG_FILE_LEVEL")) is not None:
        logger_config.log_file_level = log_file_level

    if logger_config.disabled:
        logger.disable("egcdkit")
        return

    logger.enable("egcdkit")

    if logger_config.clear_loggers:
        logger.remove()

    if not logger_config.metrics_disabled:
        _initialize_metric_level()

    if logger_config.console_log_level:
        logger.add(
            sys.stderr,
            level=logger_config.console_log_level.upper(),
            format="{time} | {function} | {level} - {message}",
        )

    if logger_config.log_file or logger_config.log_file_level:
        log_file = logger_config.log_file or "egcdkit.log"
        log_file_level = logger_config.log_file_level or "INFO"
        logger.add(log_file, level=log_file_level.upper(), serialize=True)


def _initialize_metric_level() -> None:
    """
    Register the METRIC level once per process, sitting between WARNING and
    ERROR so benchmark aggregates show up under the default console level
    """
    if METRIC_LEVEL in logger._core.levels.keys():
        return
    logger.level(METRIC_LEVEL, no=38, color="<yellow>")


# configure on import: console logging at WARNING, no file logging
configure_logger(config=LoggerConfig())
