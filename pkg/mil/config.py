#!/usr/bin/env python3
"""Environment-driven settings. Values may come from a .env file loaded by the CLI."""
import logging
import os

from .errors import ConfigurationError

DEFAULT_PAIR_BUDGET = 200000
DEFAULT_ORDER_CAP = 10000
DEFAULT_POWER_BUDGET = 64
DEFAULT_WORKERS = 1


def env_int(name, default):
    """Read an integer setting from the environment, falling back to `default`."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}")


def pair_budget(explicit=None):
    return explicit if explicit is not None else env_int('MIL_PAIR_BUDGET', DEFAULT_PAIR_BUDGET)


def order_cap(explicit=None):
    return explicit if explicit is not None else env_int('MIL_ORDER_CAP', DEFAULT_ORDER_CAP)


def power_budget(explicit=None):
    return explicit if explicit is not None else env_int('MIL_POWER_BUDGET', DEFAULT_POWER_BUDGET)


def workers(explicit=None):
    count = explicit if explicit is not None else env_int('MIL_WORKERS', DEFAULT_WORKERS)
    if count < 1:
        raise ConfigurationError(f"worker count must be positive, got {count}")
    return count


def log_level(verbose=False):
    if verbose:
        return logging.DEBUG
    name = os.getenv('MIL_LOG_LEVEL', 'WARNING').strip().upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        raise ConfigurationError(f"MIL_LOG_LEVEL must be a logging level name, got {name!r}")
    return level
