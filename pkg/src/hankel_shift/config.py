"""
Runtime settings read from the environment.

Command-line flags take precedence over these values.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Mapping, Optional

NMAX_DEFAULT_VAR = "HANKEL_NMAX_DEFAULT"
JOBS_VAR = "HANKEL_JOBS"


def _read_int(env: Mapping[str, str], name: str, default: int, minimum: int) -> int:
    raw = env.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.strip())
    except ValueError as e:
        raise ValueError(f"Environment variable {name} must be an integer (got '{raw}')") from e
    if value < minimum:
        raise ValueError(f"Environment variable {name} must be >= {minimum} (got {value})")
    return value


@dataclass(frozen=True)
class Settings:
    """
    Attributes:
        nmax_default: Depth used when a command is given no n / n_max.
        jobs: Worker threads for `verify all`.
    """

    nmax_default: int = 6
    jobs: int = 1

    @classmethod
    def from_env(cls, env: Optional[Mapping[str, str]] = None) -> Settings:
        """
        Build settings from HANKEL_NMAX_DEFAULT and HANKEL_JOBS.

        Raises:
            ValueError: If a variable is set but is not a valid integer.
        """
        if env is None:
            env = os.environ
        return cls(
            nmax_default=_read_int(env, NMAX_DEFAULT_VAR, cls.nmax_default, 0),
            jobs=_read_int(env, JOBS_VAR, cls.jobs, 1),
        )
