# Size guards and budgets, read from .env and the process environment

import os
from dataclasses import dataclass, replace
from functools import lru_cache

from dotenv import load_dotenv

from .errors import ConfigError

ENV_OVERRIDES = {
    "RADICAL_LAB_MAX_SIZE": "max_ring_size",
    "RADICAL_LAB_MAX_PARENT": "max_parent_size",
    "RADICAL_LAB_MAX_LATTICE": "max_lattice_size",
    "RADICAL_LAB_MAX_SEARCH": "max_search_budget",
}


@dataclass(frozen=True)
class Settings:
    max_ring_size: int = 256
    max_parent_size: int = 4096
    max_lattice_size: int = 100_000
    max_search_budget: int = 10_000

    def with_overrides(self, **changes):
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def load_settings(environ=None, dotenv_path=None):
    """Build Settings from defaults, a .env file and the environment."""
    if environ is None:
        load_dotenv(dotenv_path)
        environ = os.environ
    changes = {}
    for var, field_name in ENV_OVERRIDES.items():
        raw = environ.get(var)
        if raw is None or raw == "":
            continue
        try:
            value = int(raw)
        except ValueError:
            raise ConfigError(var, f"expected a positive integer, got {raw!r}") from None
        if value < 1:
            raise ConfigError(var, f"expected a positive integer, got {value}")
        changes[field_name] = value
    return Settings(**changes)


@lru_cache(maxsize=1)
def get_settings():
    return load_settings()


def resolve(settings):
    return settings if settings is not None else get_settings()
