"""Default configuration singletons for the rigidlab container.

``RigidLabInfrastructureFactory`` provides ``RigidityConfig`` and
``SweepBudget``.  Environment variables override the config defaults:

- ``RIGIDLAB_SEED``: base seed (default ``0``).
- ``RIGIDLAB_MODULUS``: prime modulus (default ``2**61 - 1``).
- ``RIGIDLAB_TRIALS``: randomized trials per test (default ``3``).

Callers that already hold a config pass it with
``init(overrides={RigidityConfig: config})``.
"""

import os
from typing import Mapping, Optional

from pico_ioc import PicoContainer, factory, provides

from .config import DEFAULT_MODULUS, RigidityConfig, SweepBudget
from .exceptions import InvalidArgumentError


def _env_int(env: Mapping[str, str], name: str, default: int) -> int:
    raw = env.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise InvalidArgumentError(f"{name} must be an integer, got {raw!r}") from None


def config_from_env(env: Optional[Mapping[str, str]] = None) -> RigidityConfig:
    """Build a ``RigidityConfig`` from ``RIGIDLAB_*`` variables."""
    env = os.environ if env is None else env
    return RigidityConfig(
        modulus=_env_int(env, "RIGIDLAB_MODULUS", DEFAULT_MODULUS),
        trials=_env_int(env, "RIGIDLAB_TRIALS", 3),
        seed=_env_int(env, "RIGIDLAB_SEED", 0),
    )


@factory
class RigidLabInfrastructureFactory:
    """Registers the configuration singletons.

    Provides:

    - ``RigidityConfig``: read from the environment.
    - ``SweepBudget``: library defaults.

    Args:
        container: The pico-ioc container.
    """

    def __init__(self, container: PicoContainer):
        self.container = container

    @provides(RigidityConfig, scope="singleton")
    def provide_config(self) -> RigidityConfig:
        return config_from_env()

    @provides(SweepBudget, scope="singleton")
    def provide_budget(self) -> SweepBudget:
        return SweepBudget()
