"""Configuration dataclasses and enumerations for rigidlab.

Defines the core configuration types used throughout the library:
``Verdict``, ``RigidityConfig`` and ``SweepBudget``.
"""

from dataclasses import dataclass
from enum import Enum

from .exceptions import InvalidArgumentError

DEFAULT_MODULUS = 2**61 - 1
"""int: Default prime modulus (a Mersenne prime, so products fit in 128 bits)."""


class Verdict(str, Enum):
    """Tri-state outcome of a randomized generic test.

    Attributes:
        YES: Witnessed (e.g. a trial reached the maximal rank).
        NO: Witnessed negative (e.g. a connectivity cut, a convention case).
        PROBABLY_NO: Every randomized trial fell short.
        PROBABLY_YES: Positive, but only up to randomness.
    """

    YES = "yes"
    NO = "no"
    PROBABLY_NO = "probably_no"
    PROBABLY_YES = "probably_yes"

    @property
    def positive(self) -> bool:
        """``True`` for ``YES`` and ``PROBABLY_YES``."""
        return self in (Verdict.YES, Verdict.PROBABLY_YES)


@dataclass(frozen=True)
class RigidityConfig:
    """Parameters shared by every randomized rigidity test.

    Analyses are pure functions of ``(graph, d, seed, modulus)``, so two runs
    with equal configs produce identical reports.

    Args:
        modulus: Prime used for all field arithmetic.
        trials: Independent random realizations tried before a negative
            verdict is returned.
        seed: Base seed; per-trial generators are derived from it.
        redundancy_slow_path: Cross-check stress-support redundancy by
            removing each edge and retesting local rigidity.
        replay_trials: Extra trials spent re-checking a disagreement in the
            coning sweep before it is reported.

    Raises:
        InvalidArgumentError: For fewer than one trial or a negative seed.
    """

    modulus: int = DEFAULT_MODULUS
    trials: int = 3
    seed: int = 0
    redundancy_slow_path: bool = False
    replay_trials: int = 5

    def __post_init__(self):
        if self.trials < 1:
            raise InvalidArgumentError(f"trials must be >= 1, got {self.trials}")
        if self.seed < 0:
            raise InvalidArgumentError(f"seed must be non-negative, got {self.seed}")
        if self.replay_trials < 0:
            raise InvalidArgumentError(f"replay_trials must be >= 0, got {self.replay_trials}")


@dataclass(frozen=True)
class SweepBudget:
    """Caps applied to enumeration and verification sweeps.

    Args:
        max_dimension: Largest ``d`` accepted by ``verify``.
        max_vertices: Largest vertex budget accepted by ``enumerate``.
        max_samples: Largest random sample count accepted by ``verify``.
        max_compositions: Largest number of chain compositions a sweep may
            visit before it is refused.
    """

    max_dimension: int = 5
    max_vertices: int = 28
    max_samples: int = 500
    max_compositions: int = 600_000
