import os
from unittest.mock import patch

import pytest

from rigidlab.config import DEFAULT_MODULUS, RigidityConfig, SweepBudget, Verdict
from rigidlab.exceptions import InvalidArgumentError
from rigidlab.infrastructure import RigidLabInfrastructureFactory, config_from_env


class TestVerdict:
    def test_values(self):
        assert [v.value for v in Verdict] == ["yes", "no", "probably_no", "probably_yes"]

    def test_is_str_enum(self):
        assert Verdict.YES == "yes"

    def test_positive(self):
        assert Verdict.YES.positive
        assert Verdict.PROBABLY_YES.positive
        assert not Verdict.NO.positive
        assert not Verdict.PROBABLY_NO.positive


class TestRigidityConfig:
    def test_defaults(self):
        config = RigidityConfig()
        assert config.modulus == DEFAULT_MODULUS == 2**61 - 1
        assert config.trials == 3
        assert config.seed == 0
        assert config.redundancy_slow_path is False

    @pytest.mark.parametrize("kwargs", [{"trials": 0}, {"seed": -1}, {"replay_trials": -1}])
    def test_rejects_invalid_values(self, kwargs):
        with pytest.raises(InvalidArgumentError):
            RigidityConfig(**kwargs)

    def test_frozen(self):
        with pytest.raises(AttributeError):
            RigidityConfig().seed = 1


class TestSweepBudget:
    def test_defaults(self):
        budget = SweepBudget()
        assert budget.max_dimension == 5
        assert budget.max_samples == 500


class TestConfigFromEnv:
    def test_defaults_when_unset(self):
        assert config_from_env({}) == RigidityConfig()

    def test_reads_variables(self):
        env = {"RIGIDLAB_SEED": "42", "RIGIDLAB_MODULUS": "2147483647", "RIGIDLAB_TRIALS": "5"}
        assert config_from_env(env) == RigidityConfig(modulus=2147483647, trials=5, seed=42)

    def test_blank_means_default(self):
        assert config_from_env({"RIGIDLAB_SEED": "  "}).seed == 0

    def test_invalid_integer(self):
        with pytest.raises(InvalidArgumentError, match="RIGIDLAB_TRIALS"):
            config_from_env({"RIGIDLAB_TRIALS": "many"})

    def test_uses_process_environment(self):
        with patch.dict(os.environ, {"RIGIDLAB_SEED": "9"}):
            assert config_from_env().seed == 9


class TestInfrastructureFactory:
    def test_provides_budget(self):
        assert RigidLabInfrastructureFactory(container=None).provide_budget() == SweepBudget()

    def test_provides_config_from_environment(self):
        with patch.dict(os.environ, {"RIGIDLAB_SEED": "4", "RIGIDLAB_TRIALS": "2"}):
            config = RigidLabInfrastructureFactory(container=None).provide_config()
        assert (config.seed, config.trials) == (4, 2)
