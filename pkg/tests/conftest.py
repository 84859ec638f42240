import pytest

from rigidlab.classifier import ChainClassifier
from rigidlab.config import RigidityConfig, SweepBudget
from rigidlab.constructors import complete, complete_bipartite, cycle
from rigidlab.engine import RigidityEngine
from rigidlab.field import PrimeField
from rigidlab.graph import AttachmentSpec, Graph
from rigidlab.registry import ConstructorRegistry
from rigidlab.scheduler import SweepScheduler
from rigidlab.verification import TheoremVerifier

# 2**31 - 1; small enough to make hand-checked arithmetic readable.
SMALL_PRIME = 2147483647


@pytest.fixture
def config():
    """Default configuration: Mersenne modulus, 3 trials, seed 0."""
    return RigidityConfig()


@pytest.fixture
def engine(config):
    return RigidityEngine(config)


@pytest.fixture
def field():
    return PrimeField(SMALL_PRIME)


@pytest.fixture
def budget():
    return SweepBudget()


@pytest.fixture
def classifier(budget):
    return ChainClassifier(budget)


@pytest.fixture
def scheduler(monkeypatch):
    monkeypatch.delenv("RIGIDLAB_MAX_WORKERS", raising=False)
    return SweepScheduler()


@pytest.fixture
def verifier(engine, classifier, scheduler, budget):
    return TheoremVerifier(engine, classifier, scheduler, budget)


@pytest.fixture
def registry():
    registry = ConstructorRegistry()
    registry.scan_builtins()
    return registry


@pytest.fixture
def triangle():
    return complete(3)


@pytest.fixture
def quad_with_diagonal():
    """4-cycle 0-1-2-3 plus the diagonal 0-2."""
    return Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 2)))


@pytest.fixture
def k55():
    return complete_bipartite(5, 5)


@pytest.fixture
def square():
    return cycle(4)


@pytest.fixture
def k6_attachment_spec():
    """C_{2,3,5,4} glued onto K6 along {0,1} and {2,3,4,5}."""
    return AttachmentSpec(host=complete(6), left_anchor=(0, 1), right_anchor=(2, 3, 4, 5), interior_sizes=(3, 5))
