"""rigidlab: exact randomized tests for generic rigidity of graphs.

Public API exports.  Everything listed in ``__all__`` is stable.
"""

from .bootstrap import init
from .classifier import (
    ChainClassifier,
    ChainVerdict,
    bipartite_gpr,
    bolker_roth_dim,
    chain_cover_stress_dim,
    critical_vertex_count,
)
from .config import DEFAULT_MODULUS, RigidityConfig, SweepBudget, Verdict
from .connectivity import is_k_connected, vertex_connectivity
from .constructors import (
    attach,
    blow_up,
    complete,
    complete_bipartite,
    cone,
    cycle,
    delete_edges,
    hennenberg,
    k_chain,
    k_ring,
    path,
    replace,
)
from .decorators import ConstructorConfig, graph_constructor
from .engine import HendricksonConditions, Realization, RigidityEngine, RigidityReport, Stress, StressMatrix
from .exceptions import (
    ExpressionSyntaxError,
    GraphParseError,
    InvalidArgumentError,
    NotPrimeError,
    OutOfRangeError,
    RigidLabError,
    UnsupportedCaseError,
)
from .expressions import parse_expression
from .field import FieldMatrix, PrimeField, kernel_basis, plu, random_vector, rank, rref
from .graph import AttachmentSpec, ChainSpec, Graph
from .infrastructure import RigidLabInfrastructureFactory
from .logging import configure_logging, get_logger
from .registry import ConstructorRegistry
from .scheduler import SweepScheduler
from .verification import Mismatch, Target, TheoremVerifier, VerificationReport

__all__ = [
    "Graph",
    "ChainSpec",
    "AttachmentSpec",
    "complete",
    "complete_bipartite",
    "path",
    "cycle",
    "blow_up",
    "k_chain",
    "k_ring",
    "cone",
    "attach",
    "replace",
    "hennenberg",
    "delete_edges",
    "vertex_connectivity",
    "is_k_connected",
    "PrimeField",
    "FieldMatrix",
    "rank",
    "rref",
    "kernel_basis",
    "plu",
    "random_vector",
    "RigidityEngine",
    "RigidityReport",
    "HendricksonConditions",
    "Realization",
    "Stress",
    "StressMatrix",
    "ChainClassifier",
    "ChainVerdict",
    "bipartite_gpr",
    "bolker_roth_dim",
    "chain_cover_stress_dim",
    "critical_vertex_count",
    "TheoremVerifier",
    "VerificationReport",
    "Mismatch",
    "Target",
    "SweepScheduler",
    "ConstructorRegistry",
    "ConstructorConfig",
    "graph_constructor",
    "parse_expression",
    "RigidityConfig",
    "SweepBudget",
    "Verdict",
    "DEFAULT_MODULUS",
    "RigidLabInfrastructureFactory",
    "RigidLabError",
    "InvalidArgumentError",
    "UnsupportedCaseError",
    "OutOfRangeError",
    "NotPrimeError",
    "GraphParseError",
    "ExpressionSyntaxError",
    "init",
    "configure_logging",
    "get_logger",
]
