"""Randomized generic rigidity tests over a prime field.

``RigidityEngine`` turns a graph into rigidity matrices at random field
realizations and reads generic properties off their ranks:

- local rigidity (GLR): some trial reaches rank ``vd - C(d+1, 2)``;
- stresses: the kernel of the transposed rigidity matrix;
- redundant rigidity (GRR): GLR plus a non-zero stress on every edge;
- global rigidity (GGR): a random stress matrix of nullity exactly ``d + 1``;
- partial rigidity (GPR): Hendrickson's conditions hold but GGR fails.

A successful trial certifies a positive rank verdict, because special points
can only lower a rank.  Negative verdicts after all trials are reported as
``PROBABLY_NO``.  Every result is a pure function of
``(graph, d, seed, modulus)``.
"""

from dataclasses import dataclass
from math import comb
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pico_ioc import component
from pydantic import BaseModel, Field

from .config import RigidityConfig, Verdict
from .connectivity import vertex_connectivity
from .constructors import delete_edges
from .exceptions import InvalidArgumentError, UnsupportedCaseError
from .field import FieldMatrix, PrimeField, kernel_basis, rank
from .graph import Edge, Graph
from .logging import get_logger

logger = get_logger(__name__)

_COORD_STREAM = 0
_STRESS_STREAM = 1


def euclidean_motions(d: int) -> int:
    """Dimension ``C(d+1, 2)`` of the trivial motions of ``R^d``."""
    return comb(d + 1, 2)


def rank_target(v: int, d: int) -> int:
    """Rank of an infinitesimally rigid framework on ``v >= d + 1`` vertices."""
    return v * d - euclidean_motions(d)


def max_rank(v: int, d: int) -> int:
    """Largest rank any rigidity matrix on *v* vertices can have in ``R^d``."""
    return rank_target(v, d) if v >= d + 1 else comb(v, 2)


@dataclass(frozen=True)
class Realization:
    """Field-valued coordinates ``p_1 .. p_v`` standing in for a generic point.

    Args:
        dimension: ``d``.
        coords: ``v`` tuples of ``d`` field elements.
        seed: Seed record ``(seed, trial)`` the coordinates were drawn from.
        modulus: Field the coordinates live in.
    """

    dimension: int
    coords: Tuple[Tuple[int, ...], ...]
    seed: Tuple[int, ...]
    modulus: int

    @property
    def vertex_count(self) -> int:
        return len(self.coords)

    def projection(self, axis: int) -> List[int]:
        """The ``axis``-th coordinate of every vertex."""
        return [p[axis] for p in self.coords]


@dataclass(frozen=True)
class Stress:
    """Edge weights ``omega`` in canonical edge order."""

    values: Tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.values)


@dataclass(frozen=True)
class StressMatrix:
    """Symmetric ``v x v`` lift of a stress with zero row sums."""

    matrix: FieldMatrix

    @property
    def size(self) -> int:
        return self.matrix.rows

    @property
    def nullity(self) -> int:
        return self.size - rank(self.matrix)

    def kernel_contains(self, vector: Sequence[int]) -> bool:
        return not any(self.matrix.apply(vector))


@dataclass(frozen=True)
class RankTest:
    """Outcome of the local rigidity test.

    Attributes:
        verdict: ``YES`` once a trial reaches *target*.
        rank: Best rank observed.
        target: ``vd - C(d+1, 2)``.
        trials: Trials actually run.
        realization: Realization that produced *rank*.
    """

    verdict: Verdict
    rank: int
    target: int
    trials: int
    realization: Realization


@dataclass(frozen=True)
class NullityTest:
    """Outcome of the global rigidity test.

    Attributes:
        verdict: ``YES`` once a trial produces nullity ``d + 1``.
        nullity: Smallest stress-matrix nullity observed.
        trials: Trials actually run.
    """

    verdict: Verdict
    nullity: int
    trials: int


@dataclass(frozen=True)
class EdgePartition:
    """Edges split by redundancy.

    Attributes:
        redundant: Edges whose removal keeps the graph locally rigid.
        non_redundant: The remaining edges.
        slow_path: Whether remove-and-retest produced the split.
    """

    redundant: Tuple[Edge, ...]
    non_redundant: Tuple[Edge, ...]
    slow_path: bool = False


@dataclass(frozen=True)
class HendricksonConditions:
    """Hendrickson's necessary conditions for global rigidity, one by one."""

    enough_vertices: bool
    redundantly_rigid: bool
    connected: bool
    connectivity: int

    @property
    def satisfied(self) -> bool:
        return self.enough_vertices and self.redundantly_rigid and self.connected


class RigidityReport(BaseModel):
    """Per-graph verdicts with their witnesses.

    Field order is the JSON contract; verdicts serialize as ``"yes"``,
    ``"no"``, ``"probably_no"`` or ``"probably_yes"``.
    """

    v: int = Field(description="Vertex count")
    e: int = Field(description="Edge count")
    d: int = Field(description="Dimension")
    glr: Verdict = Field(description="Generic local rigidity")
    grr: Verdict = Field(description="Generic redundant rigidity")
    ggr: Verdict = Field(description="Generic global rigidity")
    gpr: Verdict = Field(description="Generic partial rigidity")
    connectivity: int = Field(description="Vertex connectivity")
    rigidity_rank: int = Field(description="Best rigidity-matrix rank observed")
    stress_dim: int = Field(description="e - rigidity_rank")
    stress_matrix_nullity: int = Field(description="Smallest random stress-matrix nullity observed")
    non_redundant_edges: List[Tuple[int, int]] = Field(default_factory=list)
    trials: int = Field(description="Most trials any randomized test used")
    seed: int
    modulus: int

    @property
    def hendrickson_satisfied(self) -> bool:
        """``v >= d + 2``, GRR and vertex ``(d+1)``-connected."""
        return self.v >= self.d + 2 and self.grr.positive and self.connectivity >= self.d + 1

    def verdict_triple(self) -> Tuple[bool, bool, bool]:
        """``(glr, grr, ggr)`` as booleans."""
        return self.glr.positive, self.grr.positive, self.ggr.positive


@component(scope="singleton")
class RigidityEngine:
    """Decides generic rigidity properties by randomized exact rank tests.

    Args:
        config: Modulus, trial count and seed shared by every test.
    """

    def __init__(self, config: RigidityConfig):
        self.config = config
        self.field = PrimeField(config.modulus)

    def _seed(self, seed: Optional[int]) -> int:
        return self.config.seed if seed is None else seed

    def _rng(self, seed: int, trial: int, stream: int) -> np.random.Generator:
        return np.random.default_rng([seed, trial, stream])

    def random_realization(self, g: Graph, d: int, seed: Optional[int] = None, trial: int = 0) -> Realization:
        """Draw ``v * d`` coordinates from the generator seeded by ``(seed, trial)``."""
        if d < 1:
            raise InvalidArgumentError(f"dimension must be >= 1, got {d}")
        seed = self._seed(seed)
        flat = self.field.random_vector(g.vertex_count * d, self._rng(seed, trial, _COORD_STREAM))
        coords = tuple(tuple(flat[i * d : (i + 1) * d]) for i in range(g.vertex_count))
        return Realization(dimension=d, coords=coords, seed=(seed, trial), modulus=self.field.modulus)

    def _check_realization(self, g: Graph, r: Realization) -> None:
        if r.vertex_count != g.vertex_count:
            raise InvalidArgumentError(f"realization has {r.vertex_count} points, graph has {g.vertex_count} vertices")
        if r.modulus != self.field.modulus:
            raise InvalidArgumentError(f"realization modulus {r.modulus} differs from engine modulus")

    def rigidity_matrix(self, g: Graph, r: Realization) -> FieldMatrix:
        """The ``e x vd`` matrix whose row for ``{i, j}`` holds ``p_j - p_i`` in
        the columns of ``i`` and ``p_i - p_j`` in the columns of ``j``."""
        self._check_realization(g, r)
        p, d, e = self.field.modulus, r.dimension, g.edge_count
        data = np.zeros((e, g.vertex_count * d), dtype=object)
        if e == 0:
            return FieldMatrix(self.field, data)
        points = np.array(r.coords, dtype=object).reshape(g.vertex_count, d)
        heads = np.array([i for i, _ in g.edges])
        tails = np.array([j for _, j in g.edges])
        diffs = (points[tails] - points[heads]) % p
        rows = np.arange(e)
        for axis in range(d):
            data[rows, heads * d + axis] = diffs[:, axis]
            data[rows, tails * d + axis] = (-diffs[:, axis]) % p
        return FieldMatrix(self.field, data)

    def stress_basis(self, g: Graph, r: Realization) -> List[Stress]:
        """Basis of ``ker(R^T)``, the equilibrium stresses at *r*."""
        if g.edge_count == 0:
            return []
        return [Stress(tuple(x)) for x in kernel_basis(self.rigidity_matrix(g, r).transpose())]

    def stress_dim(self, g: Graph, r: Realization) -> int:
        return g.edge_count - rank(self.rigidity_matrix(g, r))

    def random_stress(self, g: Graph, r: Realization, seed: Optional[int] = None, trial: int = 0) -> Stress:
        """A random combination of the stress basis (the zero stress if there is none)."""
        return self._combine(self.stress_basis(g, r), g.edge_count, self._seed(seed), trial)

    def _combine(self, basis: List[Stress], e: int, seed: int, trial: int) -> Stress:
        if not basis:
            return Stress((0,) * e)
        p = self.field.modulus
        coeffs = self.field.random_vector(len(basis), self._rng(seed, trial, _STRESS_STREAM))
        values = [0] * e
        for c, s in zip(coeffs, basis):
            values = [(acc + c * w) % p for acc, w in zip(values, s.values)]
        return Stress(tuple(values))

    def equilibrium_residual(self, g: Graph, r: Realization, s: Stress) -> List[Tuple[int, ...]]:
        """``sum_j omega_ij (p_j - p_i)`` at every vertex (all zero for a stress)."""
        self._check_realization(g, r)
        p, d = self.field.modulus, r.dimension
        residual = [[0] * d for _ in range(g.vertex_count)]
        for (i, j), w in zip(g.edges, s.values):
            for axis in range(d):
                delta = w * (r.coords[j][axis] - r.coords[i][axis])
                residual[i][axis] = (residual[i][axis] + delta) % p
                residual[j][axis] = (residual[j][axis] - delta) % p
        return [tuple(row) for row in residual]

    def stress_matrix(self, g: Graph, s: Stress) -> StressMatrix:
        """``Omega`` with ``omega_ij`` off the diagonal on edges and zero row sums."""
        if len(s.values) != g.edge_count:
            raise InvalidArgumentError(f"stress has {len(s.values)} entries, graph has {g.edge_count} edges")
        p, v = self.field.modulus, g.vertex_count
        data = np.zeros((v, v), dtype=object)
        for (i, j), w in zip(g.edges, s.values):
            data[i, j] = data[j, i] = w
        for i in range(v):
            data[i, i] = (-sum(data[i])) % p
        return StressMatrix(FieldMatrix(self.field, data))

    def generic_rank(self, g: Graph, d: int, seed: Optional[int] = None, trials: Optional[int] = None) -> RankTest:
        """Best rigidity-matrix rank over the configured trials.

        Stops early once the rank reaches ``min(e, max_rank(v, d))``, which
        no realization can exceed.
        """
        seed = self._seed(seed)
        trials = trials or self.config.trials
        v = g.vertex_count
        target = rank_target(v, d)
        ceiling = min(g.edge_count, max_rank(v, d))
        best_rank, best_real, used = -1, None, 0
        for trial in range(trials):
            used += 1
            realization = self.random_realization(g, d, seed, trial)
            value = rank(self.rigidity_matrix(g, realization))
            logger.debug("rank trial %d for %s in R^%d: %d (target %d)", trial, g.summary(), d, value, target)
            if value > best_rank:
                best_rank, best_real = value, realization
            if best_rank >= ceiling:
                break
        verdict = Verdict.YES if v >= d + 1 and best_rank == target else Verdict.PROBABLY_NO
        return RankTest(verdict=verdict, rank=best_rank, target=target, trials=used, realization=best_real)

    def generic_stress_dim(self, g: Graph, d: int, seed: Optional[int] = None) -> int:
        """``e`` minus the best rank: the stress dimension at a generic point."""
        return g.edge_count - self.generic_rank(g, d, seed).rank

    def glr(self, g: Graph, d: int, seed: Optional[int] = None) -> RankTest:
        """Generic local rigidity in ``R^d``.

        Raises:
            UnsupportedCaseError: If ``v < d + 1``.
        """
        if d < 1:
            raise InvalidArgumentError(f"dimension must be >= 1, got {d}")
        if g.vertex_count < d + 1:
            raise UnsupportedCaseError(
                f"local rigidity test needs at least d+1 = {d + 1} vertices, graph has {g.vertex_count}"
            )
        return self.generic_rank(g, d, seed)

    def _glr_verdict(self, g: Graph, d: int, seed: Optional[int] = None) -> Tuple[Verdict, RankTest]:
        test = self.generic_rank(g, d, seed)
        if g.vertex_count < d + 1:
            return (Verdict.YES if g.is_complete() else Verdict.NO), test
        return test.verdict, test

    def ggr(self, g: Graph, d: int, seed: Optional[int] = None) -> NullityTest:
        """Generic global rigidity in ``R^d`` via random stress matrices.

        Complete graphs are globally rigid outright; on ``v <= d + 1``
        vertices only complete graphs are.  Otherwise a trial succeeds when
        a random stress matrix has nullity exactly ``d + 1``.  The stress
        space only grows at special realizations, so a realization with no
        stress at all proves the answer is no.
        """
        if d < 1:
            raise InvalidArgumentError(f"dimension must be >= 1, got {d}")
        seed = self._seed(seed)
        v = g.vertex_count
        best, used, stress_free = v, 0, False
        for trial in range(self.config.trials):
            used += 1
            realization = self.random_realization(g, d, seed, trial)
            basis = self.stress_basis(g, realization)
            stress_free = not basis
            stress = self._combine(basis, g.edge_count, seed, trial)
            nullity = self.stress_matrix(g, stress).nullity
            logger.debug("nullity trial %d for %s in R^%d: %d", trial, g.summary(), d, nullity)
            best = min(best, nullity)
            if best == d + 1 or stress_free or g.is_complete() or v <= d + 1:
                break
        if g.is_complete():
            verdict = Verdict.YES
        elif v <= d + 1 or stress_free:
            verdict = Verdict.NO
        else:
            verdict = Verdict.YES if best == d + 1 else Verdict.PROBABLY_NO
        return NullityTest(verdict=verdict, nullity=best, trials=used)

    def stress_support(self, g: Graph, r: Realization) -> List[bool]:
        """For each edge, whether some stress at *r* is non-zero on it."""
        support = [False] * g.edge_count
        for s in self.stress_basis(g, r):
            support = [old or bool(w) for old, w in zip(support, s.values)]
        return support

    def redundant_edges(self, g: Graph, d: int, seed: Optional[int] = None) -> EdgePartition:
        """Split edges into redundant and non-redundant ones.

        For a locally rigid graph an edge is redundant exactly when some
        stress is non-zero on it.  A graph that is not locally rigid has no
        redundant edge, since deleting edges never raises the rank.  With
        ``redundancy_slow_path`` each edge is also removed and the local
        rigidity test rerun; that answer wins and disagreements are logged.
        """
        return self._split_edges(g, d, self._seed(seed), *self._glr_verdict(g, d, seed))

    def _split_edges(self, g: Graph, d: int, seed: int, glr_verdict: Verdict, test: RankTest) -> EdgePartition:
        if glr_verdict != Verdict.YES:
            return EdgePartition(redundant=(), non_redundant=g.edges)
        support = self.stress_support(g, test.realization)
        fast = {edge for edge, flag in zip(g.edges, support) if flag}
        if not self.config.redundancy_slow_path:
            return self._partition(g, fast)
        slow = {edge for edge in g.edges if self._glr_verdict(delete_edges(g, [edge]), d, seed)[0] == Verdict.YES}
        if slow != fast:
            logger.warning(
                "redundancy mismatch for %s in R^%d: support-only %s, removal-only %s",
                g.summary(),
                d,
                sorted(fast - slow),
                sorted(slow - fast),
            )
        return self._partition(g, slow, slow_path=True)

    @staticmethod
    def _partition(g: Graph, redundant: set, slow_path: bool = False) -> EdgePartition:
        return EdgePartition(
            redundant=tuple(e for e in g.edges if e in redundant),
            non_redundant=tuple(e for e in g.edges if e not in redundant),
            slow_path=slow_path,
        )

    def grr(self, g: Graph, d: int, seed: Optional[int] = None) -> Verdict:
        """``YES`` iff the graph is locally rigid and every edge is redundant."""
        seed = self._seed(seed)
        glr_verdict, test = self._glr_verdict(g, d, seed)
        return self._grr_verdict(g, d, glr_verdict, self._split_edges(g, d, seed, glr_verdict, test))

    @staticmethod
    def _grr_verdict(g: Graph, d: int, glr_verdict: Verdict, partition: EdgePartition) -> Verdict:
        if g.vertex_count <= d + 1:
            return Verdict.YES if glr_verdict == Verdict.YES and not partition.non_redundant else Verdict.NO
        if glr_verdict == Verdict.YES:
            return Verdict.YES if not partition.non_redundant else Verdict.PROBABLY_NO
        return Verdict.PROBABLY_NO

    def is_gpr(self, g: Graph, d: int, seed: Optional[int] = None) -> RigidityReport:
        """Run every test and assemble a ``RigidityReport``.

        ``gpr`` is ``YES`` when ``v >= d + 2``, the graph is GLR and GRR, it
        is ``(d+1)``-connected and the global rigidity test fails; ``NO``
        when a witness refutes a condition, for example a cut below
        ``d + 1`` or a successful global test; ``PROBABLY_NO`` when only a
        randomized test fell short.
        """
        if d < 1:
            raise InvalidArgumentError(f"dimension must be >= 1, got {d}")
        seed = self._seed(seed)
        glr_verdict, rank_test = self._glr_verdict(g, d, seed)
        partition = self._split_edges(g, d, seed, glr_verdict, rank_test)
        grr_verdict = self._grr_verdict(g, d, glr_verdict, partition)
        nullity_test = self.ggr(g, d, seed)
        connectivity = vertex_connectivity(g)

        if g.vertex_count < d + 2 or connectivity < d + 1 or nullity_test.verdict == Verdict.YES:
            gpr = Verdict.NO
        elif glr_verdict != Verdict.YES or grr_verdict != Verdict.YES:
            gpr = Verdict.PROBABLY_NO
        else:
            gpr = Verdict.YES

        report = RigidityReport(
            v=g.vertex_count,
            e=g.edge_count,
            d=d,
            glr=glr_verdict,
            grr=grr_verdict,
            ggr=nullity_test.verdict,
            gpr=gpr,
            connectivity=connectivity,
            rigidity_rank=rank_test.rank,
            stress_dim=g.edge_count - rank_test.rank,
            stress_matrix_nullity=nullity_test.nullity,
            non_redundant_edges=list(partition.non_redundant),
            trials=max(rank_test.trials, nullity_test.trials),
            seed=seed,
            modulus=self.field.modulus,
        )
        logger.info(
            "%s in R^%d: glr=%s grr=%s ggr=%s gpr=%s",
            g.summary(),
            d,
            report.glr.value,
            report.grr.value,
            report.ggr.value,
            report.gpr.value,
        )
        return report

    analyze = is_gpr

    def hendrickson_conditions(self, g: Graph, d: int, seed: Optional[int] = None) -> HendricksonConditions:
        """``v >= d + 2``, GRR and ``(d+1)``-connectivity, reported separately."""
        connectivity = vertex_connectivity(g)
        return HendricksonConditions(
            enough_vertices=g.vertex_count >= d + 2,
            redundantly_rigid=self.grr(g, d, seed) == Verdict.YES,
            connected=connectivity >= d + 1,
            connectivity=connectivity,
        )
