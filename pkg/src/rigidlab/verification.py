"""Sweeps that cross-check closed-form results against randomized tests.

``TheoremVerifier`` runs one named target and returns a
``VerificationReport``: how many instances were checked, the positive
instances found, and every mismatch with the seed and modulus needed to
replay it.

Targets:

- ``theorem-main``: chain predicate against ``is_gpr`` at ``C(d+2, 2)`` vertices.
- ``covering``: measured stress dimension against the 3-chain cover formula.
- ``bolker-roth``: stress dimension of ``K_{a,b}`` against ``(a-d-1)(b-d-1)``.
- ``hendrickson``: globally rigid samples must be redundantly rigid and
  ``(d+1)``-connected.
- ``coning``: verdicts at ``d`` equal the cone's verdicts at ``d + 1``.
- ``chain-conjecture``: chains with more than ``C(d+2, 2)`` vertices that
  meet both of Hendrickson's conditions are globally rigid.
"""

from dataclasses import replace
from enum import Enum
from functools import partial
from typing import Callable, Dict, List, Optional

import networkx as nx
import numpy as np
from pico_ioc import component
from pydantic import BaseModel, Field

from .classifier import (
    ChainClassifier,
    ChainVerdict,
    bolker_roth_dim,
    chain_cover_stress_dim,
    critical_vertex_count,
)
from .config import RigidityConfig, SweepBudget, Verdict
from .connectivity import is_k_connected
from .constructors import complete_bipartite, cone, k_chain
from .engine import RigidityEngine, RigidityReport
from .exceptions import InvalidArgumentError, OutOfRangeError
from .graph import ChainSpec, Graph
from .logging import get_logger
from .scheduler import SweepScheduler

logger = get_logger(__name__)

_SAMPLE_STREAM = 2


class Target(str, Enum):
    """Verification targets accepted by ``TheoremVerifier.run``."""

    THEOREM_MAIN = "theorem-main"
    COVERING = "covering"
    BOLKER_ROTH = "bolker-roth"
    HENDRICKSON = "hendrickson"
    CONING = "coning"
    CHAIN_CONJECTURE = "chain-conjecture"


class Mismatch(BaseModel):
    """One disagreement, with what is needed to replay it."""

    subject: str = Field(description="Chain sizes, bipartite sides or sampled graph")
    expected: str
    observed: str
    seed: int
    modulus: int
    detail: str = ""


class VerificationReport(BaseModel):
    """Outcome of one sweep.

    ``checked`` counts every instance examined, including those settled by a
    combinatorial witness without running a randomized test.
    """

    target: Target
    d: int
    passed: bool
    checked: int
    agreements: int
    positives: List[str] = Field(default_factory=list)
    mismatches: List[Mismatch] = Field(default_factory=list)
    seed: int
    modulus: int


def _chain_report(engine: RigidityEngine, d: int, spec: ChainSpec) -> RigidityReport:
    return engine.is_gpr(k_chain(spec), d)


def _chain_stress_dim(engine: RigidityEngine, d: int, spec: ChainSpec) -> int:
    return engine.generic_stress_dim(k_chain(spec), d)


@component(scope="singleton")
class TheoremVerifier:
    """Runs verification sweeps.

    Args:
        engine: Randomized rigidity tests.
        classifier: Closed-form predicates and chain enumeration.
        scheduler: Fan-out for independent instances.
        budget: Caps on dimension, vertex count and sample size.
    """

    def __init__(
        self,
        engine: RigidityEngine,
        classifier: ChainClassifier,
        scheduler: SweepScheduler,
        budget: SweepBudget,
    ):
        self.engine = engine
        self.classifier = classifier
        self.scheduler = scheduler
        self.budget = budget

    @property
    def config(self) -> RigidityConfig:
        return self.engine.config

    def run(self, target: str, d: int, samples: int = 50, vertices: Optional[int] = None) -> VerificationReport:
        """Dispatch to the sweep named *target*.

        Raises:
            InvalidArgumentError: For an unknown target.
            OutOfRangeError: When *d* or *samples* exceed the budget.
        """
        try:
            target = Target(target)
        except ValueError:
            known = ", ".join(t.value for t in Target)
            raise InvalidArgumentError(f"unknown verification target {target!r}; expected one of {known}") from None
        self._check_budget(d, samples)
        sweeps: Dict[Target, Callable[[], VerificationReport]] = {
            Target.THEOREM_MAIN: lambda: self.verify_theorem_main(d),
            Target.COVERING: lambda: self.verify_covering(d, samples=None),
            Target.BOLKER_ROTH: lambda: self.verify_bolker_roth(d),
            Target.HENDRICKSON: lambda: self.verify_hendrickson(d, samples),
            Target.CONING: lambda: self.verify_coning(d, samples),
            Target.CHAIN_CONJECTURE: lambda: self.verify_chain_conjecture(d, vertices),
        }
        return sweeps[target]()

    def _check_budget(self, d: int, samples: int = 0) -> None:
        if d < 1:
            raise InvalidArgumentError(f"dimension must be >= 1, got {d}")
        if d > self.budget.max_dimension:
            raise OutOfRangeError(f"dimension {d} exceeds the cap of {self.budget.max_dimension}")
        if samples > self.budget.max_samples:
            raise OutOfRangeError(f"{samples} samples exceed the cap of {self.budget.max_samples}")

    def _report(
        self, target: Target, d: int, checked: int, positives: List[str], mismatches: List[Mismatch]
    ) -> VerificationReport:
        report = VerificationReport(
            target=target,
            d=d,
            passed=not mismatches,
            checked=checked,
            agreements=checked - len(mismatches),
            positives=positives,
            mismatches=mismatches,
            seed=self.config.seed,
            modulus=self.config.modulus,
        )
        logger.info(
            "%s in R^%d: %d checked, %d positive, %d mismatches",
            target.value,
            d,
            checked,
            len(positives),
            len(mismatches),
        )
        for m in mismatches:
            logger.warning(
                "%s mismatch on %s: expected %s, observed %s", target.value, m.subject, m.expected, m.observed
            )
        return report

    def _mismatch(self, subject: str, expected: str, observed: str, detail: str = "") -> Mismatch:
        return Mismatch(
            subject=subject,
            expected=expected,
            observed=observed,
            seed=self.config.seed,
            modulus=self.config.modulus,
            detail=detail,
        )

    def _connected_chains(self, d: int) -> List[ChainSpec]:
        """Chains with ``k >= 4`` on ``C(d+2, 2)`` vertices whose interior blocks
        all have ``d + 1`` vertices or more."""
        v = critical_vertex_count(d)
        return list(self.classifier.enumerate_kchains(d, v, 4, v, min_interior=d + 1))

    def chain_verdicts(self, d: int) -> List[ChainVerdict]:
        """Predicted and measured verdicts for every ``(d+1)``-connected chain
        with ``k >= 4`` on ``C(d+2, 2)`` vertices, sorted by spec."""
        chains = self._connected_chains(d)
        reports = self.scheduler.map(partial(_chain_report, self.engine, d), chains)
        verdicts = []
        for spec, report in zip(chains, reports):
            verdict = self.classifier.kchain_gpr_predicate(spec, d)
            verdicts.append(verdict.model_copy(update={"experimental": report}))
        return sorted(verdicts, key=lambda cv: cv.spec)

    def verify_theorem_main(self, d: int) -> VerificationReport:
        """Compare the chain predicate with ``is_gpr`` on every chain.

        Chains with an interior block smaller than ``d + 1`` are settled by
        that block: removing it disconnects the graph, so neither side can
        call them GPR.  The rest are tested.
        """
        self._check_budget(d)
        v = critical_vertex_count(d)
        total = self.classifier.count_kchains(v, 4, v)
        positives, mismatches = [], []
        for verdict in self.chain_verdicts(d):
            observed = verdict.experimental.gpr
            if observed == Verdict.YES:
                positives.append(str(verdict.chain))
            if verdict.predicted_gpr != (observed == Verdict.YES):
                mismatches.append(
                    self._mismatch(
                        str(verdict.chain),
                        expected="gpr" if verdict.predicted_gpr else "not gpr",
                        observed=observed.value,
                        detail=f"cond1={verdict.cond1} cond2={verdict.cond2} cond3={verdict.cond3}",
                    )
                )
        return self._report(Target.THEOREM_MAIN, d, total, positives, mismatches)

    def verify_covering(self, d: int, samples: Optional[int] = None) -> VerificationReport:
        """Measured stress dimension of each connected chain against
        ``e - v(d+1) + (d+1)^2``; *samples* picks a seeded subset."""
        self._check_budget(d)
        chains = self._connected_chains(d)
        if samples is not None and samples < len(chains):
            rng = np.random.default_rng([self.config.seed, _SAMPLE_STREAM])
            picked = sorted(rng.choice(len(chains), size=samples, replace=False))
            chains = [chains[i] for i in picked]
        measured = self.scheduler.map(partial(_chain_stress_dim, self.engine, d), chains)
        positives, mismatches = [], []
        for spec, observed in zip(chains, measured):
            expected = chain_cover_stress_dim(spec, d)
            if expected > 0:
                positives.append(str(spec))
            if observed != expected:
                mismatches.append(self._mismatch(str(spec), str(expected), str(observed), "stress dimension"))
        return self._report(Target.COVERING, d, len(chains), positives, mismatches)

    def verify_bolker_roth(self, d: int) -> VerificationReport:
        """Every ``K_{a,b}`` with ``d+1 <= a <= b`` and ``a + b <= C(d+2, 2)``."""
        self._check_budget(d)
        limit = critical_vertex_count(d)
        pairs = [(a, b) for a in range(d + 1, limit) for b in range(a, limit - a + 1)]
        positives, mismatches = [], []
        for a, b in pairs:
            expected = bolker_roth_dim(a, b, d)
            observed = self.engine.generic_stress_dim(complete_bipartite(a, b), d)
            if expected > 0:
                positives.append(f"K{a},{b}")
            if observed != expected:
                mismatches.append(self._mismatch(f"K{a},{b}", str(expected), str(observed), "stress dimension"))
        return self._report(Target.BOLKER_ROTH, d, len(pairs), positives, mismatches)

    def sample_graph(self, index: int, min_vertices: int, max_vertices: int) -> Graph:
        """Seeded ``G(n, p)`` sample with ``min_vertices <= n <= max_vertices``
        and edge probability between 0.4 and 0.95."""
        rng = np.random.default_rng([self.config.seed, index, _SAMPLE_STREAM])
        n = int(rng.integers(min_vertices, max_vertices + 1))
        p = float(rng.uniform(0.4, 0.95))
        return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=int(rng.integers(0, 2**31))))

    def verify_hendrickson(self, d: int, samples: int = 50, max_vertices: int = 10) -> VerificationReport:
        """No sampled globally rigid graph may fail redundancy or connectivity."""
        self._check_budget(d, samples)
        positives, mismatches = [], []
        for index in range(samples):
            g = self.sample_graph(index, d + 2, max(max_vertices, d + 2))
            report = self.engine.is_gpr(g, d)
            if report.ggr != Verdict.YES:
                continue
            subject = f"sample {index}: {g.summary()}"
            positives.append(subject)
            if report.connectivity < d + 1 or report.grr != Verdict.YES:
                mismatches.append(
                    self._mismatch(
                        subject,
                        expected=f"grr=yes, connectivity>={d + 1}",
                        observed=f"grr={report.grr.value}, connectivity={report.connectivity}",
                    )
                )
        return self._report(Target.HENDRICKSON, d, samples, positives, mismatches)

    def verify_coning(self, d: int, samples: int = 30, max_vertices: int = 9) -> VerificationReport:
        """Verdict triples of samples at ``d`` against their cones at ``d + 1``.

        A disagreement is replayed with ``replay_trials`` extra trials before
        it counts as a mismatch.
        """
        self._check_budget(d + 1, samples)
        replay = RigidityEngine(replace(self.config, trials=self.config.trials + self.config.replay_trials))
        positives, mismatches = [], []
        for index in range(samples):
            g = self.sample_graph(index, d + 2, max(max_vertices, d + 2))
            base, coned = self.engine.is_gpr(g, d), self.engine.is_gpr(cone(g), d + 1)
            if base.verdict_triple() != coned.verdict_triple():
                logger.info("coning disagreement on sample %d, replaying", index)
                base, coned = replay.is_gpr(g, d), replay.is_gpr(cone(g), d + 1)
            subject = f"sample {index}: {g.summary()}"
            if base.ggr == Verdict.YES:
                positives.append(subject)
            if base.verdict_triple() != coned.verdict_triple():
                mismatches.append(
                    self._mismatch(
                        subject,
                        expected=f"glr/grr/ggr {base.verdict_triple()} at d={d}",
                        observed=f"{coned.verdict_triple()} at d={d + 1}",
                    )
                )
        return self._report(Target.CONING, d, samples, positives, mismatches)

    def verify_chain_conjecture(self, d: int, vertices: Optional[int] = None) -> VerificationReport:
        """Sweep ``(d+1)``-connected chains on ``C(d+2, 2) + 1 .. vertices`` vertices.

        A chain that is redundantly rigid and ``(d+1)``-connected but not
        globally rigid is a counterexample.  Chains that fail redundancy are
        counted but cannot be counterexamples, since global rigidity already
        requires it.
        """
        self._check_budget(d)
        low = critical_vertex_count(d) + 1
        high = low if vertices is None else vertices
        if high < low:
            raise InvalidArgumentError(f"vertex bound must exceed C(d+2,2) = {low - 1}, got {high}")
        chains = [
            spec
            for v in range(low, high + 1)
            for spec in self.classifier.enumerate_kchains(d, v, 2, v, min_interior=d + 1)
            if is_k_connected(k_chain(spec), d + 1)
        ]
        reports = self.scheduler.map(partial(_chain_report, self.engine, d), chains)
        positives, mismatches = [], []
        for spec, report in zip(chains, reports):
            if report.ggr == Verdict.YES:
                positives.append(str(spec))
            elif report.gpr == Verdict.YES:
                mismatches.append(
                    self._mismatch(
                        str(spec),
                        expected="ggr=yes",
                        observed=f"ggr={report.ggr.value}",
                        detail=f"grr=yes, connectivity={report.connectivity}",
                    )
                )
        return self._report(Target.CHAIN_CONJECTURE, d, len(chains), positives, mismatches)
