"""Closed-form predicates for k-chains and complete bipartite graphs.

A k-chain on ``C(d+2, 2)`` vertices with ``k >= 4`` is generically
partially rigid in ``R^d`` exactly when

1. every interior block has at least ``d + 1`` vertices,
2. the second and second-to-last blocks have at least ``d + 2``,
3. no two consecutive blocks both have exactly ``d + 1``.

Chains with two or three blocks are complete bipartite graphs
(``C_{a,b,c}`` is ``K_{a+c, b}``) and use the bipartite rule instead:
``a + b = C(d+2, 2)`` with both sides at least ``d + 2``.
"""

from itertools import combinations
from math import comb
from typing import Iterator, List, Optional, Tuple

from pico_ioc import component
from pydantic import BaseModel, Field

from .config import SweepBudget
from .engine import RigidityReport
from .exceptions import InvalidArgumentError, OutOfRangeError
from .graph import ChainSpec


def critical_vertex_count(d: int) -> int:
    """``C(d+2, 2)``, the vertex count at which chains can be GPR."""
    return comb(d + 2, 2)


def bipartite_sides(spec: ChainSpec) -> Tuple[int, int]:
    """Side sizes of the complete bipartite graph a 2- or 3-chain is."""
    if spec.k == 2:
        return spec.sizes
    if spec.k == 3:
        a1, a2, a3 = spec.sizes
        return a1 + a3, a2
    raise InvalidArgumentError(f"only 2- and 3-chains are bipartite, got k={spec.k}")


def bipartite_gpr(a: int, b: int, d: int) -> bool:
    """Whether ``K_{a,b}`` is generically partially rigid in ``R^d``."""
    return a + b == critical_vertex_count(d) and a >= d + 2 and b >= d + 2


def bolker_roth_dim(a: int, b: int, d: int) -> int:
    """Stress dimension ``(a-d-1)(b-d-1)`` of ``K_{a,b}`` in ``R^d``.

    Raises:
        OutOfRangeError: If a side has fewer than ``d + 1`` vertices or
            ``a + b > C(d+2, 2)``.
    """
    if d < 1:
        raise InvalidArgumentError(f"dimension must be >= 1, got {d}")
    if a < d + 1 or b < d + 1:
        raise OutOfRangeError(f"K_{a},{b} needs both sides >= d+1 = {d + 1}")
    if a + b > critical_vertex_count(d):
        raise OutOfRangeError(f"K_{a},{b} has more than C(d+2,2) = {critical_vertex_count(d)} vertices")
    return (a - d - 1) * (b - d - 1)


def covering_formula(spec: ChainSpec, d: int) -> int:
    """``e - v(d+1) + (d+1)^2`` without checking its hypotheses."""
    return spec.edge_count - spec.vertex_count * (d + 1) + (d + 1) ** 2


def chain_cover_stress_dim(spec: ChainSpec, d: int) -> int:
    """Stress dimension of a chain whose stresses all come from its 3-chain cover.

    Holds for ``(d+1)``-connected chains with ``k >= 4`` on ``C(d+2, 2)``
    vertices; 2- and 3-chains are delegated to ``bolker_roth_dim`` (the
    formula then coincides with it).

    Raises:
        OutOfRangeError: Outside those hypotheses.
    """
    if spec.k <= 3:
        a, b = bipartite_sides(spec)
        bolker_roth_dim(a, b, d)
        return covering_formula(spec, d)
    if any(a < d + 1 for a in spec.interior):
        raise OutOfRangeError(f"chain {spec} is not (d+1)-connected for d={d}")
    if spec.vertex_count != critical_vertex_count(d):
        raise OutOfRangeError(f"chain {spec} has {spec.vertex_count} vertices, need {critical_vertex_count(d)}")
    return covering_formula(spec, d)


class ChainVerdict(BaseModel):
    """Predicted (and optionally measured) partial rigidity of a chain.

    For ``k <= 3`` the condition flags describe the bipartite rule:
    ``cond1`` is interior connectivity, ``cond2`` asks both sides for
    ``d + 2`` vertices and ``cond3`` is vacuous.
    """

    spec: List[int]
    d: int
    predicted_gpr: bool
    cond1: bool = Field(description="Interior blocks have at least d+1 vertices")
    cond2: bool = Field(description="a_2 and a_{k-1} have at least d+2 vertices")
    cond3: bool = Field(description="No consecutive pair of blocks both of size d+1")
    vertex_count_ok: bool = Field(description="Sum of block sizes is C(d+2, 2)")
    experimental: Optional[RigidityReport] = None

    @property
    def chain(self) -> ChainSpec:
        return ChainSpec(tuple(self.spec))


def canonical_chain_count(v: int, k: int) -> int:
    """Number of compositions of *v* into *k* parts, up to reversal."""
    if k < 1 or v < k:
        return 0
    total = comb(v - 1, k - 1)
    half = k // 2
    if k % 2 == 0:
        palindromes = comb(v // 2 - 1, half - 1) if v % 2 == 0 else 0
    elif k == 1:
        palindromes = 1
    else:
        palindromes = sum(
            comb((v - m) // 2 - 1, half - 1) for m in range(1, v) if (v - m) % 2 == 0 and (v - m) // 2 >= half
        )
    return (total + palindromes) // 2


def _compositions(v: int, k: int, min_interior: int) -> Iterator[Tuple[int, ...]]:
    if min_interior <= 1:
        for cuts in combinations(range(1, v), k - 1):
            bounds = (0, *cuts, v)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))
        return
    # Interior blocks of size >= m: shift them down by m - 1 and enumerate the rest.
    slack = (k - 2) * (min_interior - 1)
    for sizes in _compositions(v - slack, k, 1):
        yield (sizes[0], *(a + min_interior - 1 for a in sizes[1:-1]), sizes[-1])


@component(scope="singleton")
class ChainClassifier:
    """Evaluates chain predicates and enumerates chains up to reversal.

    Args:
        budget: Caps on enumeration size.
    """

    def __init__(self, budget: SweepBudget):
        self.budget = budget

    def kchain_gpr_predicate(self, spec: ChainSpec, d: int) -> ChainVerdict:
        if d < 1:
            raise InvalidArgumentError(f"dimension must be >= 1, got {d}")
        s = spec.sizes
        vertex_count_ok = spec.vertex_count == critical_vertex_count(d)
        cond1 = all(a >= d + 1 for a in spec.interior)
        if spec.k <= 3:
            a, b = bipartite_sides(spec)
            cond2 = a >= d + 2 and b >= d + 2
            cond3 = True
            predicted = bipartite_gpr(a, b, d)
        else:
            cond2 = s[1] >= d + 2 and s[-2] >= d + 2
            cond3 = not any(x == y == d + 1 for x, y in zip(s, s[1:]))
            predicted = cond1 and cond2 and cond3 and vertex_count_ok
        return ChainVerdict(
            spec=list(s),
            d=d,
            predicted_gpr=predicted,
            cond1=cond1,
            cond2=cond2,
            cond3=cond3,
            vertex_count_ok=vertex_count_ok,
        )

    def count_kchains(self, v: int, k_min: int, k_max: int) -> int:
        return sum(canonical_chain_count(v, k) for k in range(max(k_min, 2), min(k_max, v) + 1))

    def enumerate_kchains(
        self, d: int, v: int, k_min: int = 2, k_max: Optional[int] = None, min_interior: int = 1
    ) -> Iterator[ChainSpec]:
        """Every chain on exactly *v* vertices with ``k_min <= k <= k_max``
        blocks, once per reversal class, in canonical form.

        Ordered by ``k`` and then lexicographically within each ``k``.
        *min_interior* skips chains with a smaller interior block.

        Raises:
            OutOfRangeError: If *v* or the composition count exceeds the budget.
        """
        if d < 1:
            raise InvalidArgumentError(f"dimension must be >= 1, got {d}")
        k_max = v if k_max is None else min(k_max, v)
        if k_min < 2:
            raise InvalidArgumentError(f"chains need at least 2 blocks, got k_min={k_min}")
        if v > self.budget.max_vertices:
            raise OutOfRangeError(f"vertex budget {v} exceeds the cap of {self.budget.max_vertices}")
        if min_interior <= 1:
            count = self.count_kchains(v, k_min, k_max)
            if count > self.budget.max_compositions:
                raise OutOfRangeError(f"{count} chains exceed the cap of {self.budget.max_compositions}")
        return self._iter_kchains(v, k_min, k_max, min_interior)

    @staticmethod
    def _iter_kchains(v: int, k_min: int, k_max: int, min_interior: int) -> Iterator[ChainSpec]:
        for k in range(k_min, k_max + 1):
            for sizes in sorted(s for s in _compositions(v, k, min_interior) if s <= s[::-1]):
                yield ChainSpec(sizes)
