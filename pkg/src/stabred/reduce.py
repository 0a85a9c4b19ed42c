"""Iterated Kirwan blow-up until every stabilizer is finite.

Each round finds the locus of maximal stabilizer dimension, blows up its
fixed locus for every witnessing subtorus, removes the unstable points,
and recurses into the charts.  The maximal stabilizer dimension strictly
decreases along every edge; the driver asserts this and carries a depth
fuse so a violation surfaces as an error instead of a hang.  Leaves get
obstruction-theory reports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .blowup import Chart, dagger_check, kirwan_charts
from .cdga import GradedCdga, SubtorusBasis, require_valid, tangent_complex_ranks
from .errors import DepthExceeded, RankUndetermined, StrictDecreaseViolation
from .intlinalg import rational_rank
from .poly import GREVLEX, MonomialOrder
from .torus import (
    VARIABLE_CAP,
    StabilizerReport,
    saturation_ideal,
    stabilizer_stratification,
    witness_subtori,
)


@dataclass(frozen=True)
class ReduceConfig:
    order: MonomialOrder = GREVLEX
    max_depth: int = 8
    var_cap: int = VARIABLE_CAP
    degree_cap: int = 12
    seed: int = 0


def quasi_smooth_check(x: GradedCdga) -> bool:
    """A presentation without degree-2 generators is quasi-smooth."""
    return not x.gens2


@dataclass(frozen=True)
class ObstructionReport:
    vdim: int
    e_ranks: tuple[int, int] | None
    quasi_smooth: bool
    dagger: bool
    dm: bool
    fully_unstable: bool


def _sample_point(x: GradedCdga, rng: random.Random) -> dict[str, Fraction]:
    """Random integer point with nonzero coordinates, outside the removed locus."""
    pool = [i for i in range(-9, 10) if i]
    for _ in range(20):
        point = {name: Fraction(rng.choice(pool)) for name in x.var_names}
        if x.excluded.is_zero():
            return point
        if any(g.evaluate(point) != 0 for g in x.excluded.generators):
            return point
    raise RankUndetermined("could not sample a point outside the removed locus")


def _delta2_generic_rank(x: GradedCdga, rng: random.Random) -> int:
    """Rank of the degree-2 coefficient matrix at a generic point.

    Three independent evaluations; a value seen twice wins.  Exact
    per-trial arithmetic means disagreement can only come from unlucky
    special points, so it is reported rather than resolved by fiat.
    """
    if not x.gens2:
        return 0
    rows = [
        [g.coefficient(w.name) for w in x.gens1]
        for g in x.gens2
    ]
    trials = []
    for _ in range(3):
        point = _sample_point(x, rng)
        matrix = [
            [c.evaluate(point) if c is not None else Fraction(0) for c in row]
            for row in rows
        ]
        trials.append(rational_rank(matrix))
    for value in trials:
        if trials.count(value) >= 2:
            return value
    raise RankUndetermined(
        f"three generic evaluations gave three different ranks {tuple(trials)}"
    )


def obstruction_report(
    x: GradedCdga,
    rng: random.Random | None = None,
    *,
    dm: bool = True,
    fully_unstable: bool | None = None,
) -> ObstructionReport:
    """Obstruction-theory summary of a finite-stabilizer presentation.

    The two ranks describe the dual two-term complex: ambient tangent
    directions minus the torus, and degree-1 generators minus the generic
    rank of the degree-2 coefficient matrix.  They are only meaningful
    when the degree-2 data vanishes on fixed loci and some semistable
    point exists, so they are omitted otherwise.
    """
    if rng is None:
        rng = random.Random(0)
    if fully_unstable is None:
        fully_unstable = x.excluded.is_unit()
    dagger = dagger_check(x, SubtorusBasis.full(x.torus_rank))
    ranks = tangent_complex_ranks(x)
    e_ranks = None
    if dagger and not fully_unstable:
        generic = _delta2_generic_rank(x, rng)
        e_ranks = (ranks.ring_rank - x.torus_rank, ranks.gens1_rank - generic)
    return ObstructionReport(
        vdim=ranks.vdim,
        e_ranks=e_ranks,
        quasi_smooth=quasi_smooth_check(x),
        dagger=dagger,
        dm=dm,
        fully_unstable=fully_unstable,
    )


@dataclass(frozen=True)
class ReductionNode:
    id: str
    cdga: GradedCdga
    stabilizer: StabilizerReport
    children: tuple[tuple[Chart, "ReductionNode"], ...]
    leaf_report: ObstructionReport | None


def stabilizer_reduce(x: GradedCdga, config: ReduceConfig | None = None) -> ReductionNode:
    """Run the full reduction and return the tree of blow-up rounds."""
    if config is None:
        config = ReduceConfig()
    require_valid(x)
    return _reduce(x, "root", 0, config)


def _reduce(x: GradedCdga, node_id: str, depth: int, config: ReduceConfig) -> ReductionNode:
    if depth > config.max_depth:
        raise DepthExceeded(
            f"reduction exceeded the depth fuse ({config.max_depth}) at {node_id!r}"
        )
    report = stabilizer_stratification(x, config.var_cap)
    if report.max_dim == 0:
        rng = random.Random(f"{config.seed}:{node_id}")
        leaf = obstruction_report(x, rng, dm=True)
        return ReductionNode(node_id, x, report, (), leaf)

    parent_dagger = dagger_check(x, SubtorusBasis.full(x.torus_rank))
    subtori = witness_subtori(x, report)
    multi = len(subtori) > 1
    children = []
    for i, h in enumerate(subtori):
        j = saturation_ideal(x, h, config.degree_cap)
        for chart in kirwan_charts(x, h, j, parent_id=node_id):
            if parent_dagger:
                assert dagger_check(chart.cdga, SubtorusBasis.full(x.torus_rank)), (
                    f"blow-up chart {chart.name} of {node_id!r} lost the degree-2 vanishing property"
                )
            suffix = f"s{i}.{chart.center_var}" if multi else chart.center_var
            child = _reduce(chart.cdga, f"{node_id}/{suffix}", depth + 1, config)
            if child.stabilizer.max_dim >= report.max_dim:
                raise StrictDecreaseViolation(
                    f"stabilizer dimension failed to drop from {report.max_dim} "
                    f"at {node_id!r} to {child.stabilizer.max_dim} at {child.id!r}"
                )
            children.append((chart, child))
    return ReductionNode(node_id, x, report, tuple(children), None)


def iter_leaves(node: ReductionNode):
    if node.leaf_report is not None:
        yield node
    for _, child in node.children:
        yield from iter_leaves(child)


def tree_depth(node: ReductionNode) -> int:
    if not node.children:
        return 0
    return 1 + max(tree_depth(child) for _, child in node.children)
