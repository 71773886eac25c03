"""Support-partition refinement of the gap bounds.

Splitting the support at cut points x_1 < ... < x_{m-1} induces cells
I_j = [x_{j-1}, x_j) with masses eta_j, conditional means mu_j, and
conditional variances.  The coarse variable Y taking value mu_j with
probability eta_j has EY = EX, and the gap decomposes into the coarse gap
plus the mass-weighted conditional gaps.  Bounding each piece by its own
h extrema gives

    lower = inf_{y in [mu_1, mu_m]} h(y; EY) var(Y)
            + sum_j eta_j inf_{x in I_j} h(x; mu_j) var(X | X in I_j)

and the upper bound replaces every inf by sup.  The coarse extrema run over
the closed interval [mu_1, mu_m]; each conditional term runs over its cell.
A finer partition does not necessarily tighten the lower bound, so no
monotonicity is promised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .bounds import BoundMethod, GapBounds, HEvaluation, curvature_extrema, h_extrema
from .distributions import Discrete, DistributionSpec, TruncatedStats
from .errors import EmptyCellError, NumericError, ParameterError
from .extreal import ext_mul, ext_sum
from .functions import FunctionSpec, SupportInterval

__all__ = [
    "PartitionPlan",
    "build_partition",
    "partition_bounds",
    "cell_h_extrema",
    "positivity_certificate",
]


@dataclass(frozen=True, eq=False)
class PartitionPlan:
    """Cut points, per-cell conditional statistics, and the coarse law.

    ``cuts`` includes the support endpoints as extended reals, so it always
    holds m+1 values for m cells.
    """

    cuts: tuple[float, ...]
    cells: tuple[tuple[SupportInterval, TruncatedStats], ...]
    coarse: Discrete
    source: DistributionSpec

    def __post_init__(self) -> None:
        if len(self.cuts) != len(self.cells) + 1:
            raise ParameterError("cuts must hold one more value than there are cells")
        for a, b in zip(self.cuts, self.cuts[1:]):
            if not a < b:
                raise ParameterError(f"cut points must be strictly increasing, got {a} then {b}")
        total = math.fsum(ts.prob for _, ts in self.cells)
        if abs(total - 1.0) > 1e-12:
            raise NumericError(f"cell probabilities sum to {total!r}, need 1 within 1e-12")
        m_src = self.source.mean()
        m_coarse = self.coarse.mean()
        if abs(m_coarse - m_src) > 1e-8 * max(1.0, abs(m_src)):
            raise NumericError(
                f"coarse mean {m_coarse} disagrees with the source mean {m_src}"
            )

    @property
    def m(self) -> int:
        return len(self.cells)

    def table(self) -> list[dict]:
        """Per-cell rows: interval, mass, conditional mean and variance."""
        rows = []
        for interval, ts in self.cells:
            rows.append(
                {
                    "cell": str(interval),
                    "lower": interval.lower,
                    "upper": interval.upper,
                    "prob": ts.prob,
                    "mean": ts.mean,
                    "variance": ts.variance,
                }
            )
        return rows


def build_partition(d: DistributionSpec, cuts: Sequence[float]) -> PartitionPlan:
    """Split the support of d at the given interior cut points.

    Cells are left-closed right-open; the outermost cells inherit the
    support's own endpoint flags so that the cells cover the support.
    Every cell must carry positive probability.
    """
    cuts = [float(c) for c in cuts]
    for a, b in zip(cuts, cuts[1:]):
        if not a < b:
            raise ParameterError(f"cut points must be strictly increasing, got {a} then {b}")
    support = d.support
    for c in cuts:
        if not support.lower < c < support.upper:
            raise ParameterError(f"cut {c} is not interior to the support {support}")

    edges = [support.lower, *cuts, support.upper]
    m = len(edges) - 1
    cells: list[tuple[SupportInterval, TruncatedStats]] = []
    for j in range(m):
        cell = SupportInterval(
            edges[j],
            edges[j + 1],
            lower_closed=support.lower_closed if j == 0 else True,
            upper_closed=support.upper_closed if j == m - 1 else False,
        )
        prob = d.interval_prob(cell)
        if prob <= 0.0:
            raise EmptyCellError(f"cell {cell} has zero probability; move or drop the cut")
        cells.append((cell, d.truncated_stats(cell)))

    total = math.fsum(ts.prob for _, ts in cells)
    if abs(total - 1.0) > 1e-9:
        raise NumericError(f"cell probabilities sum to {total!r}; the law leaks mass")
    if total != 1.0:
        # absorb quadrature-level leakage so the masses sum to 1 exactly
        cells = [
            (cell, TruncatedStats(prob=ts.prob / total, mean=ts.mean, variance=ts.variance))
            for cell, ts in cells
        ]
    coarse = Discrete(
        [ts.mean for _, ts in cells],
        [ts.prob for _, ts in cells],
    )
    return PartitionPlan(cuts=tuple(edges), cells=tuple(cells), coarse=coarse, source=d)


def cell_h_extrema(
    f: FunctionSpec, plan: PartitionPlan
) -> list[tuple[HEvaluation, HEvaluation]]:
    """(inf, sup) of h(.; mu_j) over each cell, in cell order."""
    return [h_extrema(f, cell, ts.mean) for cell, ts in plan.cells]


def partition_bounds(f: FunctionSpec, plan: PartitionPlan) -> GapBounds:
    """Assemble the refined lower/upper bounds from a partition plan.

    Extended-real rules apply: an infinite cell supremum makes the upper
    bound infinite, and any term with zero variance contributes zero.
    With no cuts the plan collapses to the single-interval bounds.
    """
    lows: list[float] = []
    highs: list[float] = []

    if plan.m > 1:
        coarse = plan.coarse
        var_y = coarse.variance()
        if var_y > 0.0:
            coarse_iv = SupportInterval(
                float(coarse.points[0]), float(coarse.points[-1]),
                lower_closed=True, upper_closed=True,
            )
            c_inf, c_sup = h_extrema(f, coarse_iv, coarse.mean())
            lows.append(ext_mul(c_inf.value, var_y))
            highs.append(ext_mul(c_sup.value, var_y))

    per_cell = cell_h_extrema(f, plan)
    var_total = plan.coarse.variance() if plan.m > 1 else 0.0
    for (cell, ts), (inf_ev, sup_ev) in zip(plan.cells, per_cell):
        lows.append(ts.prob * ext_mul(inf_ev.value, ts.variance))
        highs.append(ts.prob * ext_mul(sup_ev.value, ts.variance))
        var_total += ts.prob * ts.variance

    return GapBounds(
        lower=ext_sum(lows),
        upper=ext_sum(highs),
        lower_detail=None,
        upper_detail=None,
        variance_used=var_total,
        method=BoundMethod.PARTITION,
    )


def positivity_certificate(
    f: FunctionSpec, d: DistributionSpec, window: SupportInterval
) -> bool:
    """True certifies a strictly positive gap.

    The certificate holds when phi'' is bounded away from zero on the
    window, the window carries probability, and the conditional variance on
    it is positive.  False is inconclusive, never a disproof.
    """
    p = d.interval_prob(window)
    if p <= 0.0:
        return False
    ts = d.truncated_stats(window)
    if not (ts.variance is not None and ts.variance > 0.0):
        return False
    if not f.natural_domain.contains_interval(window):
        return False
    anchor = ts.mean if ts.mean is not None else 0.5 * (window.lower + window.upper)
    inf_ev, _ = curvature_extrema(f, window, anchor)
    return inf_ev.value > 0.0
