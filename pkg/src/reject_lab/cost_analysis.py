"""Cost-matrix checks, redundancy of cost parameters, and risk targets that degenerate."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .bayes_rule import (
    CostMatrix,
    bayes_classify,
    costs_from_thresholds,
    lambda21_range,
    thresholds_from_costs,
    unit_reject_costs,
)
from .distributions import GaussianClassModel
from .errors import ConstraintViolation, DegenerateThresholds
from .regions import RejectThresholds

SCALE_STEP = 1.5


@dataclass(frozen=True)
class CostVerdict:
    ok: bool
    checks: tuple[tuple[str, bool], ...]

    @property
    def violated(self) -> Optional[str]:
        """Name of the first failing inequality, if any."""
        return next((name for name, ok in self.checks if not ok), None)


def validate_costs(costs: CostMatrix, reject_option: bool) -> CostVerdict:
    checks = tuple(costs.inequalities(reject_option))
    return CostVerdict(all(ok for _, ok in checks), checks)


def independent_parameter_count(reject_option: bool) -> int:
    """Upper bound on the cost parameters that actually shape the classifier."""
    return 2 if reject_option else 1


@dataclass(frozen=True)
class RedundancyReport:
    thresholds: RejectThresholds
    n_ip_bound: int
    canonical_no_reject_ratio: float
    equivalent_sets: tuple[CostMatrix, ...]


def _interior(tr: RejectThresholds) -> None:
    if not (tr.tr1 > 0 and tr.tr2 > 0 and tr.total < 1):
        raise DegenerateThresholds(
            f"need Tr1, Tr2 > 0 and Tr1 + Tr2 < 1, got ({tr.tr1}, {tr.tr2})", "0 < Tr1 + Tr2 < 1"
        )


def equivalence_class(tr: RejectThresholds, lambda21: float, count: int) -> RedundancyReport:
    """``count`` distinct cost matrices that all induce the thresholds ``tr``.

    Members come in a fixed order: unit error costs (when Tr1, Tr2 < 0.5 make
    that possible), unit reject costs, then the matrix with l12 = 1 and the
    given ``lambda21``, then further l21 values spread geometrically over the
    admissible range with the whole matrix scaled by 1.5^k.
    """
    _interior(tr)
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    lo, hi = lambda21_range(tr)
    if not lo < lambda21 < hi:
        raise ConstraintViolation(
            f"lambda21 = {lambda21} outside ({lo:.6g}, {hi:.6g})", "delta2 < lambda21 < delta1"
        )
    members: list[CostMatrix] = []
    if lo < 1.0 < hi:
        members.append(costs_from_thresholds(tr, 1.0))
    members.append(unit_reject_costs(tr))
    members.append(costs_from_thresholds(tr, lambda21))
    k = 1
    log_lo, log_hi = math.log(lo), math.log(hi)
    while len(members) < count:
        # golden-ratio stepping keeps successive l21 values distinct
        w = (k * 0.6180339887498949) % 1.0
        l21 = math.exp(log_lo + (log_hi - log_lo) * (0.05 + 0.9 * w))
        members.append(costs_from_thresholds(tr, l21).scaled(SCALE_STEP ** k))
        k += 1
    return RedundancyReport(tr, independent_parameter_count(True), 1.0 / lambda21, tuple(members[:count]))


def thresholds_of(costs: Iterable[CostMatrix]) -> list[RejectThresholds]:
    return [thresholds_from_costs(c) for c in costs]


@dataclass(frozen=True)
class RiskTargetRow:
    tr: float
    e: float
    rej: float
    chow_risk: float
    ha_ratio: Optional[float]


def degenerate_risk_targets(model: GaussianClassModel, tr_grid: Iterable[float]) -> list[RiskTargetRow]:
    """E + Tr*Rej and E/Rej for the symmetric policy Tr1 = Tr2 = Tr at each grid value."""
    rows = []
    for t in tr_grid:
        rep = bayes_classify(model, RejectThresholds(t, t), reject_option=True)
        ratio = rep.e / rep.rej if rep.rej > 0 else None
        rows.append(RiskTargetRow(t, rep.e, rep.rej, rep.e + t * rep.rej, ratio))
    return rows
