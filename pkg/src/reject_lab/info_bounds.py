"""Bounds relating the error rate of a binary classifier to its conditional entropy H(T|Y)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .bayes_rule import CostMatrix, bayes_classify
from .distributions import ClassModel, ClassPrior
from .errors import InconsistentInput
from .information import JointDistribution, information_summary
from .mi_classifier import mi_optimize

BISECTION_TOL = 1e-12
BISECTION_MAX_ITER = 60
CONSISTENCY_TOL = 1e-10
CHECK_SLACK = 1e-9


def binary_entropy(e: float) -> float:
    """H(E) in bits, with H(0) = H(1) = 0."""
    if not 0.0 <= e <= 1.0:
        raise ValueError(f"probability expected, got {e}")
    if e == 0.0 or e == 1.0:
        return 0.0
    return -e * math.log2(e) - (1.0 - e) * math.log2(1.0 - e)


def modified_lower_bound(h_t_given_y: float) -> float:
    """Smallest E in [0, 0.5] with H(E) >= h, found by bisection."""
    if h_t_given_y <= 0.0:
        return 0.0
    if h_t_given_y >= 1.0:
        return 0.5
    lo, hi = 0.0, 0.5
    for _ in range(BISECTION_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if binary_entropy(mid) < h_t_given_y:
            lo = mid
        else:
            hi = mid
        if hi - lo < BISECTION_TOL:
            break
    return 0.5 * (lo + hi)


def fano_lower_bound(h_t_given_y: float, e: float, m: int) -> float:
    """General Fano bound (H(T|Y) - H(E)) / log2(m - 1), defined only for m >= 3.

    With two classes the denominator vanishes; use ``modified_lower_bound``.
    """
    if m < 3:
        raise ValueError("the general Fano bound needs m >= 3 classes; use modified_lower_bound for m = 2")
    return (h_t_given_y - binary_entropy(e)) / math.log2(m - 1)


def kovalevskij_upper_bound(h_t_given_y: float) -> float:
    return h_t_given_y / 2.0


def modified_upper_bound(prior: ClassPrior, h_t_given_y: float) -> float:
    return min(prior.p1, prior.p2, h_t_given_y / 2.0)


@dataclass(frozen=True)
class BoundReport:
    h_t_given_y: float
    e: float
    fano_lb: float
    kovalevskij_ub: float
    modified_lb: float
    modified_ub: float
    p_min: float
    lb_ok: bool
    ub_ok: bool
    kovalevskij_ok: bool
    const_ub_ok: bool

    @property
    def satisfies_modified(self) -> dict[str, bool]:
        return {"lb": self.lb_ok, "ub": self.ub_ok}


def bounds(prior: ClassPrior, joint: JointDistribution, e: float) -> BoundReport:
    """Evaluate the lower and upper bounds for one classifier outcome.

    For two classes the Fano lower bound is the binary form H(E) >= H(T|Y), so
    ``fano_lb`` and ``modified_lb`` coincide.
    """
    if abs(e - (joint.e1 + joint.e2)) > CONSISTENCY_TOL:
        raise InconsistentInput(f"error {e} disagrees with the joint's E1 + E2 = {joint.e1 + joint.e2}")
    h = information_summary(joint).h_t_given_y
    lb = modified_lower_bound(h)
    ub = modified_upper_bound(prior, h)
    kub = kovalevskij_upper_bound(h)
    return BoundReport(
        h_t_given_y=h,
        e=e,
        fano_lb=lb,
        kovalevskij_ub=kub,
        modified_lb=lb,
        modified_ub=ub,
        p_min=prior.p_min,
        lb_ok=binary_entropy(min(max(e, 0.0), 1.0)) >= h - CHECK_SLACK,
        ub_ok=e <= ub + CHECK_SLACK,
        kovalevskij_ok=e <= kub + CHECK_SLACK,
        const_ub_ok=e <= 0.5 + CHECK_SLACK,
    )


@dataclass(frozen=True)
class ScatterRow:
    label: str
    classifier: str
    h_t_given_y: float
    e: float
    report: BoundReport


def bounds_scatter(
    entries: Iterable[tuple[str, ClassModel, str]], reject_option: bool = False
) -> list[ScatterRow]:
    """One (H(T|Y), E) point with its bounds per (label, model, classifier) entry.

    ``classifier`` is "bayes" (zero-one costs) or "mi".
    """
    rows = []
    for label, model, kind in entries:
        if kind == "bayes":
            outcome = bayes_classify(model, CostMatrix.zero_one(), reject_option=False)
        elif kind == "mi":
            outcome = mi_optimize(model, reject_option).report
        else:
            raise ValueError(f"unknown classifier {kind!r}")
        rep = bounds(model.prior, outcome.joint, outcome.e)
        rows.append(ScatterRow(label, kind, rep.h_t_given_y, rep.e, rep))
    return rows
