"""Classifiers that maximise the normalized mutual information I(T,Y)/H(T).

Gaussian models are searched in log likelihood-ratio threshold space: one
cut-off u = ln(delta) without rejection, or a pair u2 <= u1 with rejection.
Every probe therefore maps to a structurally valid partition of the line.
Uniform models only need the label of the overlap region, so the few
candidates are enumerated exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np
from scipy.special import ndtr

from .bayes_rule import (
    CostMatrix,
    OutcomeReport,
    SweepRow,
    _log_gaussian_boundaries,
    demonstrate_redundancy,
    label_uniform_pieces,
    report_from_joint,
    sweep_row,
)
from .distributions import ClassModel, ClassPrior, GaussianClassModel, UniformClassModel
from .errors import ConstraintViolation, InconsistentPair
from .information import (
    ZERO_MASS,
    AugmentedConfusionMatrix,
    JointDistribution,
    entropy_prior,
    information_summary,
    joint_from_confusion,
    joint_from_regions,
    ni,
)
from .regions import Decision, DecisionRegions, RejectThresholds

__all__ = [
    "AugmentedConfusionMatrix",
    "JointDistribution",
    "MISolution",
    "entropy_prior",
    "equivalent_thresholds",
    "joint_from_confusion",
    "joint_from_regions",
    "mi_imbalance_sweep",
    "mi_optimize",
    "ni",
]

LOG_DELTA_MIN = math.log(1e-6)
LOG_DELTA_MAX = math.log(1e6)
GRID_1D = 2001
GRID_2D = 201
STEP_TOL = 1e-9
GAIN_TOL = 1e-12
PAIR_TOL = 1e-6

# compass directions, visited in this fixed order
_DIRECTIONS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1))


@dataclass(frozen=True)
class MISolution:
    regions: DecisionRegions
    ni: float
    thresholds: Optional[RejectThresholds]
    cost_ratio_lambda21: Optional[float]
    joint: JointDistribution
    report: OutcomeReport
    cost_sets: Optional[tuple[CostMatrix, CostMatrix]] = None

    @property
    def boundary_points(self) -> tuple[float, ...]:
        return self.regions.boundary_points


# --- Gaussian search -------------------------------------------------------------------


def log_delta_regions(model: GaussianClassModel, u1: float, u2: float) -> DecisionRegions:
    """Regions for y1 where ln LR > u1, y2 where ln LR <= u2, reject in between (u2 <= u1)."""
    if u2 > u1:
        raise ValueError(f"need u2 <= u1, got ({u1}, {u2})")
    if u1 == u2:
        points = sorted(set(_log_gaussian_boundaries(model, u1)))

        def decide(llr: float) -> Decision:
            return Decision.Y1 if llr > u1 else Decision.Y2
    else:
        points = sorted(
            set(_log_gaussian_boundaries(model, u1)) | set(_log_gaussian_boundaries(model, u2))
        )

        def decide(llr: float) -> Decision:
            if llr > u1:
                return Decision.Y1
            if llr <= u2:
                return Decision.Y2
            return Decision.Y3

    if points:
        probes = [points[0] - 1.0]
        probes += [0.5 * (a + b) for a, b in zip(points, points[1:])]
        probes.append(points[-1] + 1.0)
    else:
        probes = [0.5 * (model.mu1 + model.mu2)]
    return DecisionRegions.build(points, [decide(model.log_likelihood_ratio(x)) for x in probes])


def _interval_mass(mu: float, sigma: float, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """P(lo <= x <= hi) for N(mu, sigma^2), taking the upper-tail form right of the mean."""
    zlo = (lo - mu) / sigma
    zhi = (hi - mu) / sigma
    upper = ndtr(-zlo) - ndtr(-zhi)
    lower = ndtr(zhi) - ndtr(zlo)
    return np.maximum(np.where(zlo >= 0, upper, lower), 0.0)


class _GaussianScorer:
    """Vectorised NI (or -H(T|Y)) of the log-threshold rule, memoised per (u1, u2).

    ln LR(x) is the quadratic a x^2 + b x + c, so each threshold cuts the line
    into at most one interval and its complement; the joint entries follow from
    two interval masses per class without building region objects.
    """

    def __init__(self, model: GaussianClassModel, objective: str):
        if objective not in ("ni", "conditional_entropy"):
            raise ValueError(f"unknown objective {objective!r}")
        self.model = model
        self.objective = objective
        self.cache: dict[tuple[float, float], float] = {}
        m = model
        self.a = 0.5 * (1.0 / m.sigma2 ** 2 - 1.0 / m.sigma1 ** 2)
        self.b = m.mu1 / m.sigma1 ** 2 - m.mu2 / m.sigma2 ** 2
        self.c = (
            math.log(m.prior.p1 / m.prior.p2)
            + math.log(m.sigma2 / m.sigma1)
            - 0.5 * m.mu1 ** 2 / m.sigma1 ** 2
            + 0.5 * m.mu2 ** 2 / m.sigma2 ** 2
        )
        self.h_t = entropy_prior(m.prior)

    def _roots(self, u: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Sorted roots of a x^2 + b x + c = u; an empty interval is returned as (0, 0)."""
        a, b = self.a, self.b
        cc = self.c - u
        disc = b * b - 4.0 * a * cc
        ok = disc >= 0
        sq = np.sqrt(np.where(ok, disc, 0.0))
        q = -0.5 * (b + np.copysign(sq, b if b != 0 else 1.0))
        with np.errstate(divide="ignore", invalid="ignore"):
            r1 = q / a
            r2 = np.where(q != 0, cc / q, -r1)
        lo = np.where(ok, np.minimum(r1, r2), 0.0)
        hi = np.where(ok, np.maximum(r1, r2), 0.0)
        return lo, hi

    def _class_columns(self, cls: int, u1: np.ndarray, u2: np.ndarray) -> np.ndarray:
        mu, sigma = self.model.params(cls)
        n = len(u1)
        if self.a != 0:
            lo1, hi1 = self._roots(u1)
            lo2, hi2 = self._roots(u2)
            m1 = _interval_mass(mu, sigma, lo1, hi1)
            m2 = _interval_mass(mu, sigma, lo2, hi2)
            if self.a > 0:
                # ln LR is convex: y2 inside the u2 interval, y1 outside the u1 interval
                y1, y2 = 1.0 - m1, m2
            else:
                y1, y2 = m1, 1.0 - m2
        elif self.b != 0:
            r1 = (u1 - self.c) / self.b
            r2 = (u2 - self.c) / self.b
            below1 = ndtr((r1 - mu) / sigma)
            below2 = ndtr((r2 - mu) / sigma)
            if self.b < 0:
                y1, y2 = below1, 1.0 - below2
            else:
                y1, y2 = 1.0 - below1, below2
        else:
            y1 = np.where(self.c > u1, 1.0, 0.0)
            y2 = np.where(self.c <= u2, 1.0, 0.0)
        y1 = np.clip(y1, 0.0, 1.0) * np.ones(n)
        y2 = np.clip(y2, 0.0, 1.0) * np.ones(n)
        y3 = np.clip(1.0 - y1 - y2, 0.0, 1.0)
        return self.model.prior[cls] * np.stack([y1, y2, y3], axis=-1)

    def batch(self, u1: np.ndarray, u2: np.ndarray) -> np.ndarray:
        joint = np.stack([self._class_columns(1, u1, u2), self._class_columns(2, u1, u2)], axis=1)
        rows = joint.sum(axis=2, keepdims=True)
        cols = joint.sum(axis=1, keepdims=True)
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = np.where(joint > ZERO_MASS, joint * np.log2(joint / (rows * cols)), 0.0)
        info = np.clip(terms.sum(axis=(1, 2)), 0.0, self.h_t)
        return info / self.h_t if self.objective == "ni" else info - self.h_t

    def __call__(self, u1: float, u2: float) -> float:
        key = (u1, u2)
        score = self.cache.get(key)
        if score is None:
            score = float(self.batch(np.array([u1]), np.array([u2]))[0])
            self.cache[key] = score
        return score


def _better(score: float, key: tuple[float, float], best_score: float, best_key: tuple[float, float]) -> bool:
    """Strict gain, with exact ties going to the lexicographically smaller (u1, u2)."""
    if score > best_score:
        return True
    return score == best_score and key < best_key


def _grid_best(f: _GaussianScorer, u1: np.ndarray, u2: np.ndarray, seed: tuple[float, float]) -> tuple[float, float]:
    scores = f.batch(u1, u2)
    best_key, best_score = seed, f(*seed)
    top = scores.max()
    if top < best_score:
        return best_key
    # lexicographic tie-break among the maximisers
    for i in np.flatnonzero(scores == top):
        key = (float(u1[i]), float(u2[i]))
        if _better(float(scores[i]), key, best_score, best_key):
            best_key, best_score = key, float(scores[i])
    return best_key


def _refine(f: _GaussianScorer, start: tuple[float, float], step: float, reject_option: bool) -> tuple[float, float]:
    """Compass search, halving the step whenever no direction gains more than GAIN_TOL."""
    u1, u2 = start
    best = f(u1, u2)
    dirs = _DIRECTIONS if reject_option else ((1, 1), (-1, -1))
    while step >= STEP_TOL:
        cands = [(u1 + d1 * step, u2 + d2 * step) for d1, d2 in dirs]
        cands = [k for k in cands if k[1] <= k[0]]
        missing = [k for k in cands if k not in f.cache]
        if missing:
            vals = f.batch(np.array([k[0] for k in missing]), np.array([k[1] for k in missing]))
            f.cache.update(zip(missing, (float(v) for v in vals)))
        cand_key, cand_score = None, best
        for k in cands:
            if f.cache[k] > cand_score:
                cand_key, cand_score = k, f.cache[k]
        if cand_key is not None and cand_score - best > GAIN_TOL:
            (u1, u2), best = cand_key, cand_score
        else:
            step *= 0.5
    return u1, u2


def _search_gaussian(model: GaussianClassModel, reject_option: bool, objective: str) -> tuple[float, float]:
    if not reject_option and model.sigma1 == model.sigma2 and model.prior.p1 == model.prior.p2:
        # symmetric problem: the midpoint between the means is optimal in closed form
        return 0.0, 0.0
    f = _GaussianScorer(model, objective)
    grid = np.linspace(LOG_DELTA_MIN, LOG_DELTA_MAX, GRID_1D)
    best_key = _grid_best(f, grid, grid, (0.0, 0.0))
    no_reject_opt = _refine(f, best_key, float(grid[1] - grid[0]), reject_option=False)
    if not reject_option:
        return no_reject_opt

    grid2 = np.linspace(LOG_DELTA_MIN, LOG_DELTA_MAX, GRID_2D)
    i, j = np.tril_indices(GRID_2D)
    best_key = _grid_best(f, grid2[i], grid2[j], no_reject_opt)
    step2 = float(grid2[1] - grid2[0])
    result, result_score = None, -math.inf
    for start in dict.fromkeys([best_key, no_reject_opt]):
        key = _refine(f, start, step2, reject_option=True)
        s = f(*key)
        if result is None or _better(s, key, result_score, result):
            result, result_score = key, s
    return result


def _log_delta_thresholds(u1: float, u2: float) -> RejectThresholds:
    # 1/(1+e^u) written to stay accurate for large |u|
    def tr_from(u: float) -> float:
        return 1.0 / (1.0 + math.exp(u)) if u <= 0 else math.exp(-u) / (1.0 + math.exp(-u))

    if u1 == u2:
        t = tr_from(u1)
        return RejectThresholds(t, 1.0 - t) if u1 != 0 else RejectThresholds(0.5, 0.5)
    return RejectThresholds(tr_from(u1), 1.0 - tr_from(u2))


def _gaussian_solution(model: GaussianClassModel, reject_option: bool, objective: str) -> MISolution:
    u1, u2 = _search_gaussian(model, reject_option, objective)
    regions = log_delta_regions(model, u1, u2)
    tr = _log_delta_thresholds(u1, u2)
    joint = joint_from_regions(model, regions)
    report = report_from_joint(joint, thresholds=tr, regions=regions)
    if u1 == u2:
        return MISolution(regions, report.ni, tr, math.exp(u1), joint, report)
    cost_sets = None
    try:
        cost_sets = demonstrate_redundancy(tr)
    except ConstraintViolation:
        pass
    return MISolution(regions, report.ni, tr, None, joint, report, cost_sets)


# --- uniform enumeration ---------------------------------------------------------------


def uniform_regions_for(model: UniformClassModel, overlap_label: Decision) -> DecisionRegions:
    """Pure-class pieces keep their class; the overlap gets ``overlap_label``."""

    def decide_at(x: float) -> Optional[Decision]:
        d1, d2 = model.density(1, x), model.density(2, x)
        if d1 == 0 and d2 == 0:
            return None
        if d2 == 0:
            return Decision.Y1
        if d1 == 0:
            return Decision.Y2
        return overlap_label

    return label_uniform_pieces(model, decide_at)


def _uniform_thresholds(model: UniformClassModel, label: Decision) -> Optional[RejectThresholds]:
    """A representative threshold pair producing ``label`` on the overlap.

    Any pair on the right side of the overlap posterior works; the midpoint of
    the admissible range is reported.
    """
    ov = model.overlap
    if ov is None:
        return None
    post = model.posterior(0.5 * (ov[0] + ov[1]))
    q1 = post.pt1_given_x
    if label is Decision.Y1:
        t1 = 0.5 * ((1.0 - q1) + 1.0)
        return RejectThresholds(t1, 1.0 - t1)
    if label is Decision.Y2:
        t2 = 0.5 * (q1 + 1.0)
        return RejectThresholds(1.0 - t2, t2)
    return RejectThresholds(0.5 * (1.0 - q1), 0.5 * q1)


def _uniform_solution(model: UniformClassModel, reject_option: bool, objective: str) -> MISolution:
    labels = (Decision.Y1, Decision.Y2, Decision.Y3) if reject_option else (Decision.Y1, Decision.Y2)
    best = None
    for label in labels:
        regions = uniform_regions_for(model, label)
        joint = joint_from_regions(model, regions)
        info = information_summary(joint)
        score = info.ni if objective == "ni" else -info.h_t_given_y
        if best is None or score > best[0]:
            best = (score, label, regions, joint)
    _, label, regions, joint = best
    tr = _uniform_thresholds(model, label)
    report = report_from_joint(joint, thresholds=tr, regions=regions)
    ratio = None
    if not reject_option and tr is not None:
        ratio = tr.delta1
    return MISolution(regions, report.ni, tr, ratio, joint, report)


def mi_optimize(model: ClassModel, reject_option: bool, objective: str = "ni") -> MISolution:
    """The region partition with maximal NI (or, equivalently, minimal H(T|Y)).

    ``objective="conditional_entropy"`` minimises H(T|Y) instead of maximising
    NI; both bookkeepings should land on the same partition.
    """
    if isinstance(model, GaussianClassModel):
        return _gaussian_solution(model, reject_option, objective)
    if isinstance(model, UniformClassModel):
        return _uniform_solution(model, reject_option, objective)
    raise TypeError(f"unsupported model {model!r}")


# --- equivalences ----------------------------------------------------------------------


def _pair(model: GaussianClassModel, xs: Sequence[float], cls: int) -> float:
    vals = [1.0 - (model.posterior(x).pt1_given_x if cls == 1 else model.posterior(x).pt2_given_x) for x in xs]
    if len(vals) == 2 and abs(vals[0] - vals[1]) > PAIR_TOL:
        raise InconsistentPair(
            f"points {tuple(xs)} give Tr{cls} values {vals[0]:.9g} and {vals[1]:.9g}"
        )
    return 0.5 * (vals[0] + vals[-1])


def equivalent_thresholds(model: GaussianClassModel, boundary_points: Sequence[float]) -> RejectThresholds:
    """Rejection thresholds whose Bayes rule puts its boundaries at ``boundary_points``.

    With four points the outer pair fixes the threshold of the wider class and
    the inner pair that of the narrower one. With two points and equal widths
    the left point belongs to the class with the smaller mean. Two points of a
    single pair (no rejection) and a lone point give a tr1 + tr2 = 1 pair.
    """
    pts = sorted(float(x) for x in boundary_points)
    if len(pts) == 4:
        outer, inner = (pts[0], pts[3]), (pts[1], pts[2])
        if model.sigma1 > model.sigma2:
            return RejectThresholds(_pair(model, outer, 1), _pair(model, inner, 2))
        if model.sigma1 < model.sigma2:
            return RejectThresholds(_pair(model, inner, 1), _pair(model, outer, 2))
        raise InconsistentPair("equal widths admit at most two boundary points")
    if len(pts) == 2:
        if model.sigma1 == model.sigma2:
            left, right = pts
            if model.mu1 < model.mu2:
                return RejectThresholds(_pair(model, [left], 1), _pair(model, [right], 2))
            return RejectThresholds(_pair(model, [right], 1), _pair(model, [left], 2))
        t1 = _pair(model, pts, 1)
        return RejectThresholds(t1, 1.0 - t1)
    if len(pts) == 1:
        t1 = _pair(model, pts, 1)
        return RejectThresholds(t1, 1.0 - t1)
    raise InconsistentPair(f"expected 1, 2 or 4 boundary points, got {len(pts)}")


def mi_imbalance_sweep(base_model: GaussianClassModel, ratios: Iterable[float]) -> list[SweepRow]:
    """MI-optimal no-rejection classifier at each prior ratio p1/p2, in input order."""
    rows = []
    for ratio in ratios:
        model = base_model.with_prior(ClassPrior.from_ratio(ratio))
        sol = mi_optimize(model, reject_option=False)
        rows.append(sweep_row(ratio, model, sol.report))
    return rows
