"""Bayesian decision rule with and without a reject option.

Policies are held internally as a :class:`RejectThresholds` pair. Cost
matrices are converted on ingestion, since several cost matrices map to the
same pair and only the pair determines the classifier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Union

from .distributions import ClassModel, ClassPrior, GaussianClassModel, UniformClassModel
from .errors import ConstraintViolation, DegenerateThresholds
from .information import JointDistribution, information_summary, joint_from_regions
from .regions import Decision, DecisionRegions, RejectThresholds


@dataclass(frozen=True)
class CostMatrix:
    """lambda_ij: cost of deciding y_j for a pattern of true class t_i (j = 3 is reject).

    ``l13``/``l23`` may be ``None`` for a plain 2 x 2 no-rejection matrix.
    """

    l11: float
    l12: float
    l13: Optional[float]
    l21: float
    l22: float
    l23: Optional[float]

    @classmethod
    def zero_one(cls) -> "CostMatrix":
        return cls(0.0, 1.0, None, 1.0, 0.0, None)

    @classmethod
    def chow(cls, tr: float) -> "CostMatrix":
        """Chow's single-threshold setting: unit error costs, reject cost ``tr``."""
        return cls(0.0, 1.0, tr, 1.0, 0.0, tr)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "CostMatrix":
        (l11, l12, *r1), (l21, l22, *r2) = rows
        return cls(l11, l12, r1[0] if r1 else None, l21, l22, r2[0] if r2 else None)

    def rows(self) -> tuple[tuple, tuple]:
        return ((self.l11, self.l12, self.l13), (self.l21, self.l22, self.l23))

    def __getitem__(self, ij: tuple[int, int]) -> Optional[float]:
        i, j = ij
        return self.rows()[i - 1][j - 1]

    @property
    def has_reject_costs(self) -> bool:
        return self.l13 is not None and self.l23 is not None

    def scaled(self, c: float) -> "CostMatrix":
        def s(v):
            return None if v is None else v * c

        return CostMatrix(*(s(v) for v in (self.l11, self.l12, self.l13, self.l21, self.l22, self.l23)))

    @property
    def no_reject_delta(self) -> float:
        """(l21 - l22) / (l12 - l11): the likelihood-ratio cut-off without rejection."""
        return (self.l21 - self.l22) / (self.l12 - self.l11)

    def chain(self) -> tuple[float, float, float]:
        """The three ratios whose ordering the reject rule requires (low, middle, high)."""
        self._require_reject_costs()
        low = (self.l23 - self.l22) / (self.l12 - self.l13)
        mid = (self.l21 - self.l22) / (self.l12 - self.l11)
        high = (self.l21 - self.l23) / (self.l13 - self.l11)
        return low, mid, high

    def inequalities(self, reject_option: bool) -> list[tuple[str, bool]]:
        """Every required inequality with its pass/fail status."""
        checks = [
            ("lambda11 >= 0", self.l11 >= 0),
            ("lambda22 >= 0", self.l22 >= 0),
            ("lambda12 > lambda11", self.l12 > self.l11),
            ("lambda21 > lambda22", self.l21 > self.l22),
        ]
        if not reject_option:
            return checks
        if not self.has_reject_costs:
            return checks + [("reject costs lambda13, lambda23 given", False)]
        l11, l12, l13, l21, l22, l23 = self.l11, self.l12, self.l13, self.l21, self.l22, self.l23
        checks += [
            ("lambda12 > lambda13", l12 > l13),
            ("lambda13 > lambda11", l13 > l11),
            ("lambda21 > lambda23", l21 > l23),
            ("lambda23 > lambda22", l23 > l22),
        ]
        denominators_ok = l12 > l13 and l12 > l11 and l13 > l11
        checks.append(("chain denominators positive", denominators_ok))
        if denominators_ok:
            low, mid, high = self.chain()
            checks += [
                ("0 < (l23-l22)/(l12-l13)", low > 0),
                ("(l23-l22)/(l12-l13) < (l21-l22)/(l12-l11)", low < mid),
                ("(l21-l22)/(l12-l11) < (l21-l23)/(l13-l11)", mid < high),
            ]
        return checks

    def validate(self, reject_option: bool) -> "CostMatrix":
        for name, ok in self.inequalities(reject_option):
            if not ok:
                raise ConstraintViolation(f"cost matrix violates {name}: {self.rows()}", name)
        return self

    def _require_reject_costs(self) -> None:
        if not self.has_reject_costs:
            raise ConstraintViolation("reject costs lambda13/lambda23 are missing", "reject costs given")


Policy = Union[CostMatrix, RejectThresholds]


def thresholds_from_costs(costs: CostMatrix) -> RejectThresholds:
    """Rejection thresholds implied by a full 2 x 3 cost matrix."""
    costs._require_reject_costs()
    l11, l12, l13, l21, l22, l23 = costs.l11, costs.l12, costs.l13, costs.l21, costs.l22, costs.l23
    denominators = [("lambda12 > lambda13", l12 > l13), ("lambda12 > lambda11", l12 > l11),
                    ("lambda13 > lambda11", l13 > l11)]
    for name, ok in denominators:
        if not ok:
            raise ConstraintViolation(f"cost chain undefined: {name} fails", name)
    low, mid, high = costs.chain()
    if not low > 0:
        raise ConstraintViolation(f"(l23-l22)/(l12-l13) = {low:.6g} must be > 0", "0 < (l23-l22)/(l12-l13)")
    if not low < mid:
        raise ConstraintViolation(
            f"(l23-l22)/(l12-l13) = {low:.6g} must be < (l21-l22)/(l12-l11) = {mid:.6g}",
            "(l23-l22)/(l12-l13) < (l21-l22)/(l12-l11)",
        )
    if not mid < high:
        raise ConstraintViolation(
            f"(l21-l22)/(l12-l11) = {mid:.6g} must be < (l21-l23)/(l13-l11) = {high:.6g}",
            "(l21-l22)/(l12-l11) < (l21-l23)/(l13-l11)",
        )
    tr1 = (l13 - l11) / (l13 - l11 + l21 - l23)
    tr2 = (l23 - l22) / (l12 - l13 + l23 - l22)
    return RejectThresholds(tr1, tr2).validate(reject_option=True)


def pietraszek_thresholds(l12: float, l21: float, lr: float) -> RejectThresholds:
    """Thresholds for equal reject costs ``lr`` and zero correct-decision costs.

    Requires 0 < lr < l12*l21/(l12+l21); gives (lr/l21, lr/l12).
    """
    bound = l12 * l21 / (l12 + l21)
    if not 0 < lr < bound:
        raise ConstraintViolation(
            f"reject cost {lr} outside (0, {bound:.6g})", "0 < lambda_r < l12*l21/(l12+l21)"
        )
    return RejectThresholds(lr / l21, lr / l12)


def _require_interior(tr: RejectThresholds) -> None:
    if not (tr.tr1 > 0 and tr.tr2 > 0):
        raise DegenerateThresholds(f"thresholds must be positive, got ({tr.tr1}, {tr.tr2})", "Tr1 > 0 and Tr2 > 0")
    if not tr.total < 1:
        raise DegenerateThresholds(
            f"Tr1 + Tr2 = {tr.total:.6g} must be < 1 to invert to costs", "Tr1 + Tr2 < 1"
        )


def lambda21_range(tr: RejectThresholds) -> tuple[float, float]:
    """Open interval of lambda21 (with l11 = l22 = 0, l12 = 1) giving a valid cost chain."""
    return tr.delta2, tr.delta1


def costs_from_thresholds(tr: RejectThresholds, lambda21: float) -> CostMatrix:
    """A cost matrix with l11 = l22 = 0, l12 = 1 and the given l21 reproducing ``tr``."""
    _require_interior(tr)
    t1, t2 = tr.tr1, tr.tr2
    d = t1 + t2 - 1.0
    l13 = t1 * (t2 * lambda21 + t2 - lambda21) / d
    l23 = t2 * (t1 * lambda21 + t1 - 1.0) / d
    return CostMatrix(0.0, 1.0, l13, lambda21, 0.0, l23)


def unit_reject_costs(tr: RejectThresholds) -> CostMatrix:
    """The member of the equivalence class with l13 = l23 = 1 and zero correct-decision costs."""
    _require_interior(tr)
    return CostMatrix(0.0, 1.0 / tr.tr2, 1.0, 1.0 / tr.tr1, 0.0, 1.0)


def demonstrate_redundancy(tr: RejectThresholds) -> tuple[CostMatrix, CostMatrix]:
    """Two differently normalised cost matrices that induce the same thresholds.

    The first has unit error costs (l12 = l21 = 1) and unequal reject costs,
    the second unit reject costs (l13 = l23 = 1) and unequal error costs.
    """
    _require_interior(tr)
    lo, hi = lambda21_range(tr)
    if not lo < 1.0 < hi:
        raise ConstraintViolation(
            f"unit error costs cannot reproduce ({tr.tr1:.6g}, {tr.tr2:.6g}); need Tr1, Tr2 < 0.5",
            "Tr1 < 0.5 and Tr2 < 0.5",
        )
    return costs_from_thresholds(tr, 1.0), unit_reject_costs(tr)


# --- Gaussian closed forms ----------------------------------------------------------


@dataclass(frozen=True)
class CrossoverAnalysis:
    count: int
    points: tuple[float, ...]
    alpha: Optional[float]


def _log_offset(model: GaussianClassModel) -> float:
    """ln(p1*sigma2 / (p2*sigma1))."""
    return math.log(model.prior.p1 / model.prior.p2) + math.log(model.sigma2 / model.sigma1)


def gaussian_alpha(model: GaussianClassModel, delta: float = 1.0) -> float:
    """Discriminant of the boundary equation likelihood_ratio(x) = delta."""
    s1, s2 = model.sigma1 ** 2, model.sigma2 ** 2
    return (model.mu1 - model.mu2) ** 2 - 2.0 * (s1 - s2) * (_log_offset(model) - math.log(delta))


def _log_gaussian_boundaries(model: GaussianClassModel, log_delta: float) -> list[float]:
    if math.isinf(log_delta):
        return []
    mu1, mu2, sg1, sg2 = model.mu1, model.mu2, model.sigma1, model.sigma2
    if sg1 == sg2:
        if mu1 == mu2:
            return []
        x = 0.5 * (mu1 + mu2) + sg1 ** 2 / (mu2 - mu1) * (
            math.log(model.prior.p1 / model.prior.p2) - log_delta
        )
        return [x]
    s1, s2 = sg1 ** 2, sg2 ** 2
    alpha = (mu1 - mu2) ** 2 - 2.0 * (s1 - s2) * (_log_offset(model) - log_delta)
    if alpha < 0:
        return []
    # a x^2 + b x + c = 0 solved in the cancellation-free form
    a = s2 - s1
    b = -2.0 * (s2 * mu1 - s1 * mu2)
    c = s2 * mu1 ** 2 - s1 * mu2 ** 2 - 2.0 * s1 * s2 * (_log_offset(model) - log_delta)
    root = 2.0 * sg1 * sg2 * math.sqrt(alpha)
    if alpha == 0:
        return [-b / (2.0 * a)]
    q = -0.5 * (b + math.copysign(root, b))
    if q == 0.0:
        r = root / (2.0 * abs(a))
        return [-r, r]
    return sorted([q / a, c / q])


def gaussian_boundaries(model: GaussianClassModel, delta: float) -> list[float]:
    """Sorted solutions of likelihood_ratio(x) = delta (0, 1 or 2 points)."""
    if not delta > 0:
        raise ValueError(f"delta must be positive, got {delta}")
    return _log_gaussian_boundaries(model, math.log(delta))


def crossover_points(model: GaussianClassModel) -> CrossoverAnalysis:
    pts = _log_gaussian_boundaries(model, 0.0)
    alpha = None if model.sigma1 == model.sigma2 else gaussian_alpha(model, 1.0)
    return CrossoverAnalysis(len(pts), tuple(pts), alpha)


def posterior_extrema(model: GaussianClassModel) -> tuple[float, float]:
    """(inf, sup) of p(t1|x) over the real line, from the stationary point of the log ratio."""
    if model.sigma1 == model.sigma2:
        if model.mu1 == model.mu2:
            p = model.prior.p1
            return p, p
        return 0.0, 1.0
    s1, s2 = model.sigma1 ** 2, model.sigma2 ** 2
    vertex = (s1 * model.mu2 - s2 * model.mu1) / (s1 - s2)
    p_vertex = model.posterior(vertex).pt1_given_x
    return (p_vertex, 1.0) if model.sigma1 > model.sigma2 else (0.0, p_vertex)


# --- region construction -------------------------------------------------------------


def policy_thresholds(policy: Policy, reject_option: bool, relaxed: bool = False) -> RejectThresholds:
    """Canonical threshold pair for a cost matrix or threshold policy."""
    if isinstance(policy, CostMatrix):
        if reject_option:
            return thresholds_from_costs(policy)
        policy.validate(reject_option=False)
        return RejectThresholds.no_reject(policy.no_reject_delta)
    if isinstance(policy, RejectThresholds):
        return policy.validate(reject_option=reject_option, relaxed=relaxed)
    raise TypeError(f"unsupported policy {policy!r}")


def _gaussian_regions(model: GaussianClassModel, tr: RejectThresholds, reject_option: bool) -> DecisionRegions:
    if not reject_option or tr.is_no_reject:
        # one cut-off; avoids a rounding sliver between two nearly equal thresholds
        log_delta = tr.log_delta1

        def decide(llr: float) -> Decision:
            return Decision.Y1 if llr > log_delta else Decision.Y2

        points = sorted(set(_log_gaussian_boundaries(model, log_delta)))
    else:
        decide = tr.decide_log_ratio
        points = sorted(
            set(_log_gaussian_boundaries(model, tr.log_delta1))
            | set(_log_gaussian_boundaries(model, tr.log_delta2))
        )
    if points:
        probes = [points[0] - 1.0]
        probes += [0.5 * (a + b) for a, b in zip(points, points[1:])]
        probes.append(points[-1] + 1.0)
    else:
        probes = [0.5 * (model.mu1 + model.mu2)]
    labels = [decide(model.log_likelihood_ratio(x)) for x in probes]
    return DecisionRegions.build(points, labels)


def _uniform_regions(model: UniformClassModel, tr: RejectThresholds, reject_option: bool) -> DecisionRegions:
    if not reject_option or tr.is_no_reject:
        delta = tr.delta1

        def decide_at(x: float) -> Optional[Decision]:
            w1 = model.prior.p1 * model.density(1, x)
            w2 = model.prior.p2 * model.density(2, x)
            if w1 == 0 and w2 == 0:
                return None
            return Decision.Y1 if w1 > delta * w2 else Decision.Y2
    else:

        def decide_at(x: float) -> Optional[Decision]:
            if model.density(1, x) == 0 and model.density(2, x) == 0:
                return None
            post = model.posterior(x)
            return tr.decide_posterior(post.pt1_given_x, post.pt2_given_x)

    return label_uniform_pieces(model, decide_at)


def label_uniform_pieces(
    model: UniformClassModel, decide_at: Callable[[float], Optional[Decision]]
) -> DecisionRegions:
    """Regions from a pointwise rule that returns None where both densities vanish."""
    points = model.breakpoints()
    probes = [points[0] - 1.0] + [0.5 * (a + b) for a, b in zip(points, points[1:])] + [points[-1] + 1.0]
    labels = [decide_at(x) for x in probes]
    point_labels = [decide_at(x) for x in points]
    # zero-density stretches carry no mass: borrow the neighbouring label
    for i in range(1, len(labels)):
        if labels[i] is None:
            labels[i] = labels[i - 1]
    for i in range(len(labels) - 2, -1, -1):
        if labels[i] is None:
            labels[i] = labels[i + 1]
    point_labels = [pl if pl is not None else labels[i] for i, pl in enumerate(point_labels)]
    return DecisionRegions.build(points, labels, point_labels)


def bayes_regions(
    model: ClassModel, policy: Policy, reject_option: bool, relaxed: bool = False
) -> DecisionRegions:
    """Label the real line with the posterior-form rule for ``policy``."""
    tr = policy_thresholds(policy, reject_option, relaxed)
    if isinstance(model, GaussianClassModel):
        return _gaussian_regions(model, tr, reject_option)
    if isinstance(model, UniformClassModel):
        return _uniform_regions(model, tr, reject_option)
    raise TypeError(f"unsupported model {model!r}")


# --- evaluation ----------------------------------------------------------------------


@dataclass(frozen=True)
class OutcomeReport:
    e1: float
    e2: float
    rej1: float
    rej2: float
    cr1: float
    cr2: float
    e: float
    rej: float
    cr: float
    accuracy: Optional[float]
    risk: Optional[float]
    ni: float
    h_t_given_y: float
    thresholds: Optional[RejectThresholds]
    regions: Optional[DecisionRegions]
    joint: JointDistribution

    @property
    def boundary_points(self) -> tuple[float, ...]:
        return self.regions.boundary_points if self.regions is not None else ()

    @property
    def mass_total(self) -> float:
        return math.fsum([self.cr1, self.cr2, self.e1, self.e2, self.rej1, self.rej2])


def risk_from_joint(joint: JointDistribution, costs: CostMatrix) -> float:
    total = 0.0
    for i in (1, 2):
        for j in (1, 2, 3):
            p = joint[i, j]
            lam = costs[i, j]
            if lam is None:
                if p > 0:
                    raise ConstraintViolation(
                        "rejections occurred but the cost matrix has no reject costs",
                        "reject costs given",
                    )
                continue
            total += lam * p
    return total


def report_from_joint(
    joint: JointDistribution,
    costs: Optional[CostMatrix] = None,
    thresholds: Optional[RejectThresholds] = None,
    regions: Optional[DecisionRegions] = None,
) -> OutcomeReport:
    info = information_summary(joint)
    e, rej, cr = joint.error, joint.reject, joint.correct
    return OutcomeReport(
        e1=joint.e1,
        e2=joint.e2,
        rej1=joint.rej1,
        rej2=joint.rej2,
        cr1=joint.cr1,
        cr2=joint.cr2,
        e=e,
        rej=rej,
        cr=cr,
        accuracy=cr / (cr + e) if cr + e > 0 else None,
        risk=risk_from_joint(joint, costs) if costs is not None else None,
        ni=info.ni,
        h_t_given_y=info.h_t_given_y,
        thresholds=thresholds,
        regions=regions,
        joint=joint,
    )


def evaluate(
    model: ClassModel,
    regions: DecisionRegions,
    costs: Optional[CostMatrix] = None,
    thresholds: Optional[RejectThresholds] = None,
) -> OutcomeReport:
    """Error, reject, risk and information figures of ``regions`` under ``model``."""
    return report_from_joint(joint_from_regions(model, regions), costs, thresholds, regions)


def bayes_classify(
    model: ClassModel, policy: Policy, reject_option: bool, relaxed: bool = False
) -> OutcomeReport:
    """Bayes regions for ``policy`` together with their evaluation."""
    tr = policy_thresholds(policy, reject_option, relaxed)
    regions = bayes_regions(model, tr, reject_option, relaxed)
    costs = policy if isinstance(policy, CostMatrix) else None
    return evaluate(model, regions, costs, tr)


# --- uniform models ------------------------------------------------------------------


def overlap_decision(model: UniformClassModel, regions: DecisionRegions) -> Optional[Decision]:
    """Label given to the overlap of the two supports (None for separated supports)."""
    ov = model.overlap
    if ov is None or ov[0] == ov[1]:
        return None
    return regions.label_at(0.5 * (ov[0] + ov[1]))


def uniform_bayes_decide(
    model: UniformClassModel, policy: Policy, reject_option: bool, relaxed: bool = False
) -> tuple[DecisionRegions, OutcomeReport]:
    report = bayes_classify(model, policy, reject_option, relaxed)
    return report.regions, report


def uniform_closed_form(model: UniformClassModel, decision: Optional[Decision]) -> tuple[float, float]:
    """(E, Rej) written directly from the interval lengths for a given overlap label.

    Covers class 1 on the left partially overlapping class 2, class 2 nested
    inside class 1, and separated supports.
    """
    p1, p2 = model.prior.p1, model.prior.p2
    x1, x2, x3, x4 = model.a1, model.b1, model.a2, model.b2
    if x2 < x3:
        return 0.0, 0.0
    if x1 <= x3 <= x2 <= x4:
        w = x2 - x3
        if decision is Decision.Y1:
            return p2 * w / (x4 - x3), 0.0
        if decision is Decision.Y2:
            return p1 * w / (x2 - x1), 0.0
        return 0.0, w * (p1 / (x2 - x1) + p2 / (x4 - x3))
    if x1 <= x3 <= x4 <= x2:
        if decision is Decision.Y1:
            return p2, 0.0
        if decision is Decision.Y2:
            return p1 * (x4 - x3) / (x2 - x1), 0.0
        return 0.0, p1 * (x4 - x3) / (x2 - x1) + p2
    raise ValueError("closed form needs class 1 to start at or left of class 2")


# --- rejection-structure taxonomy -----------------------------------------------------


@dataclass(frozen=True)
class RejectStructure:
    scenario: str
    reject_components: int
    bounded: bool
    labels: frozenset


def rejection_scenario(model: GaussianClassModel, tr: RejectThresholds) -> RejectStructure:
    """Which rejection-settings row a threshold pair falls in, with its expected region shape.

    Rows are stated for class 1 being the wider class (or equal widths), so
    that p(t2|x) peaks at the stationary point of the likelihood ratio.
    Inequalities against the posterior extremum are strict in the
    general-rejection rows; the equality case has the same region shape as
    the neighbouring one-class row.
    """
    if model.sigma1 < model.sigma2:
        raise ValueError("scenario table assumes sigma1 >= sigma2")
    Y1, Y2, Y3 = Decision.Y1, Decision.Y2, Decision.Y3
    t1, t2 = tr.tr1, tr.tr2
    if t1 == 0 and t2 == 0:
        return RejectStructure("Rejection to All", 1, False, frozenset({Y3}))
    if tr.is_no_reject and t1 == 0.5:
        return RejectStructure("No Rejection", 0, True, frozenset({Y1, Y2}))
    count = crossover_points(model).count
    if model.sigma1 == model.sigma2:
        if model.mu1 == model.mu2:
            raise ValueError("constant likelihood ratio has no crossover structure")
        return RejectStructure("General Rejection" if t1 < 0.5 and t2 < 0.5 else "-", 1, True,
                               frozenset({Y1, Y2, Y3}))
    p1_min, _ = posterior_extrema(model)
    p2_max = 1.0 - p1_min
    if count == 2:
        if t1 == 0:
            return RejectStructure("Class-2 and Reject-class", 2, False, frozenset({Y2, Y3}))
        if t2 <= 1.0 - p2_max:
            return RejectStructure("Class-1 and Reject-class", 1, True, frozenset({Y1, Y3}))
        name = "General Rejection" if t1 < 0.5 and t2 < 0.5 else "-"
        return RejectStructure(name, 2, True, frozenset({Y1, Y2, Y3}))
    if count == 0:
        if t1 == 0:
            return RejectStructure("Minority-class and Reject-class", 2, False, frozenset({Y2, Y3}))
        if t1 >= 1.0 - p1_min:
            return RejectStructure("Majority-taking-all", 0, True, frozenset({Y1}))
        if t2 <= 1.0 - p2_max:
            return RejectStructure("Majority-class and Reject-class", 1, True, frozenset({Y1, Y3}))
        return RejectStructure("General Rejection", 2, True, frozenset({Y1, Y2, Y3}))
    raise ValueError("tangent crossover (alpha = 0) is not a tabulated case")


def region_structure(regions: DecisionRegions) -> tuple[int, bool, frozenset]:
    comps = regions.reject_components()
    bounded = all(math.isfinite(lo) and math.isfinite(hi) for lo, hi in comps)
    return len(comps), bounded, frozenset(regions.labels_present())


# --- prior-ratio sweep ---------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    ratio: float
    p1: float
    p2: float
    e1: float
    e2: float
    fnr: float
    xb: tuple[float, ...]
    ni: float
    h_t_given_y: float

    @property
    def e(self) -> float:
        return self.e1 + self.e2


def sweep_row(ratio: float, model: ClassModel, report: OutcomeReport) -> SweepRow:
    p = model.prior
    return SweepRow(ratio, p.p1, p.p2, report.e1, report.e2, report.e2 / p.p2,
                    report.boundary_points, report.ni, report.h_t_given_y)


def imbalance_sweep(base_model: GaussianClassModel, ratios: Iterable[float]) -> list[SweepRow]:
    """Zero-one no-reject Bayes classifier at each prior ratio p1/p2, in input order."""
    rows = []
    for ratio in ratios:
        model = base_model.with_prior(ClassPrior.from_ratio(ratio))
        report = bayes_classify(model, CostMatrix.zero_one(), reject_option=False)
        rows.append(sweep_row(ratio, model, report))
    return rows
