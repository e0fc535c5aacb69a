"""Joint distributions of (true class, decision) and the entropies built on them.

All entropies are in bits. Joint entries below ``ZERO_MASS`` count as exact
zeros so that 0 * log 0 contributes nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .distributions import ClassModel, ClassPrior
from .errors import ConstraintViolation, DegenerateTarget
from .regions import DecisionRegions

ZERO_MASS = 1e-300


def _xlog2x(p: float) -> float:
    return p * math.log2(p) if p > ZERO_MASS else 0.0


def entropy_prior(prior: ClassPrior | Sequence[float]) -> float:
    """Shannon entropy H(T) of the class prior, in bits."""
    probs = (prior.p1, prior.p2) if isinstance(prior, ClassPrior) else tuple(prior)
    return max(0.0, -sum(_xlog2x(p) for p in probs))


@dataclass(frozen=True)
class JointDistribution:
    """p(t_i, y_j) for i in {1, 2} and j in {1, 2, 3}; column 3 is the reject decision."""

    p: tuple[tuple[float, float, float], tuple[float, float, float]]
    m: int = 2

    def __post_init__(self):
        rows = tuple(tuple(float(v) for v in row) for row in self.p)
        if len(rows) != 2 or any(len(r) != 3 for r in rows):
            raise ValueError("joint distribution must be 2 x 3")
        if any(v < 0 or math.isnan(v) for r in rows for v in r):
            raise ConstraintViolation(f"joint entries must be nonnegative: {rows}")
        if abs(math.fsum(v for r in rows for v in r) - 1.0) > 1e-10:
            raise ConstraintViolation(f"joint entries must sum to 1: {rows}")
        object.__setattr__(self, "p", rows)

    @classmethod
    def from_rows(cls, rows) -> "JointDistribution":
        return cls(tuple(tuple(r) for r in rows))

    def __getitem__(self, ij: tuple[int, int]) -> float:
        i, j = ij
        return self.p[i - 1][j - 1]

    def row_sums(self) -> tuple[float, float]:
        return (math.fsum(self.p[0]), math.fsum(self.p[1]))

    def column_sums(self) -> tuple[float, float, float]:
        return tuple(self.p[0][j] + self.p[1][j] for j in range(3))  # type: ignore[return-value]

    cr1 = property(lambda self: self.p[0][0])
    e1 = property(lambda self: self.p[0][1])
    rej1 = property(lambda self: self.p[0][2])
    e2 = property(lambda self: self.p[1][0])
    cr2 = property(lambda self: self.p[1][1])
    rej2 = property(lambda self: self.p[1][2])

    @property
    def error(self) -> float:
        return self.e1 + self.e2

    @property
    def reject(self) -> float:
        return self.rej1 + self.rej2

    @property
    def correct(self) -> float:
        return self.cr1 + self.cr2


@dataclass(frozen=True)
class InformationSummary:
    ni: float
    mutual_information: float
    h_t: float
    h_t_given_y: float


def mutual_information(joint: JointDistribution) -> float:
    """I(T, Y) in bits, using the joint's own marginals."""
    rows = joint.row_sums()
    cols = joint.column_sums()
    total = 0.0
    for i in range(2):
        for j in range(3):
            pij = joint.p[i][j]
            if pij <= ZERO_MASS:
                continue
            total += pij * math.log2(pij / (rows[i] * cols[j]))
    return total


def information_summary(joint: JointDistribution) -> InformationSummary:
    h_t = entropy_prior(joint.row_sums())
    if h_t <= 0.0:
        raise DegenerateTarget("H(T) = 0: one class has probability 1")
    info = min(max(mutual_information(joint), 0.0), h_t)
    return InformationSummary(info / h_t, info, h_t, h_t - info)


def ni(joint: JointDistribution) -> tuple[float, float]:
    """Normalized mutual information I(T,Y)/H(T) and the conditional entropy H(T|Y)."""
    s = information_summary(joint)
    return s.ni, s.h_t_given_y


def joint_from_regions(model: ClassModel, regions: DecisionRegions) -> JointDistribution:
    rows = []
    for cls in (1, 2):
        row = [0.0, 0.0, 0.0]
        for seg in regions.segments():
            row[seg.label.column] += model.class_mass(cls, seg.lo, seg.hi)
        rows.append(row)
    # masses are computed per interval; renormalise the row onto the exact prior
    for cls, row in zip((1, 2), rows):
        s = math.fsum(row)
        if s > 0:
            scale = model.prior[cls] / s
            row[:] = [v * scale for v in row]
    return JointDistribution.from_rows(rows)


@dataclass(frozen=True)
class AugmentedConfusionMatrix:
    """Counts c[i][j] of true class i decided as j, with the reject decision in column 3."""

    c: tuple[tuple[int, int, int], tuple[int, int, int]]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.c)
        if len(rows) != 2 or any(len(r) != 3 for r in rows):
            raise ValueError("augmented confusion matrix must be 2 x 3")
        if any(v < 0 for r in rows for v in r):
            raise ConstraintViolation("counts must be nonnegative")
        if any(sum(r) <= 0 for r in rows):
            raise ConstraintViolation("every class needs a positive row total C_i")
        object.__setattr__(self, "c", rows)

    @property
    def n(self) -> int:
        return sum(sum(r) for r in self.c)

    def class_totals(self) -> tuple[int, int]:
        return (sum(self.c[0]), sum(self.c[1]))


def joint_from_confusion(cm: AugmentedConfusionMatrix) -> JointDistribution:
    n = cm.n
    return JointDistribution.from_rows([[v / n for v in row] for row in cm.c])
