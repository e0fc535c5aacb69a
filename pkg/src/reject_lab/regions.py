"""Threshold policies and labeled partitions of the real line."""

from __future__ import annotations

import bisect
import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DegenerateThresholds

_SUM_TOL = 1e-12


class Decision(enum.IntEnum):
    Y1 = 1
    Y2 = 2
    Y3 = 3  # reject

    @property
    def column(self) -> int:
        return int(self) - 1


@dataclass(frozen=True)
class RejectThresholds:
    """Posterior-form policy: y1 if p(t1|x) > 1-tr1, y2 if p(t2|x) >= 1-tr2, else reject."""

    tr1: float
    tr2: float

    @classmethod
    def from_deltas(cls, delta1: float, delta2: float) -> "RejectThresholds":
        """Thresholds equivalent to the likelihood-ratio cut-offs (delta1, delta2)."""
        tr1 = 0.0 if math.isinf(delta1) else 1.0 / (1.0 + delta1)
        tr2 = 1.0 if math.isinf(delta2) else delta2 / (1.0 + delta2)
        return cls(tr1, tr2)

    @classmethod
    def no_reject(cls, delta: float = 1.0) -> "RejectThresholds":
        """The tr1 + tr2 = 1 pair whose single boundary sits at likelihood ratio ``delta``."""
        if delta == 1.0:
            return cls(0.5, 0.5)
        return cls(1.0 / (1.0 + delta), delta / (1.0 + delta))

    @property
    def total(self) -> float:
        return self.tr1 + self.tr2

    @property
    def is_no_reject(self) -> bool:
        return abs(self.total - 1.0) <= _SUM_TOL

    @property
    def delta1(self) -> float:
        """Likelihood ratio above which y1 is decided."""
        return math.inf if self.tr1 == 0 else (1.0 - self.tr1) / self.tr1

    @property
    def delta2(self) -> float:
        """Likelihood ratio at or below which y2 is decided."""
        return math.inf if self.tr2 == 1 else self.tr2 / (1.0 - self.tr2)

    @property
    def log_delta1(self) -> float:
        if self.tr1 == 0:
            return math.inf
        if self.tr1 == 1:
            return -math.inf
        return math.log1p(-self.tr1) - math.log(self.tr1)

    @property
    def log_delta2(self) -> float:
        if self.tr2 == 0:
            return -math.inf
        if self.tr2 == 1:
            return math.inf
        return math.log(self.tr2) - math.log1p(-self.tr2)

    def validate(self, reject_option: bool = True, relaxed: bool = False) -> "RejectThresholds":
        tr1, tr2 = self.tr1, self.tr2
        if not (0.0 <= tr1 <= 1.0 and 0.0 <= tr2 <= 1.0):
            raise DegenerateThresholds(
                f"thresholds must lie in [0, 1], got ({tr1}, {tr2})", "0 <= Tr1, Tr2 <= 1"
            )
        if not reject_option:
            if not self.is_no_reject or tr1 in (0.0, 1.0):
                raise DegenerateThresholds(
                    f"no-rejection thresholds need Tr1 + Tr2 = 1 with both in (0, 1), "
                    f"got ({tr1}, {tr2})",
                    "Tr1 + Tr2 = 1 (no rejection)",
                )
            return self
        if self.total > 1.0 + _SUM_TOL:
            raise DegenerateThresholds(
                f"Tr1 + Tr2 = {self.total:.6g} exceeds 1", "0 < Tr1 + Tr2 <= 1"
            )
        if not relaxed:
            if self.total <= 0.0:
                raise DegenerateThresholds("Tr1 + Tr2 must be positive", "0 < Tr1 + Tr2 <= 1")
            if tr1 == 0.0 or tr2 == 0.0:
                raise DegenerateThresholds(
                    f"zero threshold ({tr1}, {tr2}) needs the relaxed mode", "Tr1 > 0 and Tr2 > 0"
                )
        return self

    def decide_log_ratio(self, llr: float) -> Decision:
        """Apply the rule to a log likelihood ratio (strict for y1, non-strict for y2)."""
        if llr > self.log_delta1:
            return Decision.Y1
        if llr <= self.log_delta2:
            return Decision.Y2
        return Decision.Y3

    def decide_posterior(self, p1: float, p2: float) -> Decision:
        if p1 > 1.0 - self.tr1:
            return Decision.Y1
        if p2 >= 1.0 - self.tr2:
            return Decision.Y2
        return Decision.Y3


class Segment(NamedTuple):
    lo: float
    hi: float
    label: Decision
    lo_closed: bool
    hi_closed: bool


# which neighbour owns a boundary point when the rule is evaluated exactly on it
_POINT_PRIORITY = {Decision.Y2: 2, Decision.Y3: 1, Decision.Y1: 0}


def boundary_owner(left: Decision, right: Decision) -> Decision:
    """Label taken by a likelihood-ratio boundary between two regions.

    y1 is decided with a strict inequality and y2 with a non-strict one, so a
    point sitting exactly on a threshold goes to y2 before y3 before y1.
    """
    return max(left, right, key=_POINT_PRIORITY.__getitem__)


@dataclass(frozen=True)
class DecisionRegions:
    """Labels of the open intervals between sorted boundary points, plus the points' own labels."""

    boundary_points: tuple[float, ...]
    interval_labels: tuple[Decision, ...]
    point_labels: tuple[Decision, ...]

    def __post_init__(self):
        pts = self.boundary_points
        if len(self.interval_labels) != len(pts) + 1 or len(self.point_labels) != len(pts):
            raise ValueError("label counts do not match boundary points")
        if any(not math.isfinite(p) for p in pts) or any(b <= a for a, b in zip(pts, pts[1:])):
            raise ValueError(f"boundary points must be finite and strictly increasing: {pts}")
        if any(a == b for a, b in zip(self.interval_labels, self.interval_labels[1:])):
            raise ValueError("adjacent intervals must carry different labels")

    @classmethod
    def constant(cls, label: Decision) -> "DecisionRegions":
        return cls((), (Decision(label),), ())

    @classmethod
    def build(
        cls,
        points: Sequence[float],
        interval_labels: Sequence[Decision],
        point_labels: Sequence[Decision] | None = None,
    ) -> "DecisionRegions":
        """Normalize raw pieces: merge equal neighbours and drop redundant points.

        Missing point labels default to ``boundary_owner`` of the neighbours.
        """
        points = [float(p) for p in points]
        labels = [Decision(v) for v in interval_labels]
        if point_labels is None:
            plabels = [boundary_owner(labels[i], labels[i + 1]) for i in range(len(points))]
        else:
            plabels = [Decision(v) for v in point_labels]
        out_pts: list[float] = []
        out_labels = [labels[0]]
        out_plabels: list[Decision] = []
        for i, p in enumerate(points):
            nxt = labels[i + 1]
            if out_pts and p == out_pts[-1]:
                # coincident points: the zero-width interval between them vanishes
                out_labels[-1] = nxt
                out_plabels[-1] = boundary_owner(out_plabels[-1], plabels[i])
            elif nxt == out_labels[-1]:
                continue
            else:
                out_pts.append(p)
                out_plabels.append(plabels[i])
                out_labels.append(nxt)
        # coincident-point collapse can leave equal neighbours behind
        merged_pts: list[float] = []
        merged_labels = [out_labels[0]]
        merged_plabels: list[Decision] = []
        for p, pl, nxt in zip(out_pts, out_plabels, out_labels[1:]):
            if nxt == merged_labels[-1]:
                continue
            merged_pts.append(p)
            merged_plabels.append(pl)
            merged_labels.append(nxt)
        return cls(tuple(merged_pts), tuple(merged_labels), tuple(merged_plabels))

    def segments(self) -> list[Segment]:
        pts = (-math.inf,) + self.boundary_points + (math.inf,)
        out = []
        for i, label in enumerate(self.interval_labels):
            lo_closed = i > 0 and self.point_labels[i - 1] == label
            hi_closed = i < len(self.point_labels) and self.point_labels[i] == label
            out.append(Segment(pts[i], pts[i + 1], label, lo_closed, hi_closed))
        return out

    def intervals(self, label: Decision) -> list[tuple[float, float]]:
        return [(s.lo, s.hi) for s in self.segments() if s.label == label]

    def labels_present(self) -> set[Decision]:
        return set(self.interval_labels)

    def reject_components(self) -> list[tuple[float, float]]:
        return self.intervals(Decision.Y3)

    def label_at(self, x: float) -> Decision:
        pts = self.boundary_points
        i = bisect.bisect_left(pts, x)
        if i < len(pts) and pts[i] == x:
            return self.point_labels[i]
        return self.interval_labels[i]

    def labels_for(self, xs: np.ndarray) -> np.ndarray:
        """Vectorised ``label_at`` returning an int8 array of decision codes."""
        xs = np.asarray(xs, dtype=float)
        pts = np.asarray(self.boundary_points, dtype=float)
        interval = np.asarray([int(v) for v in self.interval_labels], dtype=np.int8)
        out = interval[np.searchsorted(pts, xs, side="left")]
        if len(pts):
            idx = np.searchsorted(pts, xs, side="left")
            hit = idx < len(pts)
            hit[hit] = pts[idx[hit]] == xs[hit]
            if hit.any():
                point = np.asarray([int(v) for v in self.point_labels], dtype=np.int8)
                out[hit] = point[idx[hit]]
        return out

    def map_labels(self, mapping: dict[Decision, Decision]) -> "DecisionRegions":
        return DecisionRegions.build(
            self.boundary_points,
            [mapping[v] for v in self.interval_labels],
            [mapping[v] for v in self.point_labels],
        )

