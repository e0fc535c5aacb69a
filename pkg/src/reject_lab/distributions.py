"""Exactly-known binary class models over a univariate feature.

Two families are supported: Gaussian and uniform class-conditional densities.
Everything downstream talks to a model only through ``posterior``,
``likelihood_ratio``/``log_likelihood_ratio``, ``class_mass`` and ``support``,
so the decision and information modules stay distribution-agnostic.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Union

from .errors import ConstraintViolation, ZeroMixtureDensity

_SQRT2 = math.sqrt(2.0)
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


@dataclass(frozen=True)
class ClassPrior:
    p1: float
    p2: float

    def __post_init__(self):
        if not (0.0 < self.p1 < 1.0 and 0.0 < self.p2 < 1.0):
            raise ConstraintViolation(f"priors must lie in (0, 1), got ({self.p1}, {self.p2})")
        if abs(self.p1 + self.p2 - 1.0) > 1e-12:
            raise ConstraintViolation(f"priors must sum to 1, got {self.p1 + self.p2!r}")

    @classmethod
    def from_ratio(cls, ratio: float) -> "ClassPrior":
        """Priors with p1/p2 == ratio."""
        if not ratio > 0:
            raise ConstraintViolation(f"prior ratio must be positive, got {ratio}")
        return cls(ratio / (1.0 + ratio), 1.0 / (1.0 + ratio))

    def __getitem__(self, i: int) -> float:
        if i == 1:
            return self.p1
        if i == 2:
            return self.p2
        raise IndexError(f"class index must be 1 or 2, got {i}")

    @property
    def p_min(self) -> float:
        return min(self.p1, self.p2)


@dataclass(frozen=True)
class Posterior:
    pt1_given_x: float
    pt2_given_x: float


def _std_normal_cdf(z: float) -> float:
    return 0.5 * math.erfc(-z / _SQRT2)


def _std_normal_sf(z: float) -> float:
    return 0.5 * math.erfc(z / _SQRT2)


def _check_class(class_index: int) -> None:
    if class_index not in (1, 2):
        raise IndexError(f"class index must be 1 or 2, got {class_index}")


def _check_interval(lo: float, hi: float) -> None:
    if math.isnan(lo) or math.isnan(hi) or lo > hi:
        raise ValueError(f"invalid interval [{lo}, {hi}]")


@dataclass(frozen=True)
class GaussianClassModel:
    prior: ClassPrior
    mu1: float
    sigma1: float
    mu2: float
    sigma2: float

    def __post_init__(self):
        if not (self.sigma1 > 0 and self.sigma2 > 0):
            raise ConstraintViolation(
                f"standard deviations must be positive, got ({self.sigma1}, {self.sigma2})"
            )

    @classmethod
    def create(cls, mu1, sigma1, mu2, sigma2, p1=0.5) -> "GaussianClassModel":
        return cls(ClassPrior(p1, 1.0 - p1), float(mu1), float(sigma1), float(mu2), float(sigma2))

    def with_prior(self, prior: ClassPrior) -> "GaussianClassModel":
        return GaussianClassModel(prior, self.mu1, self.sigma1, self.mu2, self.sigma2)

    def params(self, class_index: int) -> tuple[float, float]:
        _check_class(class_index)
        return (self.mu1, self.sigma1) if class_index == 1 else (self.mu2, self.sigma2)

    @property
    def support(self) -> tuple[float, float]:
        return (-math.inf, math.inf)

    def log_density(self, class_index: int, x: float) -> float:
        mu, sigma = self.params(class_index)
        z = (x - mu) / sigma
        return -0.5 * z * z - math.log(sigma) - _LOG_SQRT_2PI

    def density(self, class_index: int, x: float) -> float:
        return math.exp(self.log_density(class_index, x))

    def log_likelihood_ratio(self, x: float) -> float:
        """ln[p(x|t1)p(t1) / p(x|t2)p(t2)], finite everywhere."""
        z1 = (x - self.mu1) / self.sigma1
        z2 = (x - self.mu2) / self.sigma2
        return (
            math.log(self.prior.p1 / self.prior.p2)
            + math.log(self.sigma2 / self.sigma1)
            - 0.5 * (z1 * z1 - z2 * z2)
        )

    def likelihood_ratio(self, x: float) -> float:
        llr = self.log_likelihood_ratio(x)
        return math.inf if llr > 709.0 else math.exp(llr)

    def posterior(self, x: float) -> Posterior:
        llr = self.log_likelihood_ratio(x)
        # logistic split computed on the side that cannot overflow
        if llr >= 0:
            q = math.exp(-llr)
            p1 = 1.0 / (1.0 + q)
            p2 = q / (1.0 + q)
        else:
            q = math.exp(llr)
            p1 = q / (1.0 + q)
            p2 = 1.0 / (1.0 + q)
        return Posterior(p1, p2)

    def class_mass(self, class_index: int, lo: float, hi: float) -> float:
        """p(t_i) * P(lo <= x <= hi | t_i) via the complementary error function."""
        _check_interval(lo, hi)
        mu, sigma = self.params(class_index)
        zlo = (lo - mu) / sigma
        zhi = (hi - mu) / sigma
        if zlo >= 0:
            prob = _std_normal_sf(zlo) - _std_normal_sf(zhi)
        else:
            prob = _std_normal_cdf(zhi) - _std_normal_cdf(zlo)
        return self.prior[class_index] * max(prob, 0.0)

    def cdf(self, class_index: int, x: float) -> float:
        mu, sigma = self.params(class_index)
        return _std_normal_cdf((x - mu) / sigma)


class OverlapCase(enum.Enum):
    PARTIAL_OVERLAP = "PartialOverlap"
    FULL_OVERLAP_BY_CLASS1 = "FullOverlapByClass1"
    SEPARATED = "Separated"


def classify_overlap(a1: float, b1: float, a2: float, b2: float) -> OverlapCase:
    """Geometry of two intervals after ordering them by left endpoint.

    The interval with the smaller left endpoint plays the role of class 1 in
    the case names, so a class-2 support containing class 1 is reported as
    FULL_OVERLAP_BY_CLASS1 as well.
    """
    (l_lo, l_hi), (r_lo, r_hi) = sorted([(a1, b1), (a2, b2)], key=lambda iv: (iv[0], -iv[1]))
    if l_hi < r_lo:
        return OverlapCase.SEPARATED
    if r_hi <= l_hi:
        return OverlapCase.FULL_OVERLAP_BY_CLASS1
    return OverlapCase.PARTIAL_OVERLAP


@dataclass(frozen=True)
class UniformClassModel:
    """Class 1 uniform on [a1, b1], class 2 uniform on [a2, b2] (closed supports)."""

    prior: ClassPrior
    a1: float
    b1: float
    a2: float
    b2: float
    overlap_case: OverlapCase = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if not (self.a1 < self.b1 and self.a2 < self.b2):
            raise ConstraintViolation(
                f"uniform supports need a < b, got [{self.a1}, {self.b1}], [{self.a2}, {self.b2}]"
            )
        actual = classify_overlap(self.a1, self.b1, self.a2, self.b2)
        if self.overlap_case is None:
            object.__setattr__(self, "overlap_case", actual)
        elif OverlapCase(self.overlap_case) is not actual:
            raise ConstraintViolation(
                f"overlap_case {self.overlap_case} inconsistent with supports (expected {actual})"
            )

    @classmethod
    def create(cls, a1, b1, a2, b2, p1=0.5) -> "UniformClassModel":
        return cls(ClassPrior(p1, 1.0 - p1), float(a1), float(b1), float(a2), float(b2))

    def with_prior(self, prior: ClassPrior) -> "UniformClassModel":
        return UniformClassModel(prior, self.a1, self.b1, self.a2, self.b2)

    def params(self, class_index: int) -> tuple[float, float]:
        _check_class(class_index)
        return (self.a1, self.b1) if class_index == 1 else (self.a2, self.b2)

    @property
    def support(self) -> tuple[float, float]:
        return (min(self.a1, self.a2), max(self.b1, self.b2))

    @property
    def overlap(self) -> tuple[float, float] | None:
        lo, hi = max(self.a1, self.a2), min(self.b1, self.b2)
        return (lo, hi) if lo <= hi else None

    def breakpoints(self) -> list[float]:
        return sorted({self.a1, self.b1, self.a2, self.b2})

    def density(self, class_index: int, x: float) -> float:
        a, b = self.params(class_index)
        return 1.0 / (b - a) if a <= x <= b else 0.0

    def log_density(self, class_index: int, x: float) -> float:
        d = self.density(class_index, x)
        return math.log(d) if d > 0 else -math.inf

    def _weighted(self, x: float) -> tuple[float, float]:
        return self.prior.p1 * self.density(1, x), self.prior.p2 * self.density(2, x)

    def likelihood_ratio(self, x: float) -> float:
        w1, w2 = self._weighted(x)
        if w1 == 0.0 and w2 == 0.0:
            raise ZeroMixtureDensity(f"both class densities vanish at x={x}")
        if w2 == 0.0:
            return math.inf
        return w1 / w2

    def log_likelihood_ratio(self, x: float) -> float:
        lr = self.likelihood_ratio(x)
        if lr == 0.0:
            return -math.inf
        return math.log(lr)

    def posterior(self, x: float) -> Posterior:
        w1, w2 = self._weighted(x)
        if w1 == 0.0 and w2 == 0.0:
            raise ZeroMixtureDensity(f"mixture density is zero at x={x}")
        # same arithmetic as the closed-form overlap posteriors
        total = w1 + w2
        return Posterior(w1 / total, w2 / total)

    def class_mass(self, class_index: int, lo: float, hi: float) -> float:
        _check_interval(lo, hi)
        a, b = self.params(class_index)
        left, right = max(lo, a), min(hi, b)
        if right <= left:
            return 0.0
        return self.prior[class_index] * (right - left) / (b - a)

    def cdf(self, class_index: int, x: float) -> float:
        a, b = self.params(class_index)
        return min(max((x - a) / (b - a), 0.0), 1.0)


ClassModel = Union[GaussianClassModel, UniformClassModel]


def posterior(model: ClassModel, x: float) -> Posterior:
    return model.posterior(x)


def likelihood_ratio(model: ClassModel, x: float) -> float:
    """p(x|t1)p(t1) / (p(x|t2)p(t2)); ``math.inf`` where only class 1 has mass."""
    return model.likelihood_ratio(x)


def class_mass(model: ClassModel, class_index: int, interval: tuple[float, float]) -> float:
    lo, hi = interval
    return model.class_mass(class_index, lo, hi)
