"""Seeded Monte-Carlo check of analytic outcomes.

Sample ``i`` is a pure function of (seed, i): it consumes words 2i and 2i+1
of a Philox4x64 stream keyed by the seed. The first word picks the class
against p(t1), the second is pushed through the class-conditional inverse
CDF. Shards therefore concatenate to exactly the single-pass batch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.special import ndtri

from .bayes_rule import CostMatrix, OutcomeReport, report_from_joint
from .distributions import ClassModel, GaussianClassModel, UniformClassModel
from .information import AugmentedConfusionMatrix, joint_from_confusion
from .regions import DecisionRegions

DEFAULT_N = 10_000_000
CHUNK = 1 << 20
_WORDS_PER_BLOCK = 4
_WORDS_PER_SAMPLE = 2


@dataclass(frozen=True)
class SampleBatch:
    n: int
    seed: int
    x: np.ndarray
    true_class: np.ndarray  # int8 codes 1 or 2
    start: int = 0

    @property
    def points(self) -> list[tuple[float, int]]:
        return list(zip(self.x.tolist(), self.true_class.tolist()))

    def class_counts(self) -> tuple[int, int]:
        n1 = int(np.count_nonzero(self.true_class == 1))
        return n1, self.n - n1


def _raw_words(seed: int, first_word: int, count: int) -> np.ndarray:
    bitgen = np.random.Philox(key=seed)
    block, skip = divmod(first_word, _WORDS_PER_BLOCK)
    if block:
        bitgen.advance(block)
    return bitgen.random_raw(count + skip)[skip:]


def _open_unit(words: np.ndarray) -> np.ndarray:
    """Map 64-bit words to the open interval (0, 1) using their top 53 bits."""
    return ((words >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0 ** -53


def _inverse_cdf(model: ClassModel, cls: np.ndarray, u: np.ndarray) -> np.ndarray:
    if isinstance(model, GaussianClassModel):
        mu = np.where(cls == 1, model.mu1, model.mu2)
        sigma = np.where(cls == 1, model.sigma1, model.sigma2)
        return mu + sigma * ndtri(u)
    if isinstance(model, UniformClassModel):
        a = np.where(cls == 1, model.a1, model.a2)
        b = np.where(cls == 1, model.b1, model.b2)
        return a + (b - a) * u
    raise TypeError(f"unsupported model {model!r}")


def sample_shard(model: ClassModel, start: int, count: int, seed: int) -> SampleBatch:
    """Samples ``start`` .. ``start + count - 1`` of the stream for ``seed``."""
    if start < 0 or count < 0:
        raise ValueError("start and count must be nonnegative")
    seed = int(seed)
    if not 0 <= seed < 2 ** 64:
        raise ValueError("seed must be an unsigned 64-bit integer")
    x = np.empty(count, dtype=np.float64)
    cls = np.empty(count, dtype=np.int8)
    for lo in range(0, count, CHUNK):
        m = min(CHUNK, count - lo)
        words = _raw_words(seed, (start + lo) * _WORDS_PER_SAMPLE, m * _WORDS_PER_SAMPLE)
        u = _open_unit(words)
        c = np.where(u[0::2] < model.prior.p1, 1, 2).astype(np.int8)
        cls[lo:lo + m] = c
        x[lo:lo + m] = _inverse_cdf(model, c, u[1::2])
    return SampleBatch(count, seed, x, cls, start)


def sample(model: ClassModel, n: int, seed: int) -> SampleBatch:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return sample_shard(model, 0, n, seed)


def confusion_counts(batch: SampleBatch, regions: DecisionRegions) -> AugmentedConfusionMatrix:
    decisions = regions.labels_for(batch.x).astype(np.int64)
    cell = (batch.true_class.astype(np.int64) - 1) * 3 + (decisions - 1)
    counts = np.bincount(cell, minlength=6)
    return AugmentedConfusionMatrix((tuple(counts[:3].tolist()), tuple(counts[3:].tolist())))


def empirical_outcome(
    batch: SampleBatch, regions: DecisionRegions, costs: Optional[CostMatrix] = None
) -> tuple[AugmentedConfusionMatrix, OutcomeReport]:
    """Classify every sampled point with ``regions`` and summarise the counts."""
    cm = confusion_counts(batch, regions)
    joint = joint_from_confusion(cm)
    return cm, report_from_joint(joint, costs, regions=regions)


def binomial_se(p: float, n: int) -> float:
    """Standard error of an empirical frequency with success probability ``p``."""
    return float(np.sqrt(max(p * (1.0 - p), 0.0) / n))
