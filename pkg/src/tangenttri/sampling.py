"""Seeded Monte Carlo for random tangent triangles.

Every estimator takes ``(n, seed, shards)``. Shard ``i`` draws from a Philox stream keyed
by ``seed`` and jumped ahead ``i`` times (each jump skips 2**128 draws), so shard
substreams never overlap. Shard results are combined in shard order, so output depends
only on ``(seed, n, shards)``.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from . import analytic
from .analytic import DensityModel
from .geometry import ContactAngles, side_lengths_arrays

__all__ = [
    "SimulationSummary",
    "Histogram",
    "make_rng",
    "shard_sizes",
    "sample_theta_single",
    "sample_h_single",
    "sample_contacts",
    "sample_side_incircle",
    "sample_side_naive",
    "draw_sharded",
    "histogram",
    "ks_statistic",
    "estimate_acute_probability",
    "estimate_alpha_mean",
    "simulate_side",
    "simulate_perimeter",
    "running_means",
]

MAX_SEED = 2**64 - 1
MIN_PERIMETER = 6.0 * math.sqrt(3.0)


@dataclass
class SimulationSummary:
    n: int
    estimate: float
    std_error: float
    extra: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.std_error < 0:
            raise ValueError("std_error must be nonnegative")


@dataclass
class Histogram:
    bin_edges: np.ndarray
    counts: np.ndarray
    total: int
    overflow: int = 0

    def __post_init__(self):
        if np.any(np.diff(self.bin_edges) <= 0):
            raise ValueError("bin edges must be strictly increasing")
        if int(self.counts.sum()) + self.overflow != self.total:
            raise ValueError("counts do not add up to total")

    def rows(self) -> List[Tuple[float, float, int]]:
        """``(lo, hi, count)`` rows; the overflow bin is ``(last edge, inf)``."""
        out = [(float(a), float(b), int(c))
               for a, b, c in zip(self.bin_edges[:-1], self.bin_edges[1:], self.counts)]
        out.append((float(self.bin_edges[-1]), math.inf, int(self.overflow)))
        return out


def make_rng(seed: int, shard: int = 0) -> np.random.Generator:
    seed = int(seed)
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed {seed} is not a 64-bit unsigned integer")
    bitgen = np.random.Philox(seed)
    if shard:
        bitgen = bitgen.jumped(shard)
    return np.random.Generator(bitgen)


def shard_sizes(n: int, shards: int) -> List[int]:
    if n < 1 or shards < 1:
        raise ValueError("n and shards must be >= 1")
    q, r = divmod(n, shards)
    return [q + (i < r) for i in range(shards)]


def sample_theta_single(rng: np.random.Generator, size=None):
    return math.pi * rng.random(size)


def sample_h_single(rng: np.random.Generator, size=None):
    theta = sample_theta_single(rng, size)
    return 1.0 / np.tan(0.5 * theta)


def sample_contacts(rng: np.random.Generator, size=None):
    """Uniform ``(alpha, beta)`` on ``{alpha, beta > 0, alpha + beta < pi}``.

    Draws a point of the unit square and folds it across the anti-diagonal. With
    ``size=None`` a :class:`ContactAngles` is returned, otherwise two arrays.
    """
    u = rng.random(size)
    v = rng.random(size)
    flip = u + v > 1.0
    u, v = np.where(flip, 1.0 - u, u), np.where(flip, 1.0 - v, v)
    # rng.random is in [0, 1); zero draws have probability 2**-53 each
    alpha, beta = math.pi * u, math.pi * v
    if size is None:
        return ContactAngles(float(alpha), float(beta))
    return alpha, beta


def sample_side_incircle(rng: np.random.Generator, size=None):
    alpha, beta = sample_contacts(rng, size if size is not None else 1)
    side = 1.0 / np.tan(0.5 * alpha) + 1.0 / np.tan(0.5 * beta)
    return float(side[0]) if size is None else side


def sample_side_naive(rng: np.random.Generator, size=None):
    h = sample_h_single(rng, size)
    k = sample_h_single(rng, size)
    return h + k


def draw_sharded(draw: Callable[[np.random.Generator, int], np.ndarray], n: int, seed: int,
                 shards: int = 1, workers: Optional[int] = None) -> np.ndarray:
    """Concatenate ``draw(rng_i, n_i)`` over shards in shard order."""
    sizes = shard_sizes(n, shards)

    def one(i: int) -> np.ndarray:
        return draw(make_rng(seed, i), sizes[i])

    if shards == 1:
        return one(0)
    with ThreadPoolExecutor(max_workers=workers or min(shards, 8)) as pool:
        parts = list(pool.map(one, range(shards)))
    return np.concatenate(parts)


def histogram(values: np.ndarray, lo: float, hi: float, bins: int) -> Histogram:
    """Equal-width bins on ``[lo, hi)`` plus an overflow bin for ``>= hi``."""
    if bins < 1 or not lo < hi:
        raise ValueError("need bins >= 1 and lo < hi")
    edges = np.linspace(lo, hi, bins + 1)
    inside = values[(values >= lo) & (values < hi)]
    counts, _ = np.histogram(inside, bins=edges)
    overflow = int(np.count_nonzero(values >= hi))
    below = int(np.count_nonzero(values < lo))
    if below:
        raise ValueError(f"{below} values fall below the histogram range")
    return Histogram(edges, counts.astype(np.int64), int(values.size), overflow)


def ks_statistic(samples: Sequence[float], cdf: Callable) -> float:
    """Kolmogorov-Smirnov distance between sorted ``samples`` and ``cdf``.

    ``cdf`` is called once on the whole array.
    """
    x = np.asarray(samples, dtype=float)
    n = x.size
    if n == 0:
        raise ValueError("empty sample")
    if np.any(np.diff(x) < 0):
        raise ValueError("samples must be sorted")
    f = np.asarray(cdf(x), dtype=float)
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - f), np.max(f - (i - 1) / n)))


def _quantile_extras(values: np.ndarray, qs=(0.25, 0.5, 0.75, 0.9)) -> Dict[str, float]:
    out = {"min": float(values.min()), "max": float(values.max())}
    for q, v in zip(qs, np.quantile(values, qs)):
        out[f"q{int(round(q * 100)):02d}"] = float(v)
    return out


def _median_std_error(values: np.ndarray) -> float:
    """Distribution-free standard error of the sample median from order statistics."""
    n = values.size
    if n < 2:
        return 0.0
    half = 0.5 / math.sqrt(n)
    lo, hi = np.quantile(values, [max(0.5 - half, 0.0), min(0.5 + half, 1.0)])
    return float(0.5 * (hi - lo))


def estimate_acute_probability(n: int, seed: int, shards: int = 1) -> SimulationSummary:
    def draw(rng, m):
        alpha, beta = sample_contacts(rng, m)
        # every gap > pi/2
        acute = (alpha < 0.5 * math.pi) & (beta < 0.5 * math.pi) & (alpha + beta > 0.5 * math.pi)
        return np.array([np.count_nonzero(acute)])

    hits = int(draw_sharded(draw, n, seed, shards).sum())
    p = hits / n
    return SimulationSummary(n, p, math.sqrt(p * (1.0 - p) / n),
                             {"hits": float(hits), "exact": 0.25})


def estimate_alpha_mean(n: int, seed: int, shards: int = 1,
                        bins: int = 50) -> Tuple[SimulationSummary, Histogram]:
    """Mean of ``alpha`` (exactly pi/3) and a chi-square fit against its marginal law."""
    alpha = draw_sharded(lambda rng, m: sample_contacts(rng, m)[0], n, seed, shards)
    mean = float(alpha.mean())
    se = float(alpha.std(ddof=1) / math.sqrt(n)) if n > 1 else 0.0
    hist = histogram(alpha, 0.0, math.pi, bins)
    # marginal CDF of alpha is 1 - (1 - a/pi)^2
    edges = hist.bin_edges / math.pi
    probs = np.diff(1.0 - (1.0 - edges) ** 2)
    expected = probs * n
    chi2 = float(np.sum((hist.counts - expected) ** 2 / expected))
    pvalue = float(stats.chi2.sf(chi2, bins - 1))
    extra = {"exact": math.pi / 3.0, "z": (mean - math.pi / 3.0) / se if se else 0.0,
             "chi2": chi2, "chi2_pvalue": pvalue}
    extra.update(_quantile_extras(alpha))
    return SimulationSummary(n, mean, se, extra), hist


def simulate_side(n: int, seed: int, bins: int = 50, shards: int = 1,
                  model: DensityModel = DensityModel.INCIRCLE) -> Tuple[SimulationSummary, Histogram]:
    """Side-length samples under ``model``; the estimate is the sample median."""
    model = DensityModel(model)
    draw = {
        DensityModel.INCIRCLE: sample_side_incircle,
        DensityModel.NAIVE: sample_side_naive,
        DensityModel.SINGLE: sample_h_single,
    }[model]
    values = np.sort(draw_sharded(lambda rng, m: draw(rng, m), n, seed, shards))
    med = float(np.median(values))
    extra = _quantile_extras(values)
    extra["ks"] = ks_statistic(values, lambda x: analytic.cdf_many(model, x))
    extra["median_exact"] = analytic.median(model)
    extra["mean"] = float(values.mean())
    cap = analytic.quantile(model, 0.999)
    hist = histogram(values, model.support_lower, cap, bins)
    return SimulationSummary(n, med, _median_std_error(values), extra), hist


def perimeters(alpha: np.ndarray, beta: np.ndarray) -> np.ndarray:
    return side_lengths_arrays(alpha, beta).sum(axis=-1)


def simulate_perimeter(n: int, seed: int, bins: int = 50,
                       shards: int = 1) -> Tuple[SimulationSummary, Histogram]:
    """Perimeters of random incircle triangles; the estimate is the sample median.

    No closed-form law exists, so the histogram cap is the empirical 0.999 quantile.
    """
    values = draw_sharded(lambda rng, m: perimeters(*sample_contacts(rng, m)), n, seed, shards)
    extra = _quantile_extras(values)
    extra["mean"] = float(values.mean())
    extra["floor"] = MIN_PERIMETER
    cap = float(np.quantile(values, 0.999))
    if cap <= MIN_PERIMETER:
        cap = MIN_PERIMETER + 1.0
    hist = histogram(values, MIN_PERIMETER, cap, bins)
    return SimulationSummary(n, extra["q50"], _median_std_error(values), extra), hist


def running_means(values: np.ndarray, checkpoints: Sequence[int]) -> List[float]:
    """Means of the first ``m`` values for each ``m`` in ``checkpoints``."""
    csum = np.cumsum(values)
    return [float(csum[m - 1] / m) for m in checkpoints]
