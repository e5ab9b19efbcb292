"""Monte Carlo verification of the analytic rate expressions.

Sampling happens at the branch level (no moment matching anywhere), so
agreement with the analytic pipeline checks the fitted approximation and the
contour integrals at once.  Draws are partitioned into independent streams
with fixed per-stream seeds and reduced in stream order, which makes every
estimate bit-reproducible for a given (seed, streams) pair no matter how the
work is scheduled.
"""

import math
from dataclasses import dataclass

import numpy as np

from .alphamu import sample

LN2 = math.log(2.0)


@dataclass(frozen=True)
class McConfig:
    """Sample budget and seeding policy of one Monte Carlo estimate."""

    samples: int = 1_000_000
    seed: int = 0
    streams: int = 8

    def __post_init__(self):
        if self.samples < 1000:
            raise ValueError("McConfig: need at least 1000 samples")
        if self.streams < 1 or self.streams > self.samples:
            raise ValueError("McConfig: streams must be in [1, samples]")


def _stream_plan(cfg):
    """Deterministic (rng, count) pairs, one per stream."""
    base = np.random.SeedSequence(cfg.seed)
    children = base.spawn(cfg.streams)
    counts = [cfg.samples // cfg.streams] * cfg.streams
    for i in range(cfg.samples % cfg.streams):
        counts[i] += 1
    return [(np.random.default_rng(children[i]), counts[i]) for i in range(cfg.streams)]


def _accumulate(link, rho, cfg, term_fn):
    """Stream-ordered mean/variance accumulation of term_fn over SNR sums."""
    total = 0.0
    total_sq = 0.0
    n = 0
    for rng, count in _stream_plan(cfg):
        if count == 0:
            continue
        draws = sample(link.branch, rng, size=(count, link.n_t))
        snr_sum = draws.sum(axis=1)
        terms = term_fn(rho * snr_sum / link.n_t)
        total += float(terms.sum())
        total_sq += float(np.square(terms).sum())
        n += count
    mean = total / n
    var = max(total_sq / n - mean * mean, 0.0) * n / max(n - 1, 1)
    return mean, var, n


def simulate_rate(link, rho, cfg):
    """Monte Carlo effective rate with a delta-method 95% interval.

    Estimates X = E{(1 + rho S / n_t)^-A} by the sample mean, maps it through
    R = -(1/A) log2 X, and propagates the standard error through the log:
    halfwidth = 1.96 sd(X) / (sqrt(M) A ln2 X).

    Returns (rate, ci_halfwidth).
    """
    if not rho > 0:
        raise ValueError("simulate_rate: rho must be > 0")
    a_qos = link.delay_a

    def decay_term(x):
        return np.exp(-a_qos * np.log1p(x))

    mean, var, n = _accumulate(link, rho, cfg, decay_term)
    rate = -math.log(mean) / (a_qos * LN2)
    halfwidth = 1.96 * math.sqrt(var / n) / (a_qos * LN2 * mean)
    return rate, halfwidth


def simulate_ergodic_capacity(link, rho, cfg):
    """Monte Carlo E{log2(1 + rho S / n_t)}, the no-QoS ceiling."""
    if not rho > 0:
        raise ValueError("simulate_ergodic_capacity: rho must be > 0")

    def log_term(x):
        return np.log1p(x) / LN2

    mean, _, _ = _accumulate(link, rho, cfg, log_term)
    return mean
