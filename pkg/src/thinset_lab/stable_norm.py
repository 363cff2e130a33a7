"""Monte Carlo estimation of randomized sup norms and their comparators.

estimate_bracket measures E || sum_g Z_g c_g e^{igt} ||_inf by drawing one
driver vector per trial and taking each trial's certified sup norm on the
circle (relative grid tolerance 1e-3; Monte Carlo error dominates).  The
p-stable drivers with p < 2 are heavy-tailed, so their trials aggregate by
median-of-means; Rademacher and Gaussian trials use the plain mean.  The
spread field (interquartile range of group means) scales the tolerance
bands used by the experiment suites.

The deterministic comparators carry unit constants: a coefficient-tail
upper bound for positive spectra, the counting upper bound for 0-1
spectra, and the matching lower bound.  All downstream checks are ratio
bands, never absolute thresholds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .exponents import conjugate
from .sampler import DriverDistribution, sample_driver
from .trigpoly import TrigPolynomial, sup_norm_rows

__all__ = [
    "NormEstimate",
    "estimate_bracket",
    "median_of_means",
    "mp_tail_bound",
    "zero_one_upper",
    "sz_lower",
    "SUP_REL_TOL",
]

SUP_REL_TOL = 1e-3


@dataclass(frozen=True)
class NormEstimate:
    """Aggregated Monte Carlo estimate of a randomized sup norm.

    value: median of group means (heavy-tailed drivers) or plain mean.
    spread: interquartile range of the group means.
    grid_tol: certified relative tolerance of each trial's sup norm.
    """

    value: float
    trials: int
    groups: int
    spread: float
    grid_tol: float
    group_means: tuple
    kind: str
    p: float | None
    seed: int
    stream_id: int

    def to_json_obj(self) -> dict:
        return {
            "value": self.value,
            "trials": self.trials,
            "groups": self.groups,
            "spread": self.spread,
            "grid_tol": self.grid_tol,
            "group_means": list(self.group_means),
            "kind": self.kind,
            "p": self.p,
            "seed": self.seed,
            "stream_id": self.stream_id,
        }


def median_of_means(samples, groups: int) -> tuple:
    """Median of contiguous-group means; returns (median, group_means)."""
    samples = np.asarray(samples, dtype=np.float64)
    if samples.size == 0:
        raise DomainError("median_of_means needs at least one sample")
    groups = int(groups)
    if not 1 <= groups <= samples.size:
        raise DomainError(f"need 1 <= groups <= {samples.size}, got {groups}")
    means = np.array([chunk.mean() for chunk in np.array_split(samples, groups)])
    return float(np.median(means)), means


def estimate_bracket(
    f: TrigPolynomial,
    d: DriverDistribution,
    trials: int,
    groups: int | None = None,
) -> NormEstimate:
    """Monte Carlo estimate of the expected randomized sup norm.

    Trial i multiplies the coefficients by the driver vector from the
    (d.seed, d.stream_id, i) stream; the estimate is a deterministic
    function of the trial multiset.  groups defaults to
    ceil(trials^(1/3)).
    """
    trials = int(trials)
    if trials < 1:
        raise DomainError(f"need trials >= 1, got {trials}")
    if groups is None:
        groups = max(1, math.ceil(trials ** (1.0 / 3.0)))
    groups = int(groups)
    if not 1 <= groups <= trials:
        raise DomainError(f"need 1 <= groups <= trials, got groups={groups}")

    if len(f) == 0:
        means = tuple(0.0 for _ in range(groups))
        return NormEstimate(
            0.0, trials, groups, 0.0, SUP_REL_TOL, means, d.kind, d.p, d.seed, d.stream_id
        )

    n = len(f)
    rows = np.empty((trials, n), dtype=np.complex128)
    for i in range(trials):
        rows[i] = sample_driver(d, n, trial_index=i) * f.coeffs
    sups = sup_norm_rows(f.freqs, rows, SUP_REL_TOL)

    mom, means = median_of_means(sups, groups)
    heavy = d.kind == "p_stable" and d.p < 2.0
    value = mom if heavy else float(sups.mean())
    spread = float(np.percentile(means, 75) - np.percentile(means, 25))
    return NormEstimate(
        value=value,
        trials=trials,
        groups=groups,
        spread=spread,
        grid_tol=SUP_REL_TOL,
        group_means=tuple(float(m) for m in means),
        kind=d.kind,
        p=d.p,
        seed=d.seed,
        stream_id=d.stream_id,
    )


def _check_p(p: float) -> float:
    p = float(p)
    if not 1.0 <= p <= 2.0:
        raise DomainError(f"need 1 <= p <= 2, got p={p}")
    return p


def mp_tail_bound(f: TrigPolynomial, p: float) -> float:
    """Coefficient-tail upper bound with unit constant.

    sum_{k=2}^{K} (k (log k)^(1/p))^(-1) * (sum_{j >= k} |c_j|^p)^(1/p)
    with K the largest frequency.  The spectrum must consist of positive
    integers; tail sums vanish beyond K, so the sum is finite.
    """
    p = _check_p(p)
    if len(f) == 0:
        return 0.0
    if f.freqs[0] < 1:
        raise DomainError("mp_tail_bound needs a spectrum of positive integers")
    pf = f.freqs
    pa = np.abs(f.coeffs) ** p
    kmax = int(pf[-1])
    if kmax < 2:
        return 0.0
    suffix = np.concatenate([np.cumsum(pa[::-1])[::-1], [0.0]])
    ks = np.arange(2, kmax + 1, dtype=np.int64)
    tails = suffix[np.searchsorted(pf, ks, side="left")]
    terms = tails ** (1.0 / p) / (ks * np.log(ks) ** (1.0 / p))
    return float(terms.sum())


def zero_one_upper(n: int, lambda_max: int, p: float) -> float:
    """Counting comparator n^(1/p) (log lambda_max)^(1/p') for 0-1 spectra."""
    n = int(n)
    lambda_max = int(lambda_max)
    p = _check_p(p)
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if lambda_max < 2:
        raise DomainError(f"need lambda_max >= 2, got {lambda_max}")
    if p == 1.0:
        return float(n)
    return n ** (1.0 / p) * math.log(lambda_max) ** (1.0 / conjugate(p))


def sz_lower(f: TrigPolynomial, p: float) -> float:
    """Matching lower comparator with unit constant.

    N^(1/p) (log N)^(1/p') * (sum |c|) / N with N the largest frequency;
    the spectrum must lie in {1..N} and N must be at least 2.
    """
    p = _check_p(p)
    if len(f) == 0:
        raise DomainError("sz_lower needs a nonempty polynomial")
    if f.freqs[0] < 1:
        raise DomainError("sz_lower needs a spectrum of positive integers")
    N = int(f.freqs[-1])
    if N < 2:
        raise DomainError(f"need max frequency >= 2, got {N}")
    log_part = 1.0 if p == 1.0 else math.log(N) ** (1.0 / conjugate(p))
    total = float(np.abs(f.coeffs).sum())
    return N ** (1.0 / p) * log_part * total / N
