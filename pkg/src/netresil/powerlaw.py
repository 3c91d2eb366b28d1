"""Discrete power-law fitting for degree samples.

The fitting recipe is the usual maximum-likelihood one for discrete data:
for every candidate lower cutoff xmin among the observed values, estimate
the exponent with the continuous approximation

    alpha = 1 + n_tail / sum(log(x_i / (xmin - 1/2)))   over x_i >= xmin,

measure the Kolmogorov-Smirnov distance between the empirical tail CCDF
and the fitted discrete CCDF (Hurwitz-zeta ratio), and keep the cutoff
that minimizes it.  Goodness of fit comes from a semi-parametric
bootstrap: synthetic samples draw their tail from the fitted law and their
head from the empirical values below the cutoff, and the p-value is the
fraction of synthetic samples that refit with a larger KS distance.  Large
p is consistent with the power-law hypothesis; small p rejects it.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np
from scipy.special import zeta

logger = logging.getLogger(__name__)


@dataclass
class PowerLawFit:
    """Fitted tail model P(X = k) ~ k**-alpha for k >= xmin."""

    alpha: float
    xmin: int
    ks: float
    n_tail: int
    p_value: float | None = None

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "xmin": self.xmin,
            "ks": self.ks,
            "n_tail": self.n_tail,
            "p_value": self.p_value,
        }


def _usable(degrees: Iterable[int]) -> np.ndarray:
    x = np.asarray(list(degrees), dtype=np.int64)
    if x.size and (x < 0).any():
        raise ValueError("degree values must be non-negative integers")
    zeros = int((x == 0).sum())
    if zeros:
        logger.warning("dropping %d zero values before power-law fitting", zeros)
        x = x[x > 0]
    if x.size < 10:
        raise ValueError(f"need at least 10 positive values, got {x.size}")
    x = np.sort(x)
    if x[0] == x[-1]:
        raise ValueError("degenerate sample: all values equal")
    return x


def _tail_ccdf(alpha: float, ks: np.ndarray, xmin: int) -> np.ndarray:
    """Fitted P(X > k) for k >= xmin under the discrete law."""
    with np.errstate(invalid="ignore"):
        # 0/0 can occur when an extreme alpha underflows both zeta values;
        # those candidates are degenerate and get discarded by the caller
        return zeta(alpha, ks + 1.0) / zeta(alpha, float(xmin))


def fit_discrete_powerlaw(degrees: Iterable[int]) -> PowerLawFit:
    """Fit alpha and xmin to a degree sample by MLE with KS cutoff selection.

    Zero values are dropped (with a log diagnostic); fewer than 10 usable
    values or an all-equal sample is an error.  The returned KS distance is
    sup over integers k >= xmin of |empirical CCDF - fitted CCDF|.
    """
    x = _usable(degrees)
    n = x.size
    logx = np.log(x)
    suffix = np.zeros(n + 1)
    suffix[:n] = np.cumsum(logx[::-1])[::-1]  # suffix[i] = sum(logx[i:])

    uniq, first = np.unique(x, return_index=True)
    below = np.concatenate([first[1:], [n]])  # count of values <= uniq[i]
    tail_n = n - first
    candidates = np.nonzero(tail_n >= 2)[0]

    best_ks = np.inf
    best_j = -1
    best_alpha = 0.0
    for j in candidates:
        xmin = int(uniq[j])
        ntail = int(tail_n[j])
        alpha = 1.0 + ntail / (suffix[first[j]] - ntail * np.log(xmin - 0.5))
        # empirical CCDF is constant on [uniq[i], uniq[i+1]-1]; the fitted
        # CCDF decreases, so the sup is attained at an interval endpoint
        emp = (ntail - (below[j:] - first[j])) / ntail
        points = np.concatenate([uniq[j:], uniq[j + 1 :] - 1]).astype(np.float64)
        emp_at = np.concatenate([emp, emp[:-1]])
        fit_at = _tail_ccdf(alpha, points, xmin)
        d = float(np.abs(emp_at - fit_at).max())
        if not np.isfinite(d):
            continue
        if d < best_ks:
            best_ks = d
            best_j = j
            best_alpha = alpha
    return PowerLawFit(
        alpha=float(best_alpha),
        xmin=int(uniq[best_j]),
        ks=best_ks,
        n_tail=int(tail_n[best_j]),
    )


def _sample_with_rng(
    alpha: float, xmin: int, n: int, rng: np.random.Generator
) -> np.ndarray:
    """Exact inverse-CDF draws from P(X = k) ~ k**-alpha, k >= xmin."""
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    u = rng.random(n)
    z0 = zeta(alpha, float(xmin))
    # cdf(k) = 1 - zeta(alpha, k+1)/z0, evaluated directly so the table has
    # no cumulative rounding drift
    hi = xmin + 1024
    umax = u.max()
    while 1.0 - zeta(alpha, hi + 1.0) / z0 < umax and hi - xmin < (1 << 22):
        hi *= 2
    ks = np.arange(xmin, hi + 1, dtype=np.float64)
    cdf = 1.0 - zeta(alpha, ks + 1.0) / z0
    idx = np.searchsorted(cdf, u, side="left")
    out = np.empty(n, dtype=np.int64)
    inside = idx < len(ks)
    out[inside] = ks[idx[inside]].astype(np.int64)
    for pos in np.nonzero(~inside)[0]:  # astronomically rare far-tail draws
        lo_k, hi_k = hi, hi * 2
        while 1.0 - zeta(alpha, hi_k + 1.0) / z0 < u[pos]:
            lo_k, hi_k = hi_k, hi_k * 2
        while lo_k < hi_k:
            mid = (lo_k + hi_k) // 2
            if 1.0 - zeta(alpha, mid + 1.0) / z0 >= u[pos]:
                hi_k = mid
            else:
                lo_k = mid + 1
        out[pos] = lo_k
    return out


def sample_powerlaw(alpha: float, xmin: int = 1, n: int = 1, seed: int = 0) -> np.ndarray:
    """n i.i.d. draws with P(X = k) ~ k**-alpha for k >= xmin."""
    if alpha <= 1:
        raise ValueError(f"alpha must exceed 1 (non-normalizable), got {alpha}")
    if xmin < 1:
        raise ValueError(f"xmin must be a positive integer, got {xmin}")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    rng = np.random.default_rng(seed)
    return _sample_with_rng(float(alpha), int(xmin), int(n), rng)


def bootstrap_pvalue(
    degrees: Iterable[int], fit: PowerLawFit, reps: int, seed: int
) -> float:
    """Semi-parametric bootstrap goodness-of-fit p-value.

    Each replicate resamples the head empirically and the tail from the
    fitted law, refits from scratch, and counts as evidence against the
    model when its KS distance exceeds the observed one.  Replicate r uses
    seed + r, so the result does not depend on scheduling order.
    """
    if reps < 100:
        raise ValueError(f"reps must be at least 100, got {reps}")
    x = _usable(degrees)
    n = x.size
    head = x[x < fit.xmin]
    p_tail = (x >= fit.xmin).sum() / n
    exceed = 0
    for r in range(reps):
        rng = np.random.default_rng(seed + r)
        in_tail = rng.random(n) < p_tail
        n_tail = int(in_tail.sum())
        parts = []
        if n_tail:
            parts.append(_sample_with_rng(fit.alpha, fit.xmin, n_tail, rng))
        if n - n_tail:
            parts.append(rng.choice(head, size=n - n_tail, replace=True))
        synth = np.concatenate(parts)
        try:
            ks_r = fit_discrete_powerlaw(synth).ks
        except ValueError:
            exceed += 1  # unfittable replicate: treat as worse than observed
            continue
        if ks_r > fit.ks:
            exceed += 1
    return exceed / reps
