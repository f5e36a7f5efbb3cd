"""Distribution analysis for per-capita debt and the debt-to-GDP ratio.

Covers histogram probability densities, maximum-likelihood fits of the
two-parameter Gamma density p(x) ~ x**(k-1) * exp(-x/r_c), Zipf
rank-frequency exponents, and the duality between the Zipf exponent zeta
and the pdf tail exponent 1 + 1/zeta.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.special import gammaincc

from .errors import (
    DegenerateSample,
    EmptySample,
    NoConvergence,
    NonFiniteValue,
    NonPositiveInWindow,
    NonPositiveSample,
    TooFewPoints,
    WindowTooSmall,
)
from .regress import ols

EULER_GAMMA = 0.5772156649015329

_NEWTON_RTOL = 1e-10
_NEWTON_MAX_ITER = 100


@dataclass(eq=False)
class HistogramPdf:
    """Normalized histogram density: integral density*width == 1."""

    edges: np.ndarray
    density: np.ndarray
    n: int

    def widths(self) -> np.ndarray:
        return np.diff(self.edges)


@dataclass(frozen=True)
class GammaFit:
    """MLE of the Gamma shape k and scale r_c; k*r_c equals the sample mean."""

    k: float
    r_c: float
    log_likelihood: float
    n: int

    def tail_probability(self, threshold: float) -> float:
        """P(X > threshold) under the fitted Gamma (regularized upper tail)."""
        if threshold <= 0:
            return 1.0
        return float(gammaincc(self.k, threshold / self.r_c))


@dataclass(frozen=True)
class ZipfFit:
    """Rank-frequency power-law fit value(rank) ~ rank**(-zeta).

    implied_pdf_exponent = 1 + 1/zeta is the corresponding density tail
    exponent.
    """

    zeta: float
    rank_window: tuple[int, int]
    r_squared: float
    implied_pdf_exponent: float


def histogram_pdf(samples: Sequence[float],
                  bins: "int | Sequence[float]" = 50) -> HistogramPdf:
    """Histogram density of nonnegative samples, normalized to integrate to 1.

    Integer ``bins`` means that many equal-width bins over [0, max(samples)];
    an explicit ascending edge array overrides. Samples outside explicit
    edges are not counted (n reflects the counted samples).
    """
    arr = np.asarray(samples, dtype=float)
    if arr.size == 0:
        raise EmptySample("histogram needs at least one sample")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteValue("samples must be finite")
    if np.any(arr < 0):
        raise ValueError("samples must be >= 0")
    if np.isscalar(bins) or isinstance(bins, (int, np.integer)):
        n_bins = int(bins)
        if n_bins < 1:
            raise ValueError(f"bins must be >= 1, got {bins!r}")
        top = float(arr.max())
        if top == 0.0:
            top = 1.0  # all-zero sample: one unit-width bin carries all mass
        edges = np.linspace(0.0, top, n_bins + 1)
    else:
        edges = np.asarray(bins, dtype=float)
        if edges.ndim != 1 or edges.size < 2 or np.any(np.diff(edges) <= 0):
            raise ValueError("explicit edges must be ascending with >= 2 entries")
    counts, edges = np.histogram(arr, bins=edges)
    n = int(counts.sum())
    if n == 0:
        raise EmptySample("no sample falls inside the given edges")
    density = counts / n / np.diff(edges)
    return HistogramPdf(edges=edges, density=density, n=n)


def digamma(x: float) -> float:
    """Digamma psi(x) for x > 0.

    Shifts the argument with psi(x+1) = psi(x) + 1/x until x > 6, then uses
    the asymptotic series truncated after the x**-14 term, which keeps the
    absolute error below 1e-12 on that range.
    """
    if not x > 0:
        raise ValueError(f"digamma defined here for x > 0 only, got {x!r}")
    acc = 0.0
    while x <= 6.0:
        acc -= 1.0 / x
        x += 1.0
    inv = 1.0 / x
    t = inv * inv
    series = t * (1.0 / 12.0 - t * (1.0 / 120.0 - t * (1.0 / 252.0 - t * (
        1.0 / 240.0 - t * (1.0 / 132.0 - t * (691.0 / 32760.0 - t / 12.0))))))
    return acc + math.log(x) - 0.5 * inv - series


def trigamma(x: float) -> float:
    """Trigamma psi'(x) for x > 0, by the same shift-then-series scheme."""
    if not x > 0:
        raise ValueError(f"trigamma defined here for x > 0 only, got {x!r}")
    acc = 0.0
    while x <= 6.0:
        acc += 1.0 / (x * x)
        x += 1.0
    inv = 1.0 / x
    t = inv * inv
    series = inv * (1.0 + 0.5 * inv + t * (1.0 / 6.0 - t * (1.0 / 30.0 - t * (
        1.0 / 42.0 - t * (1.0 / 30.0 - t * (5.0 / 66.0 - t * (
            691.0 / 2730.0 - t * (7.0 / 6.0))))))))
    return acc + series


def _gamma_log_likelihood(k: float, r_c: float, total: float,
                          total_log: float, n: int) -> float:
    return ((k - 1.0) * total_log - total / r_c
            - n * math.lgamma(k) - n * k * math.log(r_c))


def fit_gamma_mle(samples: Sequence[float]) -> GammaFit:
    """Maximum-likelihood Gamma fit via Newton-Raphson on the shape k.

    Solves log(k) - psi(k) = log(mean) - mean(log samples) starting from the
    moment estimate k0 = mean**2/variance, then sets r_c = mean/k. Converged
    when |delta k| < 1e-10 * k within 100 iterations.
    """
    arr = np.asarray(samples, dtype=float)
    if arr.size == 0:
        raise EmptySample("gamma fit needs samples")
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0):
        raise NonPositiveSample("all samples must be finite and > 0")
    n = int(arr.size)
    if n < 2:
        raise DegenerateSample("gamma fit needs at least two samples")
    mean = float(arr.mean())
    log_arr = np.log(arr)
    mean_log = float(log_arr.mean())
    s = math.log(mean) - mean_log  # > 0 by Jensen unless the sample is constant
    variance = float(arr.var())
    if variance == 0.0 or s <= 0.0:
        raise DegenerateSample("zero-variance sample drives the shape to infinity")
    k = mean * mean / variance
    for _ in range(_NEWTON_MAX_ITER):
        f = math.log(k) - digamma(k) - s
        f_prime = 1.0 / k - trigamma(k)
        k_next = k - f / f_prime
        if k_next <= 0:
            k_next = k / 2.0  # safeguard: the root is positive
        if abs(k_next - k) < _NEWTON_RTOL * k:
            k = k_next
            break
        k = k_next
    else:
        raise NoConvergence("gamma shape Newton iteration did not converge",
                            last_iterate=k)
    r_c = mean / k
    log_likelihood = _gamma_log_likelihood(k, r_c, float(arr.sum()),
                                           float(log_arr.sum()), n)
    return GammaFit(k=k, r_c=r_c, log_likelihood=log_likelihood, n=n)


def zipf_ranks(samples: Sequence[float]) -> list[tuple[int, float]]:
    """(rank, value) pairs with values sorted descending, rank starting at 1.

    Ties keep their input order (stable sort).
    """
    values = [float(v) for v in samples]
    if not values:
        raise EmptySample("rank plot needs at least one sample")
    ordered = sorted(values, key=lambda v: -v)
    return [(rank, value) for rank, value in enumerate(ordered, start=1)]


def fit_zipf_exponent(ranked: Sequence[tuple[int, float]],
                      rank_window: "tuple[int, int] | None" = None) -> ZipfFit:
    """OLS of log value on log rank over ranks [r_lo, r_hi]; zeta = -slope."""
    if not ranked:
        raise EmptySample("no ranked values")
    if rank_window is None:
        rank_window = (1, max(r for r, _ in ranked))
    r_lo, r_hi = int(rank_window[0]), int(rank_window[1])
    if r_lo < 1 or r_hi < r_lo:
        raise ValueError(f"bad rank window ({r_lo}, {r_hi})")
    window = [(r, v) for r, v in ranked if r_lo <= r <= r_hi]
    if len(window) < 3:
        raise WindowTooSmall(
            f"window [{r_lo}, {r_hi}] holds {len(window)} ranks; need >= 3")
    if any(v <= 0 for _, v in window):
        raise NonPositiveInWindow(
            f"window [{r_lo}, {r_hi}] contains values <= 0")
    log_rank = np.log([r for r, _ in window])
    log_value = np.log([v for _, v in window])
    fit = ols(log_rank, log_value)
    zeta = -fit.slope
    if zeta <= 0:
        raise DegenerateSample(
            "values do not decay across the rank window; zeta would be <= 0")
    return ZipfFit(zeta=zeta, rank_window=(r_lo, r_hi),
                   r_squared=fit.r_squared,
                   implied_pdf_exponent=1.0 + 1.0 / zeta)


def summary_stats(samples: Sequence[float]) -> tuple[float, float, int]:
    """Arithmetic mean, population standard deviation, and count."""
    arr = np.asarray(samples, dtype=float)
    if arr.size < 2:
        raise TooFewPoints(f"need at least 2 samples, got {arr.size}")
    return float(arr.mean()), float(arr.std()), int(arr.size)


def write_histogram_csv(hist: HistogramPdf, path,
                        header_comment: "str | None" = None) -> None:
    with open(path, "w", newline="", encoding="utf-8") as f:
        if header_comment:
            f.write(f"# {header_comment}\n")
        writer = csv.writer(f)
        writer.writerow(["bin_left", "bin_right", "density"])
        for left, right, rho in zip(hist.edges[:-1], hist.edges[1:], hist.density):
            writer.writerow([repr(float(left)), repr(float(right)),
                             repr(float(rho))])


def write_ranks_csv(ranked: Iterable[tuple[int, float]], path,
                    header_comment: "str | None" = None) -> None:
    with open(path, "w", newline="", encoding="utf-8") as f:
        if header_comment:
            f.write(f"# {header_comment}\n")
        writer = csv.writer(f)
        writer.writerow(["rank", "value"])
        for rank, value in ranked:
            writer.writerow([rank, repr(value)])


def gamma_fit_dict(fit: GammaFit) -> dict:
    return {"k": fit.k, "r_c": fit.r_c,
            "log_likelihood": fit.log_likelihood, "n": fit.n}


def zipf_fit_dict(fit: ZipfFit) -> dict:
    return {"zeta": fit.zeta, "rank_window": list(fit.rank_window),
            "r_squared": fit.r_squared,
            "implied_pdf_exponent": fit.implied_pdf_exponent}
