"""Correlation-based filter merit for feature subsets.

Local searches score candidate masks with an intrinsic statistic instead
of running the classifier: the merit of a subset of k features is

    k * r_cf / sqrt(k + k*(k-1) * r_ff)

where r_cf is the mean absolute feature-class correlation over the
selected features and r_ff the mean absolute feature-feature correlation
over the selected pairs (Hall's CFS score). High merit means features
that track the class while not tracking each other.

All correlations are absolute values: a strongly negative correlate
predicts just as well as a positive one. Zero-variance vectors correlate
0 with everything by convention, which keeps constant columns harmless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .mask import FeatureMask


def pearson(x, y) -> float:
    """Sample Pearson correlation of two equal-length vectors.

    Returns 0.0 if either vector has zero variance. The result is clipped
    to [-1, 1] to absorb floating-point overshoot on exact relations.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.ndim != 1 or y.ndim != 1 or x.shape != y.shape:
        raise ValueError("pearson expects two 1-d vectors of equal length")
    if x.size < 2:
        raise ValueError("pearson needs at least 2 samples")
    # exact constancy check: a constant vector whose mean is not exactly
    # representable would otherwise leak a tiny nonzero variance
    if np.all(x == x[0]) or np.all(y == y[0]):
        return 0.0
    xd = x - x.mean()
    yd = y - y.mean()
    sx = float(xd @ xd)
    sy = float(yd @ yd)
    if sx == 0.0 or sy == 0.0:
        return 0.0
    r = float(xd @ yd) / math.sqrt(sx * sy)
    return min(1.0, max(-1.0, r))


def class_correlation(feature, labels, class_count: int) -> float:
    """Absolute correlation between a feature and the class variable.

    Two classes: point-biserial magnitude |pearson(feature, 1{class==1})|.
    More classes: one-vs-rest indicator correlations averaged with the
    class frequencies as weights, the minimal Pearson-only extension.
    """
    feature = np.asarray(feature, dtype=np.float64)
    labels = np.asarray(labels)
    if class_count < 2:
        raise ValueError("need at least 2 classes")
    if class_count == 2:
        return abs(pearson(feature, (labels == 1).astype(np.float64)))
    n = labels.size
    total = 0.0
    for c in range(class_count):
        indicator = (labels == c).astype(np.float64)
        weight = indicator.sum() / n
        total += weight * abs(pearson(feature, indicator))
    return total


@dataclass(frozen=True)
class CorrelationCache:
    """Precomputed absolute correlations backing the subset merit.

    ``feature_feature`` is the symmetric N x N matrix of |pearson| between
    feature columns (diagonal 1, or 0 for constant columns);
    ``feature_class`` is the length-N vector of feature-class correlations.
    """

    feature_feature: np.ndarray
    feature_class: np.ndarray

    @property
    def n_features(self) -> int:
        return self.feature_class.size

    def __post_init__(self):
        ff, fc = self.feature_feature, self.feature_class
        if ff.shape != (fc.size, fc.size):
            raise ValueError("feature_feature must be N x N for N = len(feature_class)")
        ff.setflags(write=False)
        fc.setflags(write=False)


def build_cache(d) -> CorrelationCache:
    """Compute the correlation cache for a dataset, once.

    Feature-feature correlations come from one centered Gram matrix so the
    whole cache is O(N^2 * n) instead of per-pair passes.
    """
    X = d.features
    constant = np.all(X == X[0:1, :], axis=0)
    Xd = X - X.mean(axis=0)
    s = np.where(constant, 0.0, np.einsum("ij,ij->j", Xd, Xd))
    gram = Xd.T @ Xd
    denom = np.sqrt(np.outer(s, s))
    ff = np.where(denom > 0, gram / np.where(denom == 0, 1.0, denom), 0.0)
    ff = np.abs(np.clip(ff, -1.0, 1.0))
    ff[constant, :] = 0.0
    ff[:, constant] = 0.0
    np.fill_diagonal(ff, np.where(constant, 0.0, 1.0))
    fc = np.array([class_correlation(X[:, j], d.labels, d.class_count)
                   for j in range(d.n_features)])
    return CorrelationCache(feature_feature=ff, feature_class=fc)


def cfs_merit(mask: FeatureMask, cache: CorrelationCache) -> float:
    """Merit of the selected subset; 0.0 for the empty mask.

    With k selected features, sum_cf the selected feature-class
    correlations and sum_ff the selected off-diagonal feature-feature
    correlations (ordered pairs), the score is
    sum_cf / sqrt(k + sum_ff), algebraically equal to the k*r_cf form.
    The denominator is at least sqrt(k), so the score is always finite.
    """
    if mask.n != cache.n_features:
        raise ValueError(
            f"mask over {mask.n} features does not match cache of {cache.n_features}")
    idx = mask.selected_indices()
    k = idx.size
    if k == 0:
        return 0.0
    sum_cf = float(cache.feature_class[idx].sum())
    sub = cache.feature_feature[np.ix_(idx, idx)]
    sum_ff = float(sub.sum()) - float(np.trace(sub))
    return sum_cf / math.sqrt(k + sum_ff)


def dump_cache_csv(cache: CorrelationCache, path) -> None:
    """Write the cache as a diagnostic CSV: one row per feature, columns
    ``feature, class_corr, ff_0 .. ff_{N-1}``."""
    n = cache.n_features
    with open(path, "w") as fh:
        fh.write("feature,class_corr," + ",".join(f"ff_{j}" for j in range(n)) + "\n")
        for i in range(n):
            row = ",".join(repr(v) for v in cache.feature_feature[i])
            fh.write(f"{i},{cache.feature_class[i]!r},{row}\n")
