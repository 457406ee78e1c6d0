"""Shared fixtures: synthetic datasets, hand-built caches, scripted RNGs,
and independent oracle implementations the tests check the engine against.

The oracles are deliberately naive (two-pass formulas, per-query loops,
exhaustive neighborhood enumeration) and never share code with the paths
they verify.
"""

from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from hhfs.correlation import CorrelationCache
from hhfs.dataset import Dataset, min_max_normalize
from hhfs.mask import FeatureMask


def synthetic_dataset(n_instances=60, n_features=12, n_informative=4,
                      class_count=2, seed=0, name="synthetic") -> Dataset:
    """Gaussian two-blob data: the first features carry class signal with
    decreasing strength, one is a noisy copy of feature 0, the rest are
    noise. Normalized to [0,1]."""
    rng = np.random.default_rng(seed)
    labels = np.arange(n_instances) % class_count
    labels = rng.permutation(labels)
    X = rng.normal(size=(n_instances, n_features))
    for j in range(min(n_informative, n_features)):
        X[:, j] += labels * (2.0 - 1.5 * j / max(1, n_informative))
    if n_features > n_informative + 1:
        X[:, n_informative] = X[:, 0] + 0.25 * rng.normal(size=n_instances)
    return min_max_normalize(Dataset.from_arrays(name, X, labels))


def random_cache(n_features: int, seed: int = 0) -> CorrelationCache:
    """Random but structurally valid correlation cache."""
    rng = np.random.default_rng(seed)
    a = rng.random((n_features, n_features))
    ff = (a + a.T) / 2.0
    np.fill_diagonal(ff, 1.0)
    fc = rng.random(n_features)
    return CorrelationCache(feature_feature=ff, feature_class=fc)


def cache_from_values(fc, ff) -> CorrelationCache:
    """Cache with exactly the given feature-class vector and
    feature-feature matrix (diagonal filled with 1)."""
    fc = np.asarray(fc, dtype=np.float64)
    ff = np.asarray(ff, dtype=np.float64)
    np.fill_diagonal(ff, 1.0)
    return CorrelationCache(feature_feature=ff, feature_class=fc)


def random_mask(n: int, rng: np.random.Generator) -> FeatureMask:
    bits = rng.integers(0, 2, size=n, dtype=np.uint8)
    if not bits.any():
        bits[int(rng.integers(n))] = 1
    return FeatureMask(bits)


# ---------------------------------------------------------------- oracles

def pearson_twopass(x, y) -> float:
    """Definitional Pearson: means first, then covariance over the product
    of standard deviations. Plain Python arithmetic."""
    n = len(x)
    mx = sum(x) / n
    my = sum(y) / n
    cov = sum((a - mx) * (b - my) for a, b in zip(x, y))
    vx = sum((a - mx) ** 2 for a in x)
    vy = sum((b - my) ** 2 for b in y)
    if vx == 0 or vy == 0:
        return 0.0
    return cov / math.sqrt(vx * vy)


def merit_from_cache_direct(bits, cache: CorrelationCache) -> float:
    """Hall's formula evaluated literally from cache entries."""
    sel = [i for i, b in enumerate(bits) if b]
    k = len(sel)
    if k == 0:
        return 0.0
    r_cf = sum(cache.feature_class[i] for i in sel) / k
    if k == 1:
        r_ff = 0.0
    else:
        pairs = list(itertools.combinations(sel, 2))
        r_ff = sum(cache.feature_feature[i][j] for i, j in pairs) / len(pairs)
    return k * r_cf / math.sqrt(k + k * (k - 1) * r_ff)


def merit_from_data(bits, dataset: Dataset) -> float:
    """Cache-free merit: recompute every needed correlation from the raw
    columns with the two-pass Pearson, then apply Hall's formula."""
    from hhfs.correlation import class_correlation

    sel = [i for i, b in enumerate(bits) if b]
    k = len(sel)
    if k == 0:
        return 0.0
    X = dataset.features
    r_cf = sum(class_correlation(X[:, i], dataset.labels, dataset.class_count)
               for i in sel) / k
    if k == 1:
        r_ff = 0.0
    else:
        pairs = list(itertools.combinations(sel, 2))
        r_ff = sum(abs(pearson_twopass(X[:, i], X[:, j])) for i, j in pairs) / len(pairs)
    return k * r_cf / math.sqrt(k + k * (k - 1) * r_ff)


def best_flip_oracle(mask: FeatureMask, cache: CorrelationCache,
                     positions) -> tuple[int, float]:
    """Exhaustive Hamming-1 argmax over the given flip positions using the
    public merit function; ties resolved toward the lowest index."""
    from hhfs.correlation import cfs_merit

    best_bit, best_merit = -1, -np.inf
    for b in positions:
        m = cfs_merit(mask.flip(int(b)), cache)
        if m > best_merit:
            best_bit, best_merit = int(b), m
    return best_bit, best_merit


def exhaustive_best_mask(cache: CorrelationCache) -> tuple[FeatureMask, float]:
    """Global merit maximum by enumerating all 2^N masks (N small)."""
    from hhfs.correlation import cfs_merit

    n = cache.n_features
    best_mask, best_merit = FeatureMask.zeros(n), 0.0
    for word in range(1, 2 ** n):
        bits = np.array([(word >> i) & 1 for i in range(n)], dtype=np.uint8)
        mask = FeatureMask(bits)
        m = cfs_merit(mask, cache)
        if m > best_merit:
            best_mask, best_merit = mask, m
    return best_mask, best_merit


def cv_accuracy_bruteforce(dataset: Dataset, mask: FeatureMask, folds: int,
                           repeats: int, base_seed: int) -> float:
    """Per-query reimplementation of repeated stratified-CV 1NN accuracy
    built on predict_1nn directly."""
    from hhfs.dataset import stratified_folds
    from hhfs.evaluation import predict_1nn

    accs = []
    for r in range(repeats):
        fa = stratified_folds(dataset, folds, base_seed + r)
        correct = 0
        for fold in range(folds):
            test = fa.test_indices(fold)
            train = fa.train_indices(fold)
            for t in test:
                label = predict_1nn(dataset.features[train],
                                    dataset.labels[train],
                                    dataset.features[t], mask)
                correct += int(label == dataset.labels[t])
        accs.append(correct / dataset.n_instances)
    return sum(accs) / len(accs)


# ------------------------------------------------------------- stub RNG

class StubRng:
    """Scripted stand-in for numpy's Generator: pops pre-seeded draws.

    ``integers`` entries are returned for integers(); ``randoms`` entries
    for random() (a scalar, or a sequence when random(size) is called);
    ``permutations`` entries for permutation().
    """

    def __init__(self, integers=(), randoms=(), permutations=()):
        self._integers = list(integers)
        self._randoms = list(randoms)
        self._permutations = list(permutations)

    def integers(self, low, high=None, size=None, dtype=None):
        value = self._integers.pop(0)
        if size is not None:
            return np.asarray(value)
        return value

    def random(self, size=None):
        value = self._randoms.pop(0)
        if size is not None:
            return np.asarray(value, dtype=np.float64)
        return float(value)

    def permutation(self, n):
        return np.asarray(self._permutations.pop(0))


@pytest.fixture
def small_dataset() -> Dataset:
    return synthetic_dataset(n_instances=40, n_features=8, n_informative=3, seed=3)
