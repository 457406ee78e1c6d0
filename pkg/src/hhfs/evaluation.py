"""Wrapper fitness: 1-nearest-neighbor accuracy under repeated stratified CV.

The supervisor judges a mask by how well a 1NN classifier does when it
only sees the selected features. Distances are squared Euclidean over the
selected columns (same argmin as Euclidean, cheaper); 1NN ties go to the
lowest training-row index so evaluation is fully deterministic. The empty
mask scores 0.0 without running the classifier.

Repeating the k-fold split ``repeats`` times with seeds base_seed,
base_seed+1, ... and averaging gives the "r x k fold CV" protocols used
for reporting; searches typically run with repeats=1 for speed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist

from .dataset import Dataset, stratified_folds
from .mask import FeatureMask


@dataclass(frozen=True)
class CvProtocol:
    """Cross-validation protocol: k folds, repeated ``repeats`` times."""

    folds: int = 10
    repeats: int = 1
    base_seed: int = 0

    def __post_init__(self):
        if self.folds < 2:
            raise ValueError("need at least 2 folds")
        if self.repeats < 1:
            raise ValueError("need at least 1 repeat")

    def label(self) -> str:
        return f"{self.repeats}x{self.folds}"


def predict_1nn(train_features: np.ndarray, train_labels: np.ndarray,
                query: np.ndarray, mask: FeatureMask) -> int:
    """Label of the training instance closest to ``query`` on the selected
    features; ties break toward the smallest training-row index."""
    if train_features.shape[0] == 0:
        raise ValueError("empty training set")
    idx = mask.selected_indices()
    if idx.size == 0:
        raise ValueError("mask selects no features")
    diffs = train_features[:, idx] - np.asarray(query, dtype=np.float64)[idx]
    dists = np.einsum("ij,ij->i", diffs, diffs)
    return int(train_labels[int(np.argmin(dists))])


def cv_accuracy(d: Dataset, mask: FeatureMask, proto: CvProtocol) -> float:
    """Mean 1NN accuracy over ``proto.repeats`` stratified k-fold splits.

    Deterministic for fixed inputs: repeat r uses fold seed
    ``base_seed + r``. Equals the mean of the single-repeat values for
    those seeds, bitwise. An empty mask returns 0.0.
    """
    if mask.n != d.n_features:
        raise ValueError(
            f"mask over {mask.n} features does not match dataset with {d.n_features}")
    idx = mask.selected_indices()
    if idx.size == 0:
        return 0.0
    Xs = d.features[:, idx]
    dists = cdist(Xs, Xs, "sqeuclidean")
    accs = []
    for r in range(proto.repeats):
        fa = stratified_folds(d, proto.folds, proto.base_seed + r)
        correct = 0
        for fold in range(proto.folds):
            test = fa.test_indices(fold)
            if test.size == 0:
                continue
            train = fa.train_indices(fold)
            nn = np.argmin(dists[np.ix_(test, train)], axis=1)
            correct += int(np.sum(d.labels[train[nn]] == d.labels[test]))
        accs.append(correct / d.n_instances)
    return sum(accs) / len(accs)


class FitnessEvaluator:
    """Memoizing fitness oracle for a fixed dataset and protocol.

    The cache key is the raw bit pattern, so a hit returns the stored
    accuracy with zero classification work. ``computations`` counts actual
    CV evaluations and ``hits`` counts cache returns; with the cache
    disabled the numeric results are identical, just recomputed.
    """

    def __init__(self, dataset: Dataset, protocol: CvProtocol,
                 cache_enabled: bool = True):
        self.dataset = dataset
        self.protocol = protocol
        self.cache_enabled = cache_enabled
        self._cache: dict[bytes, float] = {}
        self.computations = 0
        self.hits = 0

    def fitness(self, mask: FeatureMask) -> float:
        key = mask.key()
        if self.cache_enabled:
            cached = self._cache.get(key)
            if cached is not None:
                self.hits += 1
                return cached
        value = cv_accuracy(self.dataset, mask, self.protocol)
        self.computations += 1
        if self.cache_enabled:
            self._cache[key] = value
        return value

    def __call__(self, mask: FeatureMask) -> float:
        return self.fitness(mask)
