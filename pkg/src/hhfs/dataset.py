"""Tabular dataset loading, normalization, and stratified CV fold assignment.

Datasets arrive as numeric CSV files (UCI style) with one label column.
Loading densifies labels to 0..class_count-1 in order of first appearance
and mean-imputes missing feature cells, so everything downstream sees a
clean float matrix. Datasets and fold assignments are immutable after
construction and safe to share across concurrent evaluators.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np


class DatasetError(ValueError):
    """Raised for malformed dataset files or invalid fold requests."""


@dataclass(frozen=True)
class Dataset:
    """Numeric instance matrix plus dense integer class labels.

    ``features`` has shape (n_instances, n_features); ``labels`` holds
    integers 0..class_count-1 with every class occurring at least once.
    """

    name: str
    features: np.ndarray
    labels: np.ndarray
    n_features: int
    class_count: int

    @property
    def n_instances(self) -> int:
        return self.features.shape[0]

    @classmethod
    def from_arrays(cls, name: str, features, labels) -> "Dataset":
        """Build a validated Dataset; labels of any type are densified."""
        X = np.array(features, dtype=np.float64)
        if X.ndim != 2 or X.shape[0] == 0 or X.shape[1] == 0:
            raise DatasetError("features must be a non-empty 2-d matrix")
        if not np.isfinite(X).all():
            raise DatasetError("features contain non-finite values")
        raw = list(labels)
        if len(raw) != X.shape[0]:
            raise DatasetError("label count does not match instance count")
        seen: dict = {}
        dense = np.empty(len(raw), dtype=np.int64)
        for i, value in enumerate(raw):
            if value not in seen:
                seen[value] = len(seen)
            dense[i] = seen[value]
        if len(seen) < 2:
            raise DatasetError(f"need at least 2 classes, found {len(seen)}")
        if len(seen) > X.shape[0]:
            raise DatasetError("more classes than instances")
        X.setflags(write=False)
        dense.setflags(write=False)
        return cls(name=name, features=X, labels=dense,
                   n_features=X.shape[1], class_count=len(seen))


@dataclass(frozen=True)
class FoldAssignment:
    """Stratified partition of instances into k folds.

    ``fold_of[i]`` is the fold of instance i. Per class, fold counts
    differ by at most one.
    """

    fold_of: np.ndarray
    k: int
    seed: int

    def test_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(self.fold_of == fold)

    def train_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(self.fold_of != fold)


def load_csv(path, label_column: int | str = -1, has_header: bool = False,
             missing_token: str = "?", name: str | None = None) -> Dataset:
    """Load a numeric CSV into a Dataset.

    ``label_column`` is a column index (negative allowed) or, with a
    header, a column name. Feature cells equal to ``missing_token`` are
    imputed with the column mean over the non-missing cells; any other
    non-numeric feature cell is an error. Labels are densified to
    0..class_count-1 in order of first appearance.
    """
    path = Path(path)
    with open(path, newline="") as fh:
        rows = [row for row in csv.reader(fh) if row and any(c.strip() for c in row)]
    if not rows:
        raise DatasetError(f"{path}: empty file")

    header = None
    if has_header:
        header = [c.strip() for c in rows[0]]
        rows = rows[1:]
        if not rows:
            raise DatasetError(f"{path}: header but no data rows")

    ncols = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != ncols:
            raise DatasetError(
                f"{path}: row {i} has {len(row)} columns, expected {ncols}")
    if ncols < 2:
        raise DatasetError(f"{path}: need at least one feature and a label column")

    if isinstance(label_column, str):
        if header is None:
            raise DatasetError("label column given by name requires has_header=True")
        try:
            label_idx = header.index(label_column)
        except ValueError:
            raise DatasetError(f"{path}: no column named {label_column!r}") from None
    else:
        label_idx = label_column if label_column >= 0 else ncols + label_column
        if not 0 <= label_idx < ncols:
            raise DatasetError(f"{path}: label column {label_column} out of range")

    feature_cols = [j for j in range(ncols) if j != label_idx]
    X = np.empty((len(rows), len(feature_cols)), dtype=np.float64)
    labels = []
    for i, row in enumerate(rows):
        label = row[label_idx].strip()
        if not label or label == missing_token:
            raise DatasetError(f"{path}: row {i} has no label")
        labels.append(label)
        for jj, j in enumerate(feature_cols):
            cell = row[j].strip()
            if cell == missing_token or cell == "":
                X[i, jj] = np.nan
                continue
            try:
                X[i, jj] = float(cell)
            except ValueError:
                raise DatasetError(
                    f"{path}: non-numeric cell {cell!r} at row {i}, column {j}") from None

    # mean-impute missing cells, column by column
    for jj in range(X.shape[1]):
        col = X[:, jj]
        missing = np.isnan(col)
        if missing.any():
            observed = col[~missing]
            if observed.size == 0:
                raise DatasetError(
                    f"{path}: column {feature_cols[jj]} has no observed values to impute from")
            col[missing] = observed.mean()

    return Dataset.from_arrays(name or path.stem, X, labels)


def min_max_normalize(d: Dataset) -> Dataset:
    """Rescale every feature column linearly to [0, 1].

    Constant columns become all-zeros. Labels and shapes are unchanged.
    """
    X = d.features
    lo = X.min(axis=0)
    hi = X.max(axis=0)
    span = hi - lo
    safe = np.where(span == 0, 1.0, span)
    scaled = (X - lo) / safe
    scaled[:, span == 0] = 0.0
    return Dataset.from_arrays(d.name, scaled, d.labels)


def stratified_folds(d: Dataset, k: int, seed: int) -> FoldAssignment:
    """Assign instances to k folds, stratified by class, deterministically.

    Members of each class are shuffled with the seeded RNG and dealt
    round-robin over the folds, so per-class fold counts differ by at
    most one. Classes with fewer than k members simply cover fewer folds.
    """
    if k < 2:
        raise DatasetError(f"need at least 2 folds, got {k}")
    if k > d.n_instances:
        raise DatasetError(f"cannot split {d.n_instances} instances into {k} folds")
    rng = np.random.default_rng(seed)
    fold_of = np.empty(d.n_instances, dtype=np.int64)
    for c in range(d.class_count):
        members = np.flatnonzero(d.labels == c)
        members = rng.permutation(members)
        fold_of[members] = np.arange(members.size) % k
    fold_of.setflags(write=False)
    return FoldAssignment(fold_of=fold_of, k=k, seed=seed)


def fold_class_counts(d: Dataset, fa: FoldAssignment) -> np.ndarray:
    """(k, class_count) matrix of per-fold class counts, for diagnostics."""
    counts = np.zeros((fa.k, d.class_count), dtype=np.int64)
    for fold, label in zip(fa.fold_of, d.labels):
        counts[fold, label] += 1
    return counts
