"""Published benchmark numbers used as comparison reference constants.

These are reported results, shipped as data and never recomputed: the
hyper-heuristic selector's published best/mean accuracies (fractions) and
subset sizes over 10 runs on five UCI datasets, and the accuracies
(percent) of three published selectors used as comparison baselines:
DF-TS3-1NN (Tahir & Smith, Pattern Recognition Letters 31, 2010), DMIFS
(Liu et al., Pattern Recognition 42, 2009) and BCS-2 (Sun & Zhang,
Pattern Recognition 43, 2010).

Protocol labels are "<repeats>x<folds>" cross-validation. Subset-size
footnote: for spectf the 5x10 and 10x10 rows report the same best
accuracy with different best-run sizes (22 vs 19); both are kept as
published.
"""

from __future__ import annotations

# dataset -> protocol label -> {best, best_m, mean, mean_m}; accuracies are fractions
HHFS_REFERENCE: dict[str, dict[str, dict[str, float]]] = {
    "dermatology": {
        "10x10": {"best": 0.9817, "best_m": 29, "mean": 0.9771, "mean_m": 27.0},
        "5x10": {"best": 0.9820, "best_m": 29, "mean": 0.9774, "mean_m": 27.0},
    },
    "spectf": {
        "10x10": {"best": 0.8934, "best_m": 19, "mean": 0.8823, "mean_m": 22.8},
        "5x10": {"best": 0.8934, "best_m": 22, "mean": 0.8821, "mean_m": 22.8},
    },
    "ionosphere": {
        "10x10": {"best": 0.9433, "best_m": 12, "mean": 0.9305, "mean_m": 14.5},
        "5x10": {"best": 0.9419, "best_m": 12, "mean": 0.9303, "mean_m": 14.5},
    },
    "sonar": {
        "10x10": {"best": 0.9279, "best_m": 26, "mean": 0.9034, "mean_m": 31.9},
        "5x10": {"best": 0.9212, "best_m": 24, "mean": 0.9063, "mean_m": 31.9},
    },
    "musk": {
        "10x10": {"best": 0.9519, "best_m": 79, "mean": 0.9407, "mean_m": 83.3},
        "5x10": {"best": 0.9534, "best_m": 79, "mean": 0.9407, "mean_m": 83.3},
    },
}

# dataset -> list of (method, protocol label, accuracy percent)
BASELINE_REFERENCE: dict[str, list[tuple[str, str, float]]] = {
    "dermatology": [
        ("DF-TS3-1NN+1NN", "5x10", 97.28),
        ("DMIFS+1NN", "10x10", 92.18),
    ],
    "spectf": [
        ("DF-TS3-1NN+1NN", "5x10", 83.51),
        ("DMIFS+1NN", "10x10", 84.79),
    ],
    "ionosphere": [
        ("BCS-2+1NN", "10x10", 93.3),
        ("DF-TS3-1NN+1NN", "5x10", 95.01),
    ],
    "sonar": [
        ("BCS-2+1NN", "10x10", 89.5),
        ("DF-TS3-1NN+1NN", "5x10", 90.63),
    ],
    "musk": [
        ("DF-TS3-1NN+1NN", "5x10", 91.65),
        ("DMIFS+1NN", "10x10", 87.34),
    ],
}
