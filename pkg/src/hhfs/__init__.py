"""Hyper-heuristic feature selection.

A genetic-algorithm supervisor evolves sequences of 16 low-level
heuristics (bit-mask local searches). The heuristics improve a binary
feature mask under a correlation filter merit; the supervisor accepts
masks by 1-nearest-neighbor cross-validated accuracy. The experiment
harness reproduces multi-run UCI benchmarks with seeded determinism.
"""

from .correlation import (CorrelationCache, build_cache, cfs_merit,
                          class_correlation, pearson)
from .dataset import (Dataset, DatasetError, FoldAssignment, load_csv,
                      min_max_normalize, stratified_folds)
from .evaluation import CvProtocol, FitnessEvaluator, cv_accuracy, predict_1nn
from .experiment import (DatasetConfig, ExperimentSpec, full_feature_baseline,
                         load_config, render_comparison, run_experiment,
                         verify_report)
from .llh import CATALOG, LlhContext, LlhInfo
from .llh import apply as apply_llh
from .mask import FeatureMask
from .supervisor import (Chromosome, SupervisorConfig, SupervisorResult,
                         evaluate_chromosome, mutate_chromosome,
                         roulette_select, run_supervisor,
                         single_point_crossover)

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "Chromosome",
    "CorrelationCache",
    "CvProtocol",
    "Dataset",
    "DatasetConfig",
    "DatasetError",
    "ExperimentSpec",
    "FeatureMask",
    "FitnessEvaluator",
    "FoldAssignment",
    "LlhContext",
    "LlhInfo",
    "SupervisorConfig",
    "SupervisorResult",
    "apply_llh",
    "build_cache",
    "cfs_merit",
    "class_correlation",
    "cv_accuracy",
    "evaluate_chromosome",
    "full_feature_baseline",
    "load_config",
    "load_csv",
    "min_max_normalize",
    "mutate_chromosome",
    "pearson",
    "predict_1nn",
    "render_comparison",
    "roulette_select",
    "run_experiment",
    "run_supervisor",
    "single_point_crossover",
    "stratified_folds",
    "verify_report",
]
