"""One full supervisor run, inspected generation by generation.

The GA evolves chromosomes of heuristic ids, not feature masks. Each
chromosome is replayed on a snapshot of the incumbent mask; the best
resulting mask replaces the incumbent only when its 1NN cross-validated
accuracy strictly improves, so the incumbent trace below never dips.

Run from the repository root: python3 demos/04_supervisor_run.py
"""

import numpy as np

from hhfs.dataset import Dataset, min_max_normalize
from hhfs.evaluation import CvProtocol
from hhfs.experiment import full_feature_baseline
from hhfs.supervisor import SupervisorConfig, run_supervisor

rng = np.random.default_rng(23)
n, N = 150, 16
labels = rng.permutation(np.array([0, 1] * (n // 2)))
X = rng.normal(size=(n, N))
for j in range(5):
    X[:, j] += labels * (1.8 - 0.3 * j)      # informative columns
X[:, 5] = X[:, 0] + 0.3 * rng.normal(size=n)  # redundant twin
d = min_max_normalize(Dataset.from_arrays("demo", X, labels))

config = SupervisorConfig(population_size=12, generations=25, seed=4)
search = CvProtocol(folds=10, repeats=1, base_seed=4)
reporting = {"10x10": CvProtocol(folds=10, repeats=10, base_seed=0)}

result = run_supervisor(d, config, search, reporting)

print(f"initial solution: m={result.initial_m}, fitness {result.initial_fitness:.4f}")
print("generation trace (incumbent advances only on strict improvement):")
for rec in result.history:
    if rec.generation % 5 == 0 or rec.generation == len(result.history) - 1:
        print(f"  gen {rec.generation:>3}  best-chromosome {rec.best_chromosome_fitness:.4f}  "
              f"incumbent {rec.incumbent_fitness:.4f}  m={rec.incumbent_m}")

baseline = full_feature_baseline(d, reporting["10x10"])
print(f"\nfinal mask {result.mask.to01()}  (m={result.m} of {N})")
print(f"reported accuracy (10x10-fold): {result.reported['10x10']:.4f}")
print(f"all-features baseline:          {baseline:.4f}")

print("\nwhich heuristics did the work? (invocations / strict merit improvements)")
for name, counts in result.llh_stats.as_dict().items():
    if counts["improvements"]:
        print(f"  {name:<11} {counts['invocations']:>5} / {counts['improvements']}")
print(f"\nfitness evaluations: {result.fitness_computations} computed, "
      f"{result.fitness_cache_hits} served from the mask cache")
