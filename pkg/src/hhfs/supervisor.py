"""GA supervisor: evolves sequences of low-level heuristic ids.

The supervisor is problem-blind. Its chromosomes do not encode feature
masks; they encode which heuristics to call and in what order. Evaluating
a chromosome replays its heuristic sequence on a snapshot of the incumbent
mask S and scores the final mask with the 1NN wrapper fitness. The
incumbent advances only on strict fitness improvement, so its fitness
history is non-decreasing by construction.

Reproducibility contract: all randomness derives from the run seed. The
heuristic stream of chromosome i in generation g is seeded by
(seed, 1, g, i), so evaluations are order-independent within a generation
and the whole run is bit-exact replayable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import llh
from .correlation import CorrelationCache, build_cache, cfs_merit
from .dataset import Dataset
from .evaluation import CvProtocol, FitnessEvaluator, cv_accuracy
from .llh import NUM_LLH, LlhContext
from .mask import FeatureMask


@dataclass
class Chromosome:
    """Fixed-length sequence of heuristic ids (values 1..16, repeats
    allowed) plus the accuracy from its last evaluation."""

    genes: np.ndarray
    fitness: float | None = None

    def __post_init__(self):
        genes = np.asarray(self.genes, dtype=np.int64)
        if genes.ndim != 1 or genes.size == 0:
            raise ValueError("genes must be a non-empty 1-d sequence")
        if genes.min() < 1 or genes.max() > NUM_LLH:
            raise ValueError(f"gene values must lie in 1..{NUM_LLH}")
        self.genes = genes

    def copy(self) -> "Chromosome":
        return Chromosome(self.genes.copy(), self.fitness)


@dataclass(frozen=True)
class SupervisorConfig:
    """Knobs of the supervisor GA.

    Defaults follow the benchmark setup: 200 generations, crossover 0.7,
    mutation 0.1, chromosomes of length 16. Population size 30 and one
    elite are engine choices; set elitism=0 for a pure generational GA.
    """

    population_size: int = 30
    generations: int = 200
    p_crossover: float = 0.7
    p_mutation: float = 0.1
    nllh: int = NUM_LLH
    elitism: int = 1
    mutn_rate: float = 0.1
    seed: int = 0

    def __post_init__(self):
        if self.population_size < 2:
            raise ValueError("population size must be at least 2")
        if self.generations < 1:
            raise ValueError("need at least 1 generation")
        for p, what in [(self.p_crossover, "p_crossover"), (self.p_mutation, "p_mutation")]:
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{what} must lie in [0, 1]")
        if self.nllh < 1:
            raise ValueError("chromosomes need at least one gene")
        if not 0 <= self.elitism < self.population_size:
            raise ValueError("elitism must lie in 0..population_size-1")


@dataclass
class GenerationRecord:
    """One history row: the generation index, the best chromosome fitness
    seen in it, and the incumbent's fitness and subset size after it."""

    generation: int
    best_chromosome_fitness: float
    incumbent_fitness: float
    incumbent_m: int


@dataclass
class LlhStats:
    """Per-heuristic invocation and strict-merit-improvement counters."""

    invocations: np.ndarray = field(
        default_factory=lambda: np.zeros(NUM_LLH + 1, dtype=np.int64))
    improvements: np.ndarray = field(
        default_factory=lambda: np.zeros(NUM_LLH + 1, dtype=np.int64))

    def record(self, llh_id: int, merit_before: float, merit_after: float) -> None:
        self.invocations[llh_id] += 1
        if merit_after > merit_before:
            self.improvements[llh_id] += 1

    def as_dict(self) -> dict[str, dict[str, int]]:
        return {
            llh.CATALOG[i].name: {
                "invocations": int(self.invocations[i]),
                "improvements": int(self.improvements[i]),
            }
            for i in sorted(llh.CATALOG)
        }


@dataclass
class SupervisorResult:
    """Outcome of one supervisor run."""

    mask: FeatureMask
    search_fitness: float
    reported: dict[str, float]
    history: list[GenerationRecord]
    llh_stats: LlhStats
    seed: int
    initial_fitness: float
    initial_m: int
    fitness_computations: int
    fitness_cache_hits: int
    wall_time: float

    @property
    def m(self) -> int:
        return self.mask.selected_count()

    @property
    def improved(self) -> bool:
        """Whether the incumbent ever advanced past the initial solution."""
        return self.search_fitness > self.initial_fitness


def random_chromosome(nllh: int, rng: np.random.Generator) -> Chromosome:
    return Chromosome(rng.integers(1, NUM_LLH + 1, size=nllh))


def evaluate_chromosome(chromosome: Chromosome, incumbent: FeatureMask,
                        ctx: LlhContext, evaluator,
                        stats: LlhStats | None = None) -> tuple[FeatureMask, float]:
    """Apply the chromosome's heuristics left to right, each consuming the
    previous output, starting from the incumbent; score the final mask.

    The incumbent itself is never modified. The chromosome's fitness field
    is set to the returned accuracy.
    """
    mask = incumbent
    merit_before = cfs_merit(mask, ctx.cache) if stats is not None else 0.0
    for gene in chromosome.genes:
        out = llh.apply(int(gene), mask, ctx)
        if stats is not None:
            merit_after = cfs_merit(out, ctx.cache)
            stats.record(int(gene), merit_before, merit_after)
            merit_before = merit_after
        mask = out
    fit = float(evaluator(mask))
    chromosome.fitness = fit
    return mask, fit


def roulette_select(fitnesses, rng: np.random.Generator) -> int:
    """Index sampled with probability fitness_i / sum(fitness); uniform if
    every fitness is zero. Fitnesses must be non-negative."""
    fits = np.asarray(fitnesses, dtype=np.float64)
    if fits.size == 0:
        raise ValueError("cannot select from an empty population")
    if fits.min() < 0:
        raise ValueError("roulette selection needs non-negative fitnesses")
    total = float(fits.sum())
    if total == 0.0:
        return int(rng.integers(fits.size))
    r = rng.random() * total
    idx = int(np.searchsorted(np.cumsum(fits), r, side="right"))
    return min(idx, fits.size - 1)


def single_point_crossover(a: Chromosome, b: Chromosome, rng: np.random.Generator,
                           p_crossover: float) -> tuple[Chromosome, Chromosome]:
    """With probability p_crossover, cut both parents at a uniform point in
    1..len-1 and exchange tails; otherwise return copies of the parents."""
    if a.genes.size != b.genes.size:
        raise ValueError("parents must have equal length")
    if rng.random() >= p_crossover:
        return Chromosome(a.genes.copy()), Chromosome(b.genes.copy())
    cut = int(rng.integers(1, a.genes.size))
    child1 = np.concatenate([a.genes[:cut], b.genes[cut:]])
    child2 = np.concatenate([b.genes[:cut], a.genes[cut:]])
    return Chromosome(child1), Chromosome(child2)


def mutate_chromosome(c: Chromosome, p_mutation: float,
                      rng: np.random.Generator) -> Chromosome:
    """Each gene independently mutates with probability p_mutation to a
    uniform id in 1..16 other than its current value, so mutated genes
    always change."""
    genes = c.genes.copy()
    coins = rng.random(genes.size) < p_mutation
    for pos in np.flatnonzero(coins):
        draw = int(rng.integers(1, NUM_LLH))
        if draw >= genes[pos]:
            draw += 1
        genes[pos] = draw
    return Chromosome(genes)


def _next_generation(population: list[Chromosome], fits: np.ndarray,
                     cfg: SupervisorConfig, rng: np.random.Generator) -> list[Chromosome]:
    """Steps 6-8: elites pass through, roulette fills the mating pool,
    consecutive pairs cross over, everyone in the pool mutates."""
    elite_idx = np.argsort(-fits, kind="stable")[:cfg.elitism]
    elites = [population[int(i)].copy() for i in elite_idx]
    pool = [population[roulette_select(fits, rng)].copy()
            for _ in range(cfg.population_size - cfg.elitism)]
    crossed: list[Chromosome] = []
    for i in range(0, len(pool) - 1, 2):
        c1, c2 = single_point_crossover(pool[i], pool[i + 1], rng, cfg.p_crossover)
        crossed.extend([c1, c2])
    if len(pool) % 2:
        crossed.append(pool[-1])
    mutated = [mutate_chromosome(c, cfg.p_mutation, rng) for c in crossed]
    return elites + mutated


def run_supervisor(dataset: Dataset, cfg: SupervisorConfig,
                   search_protocol: CvProtocol,
                   report_protocols: dict[str, CvProtocol] | None = None,
                   cache: CorrelationCache | None = None,
                   fitness_cache_enabled: bool = True) -> SupervisorResult:
    """Run the supervisor GA once and return the final incumbent.

    Per generation: every chromosome is evaluated from the same incumbent
    snapshot; the best resulting mask replaces the incumbent only if its
    fitness strictly improves; selection, crossover and mutation then
    produce the next population. After the last generation the incumbent
    is re-evaluated under each reporting protocol.
    """
    start = time.perf_counter()
    if cache is None:
        cache = build_cache(dataset)
    evaluator = FitnessEvaluator(dataset, search_protocol,
                                 cache_enabled=fitness_cache_enabled)
    init_rng = np.random.default_rng([cfg.seed, 0])
    ga_rng = np.random.default_rng([cfg.seed, 2])

    incumbent = FeatureMask.random(dataset.n_features, init_rng)
    population = [random_chromosome(cfg.nllh, init_rng)
                  for _ in range(cfg.population_size)]
    incumbent_fitness = evaluator(incumbent)
    initial_fitness = incumbent_fitness
    initial_m = incumbent.selected_count()

    stats = LlhStats()
    history: list[GenerationRecord] = []
    for gen in range(cfg.generations):
        masks: list[FeatureMask] = []
        fits = np.empty(len(population), dtype=np.float64)
        for i, chrom in enumerate(population):
            ctx = LlhContext(cache=cache,
                             rng=np.random.default_rng([cfg.seed, 1, gen, i]),
                             mutn_rate=cfg.mutn_rate)
            mask_i, fit_i = evaluate_chromosome(chrom, incumbent, ctx,
                                                evaluator, stats)
            masks.append(mask_i)
            fits[i] = fit_i
        best_i = int(np.argmax(fits))
        if fits[best_i] > incumbent_fitness:
            incumbent = masks[best_i]
            incumbent_fitness = float(fits[best_i])
        history.append(GenerationRecord(
            generation=gen,
            best_chromosome_fitness=float(fits[best_i]),
            incumbent_fitness=incumbent_fitness,
            incumbent_m=incumbent.selected_count(),
        ))
        population = _next_generation(population, fits, cfg, ga_rng)

    reported = {
        label: cv_accuracy(dataset, incumbent, proto)
        for label, proto in (report_protocols or {}).items()
    }
    return SupervisorResult(
        mask=incumbent,
        search_fitness=incumbent_fitness,
        reported=reported,
        history=history,
        llh_stats=stats,
        seed=cfg.seed,
        initial_fitness=initial_fitness,
        initial_m=initial_m,
        fitness_computations=evaluator.computations,
        fitness_cache_hits=evaluator.hits,
        wall_time=time.perf_counter() - start,
    )

