"""Hybrid surrogate/online neuroevolution driven by NSGA-II."""

import logging
import math
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.domain.models.embedding import EmbeddingGraph
from src.domain.models.evaluation import EvaluationMode, EvaluationResult
from src.domain.models.evolution import (
    EvolutionConfig, EvolutionOutcome, GenerationRecord, Individual
)
from src.domain.models.predictor import GENOME_LENGTH, Genome
from src.domain.services.decoder_service import DecoderService
from src.domain.services.netsim_service import FlowSimulator
from src.domain.services.nsga2_service import Nsga2Service

logger = logging.getLogger(__name__)

SEED_BOUND = 2 ** 31 - 1


class GeneticOperators(ABC):
    """Encoding-specific parts of the GA: genome creation, variation and decoding."""

    @abstractmethod
    def random_genome(self, rng: np.random.Generator) -> Any:
        pass

    @abstractmethod
    def crossover(self, a: Any, b: Any, rng: np.random.Generator) -> Tuple[Any, Any]:
        pass

    @abstractmethod
    def mutate(self, genome: Any, rng: np.random.Generator) -> Any:
        pass

    @abstractmethod
    def decode(self, genome: Any, decode_seed: int) -> List[EmbeddingGraph]:
        pass


def blend_crossover(p1: Genome, p2: Genome, alpha: float,
                    rng: np.random.Generator) -> Tuple[Genome, Genome]:
    """
    BLX-alpha on every gene.

    Each child gene is ``x + gamma * (y - x)`` with
    ``gamma = (1 + 2*alpha) * u - alpha`` and u ~ Uniform(0, 1), so it lies
    within alpha * |x - y| of the parents' interval.
    """
    if alpha < 0:
        raise ValueError("Blend crossover alpha cannot be negative")
    x = p1.to_array()
    y = p2.to_array()
    gamma = (1 + 2 * alpha) * rng.random((2, len(x))) - alpha
    first = x + gamma[0] * (y - x)
    second = y + gamma[1] * (x - y)
    return Genome.from_array(first), Genome.from_array(second)


def gaussian_mutation(genome: Genome, sigma: float, rng: np.random.Generator) -> Genome:
    """Add Normal(0, sigma^2) noise to every gene, without clamping."""
    if sigma <= 0:
        raise ValueError("Mutation sigma must be positive")
    return Genome.from_array(genome.to_array() + rng.normal(0.0, sigma, len(genome)))


class GenesisOperators(GeneticOperators):
    """Real-valued six-gene encoding decoded through the three predictors."""

    def __init__(self, decoder: DecoderService, alpha: float = 0.5,
                 sigma: float = math.pi):
        self.decoder = decoder
        self.alpha = alpha
        self.sigma = sigma

    def random_genome(self, rng: np.random.Generator) -> Genome:
        return Genome.from_array(rng.uniform(-math.pi, math.pi, GENOME_LENGTH))

    def crossover(self, a: Genome, b: Genome, rng: np.random.Generator) -> Tuple[Genome, Genome]:
        return blend_crossover(a, b, self.alpha, rng)

    def mutate(self, genome: Genome, rng: np.random.Generator) -> Genome:
        return gaussian_mutation(genome, self.sigma, rng)

    def decode(self, genome: Genome, decode_seed: int) -> List[EmbeddingGraph]:
        return self.decoder.decode(genome, decode_seed)


class EvolutionService:
    """Runs the GA with cheap surrogate fitness and online checks of promising individuals."""

    def __init__(self, simulator: FlowSimulator, nsga2: Optional[Nsga2Service] = None):
        self.simulator = simulator
        self.nsga2 = nsga2 or Nsga2Service()
        self._evals: Dict[EvaluationMode, int] = {}

    def init_population(self, cfg: EvolutionConfig, operators: GeneticOperators,
                        rng: Optional[np.random.Generator] = None) -> List[Individual]:
        """``population_size`` random individuals, reproducible from ``cfg.seed``."""
        rng = rng if rng is not None else np.random.default_rng(cfg.seed)
        return [self._new_individual(operators.random_genome(rng), rng)
                for _ in range(cfg.population_size)]

    @staticmethod
    def meets_thresholds(result: EvaluationResult, cfg: EvolutionConfig) -> bool:
        return (result.acceptance_ratio >= cfg.min_acceptance_ratio and
                result.avg_latency <= cfg.max_avg_latency)

    def evaluate(self, individual: Individual, operators: GeneticOperators,
                 mode: EvaluationMode) -> EvaluationResult:
        """
        Decode and evaluate one individual, counting the evaluation.

        The result is stored on the individual only; an individual that
        already holds a result for ``mode`` is not decoded again.
        """
        stored = (individual.online_fitness if mode == EvaluationMode.ONLINE
                  else individual.fitness)
        if stored is not None:
            return stored

        egs = operators.decode(individual.genome, individual.decode_seed)
        result = self.simulator.evaluate(egs, mode)
        self._evals[mode] = self._evals.get(mode, 0) + 1
        if mode == EvaluationMode.ONLINE:
            individual.online_fitness = result
        else:
            individual.fitness = result
        return result

    def evolve_hybrid(self, cfg: EvolutionConfig, operators: GeneticOperators) -> EvolutionOutcome:
        """
        Evolve with the surrogate until a candidate passes both thresholds online.

        Each generation ranks the population, checks every not yet verified
        surrogate-feasible individual with the online model, and stops at the
        first one that also passes there. Otherwise offspring are bred,
        evaluated with the surrogate and merged by NSGA-II selection.

        Args:
            cfg: GA parameters and thresholds
            operators: Encoding-specific operators

        Returns:
            EvolutionOutcome with the best individual and per-generation history
        """
        self._evals = {EvaluationMode.SURROGATE: 0, EvaluationMode.ONLINE: 0}
        rng = np.random.default_rng(cfg.seed)

        population = self.init_population(cfg, operators, rng)
        for individual in population:
            self.evaluate(individual, operators, EvaluationMode.SURROGATE)

        history: List[GenerationRecord] = []
        for generation in range(1, cfg.max_generations + 1):
            fronts = self.nsga2.rank(population)
            online_before = self._evals[EvaluationMode.ONLINE]
            winner = self._verify_candidates(population, cfg, operators)
            mode = "online" if self._evals[EvaluationMode.ONLINE] > online_before else "surrogate"
            history.append(self._record(generation, mode, population, fronts[0]))

            if winner is not None:
                logger.info("Converged at generation %d: AR %.3f, online latency %.2f ms",
                            generation, winner.online_fitness.acceptance_ratio,
                            winner.online_fitness.avg_latency)
                return self._outcome(winner, generation, True, history)

            logger.debug("Generation %d: best AR %.3f, best latency %.2f ms, front 1 size %d",
                         generation, history[-1].best_ar, history[-1].best_latency,
                         history[-1].front1_size)

            offspring = self._breed(population, cfg, operators, rng)
            for individual in offspring:
                self.evaluate(individual, operators, EvaluationMode.SURROGATE)
            population = self.nsga2.select(population + offspring, cfg.population_size)

        self.nsga2.rank(population)
        best = self.best_of(population)
        self.evaluate(best, operators, EvaluationMode.ONLINE)
        if cfg.max_generations > 0:
            logger.warning("No convergence within %d generations", cfg.max_generations)
        return self._outcome(best, cfg.max_generations, False, history)

    @staticmethod
    def best_of(population: Sequence[Individual]) -> Individual:
        """Highest acceptance ratio, then lowest latency, then genome order."""
        return min(population, key=lambda ind: (ind.objectives, ind.sort_key()))

    def _verify_candidates(self, population: Sequence[Individual], cfg: EvolutionConfig,
                           operators: GeneticOperators) -> Optional[Individual]:
        candidates = sorted(
            (ind for ind in population
             if ind.online_fitness is None and self.meets_thresholds(ind.fitness, cfg)),
            key=lambda ind: (ind.objectives, ind.sort_key()),
        )
        for candidate in candidates:
            online = self.evaluate(candidate, operators, EvaluationMode.ONLINE)
            if self.meets_thresholds(online, cfg):
                return candidate
            log = logger.warning if online.congested else logger.info
            log("Candidate failed online check: AR %.3f, latency %.2f ms "
                "(surrogate %.2f ms); resuming surrogate evolution",
                online.acceptance_ratio, online.avg_latency, candidate.fitness.avg_latency)
        return None

    def _breed(self, population: Sequence[Individual], cfg: EvolutionConfig,
               operators: GeneticOperators, rng: np.random.Generator) -> List[Individual]:
        """Pair parents without replacement, cross every pair and mutate every child."""
        children: List[Individual] = []
        n = len(population)
        while len(children) < cfg.population_size:
            order = rng.permutation(n)
            for i in range(0, n - 1, 2):
                a = population[order[i]].genome
                b = population[order[i + 1]].genome
                for child in operators.crossover(a, b, rng):
                    children.append(self._new_individual(operators.mutate(child, rng), rng))
                if len(children) >= cfg.population_size:
                    break
        return children[:cfg.population_size]

    def _record(self, generation: int, mode: str, population: Sequence[Individual],
                front: Sequence[Individual]) -> GenerationRecord:
        best = self.best_of(population)
        hypervolume = self.nsga2.hypervolume(
            [(ind.fitness.acceptance_ratio, ind.fitness.avg_latency) for ind in front],
            self.simulator.congestion_penalty_ms,
        )
        return GenerationRecord(
            generation=generation,
            mode=mode,
            best_ar=best.fitness.acceptance_ratio,
            best_latency=best.fitness.avg_latency,
            front1_size=len(front),
            evals_surrogate=self._evals[EvaluationMode.SURROGATE],
            evals_online=self._evals[EvaluationMode.ONLINE],
            hypervolume=hypervolume,
        )

    def _outcome(self, best: Individual, generations: int, converged: bool,
                 history: List[GenerationRecord]) -> EvolutionOutcome:
        return EvolutionOutcome(
            best=best,
            generations_used=generations,
            converged=converged,
            history=history,
            evals_surrogate=self._evals[EvaluationMode.SURROGATE],
            evals_online=self._evals[EvaluationMode.ONLINE],
        )

    @staticmethod
    def _new_individual(genome: Any, rng: np.random.Generator) -> Individual:
        return Individual(genome=genome, decode_seed=int(rng.integers(0, SEED_BOUND)))
