"""Individuals, GA configuration and per-generation history."""

import math
from dataclasses import dataclass, field
from typing import Any, List, Optional, Tuple

from .evaluation import EvaluationResult


@dataclass
class Individual:
    """A genome together with the seed of its decode and its fitness.

    ``genome`` is a ``Genome`` for GENESIS and a ``BinaryGenome`` for BEGA;
    both expose ``sort_key()``.
    """

    genome: Any
    decode_seed: int = 0
    fitness: Optional[EvaluationResult] = None
    online_fitness: Optional[EvaluationResult] = None
    rank: int = 0
    crowding: float = 0.0

    @property
    def evaluated(self) -> bool:
        return self.fitness is not None

    @property
    def objectives(self) -> Tuple[float, float]:
        return self.fitness.objectives

    def sort_key(self) -> Tuple:
        return (self.genome.sort_key(), self.decode_seed)


@dataclass(frozen=True)
class EvolutionConfig:
    """GA parameters; defaults follow the GENESIS column of the threshold table."""

    population_size: int = 100
    max_generations: int = 500
    min_acceptance_ratio: float = 1.0
    max_avg_latency: float = 100.0
    blx_alpha: float = 0.5
    mutation_sigma: float = math.pi
    seed: int = 0

    def __post_init__(self):
        if self.population_size < 2:
            raise ValueError("Population size must be at least 2")
        if self.max_generations < 0:
            raise ValueError("Max generations cannot be negative")
        if self.blx_alpha < 0:
            raise ValueError("Blend crossover alpha cannot be negative")
        if self.mutation_sigma <= 0:
            raise ValueError("Mutation sigma must be positive")


@dataclass(frozen=True)
class GenerationRecord:
    """One row of the evolution history."""

    generation: int
    mode: str
    best_ar: float
    best_latency: float
    front1_size: int
    evals_surrogate: int
    evals_online: int
    hypervolume: float = 0.0


@dataclass
class EvolutionOutcome:
    """Result of a GA run."""

    best: Individual
    generations_used: int
    converged: bool
    history: List[GenerationRecord] = field(default_factory=list)
    evals_surrogate: int = 0
    evals_online: int = 0

    @property
    def evaluations(self) -> int:
        return self.evals_surrogate + self.evals_online
