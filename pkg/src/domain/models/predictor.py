"""Genome and predictor value objects."""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

GENES_PER_PREDICTOR = 2
GENOME_LENGTH = 3 * GENES_PER_PREDICTOR


@dataclass(frozen=True)
class Genome:
    """Evolvable output-layer weights: (w21, w22) for HVPP, HMHP and HLCP in that order."""

    genes: Tuple[float, ...]

    def __post_init__(self):
        genes = tuple(float(g) for g in self.genes)
        if len(genes) != GENOME_LENGTH:
            raise ValueError(f"A genome has exactly {GENOME_LENGTH} genes, got {len(genes)}")
        object.__setattr__(self, "genes", genes)

    @classmethod
    def from_array(cls, values: np.ndarray) -> "Genome":
        return cls(tuple(float(v) for v in values))

    def to_array(self) -> np.ndarray:
        return np.array(self.genes, dtype=float)

    @property
    def hvpp(self) -> Tuple[float, float]:
        return self.genes[0:2]

    @property
    def hmhp(self) -> Tuple[float, float]:
        return self.genes[2:4]

    @property
    def hlcp(self) -> Tuple[float, float]:
        return self.genes[4:6]

    def sort_key(self) -> Tuple[float, ...]:
        return self.genes

    def __len__(self) -> int:
        return len(self.genes)


@dataclass(frozen=True)
class PredictorSpec:
    """A predictor's fixed input-to-hidden weights and output amplitude."""

    name: str
    input_width: int
    fixed_weights: np.ndarray
    seed: int
    amplitude: float = 1.0

    def __post_init__(self):
        weights = np.array(self.fixed_weights, dtype=float)
        if weights.shape != (self.input_width, GENES_PER_PREDICTOR):
            raise ValueError(
                f"Fixed weights must have shape ({self.input_width}, {GENES_PER_PREDICTOR}), "
                f"got {weights.shape}"
            )
        weights.setflags(write=False)
        object.__setattr__(self, "fixed_weights", weights)

    def __hash__(self) -> int:
        return hash((self.name, self.input_width, self.seed, self.amplitude))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PredictorSpec):
            return False
        return (self.name == other.name and
                self.seed == other.seed and
                self.amplitude == other.amplitude and
                np.array_equal(self.fixed_weights, other.fixed_weights))


@dataclass(frozen=True)
class PredictorSet:
    """The three predictors used to decode a genome."""

    hvpp: PredictorSpec
    hmhp: PredictorSpec
    hlcp: PredictorSpec

    @property
    def seeds(self) -> Tuple[int, int, int]:
        return (self.hvpp.seed, self.hmhp.seed, self.hlcp.seed)
