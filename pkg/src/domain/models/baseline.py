"""Encodings and state used by the comparison algorithms."""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from .embedding import EmbeddingGraph
from .topology import Link, NodeId


@dataclass(frozen=True)
class BinaryGenome:
    """VNF-instance x host matrix; a valid genome has exactly one 1 per row."""

    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=np.uint8)
        if matrix.ndim != 2:
            raise ValueError("A binary genome is a two-dimensional matrix")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.matrix.shape

    def is_valid(self) -> bool:
        return bool(np.all(self.matrix.sum(axis=1) == 1))

    def host_indices(self) -> List[int]:
        """Host index per row; only meaningful on a valid genome."""
        return [int(i) for i in np.argmax(self.matrix, axis=1)]

    def sort_key(self) -> Tuple[int, ...]:
        return tuple(int(v) for v in self.matrix.ravel())

    def __hash__(self) -> int:
        return hash((self.shape, self.matrix.tobytes()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryGenome):
            return False
        return np.array_equal(self.matrix, other.matrix)


@dataclass
class GreedyState:
    """Remaining peak-traffic capacities while the greedy baseline embeds."""

    host_remaining: Dict[NodeId, float]
    link_remaining: Dict[Link, float]
    embedded: List[EmbeddingGraph] = field(default_factory=list)

    def reserve_host(self, host: NodeId, amount: float) -> None:
        self.host_remaining[host] -= amount

    def reserve_link(self, link: Link, amount: float) -> None:
        self.link_remaining[link] -= amount
