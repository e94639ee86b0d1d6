"""Binary-encoded GA baseline: a VNF x host matrix evolved with the hybrid loop."""

import logging
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from src.domain.models.baseline import BinaryGenome
from src.domain.models.embedding import (
    ChainVnf, EmbeddingGraph, EmbeddingStatus, ForwardingGraph, PartialEmbeddingGraph, Placement
)
from src.domain.models.evolution import EvolutionConfig, EvolutionOutcome
from src.domain.models.topology import NodeId, Topology
from src.domain.models.workload import SfcRequest
from src.domain.services.evolution_service import EvolutionService, GeneticOperators
from src.domain.services.netsim_service import FlowSimulator
from src.domain.services.topology_service import TopologyService

logger = logging.getLogger(__name__)


def matrix_shape(requests: Sequence[SfcRequest], n_hosts: int) -> Tuple[int, int]:
    """One row per VNF over all requests, one column per host."""
    return sum(len(r.vnfs) for r in requests), n_hosts


def repair(matrix: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """
    Make every row one-hot.

    A row with several set bits keeps one chosen uniformly; an all-zero row
    gets one uniformly chosen bit.
    """
    repaired = np.array(matrix, dtype=np.uint8)
    for row in repaired:
        ones = np.flatnonzero(row)
        if len(ones) == 1:
            continue
        keep = rng.choice(ones) if len(ones) else rng.integers(0, len(row))
        row[:] = 0
        row[keep] = 1
    return repaired


class BegaOperators(GeneticOperators):
    """
    Binary encoding: row i holds the host of the i-th VNF, rows ordered by
    request id then template position.

    Chains keep their template order and links follow hop-count shortest
    paths, so only placement is evolved.
    """

    def __init__(self, topology: Topology, requests: Sequence[SfcRequest],
                 ingress_host: int = 0, topology_service: Optional[TopologyService] = None):
        self.topology = topology
        self.requests = sorted(requests, key=lambda r: r.id)
        self.topology_service = topology_service or TopologyService()
        self.shape = matrix_shape(self.requests, topology.n_hosts)
        self._graph: nx.Graph = self.topology_service.to_networkx(topology)
        self._anchor = self.topology_service.edge_switch_of(
            topology, self.topology_service.host(topology, ingress_host)
        )

    def random_genome(self, rng: np.random.Generator) -> BinaryGenome:
        rows, cols = self.shape
        matrix = np.zeros(self.shape, dtype=np.uint8)
        matrix[np.arange(rows), rng.integers(0, cols, rows)] = 1
        return BinaryGenome(matrix)

    def crossover(self, a: BinaryGenome, b: BinaryGenome,
                  rng: np.random.Generator) -> Tuple[BinaryGenome, BinaryGenome]:
        """Two-point crossover on whole rows."""
        rows = self.shape[0]
        start, end = sorted(int(c) for c in rng.integers(0, rows + 1, 2))
        first = np.array(a.matrix)
        second = np.array(b.matrix)
        first[start:end], second[start:end] = b.matrix[start:end], a.matrix[start:end]
        return BinaryGenome(first), BinaryGenome(second)

    def mutate(self, genome: BinaryGenome, rng: np.random.Generator) -> BinaryGenome:
        """Flip each bit with probability 1 / matrix size, then repair."""
        matrix = np.array(genome.matrix)
        flips = rng.random(matrix.shape) < 1.0 / matrix.size
        matrix[flips] ^= 1
        return BinaryGenome(repair(matrix, rng))

    def decode(self, genome: BinaryGenome, decode_seed: int) -> List[EmbeddingGraph]:
        hosts = self.topology.hosts
        indices = genome.host_indices()
        egs = []
        row = 0
        for request in self.requests:
            fg = ForwardingGraph(
                sfcr_id=request.id,
                ordered_vnfs=tuple(ChainVnf(kind=kind) for kind in request.vnfs),
            )
            placements = []
            for kind in request.vnfs:
                placements.append(Placement(kind=kind, instance=1, host=hosts[indices[row]]))
                row += 1
            peg = PartialEmbeddingGraph(fg=fg, placements=tuple(placements))
            egs.append(self._route(peg))
        return egs

    def _route(self, peg: PartialEmbeddingGraph) -> EmbeddingGraph:
        waypoints: List[NodeId] = [self._anchor] + list(peg.hosts) + [self._anchor]
        paths = tuple(
            tuple(self.topology_service.shortest_path(self.topology, u, v, graph=self._graph))
            for u, v in zip(waypoints[:-1], waypoints[1:])
        )
        return EmbeddingGraph(peg=peg, paths=paths, status=EmbeddingStatus.EMBEDDED,
                              path_costs=tuple(float(len(p) - 1) for p in paths))


class BegaService:
    """Runs the binary-encoded GA through the shared hybrid evolution loop."""

    def __init__(self, topology: Topology, requests: Sequence[SfcRequest],
                 simulator: FlowSimulator, ingress_host: int = 0):
        self.operators = BegaOperators(topology, requests, ingress_host)
        self.evolution_service = EvolutionService(simulator)

    def evolve(self, cfg: EvolutionConfig) -> EvolutionOutcome:
        logger.info("BEGA: %dx%d matrix, population %d",
                    *self.operators.shape, cfg.population_size)
        return self.evolution_service.evolve_hybrid(cfg, self.operators)
