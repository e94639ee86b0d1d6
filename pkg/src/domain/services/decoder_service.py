"""Genome decoding: chain composition, VNF placement, then link routing."""

import logging
from typing import List, Optional, Sequence, Union

import numpy as np

from src.domain.models.embedding import EmbeddingGraph, PartialEmbeddingGraph
from src.domain.models.predictor import Genome, PredictorSet
from src.domain.models.topology import Topology
from src.domain.models.workload import SfcRequest
from src.domain.services.chain_solver import ChainSolver
from src.domain.services.link_solver import LinkSolver
from src.domain.services.placement_solver import PlacementSolver
from src.domain.services.predictor_service import Activation, FeatureUniverse, PredictorService
from src.domain.services.topology_service import TopologyService

logger = logging.getLogger(__name__)

SeedLike = Union[int, np.random.Generator]


class DecoderService:
    """Turns a genome into one embedding graph per request, in request id order."""

    def __init__(self, topology: Topology, requests: Sequence[SfcRequest],
                 predictors: PredictorSet, universe: FeatureUniverse,
                 sigma: float = 2.0, ingress_host: int = 0,
                 predictor_service: Optional[PredictorService] = None,
                 topology_service: Optional[TopologyService] = None):
        self.topology = topology
        self.requests = sorted(requests, key=lambda r: r.id)
        self.predictors = predictors
        self.universe = universe
        self.predictor_service = predictor_service or PredictorService()

        self.chain_solver = ChainSolver(universe, self.predictor_service)
        self.placement_solver = PlacementSolver(universe, self.predictor_service, sigma)
        self.link_solver = LinkSolver(universe, self.predictor_service,
                                      topology_service, ingress_host)

    @classmethod
    def for_scenario(cls, topology: Topology, requests: Sequence[SfcRequest],
                     predictor_seed: int, sigma: float = 2.0,
                     ingress_host: int = 0) -> "DecoderService":
        """Build the universe and fixed predictor weights, then the decoder."""
        service = PredictorService()
        universe = FeatureUniverse.for_scenario(len(requests), topology)
        predictors = service.build_predictors(universe, topology.n_hosts, predictor_seed)
        return cls(topology, requests, predictors, universe, sigma, ingress_host,
                   predictor_service=service)

    def decode(self, genome: Genome, rng: SeedLike) -> List[EmbeddingGraph]:
        """
        Decode every request with the genome's three predictors.

        Args:
            genome: Six output-layer weights
            rng: Seed or generator owned by this decode; only placement draws from it

        Returns:
            EmbeddingGraph per request; rejected when any VNF was rejected
        """
        hlcp = self.predictor_service.bind(self.predictors.hlcp, genome.hlcp)
        egs = [self.link_solver.embed_links(peg, hlcp, self.topology)
               for peg in self.place(genome, rng)]

        logger.debug("Decoded %d requests, %d embedded",
                     len(egs), sum(1 for eg in egs if eg.embedded))
        return egs

    def place(self, genome: Genome, rng: SeedLike,
              activation: Activation = np.sin) -> List[PartialEmbeddingGraph]:
        """Compose and place every request, stopping before link routing."""
        rng = np.random.default_rng(rng)
        service = self.predictor_service
        hvpp = service.bind(self.predictors.hvpp, genome.hvpp, activation)
        hmhp = service.bind(self.predictors.hmhp, genome.hmhp, activation)

        pegs = []
        for request in self.requests:
            fg = self.chain_solver.compose_chain(request, hvpp)
            pegs.append(self.placement_solver.embed_vnfs(fg, hmhp, self.topology, rng))
        return pegs
