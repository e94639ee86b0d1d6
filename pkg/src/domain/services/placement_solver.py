"""VNF embedding: picks a host for every VNF with HMHP and a Gaussian draw."""

import logging
import math
from typing import Optional

import numpy as np

from src.domain.models.embedding import ForwardingGraph, PartialEmbeddingGraph, Placement
from src.domain.models.topology import Topology
from src.domain.services.predictor_service import FeatureUniverse, Predictor, PredictorService

logger = logging.getLogger(__name__)


def resolve_host(mean_host: float, sample: float, n_hosts: int) -> Optional[int]:
    """
    Host index for a Gaussian sample around ``mean_host``.

    A mean of zero or less rejects the VNF. Otherwise the sample is floored
    and reduced modulo ``n_hosts``; a negative remainder is shifted up by
    ``n_hosts``.
    """
    if mean_host <= 0:
        return None
    host = int(math.fmod(math.floor(sample), n_hosts))
    if host < 0:
        host += n_hosts
    return host


class PlacementSolver:
    """Builds partial embedding graphs from forwarding graphs."""

    def __init__(self, universe: FeatureUniverse, predictor_service: PredictorService,
                 sigma: float = 2.0):
        if sigma <= 0:
            raise ValueError("Placement sigma must be positive")
        self.universe = universe
        self.predictor_service = predictor_service
        self.sigma = sigma

    def embed_vnfs(self, fg: ForwardingGraph, hmhp: Predictor, topology: Topology,
                   rng: np.random.Generator) -> PartialEmbeddingGraph:
        """
        Place each VNF of the chain.

        Args:
            fg: Ordered chain
            hmhp: Mean-host predictor, amplitude equal to the host count
            topology: Substrate, hosts addressed by index
            rng: Decode-owned random stream

        Returns:
            PartialEmbeddingGraph; rejected VNFs have no host
        """
        hosts = topology.hosts
        n_hosts = len(hosts)
        placements = []
        means = []
        for vnf in fg.ordered_vnfs:
            x = self.predictor_service.encode_hmhp_input(fg, vnf.kind, vnf.instance, self.universe)
            mean_host = hmhp(x)
            means.append(mean_host)

            index = None
            if mean_host > 0:
                index = resolve_host(mean_host, rng.normal(mean_host, self.sigma), n_hosts)
            placements.append(Placement(
                kind=vnf.kind,
                instance=vnf.instance,
                host=hosts[index] if index is not None else None,
            ))

        peg = PartialEmbeddingGraph(fg=fg, placements=tuple(placements), mean_hosts=tuple(means))
        if peg.has_rejection:
            logger.debug("SFCR %d: %d VNF(s) rejected", fg.sfcr_id,
                         sum(1 for p in placements if p.rejected))
        return peg
