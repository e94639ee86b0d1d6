"""Link embedding: routes between consecutive VNF hosts with HLCP-guided A*."""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from src.domain.exceptions.domain_exceptions import UnreachableError
from src.domain.models.embedding import EmbeddingGraph, EmbeddingStatus, PartialEmbeddingGraph
from src.domain.models.topology import NodeId, Topology
from src.domain.services.predictor_service import FeatureUniverse, Predictor, PredictorService
from src.domain.services.topology_service import TopologyService

logger = logging.getLogger(__name__)

CostFunction = Callable[[NodeId, NodeId], float]


class LinkSolver:
    """Builds embedding graphs from partial embedding graphs."""

    def __init__(self, universe: FeatureUniverse, predictor_service: PredictorService,
                 topology_service: Optional[TopologyService] = None, ingress_host: int = 0):
        self.universe = universe
        self.predictor_service = predictor_service
        self.topology_service = topology_service or TopologyService()
        self.ingress_host = ingress_host

    def hlcp_cost(self, hlcp: Predictor, peg_id: int) -> CostFunction:
        """
        Memoised HLCP cost between two nodes for one PEG.

        The raw output in [-1, 1] is shifted to ``1 + output`` so every
        cost lies in [0, 2].
        """
        cache: Dict[Tuple[NodeId, NodeId], float] = {}

        def cost(u: NodeId, v: NodeId) -> float:
            key = (u, v)
            if key not in cache:
                x = self.predictor_service.encode_hlcp_input(peg_id, u, v, self.universe)
                cache[key] = 1.0 + hlcp(x)
            return cache[key]

        return cost

    def anchor(self, topology: Topology) -> NodeId:
        """Edge switch used as both ingress and egress of every chain."""
        host = self.topology_service.host(topology, self.ingress_host)
        return self.topology_service.edge_switch_of(topology, host)

    def find_path(self, topology: Topology, source: NodeId, target: NodeId,
                  cost: CostFunction) -> Tuple[Tuple[NodeId, ...], float]:
        """
        A* search from ``source`` to ``target``.

        Edge cost and cost-to-target both come from ``cost``. Ties on total
        cost go to the lowest (kind, index) node. Hosts other than the source
        are never expanded, and a closed node is re-opened whenever a
        strictly cheaper route to it is found.

        Returns:
            (path, path cost); ``(source,)`` with cost 0 when source is target
        """
        if source == target:
            return (source,), 0.0

        cost_from_src: Dict[NodeId, float] = {source: 0.0}
        parent: Dict[NodeId, Optional[NodeId]] = {source: None}
        open_set: Dict[NodeId, float] = {source: cost(source, target)}
        closed = set()
        expansions = 0

        while open_set:
            current = min(open_set, key=lambda n: (open_set[n], n))
            del open_set[current]

            if current == target:
                path = self._trace(parent, target)
                logger.debug("A* %s -> %s: %d hops, %d expansions",
                             source, target, len(path) - 1, expansions)
                return path, cost_from_src[target]

            closed.add(current)
            if current != source and current.is_host:
                continue
            expansions += 1

            for neighbour, _ in topology.adjacent(current):
                g = cost_from_src[current] + cost(current, neighbour)
                if neighbour in cost_from_src and g >= cost_from_src[neighbour]:
                    continue
                cost_from_src[neighbour] = g
                parent[neighbour] = current
                closed.discard(neighbour)
                open_set[neighbour] = g + cost(neighbour, target)

        raise UnreachableError(f"No path from {source} to {target}")

    def embed_links(self, peg: PartialEmbeddingGraph, hlcp: Predictor,
                    topology: Topology) -> EmbeddingGraph:
        """
        Route ingress -> first host -> ... -> last host -> egress.

        A PEG with any rejected VNF is rejected as a whole, without search.
        """
        if peg.has_rejection:
            return EmbeddingGraph(peg=peg, status=EmbeddingStatus.REJECTED)

        anchor = self.anchor(topology)
        waypoints: List[NodeId] = [anchor] + list(peg.hosts) + [anchor]
        cost = self.hlcp_cost(hlcp, peg.sfcr_id)

        paths = []
        costs = []
        for source, target in zip(waypoints[:-1], waypoints[1:]):
            path, path_cost = self.find_path(topology, source, target, cost)
            paths.append(path)
            costs.append(path_cost)

        return EmbeddingGraph(peg=peg, paths=tuple(paths), status=EmbeddingStatus.EMBEDDED,
                              path_costs=tuple(costs))

    @staticmethod
    def _trace(parent: Dict[NodeId, Optional[NodeId]], target: NodeId) -> Tuple[NodeId, ...]:
        path = [target]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        return tuple(reversed(path))
