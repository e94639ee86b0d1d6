"""Greedy Dijkstra baseline: embeds requests one by one in arrival order."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from src.domain.exceptions.domain_exceptions import UnreachableError
from src.domain.models.baseline import GreedyState
from src.domain.models.embedding import (
    ChainVnf, EmbeddingGraph, EmbeddingStatus, ForwardingGraph, PartialEmbeddingGraph, Placement
)
from src.domain.models.evaluation import CAPACITY_TOLERANCE, EvaluationMode, EvaluationResult
from src.domain.models.topology import Link, NodeId, Topology
from src.domain.models.workload import SfcRequest
from src.domain.services.netsim_service import FlowSimulator
from src.domain.services.topology_service import TopologyService

logger = logging.getLogger(__name__)


@dataclass
class GdaOutcome:
    """Embeddings, final online fitness and the state GDA finished with."""

    egs: List[EmbeddingGraph]
    result: EvaluationResult
    state: GreedyState
    evaluations: int = 1


class GdaService:
    """Most-remaining-CPU placement with capacity-aware hop-count routing."""

    def __init__(self, topology: Topology, requests: Sequence[SfcRequest],
                 simulator: FlowSimulator, ingress_host: int = 0,
                 topology_service: Optional[TopologyService] = None):
        self.topology = topology
        self.requests = list(requests)
        self.simulator = simulator
        self.topology_service = topology_service or TopologyService()
        self._graph: nx.Graph = self.topology_service.to_networkx(topology)
        self._anchor = self.topology_service.edge_switch_of(
            topology, self.topology_service.host(topology, ingress_host)
        )

    def embed(self) -> GdaOutcome:
        """
        Embed every request by ``arrival_rank``, then evaluate once online.

        Each VNF goes to the host with the most remaining CPU that can hold
        its peak demand, ties to the lowest host index. Consecutive hosts are
        joined by the hop-count shortest path over links with enough
        remaining bandwidth. A request failing any step is rejected and what
        it reserved is released.
        """
        state = GreedyState(
            host_remaining={h: self.topology.host_cpu for h in self.topology.hosts},
            link_remaining={link: link.bandwidth for link in self.topology.links},
        )
        peak = self.simulator.pattern.peak_rate
        flow = self.simulator.flow_size_mb * peak

        egs = []
        for request in sorted(self.requests, key=lambda r: (r.arrival_rank, r.id)):
            eg = self._embed_request(request, state, peak, flow)
            egs.append(eg)
            if eg.embedded:
                state.embedded.append(eg)

        result = self.simulator.evaluate(egs, EvaluationMode.ONLINE)
        logger.info("GDA embedded %d/%d requests", len(state.embedded), len(egs))
        return GdaOutcome(egs=sorted(egs, key=lambda e: e.sfcr_id), result=result, state=state)

    def _embed_request(self, request: SfcRequest, state: GreedyState,
                       peak: float, flow: float) -> EmbeddingGraph:
        fg = ForwardingGraph(
            sfcr_id=request.id,
            ordered_vnfs=tuple(ChainVnf(kind=kind) for kind in request.vnfs),
        )
        host_reserved: List[Tuple[NodeId, float]] = []
        link_reserved: List[Tuple[Link, float]] = []

        def release() -> EmbeddingGraph:
            for host, amount in host_reserved:
                state.reserve_host(host, -amount)
            for link, amount in link_reserved:
                state.reserve_link(link, -amount)
            rejected = tuple(Placement(kind=v.kind, instance=v.instance, host=None)
                             for v in fg.ordered_vnfs)
            return EmbeddingGraph(peg=PartialEmbeddingGraph(fg=fg, placements=rejected),
                                  status=EmbeddingStatus.REJECTED)

        placements = []
        for vnf in fg.ordered_vnfs:
            demand = self.simulator.cpu_demands[vnf.kind] * peak
            host = self._pick_host(state, demand)
            if host is None:
                logger.debug("GDA: no host fits %s of SFCR %d", vnf.kind.value, request.id)
                return release()
            state.reserve_host(host, demand)
            host_reserved.append((host, demand))
            placements.append(Placement(kind=vnf.kind, instance=vnf.instance, host=host))

        peg = PartialEmbeddingGraph(fg=fg, placements=tuple(placements))
        waypoints = [self._anchor] + list(peg.hosts) + [self._anchor]
        paths = []
        for source, target in zip(waypoints[:-1], waypoints[1:]):
            try:
                path = self.topology_service.shortest_path(
                    self.topology, source, target,
                    usable=lambda link: state.link_remaining[link] >= flow - CAPACITY_TOLERANCE,
                    graph=self._graph,
                )
            except UnreachableError:
                logger.debug("GDA: no route with %.3f MB/s spare for SFCR %d", flow, request.id)
                return release()
            for u, v in zip(path[:-1], path[1:]):
                link = self.topology.link_between(u, v)
                state.reserve_link(link, flow)
                link_reserved.append((link, flow))
            paths.append(tuple(path))

        return EmbeddingGraph(peg=peg, paths=tuple(paths), status=EmbeddingStatus.EMBEDDED,
                              path_costs=tuple(float(len(p) - 1) for p in paths))

    @staticmethod
    def _pick_host(state: GreedyState, demand: float) -> Optional[NodeId]:
        fitting = [
            (remaining, host) for host, remaining in state.host_remaining.items()
            if remaining >= demand - CAPACITY_TOLERANCE
        ]
        if not fitting:
            return None
        return min(fitting, key=lambda item: (-item[0], item[1]))[1]
