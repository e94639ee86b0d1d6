"""Service for building and querying the fat-tree substrate."""

import logging
from typing import Callable, List, Optional, Tuple

import networkx as nx

from src.domain.exceptions.domain_exceptions import (
    InvalidArityError, NodeNotFoundError, UnreachableError
)
from src.domain.models.topology import Link, NodeId, NodeKind, Topology

logger = logging.getLogger(__name__)

DEFAULT_PROPAGATION_DELAY_MS = 0.1


class TopologyService:
    """Service responsible for the substrate network."""

    def generate_fat_tree(self, k: int, host_cpu: float, link_bandwidth: float,
                          host_memory: float,
                          propagation_delay: float = DEFAULT_PROPAGATION_DELAY_MS) -> Topology:
        """
        Build the standard k-ary fat-tree.

        Pods are numbered 0..k-1, each with k/2 edge and k/2 aggregation
        switches. Hosts are numbered pod-major, left to right, so host i of
        edge switch e in pod p has index p*(k/2)^2 + e*(k/2) + i.

        Args:
            k: Even arity, at least 2
            host_cpu: CPU units per host
            link_bandwidth: MB/s on every link
            host_memory: GB per host (carried, never constrains placement)
            propagation_delay: ms per link

        Returns:
            Topology with k^3/4 hosts, k^2/2 edge and aggregation switches,
            (k/2)^2 core switches and 3k^3/4 links
        """
        if not isinstance(k, int) or k < 2 or k % 2 != 0:
            raise InvalidArityError(f"Fat-tree arity must be an even integer >= 2, got {k}")

        half = k // 2
        nodes: List[NodeId] = []
        links: List[Link] = []

        def connect(u: NodeId, v: NodeId) -> None:
            links.append(Link(u, v, bandwidth=link_bandwidth, propagation_delay=propagation_delay))

        core = [NodeId(NodeKind.CORE_SWITCH, i) for i in range(half * half)]
        nodes.extend(core)

        for pod in range(k):
            edges = [NodeId(NodeKind.EDGE_SWITCH, pod * half + i) for i in range(half)]
            aggs = [NodeId(NodeKind.AGG_SWITCH, pod * half + i) for i in range(half)]
            nodes.extend(edges)
            nodes.extend(aggs)

            for e, edge in enumerate(edges):
                for i in range(half):
                    host = NodeId(NodeKind.HOST, pod * half * half + e * half + i)
                    nodes.append(host)
                    connect(host, edge)
                for agg in aggs:
                    connect(edge, agg)

            for a, agg in enumerate(aggs):
                for c in range(half):
                    connect(agg, core[a * half + c])

        topology = Topology(
            k=k,
            nodes=tuple(nodes),
            links=tuple(links),
            host_cpu=host_cpu,
            host_memory=host_memory,
        )
        logger.debug("Built %d-ary fat-tree: %d nodes, %d links",
                     k, topology.n_nodes, len(topology.links))
        return topology

    def neighbours(self, topology: Topology, node: NodeId) -> List[Tuple[NodeId, Link]]:
        """All nodes sharing a link with ``node``, sorted by (kind, index)."""
        if not isinstance(node, NodeId) or not topology.contains(node):
            raise NodeNotFoundError(f"Node not found in topology: {node}")
        return list(topology.adjacent(node))

    def host(self, topology: Topology, index: int) -> NodeId:
        """The host with the given index."""
        node = NodeId(NodeKind.HOST, index)
        if not topology.contains(node):
            raise NodeNotFoundError(f"Host index out of range: {index}")
        return node

    def edge_switch_of(self, topology: Topology, host: NodeId) -> NodeId:
        """The edge switch a host attaches to."""
        if not host.is_host:
            raise NodeNotFoundError(f"Not a host: {host}")
        for neighbour, _ in self.neighbours(topology, host):
            if neighbour.kind == NodeKind.EDGE_SWITCH:
                return neighbour
        raise NodeNotFoundError(f"Host {host} has no edge switch")

    def to_networkx(self, topology: Topology) -> nx.Graph:
        """Undirected networkx view with nodes inserted in sorted order."""
        graph = nx.Graph()
        graph.add_nodes_from(topology.nodes)
        for link in sorted(topology.links, key=lambda l: l.endpoints):
            graph.add_edge(link.a, link.b, link=link, bandwidth=link.bandwidth,
                           delay=link.propagation_delay)
        return graph

    def shortest_path(self, topology: Topology, source: NodeId, target: NodeId,
                      usable: Optional[Callable[[Link], bool]] = None,
                      graph: Optional[nx.Graph] = None) -> List[NodeId]:
        """
        Hop-count shortest path, optionally restricted to usable links.

        Args:
            topology: Substrate network
            source: Start node
            target: End node
            usable: Predicate a link must satisfy to be traversed
            graph: Pre-built networkx view of ``topology`` to reuse

        Returns:
            Node sequence from source to target
        """
        for node in (source, target):
            if not topology.contains(node):
                raise NodeNotFoundError(f"Node not found in topology: {node}")
        if source == target:
            return [source]

        base = graph if graph is not None else self.to_networkx(topology)
        graph = base
        if usable is not None:
            graph = nx.subgraph_view(
                base, filter_edge=lambda u, v: usable(base.edges[u, v]["link"])
            )
        try:
            return nx.shortest_path(graph, source, target)
        except nx.NetworkXNoPath:
            raise UnreachableError(f"No path from {source} to {target}")

    def is_connected(self, topology: Topology) -> bool:
        return nx.is_connected(self.to_networkx(topology))
