"""Substrate network value objects."""

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Dict, List, Tuple


class NodeKind(IntEnum):
    """Kinds of substrate nodes, in one-hot and tie-break order."""
    HOST = 0
    EDGE_SWITCH = 1
    AGG_SWITCH = 2
    CORE_SWITCH = 3


_KIND_PREFIX = {
    NodeKind.HOST: "h",
    NodeKind.EDGE_SWITCH: "e",
    NodeKind.AGG_SWITCH: "a",
    NodeKind.CORE_SWITCH: "c",
}


@dataclass(frozen=True, order=True)
class NodeId:
    """A substrate node, ordered by (kind, index)."""

    kind: NodeKind
    index: int

    @property
    def is_host(self) -> bool:
        return self.kind == NodeKind.HOST

    def __str__(self) -> str:
        return f"{_KIND_PREFIX[self.kind]}{self.index}"


@dataclass(frozen=True)
class Link:
    """Undirected link; endpoints are stored in ascending node order."""

    a: NodeId
    b: NodeId
    bandwidth: float
    propagation_delay: float = 0.1

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("A link cannot connect a node to itself")
        if self.bandwidth <= 0:
            raise ValueError("Link bandwidth must be positive")
        if self.b < self.a:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    @property
    def endpoints(self) -> Tuple[NodeId, NodeId]:
        return (self.a, self.b)

    def other(self, node: NodeId) -> NodeId:
        """Get the endpoint opposite to ``node``."""
        return self.b if node == self.a else self.a

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"


@dataclass(frozen=True)
class Topology:
    """A k-ary fat-tree substrate. Immutable after construction."""

    k: int
    nodes: Tuple[NodeId, ...]
    links: Tuple[Link, ...]
    host_cpu: float
    host_memory: float
    _adjacency: Dict[NodeId, List[Tuple[NodeId, Link]]] = field(
        init=False, repr=False, compare=False
    )
    _links_by_pair: Dict[Tuple[NodeId, NodeId], Link] = field(
        init=False, repr=False, compare=False
    )
    _positions: Dict[NodeId, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nodes = tuple(sorted(self.nodes))
        object.__setattr__(self, "nodes", nodes)

        adjacency: Dict[NodeId, List[Tuple[NodeId, Link]]] = {n: [] for n in nodes}
        by_pair: Dict[Tuple[NodeId, NodeId], Link] = {}
        for link in self.links:
            adjacency[link.a].append((link.b, link))
            adjacency[link.b].append((link.a, link))
            by_pair[(link.a, link.b)] = link
        for neighbours in adjacency.values():
            neighbours.sort(key=lambda item: item[0])

        object.__setattr__(self, "_adjacency", adjacency)
        object.__setattr__(self, "_links_by_pair", by_pair)
        object.__setattr__(self, "_positions", {n: i for i, n in enumerate(nodes)})

    @property
    def hosts(self) -> List[NodeId]:
        """Hosts in index order; position i is host index i."""
        return [n for n in self.nodes if n.is_host]

    @property
    def n_hosts(self) -> int:
        return sum(1 for n in self.nodes if n.is_host)

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    def count(self, kind: NodeKind) -> int:
        return sum(1 for n in self.nodes if n.kind == kind)

    def contains(self, node: NodeId) -> bool:
        return node in self._positions

    def position(self, node: NodeId) -> int:
        """Position of ``node`` in the sorted node order (KeyError if absent)."""
        return self._positions[node]

    def adjacent(self, node: NodeId) -> List[Tuple[NodeId, Link]]:
        """Raw adjacency list; callers validate membership first."""
        return self._adjacency[node]

    def link_between(self, u: NodeId, v: NodeId) -> Link:
        key = (u, v) if u < v else (v, u)
        return self._links_by_pair[key]

    def has_link(self, u: NodeId, v: NodeId) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._links_by_pair
