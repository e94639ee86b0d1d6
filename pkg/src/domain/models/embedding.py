"""The decode stages of a chain: forwarding graph, partial embedding, embedding."""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from .topology import NodeId
from .workload import VnfKind


class EmbeddingStatus(Enum):
    """Outcome of decoding one SFC request."""
    EMBEDDED = "embedded"
    REJECTED = "rejected"


@dataclass(frozen=True)
class ChainVnf:
    """A VNF instance in a chain, with the priority HVPP gave it."""

    kind: VnfKind
    instance: int = 1
    priority: float = 0.0


@dataclass(frozen=True)
class ForwardingGraph:
    """Ordered VNFs of one SFC."""

    sfcr_id: int
    ordered_vnfs: Tuple[ChainVnf, ...]

    @property
    def kinds(self) -> List[VnfKind]:
        return [v.kind for v in self.ordered_vnfs]


@dataclass(frozen=True)
class Placement:
    """Host chosen for a VNF instance; ``host`` is None when the VNF was rejected."""

    kind: VnfKind
    instance: int
    host: Optional[NodeId]

    @property
    def rejected(self) -> bool:
        return self.host is None


@dataclass(frozen=True)
class PartialEmbeddingGraph:
    """Forwarding graph plus a host per VNF."""

    fg: ForwardingGraph
    placements: Tuple[Placement, ...]
    mean_hosts: Tuple[float, ...] = ()

    def __post_init__(self):
        if len(self.placements) != len(self.fg.ordered_vnfs):
            raise ValueError("Placements must align one-to-one with the forwarding graph")

    @property
    def sfcr_id(self) -> int:
        return self.fg.sfcr_id

    @property
    def has_rejection(self) -> bool:
        return any(p.rejected for p in self.placements)

    @property
    def hosts(self) -> List[Optional[NodeId]]:
        return [p.host for p in self.placements]


@dataclass(frozen=True)
class EmbeddingGraph:
    """Partial embedding plus routed paths: ingress -> VNF hosts -> egress."""

    peg: PartialEmbeddingGraph
    paths: Tuple[Tuple[NodeId, ...], ...] = ()
    status: EmbeddingStatus = EmbeddingStatus.EMBEDDED
    path_costs: Tuple[float, ...] = field(default=(), compare=False)

    @property
    def sfcr_id(self) -> int:
        return self.peg.sfcr_id

    @property
    def embedded(self) -> bool:
        return self.status == EmbeddingStatus.EMBEDDED

    def traversed_hops(self) -> List[Tuple[NodeId, NodeId]]:
        """Every consecutive node pair over all paths, in traversal order."""
        hops = []
        for path in self.paths:
            hops.extend(zip(path[:-1], path[1:]))
        return hops
