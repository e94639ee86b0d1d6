"""Builders shared by the test modules."""

from typing import Optional, Sequence, Tuple

from src.domain.models.embedding import (
    ChainVnf, EmbeddingGraph, EmbeddingStatus, ForwardingGraph, PartialEmbeddingGraph, Placement
)
from src.domain.models.evaluation import EvaluationMode, EvaluationResult
from src.domain.models.evolution import Individual
from src.domain.models.predictor import Genome
from src.domain.models.topology import NodeId, NodeKind
from src.domain.models.workload import VnfKind


def host(index: int) -> NodeId:
    return NodeId(NodeKind.HOST, index)


def edge(index: int) -> NodeId:
    return NodeId(NodeKind.EDGE_SWITCH, index)


def make_eg(sfcr_id: int, placements: Sequence[Tuple[VnfKind, Optional[NodeId]]],
            paths: Sequence[Sequence[NodeId]] = ()) -> EmbeddingGraph:
    """Hand-built embedding graph; rejected when any host is None."""
    fg = ForwardingGraph(sfcr_id, tuple(ChainVnf(kind) for kind, _ in placements))
    peg = PartialEmbeddingGraph(fg, tuple(Placement(kind, 1, h) for kind, h in placements))
    if peg.has_rejection:
        return EmbeddingGraph(peg=peg, status=EmbeddingStatus.REJECTED)
    return EmbeddingGraph(peg=peg, paths=tuple(tuple(p) for p in paths))


def scored(ar: float, latency: float, tag: int = 0) -> Individual:
    """Individual with a fixed surrogate fitness and a genome told apart by ``tag``."""
    fitness = EvaluationResult(acceptance_ratio=ar, avg_latency=latency,
                               per_sfc_latency=(), mode=EvaluationMode.SURROGATE)
    return Individual(genome=Genome((float(tag), 0, 0, 0, 0, 0)), fitness=fitness)
