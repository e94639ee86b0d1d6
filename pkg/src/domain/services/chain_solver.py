"""Chain composition: orders each request's VNFs with HVPP."""

import logging
from typing import List, Sequence

from src.domain.models.embedding import ChainVnf, ForwardingGraph
from src.domain.models.workload import SfcRequest, VnfKind
from src.domain.services.predictor_service import FeatureUniverse, Predictor, PredictorService

logger = logging.getLogger(__name__)


def order_by_priority(vnfs: Sequence[VnfKind], priorities: Sequence[float],
                      strict_order: Sequence[VnfKind] = ()) -> List[ChainVnf]:
    """
    Sort VNFs by descending priority, then repair the strict order.

    The sort is stable so equal priorities keep the request order. Repair
    walks ``strict_order``: a strict VNF found before the last strict
    position is moved to that position, which shifts the others back.

    Args:
        vnfs: VNFs in request order
        priorities: One priority per VNF
        strict_order: VNFs that must appear in this relative order

    Returns:
        Chain with priorities attached
    """
    chain = [ChainVnf(kind=kind, priority=float(p)) for kind, p in zip(vnfs, priorities)]
    chain.sort(key=lambda v: -v.priority)

    last_index = 0
    for strict_vnf in strict_order:
        index = next(i for i, v in enumerate(chain) if v.kind == strict_vnf)
        if index < last_index:
            moved = chain.pop(index)
            chain.insert(last_index, moved)
        else:
            last_index = index
    return chain


class ChainSolver:
    """Builds forwarding graphs from SFC requests."""

    def __init__(self, universe: FeatureUniverse, predictor_service: PredictorService):
        self.universe = universe
        self.predictor_service = predictor_service

    def compose_chain(self, sfcr: SfcRequest, hvpp: Predictor) -> ForwardingGraph:
        """Order the request's VNFs by HVPP priority while keeping its strict order."""
        priorities = [
            hvpp(self.predictor_service.encode_hvpp_input(sfcr, vnf, self.universe))
            for vnf in sfcr.vnfs
        ]
        chain = order_by_priority(sfcr.vnfs, priorities, sfcr.strict_order)
        return ForwardingGraph(sfcr_id=sfcr.id, ordered_vnfs=tuple(chain))
