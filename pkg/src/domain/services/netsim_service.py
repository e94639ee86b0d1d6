"""Flow-level fitness evaluation: admission, online latency model and its surrogate."""

import logging
from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.domain.models.embedding import EmbeddingGraph
from src.domain.models.evaluation import (
    EvaluationMode, EvaluationResult, ResourceLedger, SfcLatency
)
from src.domain.models.topology import Link, NodeId, Topology
from src.domain.models.workload import TrafficPattern, VnfKind

logger = logging.getLogger(__name__)

UnitLoads = Tuple[Dict[NodeId, float], Dict[Link, float]]


class FlowSimulator:
    """
    Deterministic flow-level model of a set of embedded chains.

    Every accepted SFC carries the pattern's request rate. A VNF needs
    ``cpu_demand * rate`` CPU and every link traversal carries
    ``flow_size_mb * rate`` MB/s.
    """

    def __init__(self, topology: Topology, pattern: TrafficPattern,
                 cpu_demands: Dict[VnfKind, float], base_processing_ms: float = 1.0,
                 flow_size_mb: float = 0.01, congestion_penalty_ms: float = 10000.0):
        self.topology = topology
        self.pattern = pattern
        self.cpu_demands = dict(cpu_demands)
        self.base_processing_ms = base_processing_ms
        self.flow_size_mb = flow_size_mb
        self.congestion_penalty_ms = congestion_penalty_ms
        self._rates = np.array(pattern.rates, dtype=float)

    def unit_loads(self, eg: EmbeddingGraph) -> UnitLoads:
        """Host CPU and link bandwidth an EG needs per request/s."""
        host_load: Dict[NodeId, float] = defaultdict(float)
        link_load: Dict[Link, float] = defaultdict(float)
        for placement in eg.peg.placements:
            host_load[placement.host] += self.cpu_demands[placement.kind]
        for u, v in eg.traversed_hops():
            link_load[self.topology.link_between(u, v)] += self.flow_size_mb
        return host_load, link_load

    def ledger_for(self, egs: Sequence[EmbeddingGraph]) -> ResourceLedger:
        """Ledger with every given EG added, without capacity checks."""
        ledger = ResourceLedger(self.topology, self.pattern)
        for eg in egs:
            ledger.add(*self.unit_loads(eg))
        return ledger

    def accept(self, egs: Sequence[EmbeddingGraph]) -> Tuple[List[EmbeddingGraph], float]:
        """
        Admit embedded EGs in sfcr_id order while peak usage fits.

        Returns:
            (accepted EGs, acceptance ratio); the ratio is 1.0 for no requests
        """
        ledger = ResourceLedger(self.topology, self.pattern)
        accepted = []
        for eg in sorted(egs, key=lambda e: e.sfcr_id):
            if not eg.embedded:
                continue
            host_load, link_load = self.unit_loads(eg)
            if ledger.fits(host_load, link_load):
                ledger.add(host_load, link_load)
                accepted.append(eg)
            else:
                logger.debug("SFCR %d not admitted: capacity exceeded at peak", eg.sfcr_id)

        ratio = len(accepted) / len(egs) if egs else 1.0
        return accepted, ratio

    def simulate_latency(self, accepted: Sequence[EmbeddingGraph],
                         total_requests: Optional[int] = None) -> EvaluationResult:
        """Online model: link delay ``prop / (1 - U)``, congested at U >= 1."""
        return self._latency(accepted, EvaluationMode.ONLINE, total_requests)

    def surrogate_latency(self, accepted: Sequence[EmbeddingGraph],
                          total_requests: Optional[int] = None) -> EvaluationResult:
        """Surrogate model: link delay ``prop * (1 + U)``, never congested."""
        return self._latency(accepted, EvaluationMode.SURROGATE, total_requests)

    def evaluate(self, egs: Sequence[EmbeddingGraph], mode: EvaluationMode) -> EvaluationResult:
        """Admission followed by the latency model of ``mode``."""
        accepted, _ = self.accept(egs)
        if mode == EvaluationMode.ONLINE:
            return self.simulate_latency(accepted, len(egs))
        return self.surrogate_latency(accepted, len(egs))

    def link_delay(self, propagation_delay: float, utilisation: np.ndarray,
                   mode: EvaluationMode) -> np.ndarray:
        """Per-timestep delay of one link traversal; inf where the online model saturates."""
        utilisation = np.asarray(utilisation, dtype=float)
        if mode == EvaluationMode.SURROGATE:
            return propagation_delay * (1.0 + utilisation)
        with np.errstate(divide="ignore"):
            delay = propagation_delay / (1.0 - utilisation)
        return np.where(utilisation >= 1.0, np.inf, delay)

    def _latency(self, accepted: Sequence[EmbeddingGraph], mode: EvaluationMode,
                 total_requests: Optional[int]) -> EvaluationResult:
        total = len(accepted) if total_requests is None else total_requests
        accepted = sorted(accepted, key=lambda e: e.sfcr_id)
        ratio = len(accepted) / total if total else 1.0
        ids = tuple(eg.sfcr_id for eg in accepted)

        if not accepted:
            latency = self.congestion_penalty_ms if total else 0.0
            return EvaluationResult(acceptance_ratio=ratio, avg_latency=latency,
                                    per_sfc_latency=(), mode=mode, total_requests=total)

        ledger = self.ledger_for(accepted)
        rates = self._rates
        weight = rates.sum()
        host_cpu = self.topology.host_cpu

        breakdown = []
        any_congested = False
        for eg in accepted:
            processing = 0.0
            for placement in eg.peg.placements:
                demand = self.cpu_demands[placement.kind]
                share = min(1.0, host_cpu * demand / ledger.host_load[placement.host])
                processing += self.base_processing_ms / share

            link_ms = np.zeros_like(rates)
            for u, v in eg.traversed_hops():
                link = self.topology.link_between(u, v)
                utilisation = ledger.link_load[link] * rates / link.bandwidth
                link_ms = link_ms + self.link_delay(link.propagation_delay, utilisation, mode)

            congested = bool(np.any(np.isinf(link_ms)))
            if congested:
                any_congested = True
                breakdown.append(SfcLatency(eg.sfcr_id, self.congestion_penalty_ms,
                                            processing, self.congestion_penalty_ms, True))
                continue

            link_avg = float((rates * link_ms).sum() / weight) if weight > 0 else float(link_ms.mean())
            breakdown.append(SfcLatency(eg.sfcr_id, processing + link_avg, processing, link_avg))

        per_sfc = tuple(b.latency_ms for b in breakdown)
        if any_congested:
            logger.debug("Congestion on a used link; latency set to the %.0f ms penalty",
                         self.congestion_penalty_ms)
            avg = self.congestion_penalty_ms
        else:
            avg = float(np.mean(per_sfc))

        return EvaluationResult(
            acceptance_ratio=ratio,
            avg_latency=avg,
            per_sfc_latency=per_sfc,
            mode=mode,
            congested=any_congested,
            accepted_ids=ids,
            total_requests=total,
            breakdown=tuple(breakdown),
        )
