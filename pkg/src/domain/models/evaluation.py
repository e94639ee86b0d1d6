"""Fitness evaluation results and the per-evaluation resource ledger."""

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple

from .topology import Link, NodeId, Topology
from .workload import TrafficPattern

CAPACITY_TOLERANCE = 1e-9


class EvaluationMode(Enum):
    """Fidelity tier of a fitness evaluation."""
    SURROGATE = "surrogate"
    ONLINE = "online"


@dataclass(frozen=True)
class SfcLatency:
    """Traffic-weighted latency of one accepted SFC and its components."""

    sfcr_id: int
    latency_ms: float
    processing_ms: float
    link_ms: float
    congested: bool = False


@dataclass(frozen=True)
class EvaluationResult:
    """Fitness pair (acceptance ratio, average traffic latency) plus diagnostics."""

    acceptance_ratio: float
    avg_latency: float
    per_sfc_latency: Tuple[float, ...]
    mode: EvaluationMode
    congested: bool = False
    accepted_ids: Tuple[int, ...] = ()
    total_requests: int = 0
    breakdown: Tuple[SfcLatency, ...] = field(default=(), compare=False)

    @property
    def accepted_count(self) -> int:
        return len(self.accepted_ids)

    @property
    def objectives(self) -> Tuple[float, float]:
        """Both objectives as minimisation targets."""
        return (-self.acceptance_ratio, self.avg_latency)


@dataclass
class ResourceLedger:
    """Host CPU and link bandwidth usage of admitted embeddings.

    Loads are stored per unit of traffic (one request/s); usage at a
    timestep is the unit load times the pattern's rate there.
    """

    topology: Topology
    pattern: TrafficPattern
    host_load: Dict[NodeId, float] = field(default_factory=lambda: defaultdict(float))
    link_load: Dict[Link, float] = field(default_factory=lambda: defaultdict(float))

    def fits(self, host_load: Dict[NodeId, float], link_load: Dict[Link, float]) -> bool:
        """Whether adding the given unit loads keeps peak usage within capacity."""
        peak = self.pattern.peak_rate
        for host, load in host_load.items():
            if (self.host_load[host] + load) * peak > self.topology.host_cpu + CAPACITY_TOLERANCE:
                return False
        for link, load in link_load.items():
            if (self.link_load[link] + load) * peak > link.bandwidth + CAPACITY_TOLERANCE:
                return False
        return True

    def add(self, host_load: Dict[NodeId, float], link_load: Dict[Link, float]) -> None:
        for host, load in host_load.items():
            self.host_load[host] += load
        for link, load in link_load.items():
            self.link_load[link] += load

    def host_cpu_at(self, host: NodeId, timestep: int) -> float:
        return self.host_load.get(host, 0.0) * self.pattern.rate(timestep)

    def link_bw_at(self, link: Link, timestep: int) -> float:
        return self.link_load.get(link, 0.0) * self.pattern.rate(timestep)

    def violations(self, timestep: int) -> List[str]:
        """Capacity violations at ``timestep``; empty when everything fits."""
        problems = []
        for host in self.host_load:
            used = self.host_cpu_at(host, timestep)
            if used > self.topology.host_cpu + CAPACITY_TOLERANCE:
                problems.append(f"host {host}: {used:.4f} CPU > {self.topology.host_cpu}")
        for link in self.link_load:
            used = self.link_bw_at(link, timestep)
            if used > link.bandwidth + CAPACITY_TOLERANCE:
                problems.append(f"link {link}: {used:.4f} MB/s > {link.bandwidth}")
        return problems
