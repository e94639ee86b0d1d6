"""Workload value objects: VNF kinds, SFC requests and traffic patterns."""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple


class VnfKind(Enum):
    """VNFs in the catalog. Declaration order is the one-hot order."""
    LOAD_BALANCER = "LB"
    WEB_APP_FIREWALL = "WAF"
    HTTP_ACCELERATOR = "HA"
    TRAFFIC_MONITOR = "TM"

    @classmethod
    def from_code(cls, code: str) -> "VnfKind":
        """Look up a kind by its short code (``LB``, ``WAF``, ...)."""
        code = code.strip().upper()
        for kind in cls:
            if kind.value == code:
                return kind
        raise ValueError(f"Unknown VNF code: {code}")

    @property
    def position(self) -> int:
        return list(VnfKind).index(self)


class TrafficVariant(Enum):
    """Traffic pattern variants; B is A shifted by half a period."""
    A = "A"
    B = "B"


@dataclass(frozen=True)
class SfcRequest:
    """A request to embed a linear service function chain."""

    id: int
    vnfs: Tuple[VnfKind, ...]
    strict_order: Tuple[VnfKind, ...] = ()
    arrival_rank: int = 0
    template_id: int = 0

    def __post_init__(self):
        if not self.vnfs:
            raise ValueError("An SFC request must contain at least one VNF")
        if len(set(self.strict_order)) != len(self.strict_order):
            raise ValueError("Strict order cannot contain duplicates")
        for vnf in self.strict_order:
            if vnf not in self.vnfs:
                raise ValueError(f"Strict-order VNF {vnf.value} is not part of the request")

    def __str__(self) -> str:
        chain = " -> ".join(v.value for v in self.vnfs)
        return f"SFCR {self.id}: {chain}"


@dataclass(frozen=True)
class TrafficPattern:
    """Request-rate samples over one period."""

    samples: Tuple[Tuple[int, float], ...]
    scale: float = 1.0
    phase_shift: float = 0.0
    variant: TrafficVariant = TrafficVariant.A

    def __post_init__(self):
        if not self.samples:
            raise ValueError("A traffic pattern needs at least one sample")
        if any(rate < 0 for _, rate in self.samples):
            raise ValueError("Traffic rates cannot be negative")

    @property
    def period(self) -> int:
        return len(self.samples)

    @property
    def rates(self) -> Tuple[float, ...]:
        return tuple(rate for _, rate in self.samples)

    def rate(self, timestep: int) -> float:
        """Rate at ``timestep``; the pattern repeats every period."""
        return self.samples[timestep % self.period][1]

    @property
    def peak_rate(self) -> float:
        return max(self.rates)

    @property
    def peak_timestep(self) -> int:
        rates = self.rates
        return rates.index(max(rates))
