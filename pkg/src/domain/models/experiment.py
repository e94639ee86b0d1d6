"""Experiment scenarios and run records."""

from dataclasses import dataclass, field
from typing import Any, Dict

from .workload import TrafficVariant


def _format_number(value: float) -> str:
    return f"{value:g}"


@dataclass(frozen=True)
class Scenario:
    """One experiment configuration, named ``{n_sfcrs}_{scale}_{variant}_{bandwidth}_{cpu}``."""

    n_sfcrs: int
    traffic_scale: int
    traffic_variant: TrafficVariant
    link_bandwidth: float
    host_cpu: float

    def __post_init__(self):
        if self.n_sfcrs < 4 or self.n_sfcrs % 4 != 0:
            raise ValueError("Number of SFCRs must be a positive multiple of 4")
        if self.traffic_scale <= 0:
            raise ValueError("Traffic scale must be positive")
        if self.link_bandwidth <= 0 or self.host_cpu <= 0:
            raise ValueError("Bandwidth and CPU must be positive")

    @property
    def name(self) -> str:
        return "_".join([
            str(self.n_sfcrs),
            str(self.traffic_scale),
            self.traffic_variant.value,
            _format_number(self.link_bandwidth),
            _format_number(self.host_cpu),
        ])

    @property
    def copies(self) -> int:
        return self.n_sfcrs // 4

    @classmethod
    def parse(cls, name: str) -> "Scenario":
        """Build a scenario from its canonical name."""
        parts = name.strip().split("_")
        if len(parts) != 5:
            raise ValueError(f"Scenario name must have 5 parts: {name}")
        try:
            return cls(
                n_sfcrs=int(parts[0]),
                traffic_scale=int(parts[1]),
                traffic_variant=TrafficVariant(parts[2].upper()),
                link_bandwidth=float(parts[3]),
                host_cpu=float(parts[4]),
            )
        except ValueError as e:
            raise ValueError(f"Invalid scenario name {name}: {str(e)}")

    def __str__(self) -> str:
        return self.name


@dataclass
class RunRecord:
    """Summary of one (scenario, algorithm, seed) run."""

    scenario: str
    algorithm: str
    seed: int
    converged: bool
    generations_used: int
    final_ar: float
    final_avg_latency: float
    evals_surrogate: int = 0
    evals_online: int = 0
    wall_time_seconds: float = 0.0
    surrogate_latency: float = 0.0
    online_latency: float = 0.0
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def fidelity_gap_ms(self) -> float:
        return abs(self.online_latency - self.surrogate_latency)

    @property
    def evaluations(self) -> int:
        return self.evals_surrogate + self.evals_online

    def to_dict(self) -> Dict[str, Any]:
        return {
            "scenario": self.scenario,
            "algorithm": self.algorithm,
            "seed": self.seed,
            "converged": self.converged,
            "generations_used": self.generations_used,
            "final_ar": self.final_ar,
            "final_avg_latency": self.final_avg_latency,
            "evals_surrogate": self.evals_surrogate,
            "evals_online": self.evals_online,
            "wall_time_seconds": self.wall_time_seconds,
            "surrogate_latency": self.surrogate_latency,
            "online_latency": self.online_latency,
            "fidelity_gap_ms": self.fidelity_gap_ms,
            "metadata": self.metadata,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunRecord":
        return cls(
            scenario=data["scenario"],
            algorithm=data["algorithm"],
            seed=int(data["seed"]),
            converged=bool(data["converged"]),
            generations_used=int(data["generations_used"]),
            final_ar=float(data["final_ar"]),
            final_avg_latency=float(data["final_avg_latency"]),
            evals_surrogate=int(data.get("evals_surrogate", 0)),
            evals_online=int(data.get("evals_online", 0)),
            wall_time_seconds=float(data.get("wall_time_seconds", 0.0)),
            surrogate_latency=float(data.get("surrogate_latency", 0.0)),
            online_latency=float(data.get("online_latency", 0.0)),
            metadata=dict(data.get("metadata", {})),
        )
