"""Service for the VNF catalog, SFCR templates and traffic patterns."""

import logging
from collections import defaultdict
from typing import Dict, List, Optional

import numpy as np

from src.domain.exceptions.domain_exceptions import ConfigurationError
from src.domain.models.workload import SfcRequest, TrafficPattern, TrafficVariant, VnfKind

logger = logging.getLogger(__name__)

DEFAULT_TEMPLATES = "LB>WAF;HA>LB>WAF;HA>TM>LB>WAF;LB>TM>WAF"

DEFAULT_CPU_DEMANDS: Dict[VnfKind, float] = {
    VnfKind.LOAD_BALANCER: 0.002,
    VnfKind.WEB_APP_FIREWALL: 0.004,
    VnfKind.HTTP_ACCELERATOR: 0.003,
    VnfKind.TRAFFIC_MONITOR: 0.001,
}


class WorkloadService:
    """Service responsible for building SFC requests and their traffic."""

    def __init__(self, templates: str = DEFAULT_TEMPLATES,
                 cpu_demands: Optional[Dict[VnfKind, float]] = None,
                 traffic_base: float = 20.0, traffic_amplitude: float = 80.0,
                 traffic_period: int = 24, traffic_peak_timestep: int = 14):
        self.templates = templates
        self.cpu_demands = dict(cpu_demands or DEFAULT_CPU_DEMANDS)
        self.traffic_base = traffic_base
        self.traffic_amplitude = traffic_amplitude
        self.traffic_period = traffic_period
        self.traffic_peak_timestep = traffic_peak_timestep

        for kind in VnfKind:
            if self.cpu_demands.get(kind, 0.0) <= 0:
                raise ConfigurationError(f"CPU demand for {kind.value} must be positive")
        if traffic_period < 2:
            raise ConfigurationError("Traffic period must be at least 2 samples")
        if traffic_base < 0 or traffic_amplitude < 0:
            raise ConfigurationError("Traffic base and amplitude cannot be negative")

    @classmethod
    def from_settings(cls, workload_config) -> "WorkloadService":
        """Build the service from a ``WorkloadConfig`` section."""
        return cls(
            templates=workload_config.templates,
            cpu_demands={
                VnfKind.LOAD_BALANCER: workload_config.cpu_demand_lb,
                VnfKind.WEB_APP_FIREWALL: workload_config.cpu_demand_waf,
                VnfKind.HTTP_ACCELERATOR: workload_config.cpu_demand_ha,
                VnfKind.TRAFFIC_MONITOR: workload_config.cpu_demand_tm,
            },
            traffic_base=workload_config.traffic_base,
            traffic_amplitude=workload_config.traffic_amplitude,
            traffic_period=workload_config.traffic_period,
            traffic_peak_timestep=workload_config.traffic_peak_timestep,
        )

    def catalog_sfcrs(self) -> List[SfcRequest]:
        """
        The SFCR templates, each with its listed order as strict order.

        Returns:
            One request per template, ids and arrival ranks 0..n-1
        """
        chains = [c for c in (part.strip() for part in self.templates.split(";")) if c]
        if not chains:
            raise ConfigurationError("At least one SFCR template is required")

        templates = []
        for template_id, chain in enumerate(chains):
            try:
                vnfs = tuple(VnfKind.from_code(code) for code in chain.split(">"))
            except ValueError as e:
                raise ConfigurationError(f"Invalid SFCR template '{chain}': {str(e)}")
            templates.append(SfcRequest(
                id=template_id,
                vnfs=vnfs,
                strict_order=vnfs,
                arrival_rank=template_id,
                template_id=template_id,
            ))
        return templates

    def replicate(self, templates: List[SfcRequest], copies: int) -> List[SfcRequest]:
        """
        Make ``copies`` of every template, interleaved round-robin.

        Args:
            templates: Templates from ``catalog_sfcrs``
            copies: Copies per template, at least 1

        Returns:
            len(templates) * copies requests; id and arrival rank both follow
            the round-robin order
        """
        if copies < 1:
            raise ConfigurationError(f"Copies must be at least 1, got {copies}")

        requests = []
        for copy in range(copies):
            for template in templates:
                request_id = copy * len(templates) + template.template_id
                requests.append(SfcRequest(
                    id=request_id,
                    vnfs=template.vnfs,
                    strict_order=template.strict_order,
                    arrival_rank=request_id,
                    template_id=template.template_id,
                ))
        requests.sort(key=lambda r: r.id)
        return requests

    def template_of(self, request: SfcRequest) -> int:
        return request.template_id

    def group_by_template(self, requests: List[SfcRequest]) -> Dict[int, List[SfcRequest]]:
        groups: Dict[int, List[SfcRequest]] = defaultdict(list)
        for request in requests:
            groups[self.template_of(request)].append(request)
        return dict(groups)

    def traffic_pattern(self, variant: TrafficVariant, scale: float = 1) -> TrafficPattern:
        """
        Synthetic diurnal request rate.

        Variant A is ``base + amplitude * (1 + cos(2*pi*(t - peak)/period)) / 2``,
        so with the defaults it peaks at 100 req/s at timestep 14 and bottoms
        out at 20 req/s. Variant B is A shifted by half a period.

        Args:
            variant: TrafficVariant.A or TrafficVariant.B
            scale: Multiplier applied to every rate

        Returns:
            TrafficPattern with ``traffic_period`` samples
        """
        if scale <= 0:
            raise ConfigurationError(f"Traffic scale must be positive, got {scale}")

        period = self.traffic_period
        t = np.arange(period)
        base_curve = self.traffic_base + self.traffic_amplitude * (
            1 + np.cos(2 * np.pi * (t - self.traffic_peak_timestep) / period)
        ) / 2

        shift = period // 2 if variant == TrafficVariant.B else 0
        rates = [float(base_curve[(i + shift) % period]) * scale for i in range(period)]

        return TrafficPattern(
            samples=tuple(enumerate(rates)),
            scale=scale,
            phase_shift=shift / period,
            variant=variant,
        )
