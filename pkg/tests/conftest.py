"""Shared fixtures: small fat-trees, the SFCR catalog, traffic and simulators."""

import pytest

from src.domain.models.workload import TrafficVariant
from src.domain.services.netsim_service import FlowSimulator
from src.domain.services.topology_service import TopologyService
from src.domain.services.workload_service import WorkloadService


@pytest.fixture
def topology_service():
    return TopologyService()


@pytest.fixture
def workload_service():
    return WorkloadService()


@pytest.fixture
def k2_topology(topology_service):
    return topology_service.generate_fat_tree(2, host_cpu=2.0, link_bandwidth=10.0, host_memory=5.0)


@pytest.fixture
def k4_topology(topology_service):
    return topology_service.generate_fat_tree(4, host_cpu=2.0, link_bandwidth=10.0, host_memory=5.0)


@pytest.fixture
def catalog(workload_service):
    return workload_service.catalog_sfcrs()


@pytest.fixture
def pattern_a(workload_service):
    return workload_service.traffic_pattern(TrafficVariant.A, 1)


@pytest.fixture
def k4_simulator(k4_topology, pattern_a, workload_service):
    return FlowSimulator(k4_topology, pattern_a, workload_service.cpu_demands)


@pytest.fixture
def results_dir(tmp_path, monkeypatch):
    """Empty results root; the working directory moves there too."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("GENESIS_RESULTS_DIR", raising=False)
    root = tmp_path / "results"
    root.mkdir()
    return root
