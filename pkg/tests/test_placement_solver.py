import math

import numpy as np
import pytest

from src.domain.models.embedding import ChainVnf, ForwardingGraph
from src.domain.models.workload import VnfKind
from src.domain.services.placement_solver import PlacementSolver, resolve_host
from src.domain.services.predictor_service import FeatureUniverse, PredictorService


def reference_host(mean, sample, n_hosts):
    if mean <= 0:
        return None
    floored = math.floor(sample)
    remainder = abs(floored) % n_hosts
    if floored < 0:
        remainder = -remainder
    return remainder + n_hosts if remainder < 0 else remainder


@pytest.mark.parametrize("mean, sample, expected", [
    (3.2, 3.7, 3),
    (3.2, 17.4, 1),
    (0.5, -0.3, 15),
    (0.5, -17.0, 15),
    (0.0, 5.0, None),
    (-4.0, 5.0, None),
])
def test_resolve_host_examples(mean, sample, expected):
    assert resolve_host(mean, sample, 16) == expected


def test_resolve_host_matches_reference():
    rng = np.random.default_rng(42)
    for _ in range(10000):
        n_hosts = int(rng.choice([2, 16, 54]))
        mean = rng.uniform(-n_hosts, n_hosts)
        sample = rng.normal(mean, 2.0)
        host = resolve_host(mean, sample, n_hosts)

        assert host == reference_host(mean, sample, n_hosts)
        assert host is None or 0 <= host < n_hosts


def make_solver(k4_topology, n_sfcrs=1):
    service = PredictorService()
    universe = FeatureUniverse.for_scenario(n_sfcrs, k4_topology)
    predictors = service.build_predictors(universe, k4_topology.n_hosts, seed=7)
    return PlacementSolver(universe, service), service, predictors


def chain(*kinds):
    return ForwardingGraph(sfcr_id=0, ordered_vnfs=tuple(ChainVnf(k) for k in kinds))


def test_zero_genes_reject_every_vnf(k4_topology):
    solver, service, predictors = make_solver(k4_topology)
    hmhp = service.bind(predictors.hmhp, (0.0, 0.0))

    peg = solver.embed_vnfs(chain(VnfKind.LOAD_BALANCER, VnfKind.WEB_APP_FIREWALL), hmhp,
                            k4_topology, np.random.default_rng(0))

    assert peg.has_rejection
    assert peg.hosts == [None, None]
    assert peg.mean_hosts == (0.0, 0.0)


def test_placements_align_with_chain(k4_topology):
    solver, service, predictors = make_solver(k4_topology)
    fg = chain(VnfKind.HTTP_ACCELERATOR, VnfKind.TRAFFIC_MONITOR, VnfKind.LOAD_BALANCER)
    rng = np.random.default_rng(9)

    for _ in range(200):
        hmhp = service.bind(predictors.hmhp, rng.uniform(-math.pi, math.pi, 2))
        peg = solver.embed_vnfs(fg, hmhp, k4_topology, rng)

        assert [p.kind for p in peg.placements] == fg.kinds
        for placement, mean in zip(peg.placements, peg.mean_hosts):
            assert placement.rejected == (mean <= 0)
            assert placement.rejected or placement.host.is_host


def test_same_stream_same_placement(k4_topology):
    solver, service, predictors = make_solver(k4_topology)
    hmhp = service.bind(predictors.hmhp, (2.0, -1.0))
    fg = chain(VnfKind.LOAD_BALANCER, VnfKind.TRAFFIC_MONITOR, VnfKind.WEB_APP_FIREWALL)

    first = solver.embed_vnfs(fg, hmhp, k4_topology, np.random.default_rng(5))
    second = solver.embed_vnfs(fg, hmhp, k4_topology, np.random.default_rng(5))

    assert first == second


def test_sigma_must_be_positive(k4_topology):
    service = PredictorService()
    with pytest.raises(ValueError):
        PlacementSolver(FeatureUniverse.for_scenario(1, k4_topology), service, sigma=0.0)
