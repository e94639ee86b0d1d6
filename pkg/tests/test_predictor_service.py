import math

import numpy as np
import pytest

from src.domain.exceptions.domain_exceptions import EncodingError, ShapeError
from src.domain.models.embedding import ForwardingGraph
from src.domain.models.predictor import GENOME_LENGTH, Genome, PredictorSpec
from src.domain.models.workload import SfcRequest, VnfKind
from src.domain.services.chain_solver import order_by_priority
from src.domain.services.predictor_service import FeatureUniverse, PredictorService
from tests.helpers import edge, host


@pytest.fixture
def service():
    return PredictorService()


def spec(weights, amplitude=1.0):
    weights = np.array(weights, dtype=float)
    return PredictorSpec("T", weights.shape[0], weights, seed=0, amplitude=amplitude)


def test_zero_genes_give_zero(service):
    assert service.forward(spec([[1.0, -2.0], [0.5, 0.5]]), (0.0, 0.0), [1, 1]) == 0.0


def test_amplitude_scales_output(service):
    hmhp = spec([[math.pi / 2, 0.0]], amplitude=16)

    assert service.forward(hmhp, (math.pi / 2, 0.0), [1.0]) == pytest.approx(16.0)


def test_hand_computed_forward(service):
    weights = [[0.1, 0.2], [0.3, 0.4], [0.5, 0.6]]
    h1 = math.sin(0.1 + 0.5)
    h2 = math.sin(0.2 + 0.6)
    expected = math.sin(0.7 * h1 - 1.3 * h2)

    assert service.forward(spec(weights), (0.7, -1.3), [1, 0, 1]) == pytest.approx(expected, abs=1e-12)


def test_forward_rejects_wrong_width(service):
    with pytest.raises(ShapeError):
        service.forward(spec([[1.0, 1.0]] * 3), (1.0, 1.0), [1.0, 0.0])


def test_forward_is_pure_and_bounded(service):
    rng = np.random.default_rng(3)
    predictor = spec(rng.uniform(-math.pi, math.pi, (10, 2)), amplitude=4)
    for _ in range(200):
        genes = tuple(rng.uniform(-10, 10, 2))
        x = rng.integers(0, 2, 10).astype(float)
        first = service.forward(predictor, genes, x)
        assert first == service.forward(predictor, genes, x)
        assert -4.0 <= first <= 4.0


@pytest.mark.parametrize("n_sfcrs", [8, 32, 48])
@pytest.mark.parametrize("k", [2, 4])
def test_genome_length_is_independent_of_problem_size(service, topology_service, n_sfcrs, k):
    topology = topology_service.generate_fat_tree(k, 1.0, 5.0, 5.0)
    universe = FeatureUniverse.for_scenario(n_sfcrs, topology)
    predictors = service.build_predictors(universe, topology.n_hosts, seed=7)

    assert predictors.hvpp.fixed_weights.shape == (n_sfcrs + 4, 2)
    assert predictors.hmhp.fixed_weights.shape == (n_sfcrs + 5, 2)
    assert predictors.hlcp.fixed_weights.shape == (n_sfcrs + 2 * topology.n_nodes, 2)
    assert predictors.hmhp.amplitude == topology.n_hosts
    assert len(Genome((0.0,) * GENOME_LENGTH)) == 6


def test_build_predictors_is_seeded(service, k4_topology):
    universe = FeatureUniverse.for_scenario(8, k4_topology)
    first = service.build_predictors(universe, 16, seed=7)

    assert first == service.build_predictors(universe, 16, seed=7)
    assert first.seeds == (7, 8, 9)
    assert np.all(np.abs(first.hlcp.fixed_weights) <= math.pi)
    assert first != service.build_predictors(universe, 16, seed=8)


def test_hvpp_encoding(service):
    universe = FeatureUniverse(n_sfcrs=3)
    request = SfcRequest(id=1, vnfs=(VnfKind.LOAD_BALANCER, VnfKind.WEB_APP_FIREWALL))

    x = service.encode_hvpp_input(request, VnfKind.WEB_APP_FIREWALL, universe)

    assert x.tolist() == [0, 1, 0, 0, 1, 0, 0]


def test_hmhp_encoding(service):
    universe = FeatureUniverse(n_sfcrs=2)
    fg = ForwardingGraph(sfcr_id=0, ordered_vnfs=())

    x = service.encode_hmhp_input(fg, VnfKind.TRAFFIC_MONITOR, 1, universe)

    assert x.tolist() == [1, 0, 0, 0, 0, 1, 1]
    with pytest.raises(EncodingError):
        service.encode_hmhp_input(fg, VnfKind.TRAFFIC_MONITOR, -1, universe)


def test_hlcp_encoding(service, k2_topology):
    universe = FeatureUniverse.for_scenario(2, k2_topology)

    x = service.encode_hlcp_input(1, host(0), edge(1), universe)

    assert len(x) == 2 + 2 * k2_topology.n_nodes
    assert x.sum() == 3
    assert x[1] == 1
    assert x[2 + k2_topology.position(host(0))] == 1
    assert x[2 + k2_topology.n_nodes + k2_topology.position(edge(1))] == 1


def test_out_of_range_ids(service, k2_topology):
    universe = FeatureUniverse.for_scenario(2, k2_topology)
    request = SfcRequest(id=2, vnfs=(VnfKind.LOAD_BALANCER,))

    with pytest.raises(EncodingError):
        service.encode_hvpp_input(request, VnfKind.LOAD_BALANCER, universe)
    with pytest.raises(EncodingError):
        service.encode_hlcp_input(0, host(0), host(9), universe)


def test_placement_spread(service):
    assert service.placement_spread([host(0), host(1), host(0), None]) == 2
    assert service.placement_spread([]) == 0


def test_sine_orders_vnfs_more_diversely_than_relu(service):
    """Sign test over random genomes: sine gives more distinct chains than ReLU."""
    vnfs = (VnfKind.HTTP_ACCELERATOR, VnfKind.TRAFFIC_MONITOR,
            VnfKind.LOAD_BALANCER, VnfKind.WEB_APP_FIREWALL)
    requests = [SfcRequest(id=i, vnfs=vnfs) for i in range(8)]
    universe = FeatureUniverse(n_sfcrs=8)
    hvpp = service.build_predictors(universe, 1, seed=11).hvpp
    rng = np.random.default_rng(5)

    def distinct(genes, forward):
        orderings = []
        for request in requests:
            priorities = [forward(hvpp, genes, service.encode_hvpp_input(request, v, universe))
                          for v in request.vnfs]
            orderings.append([c.kind for c in order_by_priority(request.vnfs, priorities)])
        return service.distinct_orderings(orderings)

    wins = losses = 0
    for _ in range(100):
        genes = tuple(rng.uniform(-math.pi, math.pi, 2))
        sine = distinct(genes, service.forward)
        relu = distinct(genes, service.forward_relu)
        wins += sine > relu
        losses += relu > sine

    n = wins + losses
    p_value = sum(math.comb(n, i) for i in range(wins, n + 1)) / 2 ** n
    assert p_value < 0.01
