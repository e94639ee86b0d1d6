import math

import numpy as np
import pytest

from src.domain.models.evaluation import EvaluationMode
from src.domain.models.predictor import Genome
from src.domain.models.workload import TrafficPattern, TrafficVariant, VnfKind
from src.domain.services.decoder_service import DecoderService
from src.domain.services.netsim_service import FlowSimulator
from tests.helpers import edge, host, make_eg

LB = VnfKind.LOAD_BALANCER
WAF = VnfKind.WEB_APP_FIREWALL


def lb_waf(sfcr_id=0):
    """LB on h0 and WAF on h1, both below e0: three link traversals."""
    return make_eg(sfcr_id, [(LB, host(0)), (WAF, host(1))],
                   [(edge(0), host(0)), (host(0), edge(0), host(1))])


def constant(rate):
    return TrafficPattern(samples=((0, rate),))


def test_idle_chain_latency(k4_topology, workload_service):
    simulator = FlowSimulator(k4_topology, constant(1e-6), workload_service.cpu_demands)

    result = simulator.simulate_latency([lb_waf()])

    assert result.avg_latency == pytest.approx(2.3, abs=1e-6)
    assert result.breakdown[0].processing_ms == pytest.approx(2.0)
    assert result.breakdown[0].link_ms == pytest.approx(0.3, abs=1e-6)
    assert not result.congested


def test_sharing_links_increases_latency(k4_simulator):
    alone = k4_simulator.simulate_latency([lb_waf(0)])
    shared = k4_simulator.simulate_latency([lb_waf(0), lb_waf(1)])

    assert shared.per_sfc_latency[0] > alone.per_sfc_latency[0]
    assert shared.per_sfc_latency[0] == pytest.approx(shared.per_sfc_latency[1])


def test_saturated_link_is_congested(topology_service, workload_service):
    topology = topology_service.generate_fat_tree(4, host_cpu=2.0, link_bandwidth=1.0,
                                                  host_memory=5.0)
    simulator = FlowSimulator(topology, constant(100.0), workload_service.cpu_demands)
    eg = make_eg(0, [(LB, host(0))], [(edge(0), host(0)), (host(0), edge(0))])

    online = simulator.simulate_latency([eg])
    surrogate = simulator.surrogate_latency([eg])

    assert online.congested
    assert online.avg_latency == simulator.congestion_penalty_ms
    assert not surrogate.congested
    assert surrogate.avg_latency < simulator.congestion_penalty_ms


def test_link_delay_models(k4_simulator):
    utilisation = np.array([0.0, 0.5, 0.9])

    surrogate = k4_simulator.link_delay(0.1, utilisation, EvaluationMode.SURROGATE)
    online = k4_simulator.link_delay(0.1, utilisation, EvaluationMode.ONLINE)

    assert surrogate.tolist() == pytest.approx([0.1, 0.15, 0.19])
    assert online.tolist() == pytest.approx([0.1, 0.2, 1.0])
    assert np.all(surrogate <= online)
    assert math.isinf(k4_simulator.link_delay(0.1, 1.0, EvaluationMode.ONLINE))


def test_over_capacity_vnf_is_not_admitted(topology_service, workload_service):
    topology = topology_service.generate_fat_tree(4, host_cpu=0.5, link_bandwidth=10.0,
                                                  host_memory=5.0)
    pattern = workload_service.traffic_pattern(TrafficVariant.A, 2)
    simulator = FlowSimulator(topology, pattern, workload_service.cpu_demands)
    eg = make_eg(0, [(WAF, host(0))], [(edge(0), host(0)), (host(0), edge(0))])

    accepted, ratio = simulator.accept([eg])

    assert accepted == []
    assert ratio == 0.0


def test_acceptance_ratio_counts_all_requests(k4_simulator):
    egs = [make_eg(i, [(LB, host(i % 16))], [(host(i % 16),), (host(i % 16),)])
           for i in range(24)]
    egs += [make_eg(24 + i, [(LB, None)]) for i in range(8)]

    result = k4_simulator.evaluate(egs, EvaluationMode.ONLINE)

    assert result.acceptance_ratio == 0.75
    assert result.accepted_ids == tuple(range(24))
    assert result.total_requests == 32


def test_admission_follows_sfcr_id(topology_service, workload_service, pattern_a):
    topology = topology_service.generate_fat_tree(4, host_cpu=0.4, link_bandwidth=10.0,
                                                  host_memory=5.0)
    simulator = FlowSimulator(topology, pattern_a, workload_service.cpu_demands)
    egs = [make_eg(i, [(WAF, host(0))], [(host(0),), (host(0),)]) for i in (2, 0, 1)]

    accepted, ratio = simulator.accept(egs)

    assert [eg.sfcr_id for eg in accepted] == [0]
    assert ratio == pytest.approx(1 / 3)


def test_no_requests(k4_simulator):
    result = k4_simulator.evaluate([], EvaluationMode.ONLINE)

    assert result.acceptance_ratio == 1.0
    assert result.avg_latency == 0.0


def test_nothing_accepted_gets_penalty(k4_simulator):
    result = k4_simulator.evaluate([make_eg(0, [(LB, None)])], EvaluationMode.SURROGATE)

    assert result.acceptance_ratio == 0.0
    assert result.avg_latency == k4_simulator.congestion_penalty_ms


def test_removing_a_chain_never_slows_the_others(k4_simulator):
    egs = [lb_waf(0), lb_waf(1), make_eg(2, [(WAF, host(1))], [(edge(0), host(1))])]

    full = k4_simulator.simulate_latency(egs)
    reduced = k4_simulator.simulate_latency(egs[:2])

    for before, after in zip(full.per_sfc_latency[:2], reduced.per_sfc_latency):
        assert after <= before


def test_surrogate_never_exceeds_online(k4_simulator):
    egs = [lb_waf(i) for i in range(4)]

    assert (k4_simulator.surrogate_latency(egs).avg_latency <=
            k4_simulator.simulate_latency(egs).avg_latency)


def test_evaluation_is_deterministic(k4_simulator):
    egs = [lb_waf(0), lb_waf(1)]

    assert (k4_simulator.evaluate(egs, EvaluationMode.ONLINE) ==
            k4_simulator.evaluate(egs, EvaluationMode.ONLINE))


def test_admitted_load_never_exceeds_capacity(topology_service, workload_service):
    topology = topology_service.generate_fat_tree(4, host_cpu=0.5, link_bandwidth=5.0,
                                                  host_memory=5.0)
    pattern = workload_service.traffic_pattern(TrafficVariant.B, 2)
    simulator = FlowSimulator(topology, pattern, workload_service.cpu_demands)
    requests = workload_service.replicate(workload_service.catalog_sfcrs(), 8)
    decoder = DecoderService.for_scenario(topology, requests, predictor_seed=7)
    rng = np.random.default_rng(6)

    for _ in range(30):
        genome = Genome.from_array(rng.uniform(-math.pi, math.pi, 6))
        accepted, _ = simulator.accept(decoder.decode(genome, int(rng.integers(0, 1000))))
        ledger = simulator.ledger_for(accepted)
        assert all(not ledger.violations(t) for t in range(pattern.period))
