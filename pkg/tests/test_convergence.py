"""Desk-scale convergence and baseline comparison runs (``pytest -m slow``)."""

import itertools
import statistics

import numpy as np
import pytest

from src.domain.models.evaluation import EvaluationMode
from src.domain.models.evolution import EvolutionConfig
from src.domain.models.predictor import Genome
from src.domain.models.workload import TrafficVariant
from src.domain.services.bega_service import BegaService
from src.domain.services.decoder_service import DecoderService
from src.domain.services.evolution_service import EvolutionService, GenesisOperators
from src.domain.services.gda_service import GdaService
from src.domain.services.netsim_service import FlowSimulator
from src.domain.services.topology_service import TopologyService
from src.domain.services.workload_service import WorkloadService

pytestmark = pytest.mark.slow

SEEDS = (1, 2, 3, 4, 5)
GRID = np.linspace(-np.pi, np.pi, 11)


@pytest.fixture(scope="module")
def desk_scenario():
    """8 SFCRs on a k=4 fat-tree with 4 CPU hosts and 20 MB/s links, traffic A at scale 1."""
    workload = WorkloadService()
    topology = TopologyService().generate_fat_tree(4, host_cpu=4.0, link_bandwidth=20.0,
                                                   host_memory=5.0)
    requests = workload.replicate(workload.catalog_sfcrs(), 2)
    pattern = workload.traffic_pattern(TrafficVariant.A, 1)
    simulator = FlowSimulator(topology, pattern, workload.cpu_demands)
    decoder = DecoderService.for_scenario(topology, requests, predictor_seed=7)
    return topology, requests, simulator, decoder


def feasible_genome(decoder, simulator, cfg):
    """First genome of the coarse sweep that meets both thresholds online, if any."""
    for hvpp, hmhp_1, hmhp_2 in itertools.product(GRID, repeat=3):
        genome = Genome((hvpp, 0.0, hmhp_1, hmhp_2, 0.0, 0.0))
        egs = decoder.decode(genome, 0)
        if not all(eg.embedded for eg in egs):
            continue
        if EvolutionService.meets_thresholds(simulator.evaluate(egs, EvaluationMode.ONLINE), cfg):
            return genome
    return None


@pytest.fixture(scope="module")
def feasible(desk_scenario):
    _, _, simulator, decoder = desk_scenario
    genome = feasible_genome(decoder, simulator, EvolutionConfig())
    if genome is None:
        pytest.fail("no genome on the coarse sweep meets the thresholds on the desk scenario")
    return genome


def test_desk_scenario_is_feasible(feasible):
    assert len(feasible.genes) == 6


@pytest.fixture(scope="module")
def genesis_outcomes(desk_scenario):
    _, _, simulator, decoder = desk_scenario
    return [EvolutionService(simulator).evolve_hybrid(
        EvolutionConfig(population_size=100, max_generations=50, seed=seed),
        GenesisOperators(decoder)) for seed in SEEDS]


@pytest.fixture(scope="module")
def bega_outcomes(desk_scenario):
    topology, requests, simulator, _ = desk_scenario
    return [BegaService(topology, requests, simulator).evolve(
        EvolutionConfig(population_size=100, max_generations=50, seed=seed)) for seed in SEEDS]


def test_genesis_converges_on_desk_scenario(desk_scenario, feasible, genesis_outcomes):
    _, _, simulator, decoder = desk_scenario

    assert sum(o.converged for o in genesis_outcomes) >= 4
    for outcome in genesis_outcomes:
        if not outcome.converged:
            continue
        egs = decoder.decode(outcome.best.genome, outcome.best.decode_seed)
        online = simulator.evaluate(egs, EvaluationMode.ONLINE)
        assert online.acceptance_ratio == 1.0
        assert online.avg_latency <= 100.0


def test_greedy_needs_far_fewer_evaluations(desk_scenario, genesis_outcomes, bega_outcomes):
    topology, requests, simulator, _ = desk_scenario
    gda = GdaService(topology, requests, simulator).embed()

    for outcome in genesis_outcomes + bega_outcomes:
        assert outcome.evaluations >= 100 * gda.evaluations


def test_genesis_converges_in_fewer_generations_than_bega(feasible, genesis_outcomes,
                                                          bega_outcomes):
    genesis_median = statistics.median(o.generations_used for o in genesis_outcomes)
    bega_median = statistics.median(o.generations_used for o in bega_outcomes)

    assert genesis_median < bega_median, (genesis_median, bega_median)
