import numpy as np
import pytest

from src.domain.models.baseline import BinaryGenome
from src.domain.models.evaluation import EvaluationMode
from src.domain.models.evolution import EvolutionConfig
from src.domain.services.bega_service import BegaOperators, BegaService, matrix_shape, repair


@pytest.fixture
def requests(workload_service, catalog):
    return workload_service.replicate(catalog, 8)


@pytest.fixture
def operators(k4_topology, requests):
    return BegaOperators(k4_topology, requests)


def test_matrix_shape_for_32_requests(requests):
    assert matrix_shape(requests, 16) == (96, 16)


def test_repair_makes_rows_one_hot():
    rng = np.random.default_rng(0)
    matrix = np.array([[0, 0, 0], [1, 0, 1], [0, 1, 0], [1, 1, 1]])

    repaired = repair(matrix, rng)

    assert BinaryGenome(repaired).is_valid()
    assert repaired[1, 1] == 0
    assert repaired[2].tolist() == [0, 1, 0]


def test_random_genomes_are_valid(operators):
    rng = np.random.default_rng(1)
    for _ in range(20):
        genome = operators.random_genome(rng)
        assert genome.shape == (96, 16)
        assert genome.is_valid()


def test_variation_keeps_validity(operators):
    rng = np.random.default_rng(2)
    a = operators.random_genome(rng)
    b = operators.random_genome(rng)
    for _ in range(50):
        a, b = operators.crossover(a, b, rng)
        assert a.is_valid() and b.is_valid()
        a = operators.mutate(a, rng)
        assert a.is_valid()


def test_crossover_swaps_whole_rows(operators):
    rng = np.random.default_rng(3)
    a = operators.random_genome(rng)
    b = operators.random_genome(rng)

    first, second = operators.crossover(a, b, rng)

    for row in range(96):
        pair = (first.matrix[row].tolist(), second.matrix[row].tolist())
        assert pair in [(a.matrix[row].tolist(), b.matrix[row].tolist()),
                        (b.matrix[row].tolist(), a.matrix[row].tolist())]


def test_decode_follows_template_order(operators, requests, k4_topology):
    genome = operators.random_genome(np.random.default_rng(4))

    egs = operators.decode(genome, 0)

    assert [eg.sfcr_id for eg in egs] == [r.id for r in requests]
    indices = iter(genome.host_indices())
    for eg, request in zip(egs, requests):
        assert eg.embedded
        assert eg.peg.fg.kinds == list(request.vnfs)
        assert eg.peg.hosts == [k4_topology.hosts[next(indices)] for _ in request.vnfs]
        assert len(eg.paths) == len(request.vnfs) + 1


def test_bega_runs_the_hybrid_loop(k4_topology, catalog, k4_simulator):
    service = BegaService(k4_topology, catalog, k4_simulator)
    cfg = EvolutionConfig(population_size=6, max_generations=2, max_avg_latency=0.0, seed=3)

    outcome = service.evolve(cfg)

    assert not outcome.converged
    assert len(outcome.history) == 2
    assert outcome.best.genome.is_valid()
    assert outcome.best.online_fitness.mode == EvaluationMode.ONLINE
