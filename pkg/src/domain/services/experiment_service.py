"""Core orchestration service: builds scenarios and runs one algorithm on them."""

import itertools
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from src.domain.exceptions.domain_exceptions import ConfigurationError
from src.domain.models.embedding import EmbeddingGraph
from src.domain.models.evaluation import EvaluationResult
from src.domain.models.evolution import EvolutionConfig, EvolutionOutcome, GenerationRecord
from src.domain.models.experiment import Scenario
from src.domain.models.topology import Topology
from src.domain.models.workload import SfcRequest, TrafficPattern, TrafficVariant
from src.domain.services.bega_service import BegaService
from src.domain.services.decoder_service import DecoderService
from src.domain.services.evolution_service import EvolutionService, GenesisOperators
from src.domain.services.gda_service import GdaService
from src.domain.services.netsim_service import FlowSimulator
from src.domain.services.topology_service import TopologyService
from src.domain.services.workload_service import WorkloadService
from src.shared.constants.app_constants import Algorithm, ScenarioGrid

logger = logging.getLogger(__name__)


@dataclass
class ScenarioContext:
    """Everything a run needs about one scenario."""

    scenario: Scenario
    topology: Topology
    requests: List[SfcRequest]
    pattern: TrafficPattern
    simulator: FlowSimulator


@dataclass
class AlgorithmRun:
    """Final state of one algorithm run."""

    algorithm: Algorithm
    converged: bool
    generations_used: int
    egs: List[EmbeddingGraph]
    online: EvaluationResult
    surrogate: Optional[EvaluationResult] = None
    history: List[GenerationRecord] = field(default_factory=list)
    evals_surrogate: int = 0
    evals_online: int = 0
    best_genome: Optional[List] = None
    predictor_seeds: Tuple[int, ...] = ()


class ExperimentService:
    """Core service for experiment scenarios and algorithm dispatch."""

    def __init__(self):
        self.topology_service = TopologyService()

    def scenario_grid(self, stage: Optional[int] = None) -> List[Scenario]:
        """
        Cross product of the experiment factors, in a fixed order.

        Args:
            stage: 1 for the 32-SFCR half, 2 for the 48-SFCR half, None for all

        Returns:
            48 scenarios, or 24 for a single stage
        """
        sizes = ScenarioGrid.N_SFCRS
        if stage is not None:
            if stage not in ScenarioGrid.STAGE_SFCRS:
                raise ConfigurationError(f"Stage must be 1 or 2, got {stage}")
            sizes = (ScenarioGrid.STAGE_SFCRS[stage],)

        return [
            Scenario(n, scale, TrafficVariant(variant), bandwidth, cpu)
            for n, scale, variant, bandwidth, cpu in itertools.product(
                sizes,
                ScenarioGrid.TRAFFIC_SCALES,
                ScenarioGrid.TRAFFIC_VARIANTS,
                ScenarioGrid.LINK_BANDWIDTHS,
                ScenarioGrid.HOST_CPUS,
            )
        ]

    def build_context(self, scenario: Scenario, settings) -> ScenarioContext:
        """Topology, replicated requests, traffic and simulator for a scenario."""
        workload_service = WorkloadService.from_settings(settings.workload)
        topology = self.topology_service.generate_fat_tree(
            k=settings.topology.k,
            host_cpu=scenario.host_cpu,
            link_bandwidth=scenario.link_bandwidth,
            host_memory=settings.topology.host_memory_gb,
            propagation_delay=settings.topology.propagation_delay_ms,
        )
        requests = workload_service.replicate(workload_service.catalog_sfcrs(), scenario.copies)
        pattern = workload_service.traffic_pattern(scenario.traffic_variant, scenario.traffic_scale)
        simulator = FlowSimulator(
            topology,
            pattern,
            workload_service.cpu_demands,
            base_processing_ms=settings.simulator.base_processing_ms,
            flow_size_mb=settings.simulator.flow_size_mb,
            congestion_penalty_ms=settings.simulator.congestion_penalty_ms,
        )
        return ScenarioContext(scenario, topology, requests, pattern, simulator)

    def evolution_config(self, settings, seed: int,
                         population_size: Optional[int] = None) -> EvolutionConfig:
        evolution = settings.evolution
        return EvolutionConfig(
            population_size=population_size or evolution.population_size,
            max_generations=evolution.max_generations,
            min_acceptance_ratio=evolution.min_acceptance_ratio,
            max_avg_latency=evolution.max_avg_latency_ms,
            blx_alpha=evolution.blx_alpha,
            mutation_sigma=evolution.mutation_sigma,
            seed=seed,
        )

    def run_algorithm(self, algorithm: Algorithm, context: ScenarioContext, settings,
                      seed: int) -> AlgorithmRun:
        """
        Run one algorithm on a built scenario.

        Args:
            algorithm: Which optimiser to run
            context: Output of ``build_context``
            settings: Application settings (solver, evolution and bega sections)
            seed: Seed of the GA streams; GDA is deterministic and ignores it

        Returns:
            AlgorithmRun with the final embeddings and their online fitness
        """
        logger.info("Running %s on %s (seed %d)", algorithm.value, context.scenario.name, seed)
        if algorithm == Algorithm.GENESIS:
            return self._run_genesis(context, settings, seed)
        if algorithm in (Algorithm.BEGA100, Algorithm.BEGA2000):
            return self._run_bega(algorithm, context, settings, seed)
        if algorithm == Algorithm.GDA:
            return self._run_gda(context, settings)
        raise ConfigurationError(f"Unsupported algorithm: {algorithm}")

    def _run_genesis(self, context: ScenarioContext, settings, seed: int) -> AlgorithmRun:
        solver = settings.solver
        decoder = DecoderService.for_scenario(
            context.topology, context.requests, solver.predictor_seed,
            sigma=solver.placement_sigma, ingress_host=solver.ingress_host,
        )
        cfg = self.evolution_config(settings, seed)
        operators = GenesisOperators(decoder, cfg.blx_alpha, cfg.mutation_sigma)
        outcome = EvolutionService(context.simulator).evolve_hybrid(cfg, operators)
        egs = operators.decode(outcome.best.genome, outcome.best.decode_seed)
        return self._from_outcome(Algorithm.GENESIS, outcome, egs,
                                  list(outcome.best.genome.genes), decoder.predictors.seeds)

    def _run_bega(self, algorithm: Algorithm, context: ScenarioContext, settings,
                  seed: int) -> AlgorithmRun:
        population = (settings.bega.small_population_size if algorithm == Algorithm.BEGA100
                      else settings.bega.large_population_size)
        service = BegaService(context.topology, context.requests, context.simulator,
                              settings.solver.ingress_host)
        outcome = service.evolve(self.evolution_config(settings, seed, population))
        egs = service.operators.decode(outcome.best.genome, outcome.best.decode_seed)
        return self._from_outcome(algorithm, outcome, egs,
                                  outcome.best.genome.host_indices(), ())

    def _run_gda(self, context: ScenarioContext, settings) -> AlgorithmRun:
        outcome = GdaService(context.topology, context.requests, context.simulator,
                             settings.solver.ingress_host).embed()
        accepted, _ = context.simulator.accept(outcome.egs)
        # Surrogate view of the same embeddings, kept for the fidelity gap only
        surrogate = context.simulator.surrogate_latency(accepted, len(outcome.egs))
        return AlgorithmRun(
            algorithm=Algorithm.GDA,
            converged=self._meets(outcome.result, settings),
            generations_used=0,
            egs=outcome.egs,
            online=outcome.result,
            surrogate=surrogate,
            evals_online=outcome.evaluations,
        )

    @staticmethod
    def _meets(result: EvaluationResult, settings) -> bool:
        return (result.acceptance_ratio >= settings.evolution.min_acceptance_ratio and
                result.avg_latency <= settings.evolution.max_avg_latency_ms)

    @staticmethod
    def _from_outcome(algorithm: Algorithm, outcome: EvolutionOutcome,
                      egs: List[EmbeddingGraph], genome: List,
                      predictor_seeds: Tuple[int, ...]) -> AlgorithmRun:
        best = outcome.best
        return AlgorithmRun(
            algorithm=algorithm,
            converged=outcome.converged,
            generations_used=outcome.generations_used,
            egs=egs,
            online=best.online_fitness,
            surrogate=best.fitness,
            history=outcome.history,
            evals_surrogate=outcome.evals_surrogate,
            evals_online=outcome.evals_online,
            best_genome=genome,
            predictor_seeds=tuple(predictor_seeds),
        )
