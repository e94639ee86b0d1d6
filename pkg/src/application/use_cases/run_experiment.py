"""Use case for running experiments: single runs, grid sweeps and manifest reruns."""

import logging
import time
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from src.application.dto.run_request import GridRequest, RerunRequest, RunRequest
from src.application.dto.run_response import GridResponse, RunResponse
from src.domain.models.experiment import RunRecord, Scenario
from src.domain.services.experiment_service import AlgorithmRun, ExperimentService
from src.infrastructure.config.paths import PathManager
from src.infrastructure.config.settings import ApplicationSettings
from src.infrastructure.data.repositories.results_repository import ResultsRepository
from src.shared.constants.app_constants import Algorithm, FileNames

logger = logging.getLogger(__name__)

# Levels from the manifest back to the results root: <root>/<alg>/<scenario>/<seed>/manifest.json
_MANIFEST_DEPTH = 4


class RunExperimentUseCase:
    """Use case for running one algorithm on one or many scenarios."""

    def __init__(self, experiment_service: Optional[ExperimentService] = None):
        self.experiment_service = experiment_service or ExperimentService()

    def execute(self, request: RunRequest) -> RunResponse:
        """
        Execute a single run and persist its artefacts.

        Args:
            request: Run request

        Returns:
            Run response with the RunRecord and run directory
        """
        start_time = time.time()
        response = RunResponse(success=True)

        try:
            request.validate()
            settings = self.load_settings(request.config_file, request.overrides,
                                          request.output_directory, request.debug)
            record, run_dir, _ = self._run(
                Scenario.parse(request.scenario),
                Algorithm.from_name(request.algorithm),
                request.seed,
                settings,
            )
            response.record = record
            response.run_directory = run_dir
            if not record.converged:
                response.add_warning(
                    f"{record.algorithm} did not converge on {record.scenario} (seed {record.seed})"
                )

        except Exception as e:
            response.add_error(f"Run failed: {str(e)}")

        finally:
            response.execution_time_seconds = time.time() - start_time

        return response

    def run_grid(self, request: GridRequest) -> GridResponse:
        """Run every scenario of the grid (or of one stage) for every seed."""
        start_time = time.time()
        response = GridResponse(success=True)

        try:
            request.validate()
            settings = self.load_settings(request.config_file, {}, request.output_directory,
                                          request.debug)
            algorithm = Algorithm.from_name(request.algorithm)
            # GDA is deterministic, one seed per scenario is enough
            seeds = request.seeds if algorithm.is_genetic else request.seeds[:1]

            for scenario in self.experiment_service.scenario_grid(request.stage):
                for seed in seeds:
                    try:
                        record, _, _ = self._run(scenario, algorithm, seed, settings)
                        response.records.append(record)
                    except Exception as e:
                        response.failed_runs.append(f"{scenario.name}/{seed}")
                        response.add_warning(f"{scenario.name} seed {seed} failed: {str(e)}")

            if not response.records:
                response.add_error("No run of the grid completed")

        except Exception as e:
            response.add_error(f"Grid failed: {str(e)}")

        finally:
            response.execution_time_seconds = time.time() - start_time

        return response

    def rerun(self, request: RerunRequest) -> RunResponse:
        """
        Reproduce a run from its manifest.

        The new record is compared with the stored one, ignoring wall time;
        the outcome is reported as ``metadata['reproduced']``.
        """
        start_time = time.time()
        response = RunResponse(success=True)

        try:
            request.validate()
            repository = ResultsRepository()
            manifest = repository.load_manifest(request.manifest_file)

            settings = ApplicationSettings.from_dict(manifest["settings"])
            root = request.output_directory or request.manifest_file.parents[_MANIFEST_DEPTH - 1]
            settings.directories.results = str(root)

            record_path = request.manifest_file.parent / FileNames.RECORD
            previous = repository.load_record(record_path) if record_path.exists() else None

            record, run_dir, _ = self._run(
                Scenario.parse(manifest["scenario"]),
                Algorithm.from_name(manifest["algorithm"]),
                int(manifest["seed"]),
                settings,
            )
            response.record = record
            response.run_directory = run_dir
            if previous is not None:
                reproduced = self.same_outcome(previous, record)
                response.metadata["reproduced"] = reproduced
                if not reproduced:
                    response.add_warning("Rerun differs from the stored record")

        except Exception as e:
            response.add_error(f"Rerun failed: {str(e)}")

        finally:
            response.execution_time_seconds = time.time() - start_time

        return response

    @staticmethod
    def load_settings(config_file: Optional[Path], overrides: Dict[str, Dict[str, Any]],
                      output_directory: Optional[Path], debug: bool = False) -> ApplicationSettings:
        """Defaults, then config file, then environment, then explicit overrides."""
        settings = ApplicationSettings()
        if config_file is not None:
            settings.load_file(config_file)
        if overrides:
            settings.apply_overrides(overrides)
        if output_directory is not None:
            settings.directories.results = str(output_directory)
        if debug:
            settings.debug_mode = True
        return settings

    @staticmethod
    def same_outcome(a: RunRecord, b: RunRecord) -> bool:
        """Records equal in everything but wall time."""
        first = a.to_dict()
        second = b.to_dict()
        first.pop("wall_time_seconds")
        second.pop("wall_time_seconds")
        return first == second

    def _run(self, scenario: Scenario, algorithm: Algorithm, seed: int,
             settings: ApplicationSettings) -> Tuple[RunRecord, Path, AlgorithmRun]:
        started = time.perf_counter()
        context = self.experiment_service.build_context(scenario, settings)
        result = self.experiment_service.run_algorithm(algorithm, context, settings, seed)
        wall_time = time.perf_counter() - started

        online = result.online
        surrogate = result.surrogate
        record = RunRecord(
            scenario=scenario.name,
            algorithm=algorithm.value,
            seed=seed,
            converged=result.converged,
            generations_used=result.generations_used,
            final_ar=online.acceptance_ratio,
            final_avg_latency=online.avg_latency,
            evals_surrogate=result.evals_surrogate,
            evals_online=result.evals_online,
            wall_time_seconds=wall_time,
            surrogate_latency=surrogate.avg_latency if surrogate is not None else online.avg_latency,
            online_latency=online.avg_latency,
            metadata={
                "accepted": online.accepted_count,
                "total_requests": online.total_requests,
                "congested": online.congested,
                "predictor_seeds": list(result.predictor_seeds),
            },
        )
        manifest = {
            "algorithm": algorithm.value,
            "scenario": scenario.name,
            "seed": seed,
            "predictor_seeds": list(result.predictor_seeds),
            "best_genome": result.best_genome,
            "version": settings.version,
            "settings": settings.to_dict(),
        }

        repository = ResultsRepository(PathManager(Path(settings.directories.results)))
        run_dir = repository.save_run(
            manifest, record, result.history, result.egs, online,
            topology=context.topology if settings.debug_mode else None,
        )
        logger.info("%s on %s seed %d: converged=%s, AR %.3f, latency %.2f ms",
                    algorithm.value, scenario.name, seed, record.converged,
                    record.final_ar, record.final_avg_latency)
        return record, run_dir, result
