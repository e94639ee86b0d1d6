"""Use case for summarising persisted runs per algorithm."""

import time
from typing import List, Sequence

import pandas as pd

from src.application.dto.run_request import ReportRequest
from src.application.dto.run_response import ReportResponse
from src.domain.models.experiment import RunRecord, Scenario
from src.infrastructure.config.paths import PathManager
from src.infrastructure.data.repositories.results_repository import ResultsRepository
from src.shared.constants.app_constants import (
    FileNames, ScenarioGrid, SummaryColumns as Col, ValidationMessages
)
from src.shared.utils.export_utils import ExportService


def format_convergence(converged: int, total: int) -> str:
    """``c/n (p%)``"""
    percent = 100.0 * converged / total if total else 0.0
    return f"{converged}/{total} ({percent:.0f}%)"


class GenerateReportUseCase:
    """Use case for building the convergence summary of a results directory."""

    def __init__(self):
        self.export_service = ExportService()

    def execute(self, request: ReportRequest) -> ReportResponse:
        """
        Execute the report generation use case.

        Args:
            request: Report request

        Returns:
            Report response with the summary frame and written files
        """
        start_time = time.time()
        response = ReportResponse(success=True)

        try:
            request.validate()
            repository = ResultsRepository(PathManager(request.input_directory))
            records = repository.load_records(request.input_directory)
            if not records:
                response.add_error(ValidationMessages.NO_RECORDS.format(request.input_directory))
                return response

            response.summary = self.summarise(records)
            response.stage2_eligible = self.stage2_eligible(records)

            output_dir = request.output_directory or request.input_directory
            files = self.export_service.write_summary(
                response.summary,
                output_dir / FileNames.SUMMARY_CSV,
                output_dir / FileNames.SUMMARY_TEXT,
                output_dir / FileNames.SUMMARY_XLSX,
            )
            for file_path in files:
                response.add_generated_file(file_path)

        except Exception as e:
            response.add_error(f"Report generation failed: {str(e)}")

        finally:
            response.execution_time_seconds = time.time() - start_time

        return response

    def summarise(self, records: Sequence[RunRecord]) -> pd.DataFrame:
        """One row per algorithm, sorted by algorithm name."""
        if not records:
            raise ValueError("At least one run record is required")

        df = pd.DataFrame([
            {
                "algorithm": r.algorithm,
                "converged": r.converged,
                "generations": r.generations_used,
                "wall_time": r.wall_time_seconds,
                "gap": r.fidelity_gap_ms,
            }
            for r in records
        ])
        eligible = set(self.stage2_eligible(records))

        rows = []
        for algorithm, group in df.groupby("algorithm", sort=True):
            rows.append({
                Col.ALGORITHM: algorithm,
                Col.RUNS: len(group),
                Col.CONVERGED: format_convergence(int(group["converged"].sum()), len(group)),
                Col.MEAN_GENERATIONS: float(group["generations"].mean()),
                Col.MIN_GENERATIONS: int(group["generations"].min()),
                Col.MAX_GENERATIONS: int(group["generations"].max()),
                Col.MEAN_WALL_TIME: float(group["wall_time"].mean()),
                Col.MIN_WALL_TIME: float(group["wall_time"].min()),
                Col.MAX_WALL_TIME: float(group["wall_time"].max()),
                Col.MEAN_FIDELITY_GAP: float(group["gap"].mean()),
                Col.STAGE2_ELIGIBLE: algorithm in eligible,
            })
        return pd.DataFrame(rows, columns=Col.ALL)

    def stage2_eligible(self, records: Sequence[RunRecord]) -> List[str]:
        """Algorithms that converged in at least one stage-1 scenario."""
        stage1 = ScenarioGrid.STAGE_SFCRS[1]
        return sorted({
            r.algorithm for r in records
            if r.converged and self._n_sfcrs(r.scenario) == stage1
        })

    @staticmethod
    def _n_sfcrs(name: str) -> int:
        try:
            return Scenario.parse(name).n_sfcrs
        except ValueError:
            return -1
