"""Repository for persisted runs under the results directory."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from src.domain.exceptions.domain_exceptions import ExportError
from src.domain.models.embedding import EmbeddingGraph
from src.domain.models.evaluation import EvaluationResult
from src.domain.models.evolution import GenerationRecord
from src.domain.models.experiment import RunRecord
from src.domain.models.topology import Topology
from src.infrastructure.config.paths import PathManager, get_path_manager
from src.shared.utils.export_utils import ExportService

logger = logging.getLogger(__name__)


class ResultsRepository:
    """Repository for writing and reading run directories."""

    def __init__(self, path_manager: Optional[PathManager] = None):
        self.path_manager = path_manager or get_path_manager()
        self.export_service = ExportService()

    def save_run(self, manifest: Dict[str, Any], record: RunRecord,
                 history: Sequence[GenerationRecord], egs: Sequence[EmbeddingGraph],
                 evaluation: Optional[EvaluationResult] = None,
                 topology: Optional[Topology] = None) -> Path:
        """
        Write every artefact of one run into its own directory.

        Args:
            manifest: Everything needed to reproduce the run
            record: Summary of the run
            history: Per-generation rows (empty for GDA)
            egs: Final embedding graphs
            evaluation: Online evaluation of ``egs``, for the latency breakdown
            topology: Written as an edge list when given

        Returns:
            The run directory
        """
        pm = self.path_manager
        run_dir = pm.run_dir(record.algorithm, record.scenario, record.seed)
        run_dir.mkdir(parents=True, exist_ok=True)

        self.export_service.write_json(manifest, pm.manifest_path(run_dir))
        self.export_service.write_history(history, pm.history_path(run_dir))
        self.export_service.write_json(record.to_dict(), pm.record_path(run_dir))
        self.export_service.write_embeddings(egs, pm.embeddings_path(run_dir))
        if evaluation is not None:
            self.export_service.write_latency(evaluation, pm.latency_path(run_dir))
        if topology is not None:
            self.export_service.write_edge_list(topology, pm.topology_path(run_dir))

        logger.debug("Saved run to %s", run_dir)
        return run_dir

    def load_manifest(self, file_path: Path) -> Dict[str, Any]:
        return self._read_json(file_path)

    def load_record(self, file_path: Path) -> RunRecord:
        return RunRecord.from_dict(self._read_json(file_path))

    def load_records(self, root: Optional[Path] = None) -> List[RunRecord]:
        """Every RunRecord found below ``root``."""
        return [self.load_record(path) for path in self.path_manager.find_record_files(root)]

    def load_history(self, run_dir: Path) -> pd.DataFrame:
        path = self.path_manager.history_path(run_dir)
        if not path.exists():
            raise ExportError(f"History not found: {path}")
        return pd.read_csv(path)

    @staticmethod
    def _read_json(file_path: Path) -> Dict[str, Any]:
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                return json.load(f)
        except FileNotFoundError:
            raise ExportError(f"File not found: {file_path}")
        except json.JSONDecodeError as e:
            raise ExportError(f"Invalid JSON in {file_path}: {str(e)}")
