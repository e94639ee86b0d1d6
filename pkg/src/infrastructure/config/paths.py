"""Path management for run and report outputs."""

from pathlib import Path
from typing import List, Optional

from src.shared.constants.app_constants import FileNames
from .settings import get_settings


class PathManager:
    """Resolves ``<results>/<algorithm>/<scenario>/<seed>/`` run directories."""

    def __init__(self, results_dir: Optional[Path] = None):
        self.settings = get_settings()
        self._results_dir = Path(results_dir) if results_dir is not None else None

    @property
    def results_dir(self) -> Path:
        """Get the results root directory."""
        if self._results_dir is not None:
            return self._results_dir
        return Path(self.settings.directories.results)

    def run_dir(self, algorithm: str, scenario: str, seed: int) -> Path:
        """Directory owned by one run."""
        return self.results_dir / algorithm / scenario / str(seed)

    def manifest_path(self, run_dir: Path) -> Path:
        return run_dir / FileNames.MANIFEST

    def history_path(self, run_dir: Path) -> Path:
        return run_dir / FileNames.HISTORY

    def record_path(self, run_dir: Path) -> Path:
        return run_dir / FileNames.RECORD

    def embeddings_path(self, run_dir: Path) -> Path:
        return run_dir / FileNames.EMBEDDINGS

    def latency_path(self, run_dir: Path) -> Path:
        return run_dir / FileNames.LATENCY

    def topology_path(self, run_dir: Path) -> Path:
        return run_dir / FileNames.TOPOLOGY

    def find_record_files(self, root: Optional[Path] = None) -> List[Path]:
        """All run records below ``root``, sorted by path."""
        root = Path(root) if root is not None else self.results_dir
        if not root.exists():
            return []
        return sorted(root.rglob(FileNames.RECORD))


def get_path_manager(results_dir: Optional[Path] = None) -> PathManager:
    """Get a path manager rooted at ``results_dir`` or the configured results directory."""
    return PathManager(results_dir)
