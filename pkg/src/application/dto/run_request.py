"""Data Transfer Objects for run, grid, rerun and report requests."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.domain.models.experiment import Scenario
from src.shared.constants.app_constants import Algorithm, ValidationMessages


def _validate_seed(seed: int) -> None:
    if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
        raise ValueError(ValidationMessages.INVALID_SEED.format(seed))


@dataclass
class RunRequest:
    """Request object for a single (scenario, algorithm, seed) run."""

    scenario: str
    algorithm: str
    seed: int = 0
    config_file: Optional[Path] = None
    output_directory: Optional[Path] = None
    # {section: {key: value}} applied after the config file
    overrides: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    debug: bool = False

    def validate(self) -> bool:
        """Validate the request."""
        try:
            Scenario.parse(self.scenario)
        except ValueError as e:
            raise ValueError(ValidationMessages.INVALID_SCENARIO.format(str(e)))
        Algorithm.from_name(self.algorithm)
        _validate_seed(self.seed)
        if self.config_file is not None and not self.config_file.exists():
            raise ValueError(ValidationMessages.FILE_NOT_FOUND.format(self.config_file))
        return True


@dataclass
class GridRequest:
    """Request object for sweeping the scenario grid with one algorithm."""

    algorithm: str
    seeds: List[int] = field(default_factory=lambda: [0])
    stage: Optional[int] = None
    config_file: Optional[Path] = None
    output_directory: Optional[Path] = None
    debug: bool = False

    def validate(self) -> bool:
        """Validate the request."""
        Algorithm.from_name(self.algorithm)
        if not self.seeds:
            raise ValueError("At least one seed is required")
        for seed in self.seeds:
            _validate_seed(seed)
        if self.stage is not None and self.stage not in (1, 2):
            raise ValueError(ValidationMessages.INVALID_STAGE.format(self.stage))
        if self.config_file is not None and not self.config_file.exists():
            raise ValueError(ValidationMessages.FILE_NOT_FOUND.format(self.config_file))
        return True


@dataclass
class RerunRequest:
    """Request object for reproducing a run from its manifest."""

    manifest_file: Path
    output_directory: Optional[Path] = None

    def validate(self) -> bool:
        """Validate the request."""
        if not self.manifest_file.exists():
            raise ValueError(ValidationMessages.FILE_NOT_FOUND.format(self.manifest_file))
        return True


@dataclass
class ReportRequest:
    """Request object for summarising every run below a directory."""

    input_directory: Path
    output_directory: Optional[Path] = None

    def validate(self) -> bool:
        """Validate the request."""
        if not self.input_directory.exists():
            raise ValueError(ValidationMessages.DIRECTORY_NOT_FOUND.format(self.input_directory))
        return True
