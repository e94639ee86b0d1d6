"""Application configuration management."""

import configparser
import math
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Dict, Optional

from src.domain.exceptions.domain_exceptions import ConfigurationError
from .logging_config import configure_logging


@dataclass
class DirectoryConfig:
    """Configuration for application directories."""

    results: str = "results"

    def ensure_directories_exist(self) -> None:
        """Create directories if they don't exist."""
        Path(self.results).mkdir(parents=True, exist_ok=True)


@dataclass
class TopologyConfig:
    """Fat-tree substrate parameters shared by all scenarios."""

    k: int = 4
    propagation_delay_ms: float = 0.1
    host_memory_gb: float = 5.0


@dataclass
class WorkloadConfig:
    """VNF demand constants, SFCR templates and the synthetic traffic curve."""

    cpu_demand_lb: float = 0.002
    cpu_demand_waf: float = 0.004
    cpu_demand_ha: float = 0.003
    cpu_demand_tm: float = 0.001
    # One chain per template, VNF codes joined by '>', templates by ';'
    templates: str = "LB>WAF;HA>LB>WAF;HA>TM>LB>WAF;LB>TM>WAF"
    traffic_base: float = 20.0
    traffic_amplitude: float = 80.0
    traffic_period: int = 24
    traffic_peak_timestep: int = 14


@dataclass
class SolverConfig:
    """Decoder parameters."""

    placement_sigma: float = 2.0
    ingress_host: int = 0
    predictor_seed: int = 7


@dataclass
class SimulatorConfig:
    """Flow-level latency model constants."""

    base_processing_ms: float = 1.0
    flow_size_mb: float = 0.01
    congestion_penalty_ms: float = 10000.0


@dataclass
class EvolutionSettings:
    """GA defaults, per the GENESIS thresholds."""

    population_size: int = 100
    max_generations: int = 500
    min_acceptance_ratio: float = 1.0
    max_avg_latency_ms: float = 100.0
    blx_alpha: float = 0.5
    mutation_sigma: float = math.pi


@dataclass
class BegaConfig:
    """Binary-encoded GA population sizes."""

    small_population_size: int = 100
    large_population_size: int = 2000


@dataclass
class ReportConfig:
    """Styling of the summary workbook."""

    header_fill_color: str = "DDEBF7"
    failed_fill_color: str = "FFC7CE"
    border_style: str = "thin"
    text_alignment: str = "center"
    data_column_width_buffer: int = 2
    max_column_width: int = 40


_SECTIONS = {
    "directories": "directories",
    "topology": "topology",
    "workload": "workload",
    "solver": "solver",
    "simulator": "simulator",
    "evolution": "evolution",
    "bega": "bega",
    "report": "report",
}


@dataclass
class ApplicationSettings:
    """Main application settings."""

    # Application metadata
    app_name: str = "GENESIS SFC Embedding"
    version: str = "1.0.0"
    description: str = "Neuroevolution of service function chain embeddings"

    # Configuration objects
    directories: DirectoryConfig = None
    topology: TopologyConfig = None
    workload: WorkloadConfig = None
    solver: SolverConfig = None
    simulator: SimulatorConfig = None
    evolution: EvolutionSettings = None
    bega: BegaConfig = None
    report: ReportConfig = None

    # Debug settings
    debug_mode: bool = False
    log_level: str = "INFO"

    def __post_init__(self):
        """Initialize configuration objects with defaults."""
        if self.directories is None:
            self.directories = DirectoryConfig()
        if self.topology is None:
            self.topology = TopologyConfig()
        if self.workload is None:
            self.workload = WorkloadConfig()
        if self.solver is None:
            self.solver = SolverConfig()
        if self.simulator is None:
            self.simulator = SimulatorConfig()
        if self.evolution is None:
            self.evolution = EvolutionSettings()
        if self.bega is None:
            self.bega = BegaConfig()
        if self.report is None:
            self.report = ReportConfig()

        # Override with environment variables if present
        self._load_from_environment()

    def _load_from_environment(self) -> None:
        """Load configuration from environment variables."""
        self.debug_mode = os.getenv("GENESIS_DEBUG", str(self.debug_mode)).lower() == "true"
        self.log_level = os.getenv("GENESIS_LOG_LEVEL", self.log_level)
        self.directories.results = os.getenv("GENESIS_RESULTS_DIR", self.directories.results)

    def load_file(self, file_path: Path) -> None:
        """Apply an INI config file on top of the current values."""
        if not file_path.exists():
            raise ConfigurationError(f"Config file not found: {file_path}")

        parser = configparser.ConfigParser()
        try:
            parser.read(file_path, encoding="utf-8")
        except configparser.Error as e:
            raise ConfigurationError(f"Invalid config file {file_path}: {str(e)}")

        for section in parser.sections():
            if section == "general":
                for key, raw in parser.items(section):
                    if key == "log_level":
                        self.log_level = raw.strip().upper()
                    elif key == "debug_mode":
                        self.debug_mode = parser.getboolean(section, key)
                    else:
                        raise ConfigurationError(f"Unknown key [{section}] {key}")
                continue
            if section not in _SECTIONS:
                raise ConfigurationError(f"Unknown config section: [{section}]")
            _apply_values(getattr(self, _SECTIONS[section]), section, dict(parser.items(section)))

        # Environment wins over the file
        self._load_from_environment()

    def apply_overrides(self, overrides: Dict[str, Dict[str, Any]]) -> None:
        """Apply ``{section: {key: value}}`` on top of everything else."""
        for section, values in overrides.items():
            if section not in _SECTIONS:
                raise ConfigurationError(f"Unknown config section: [{section}]")
            _apply_values(getattr(self, _SECTIONS[section]), section, values)

    def to_dict(self) -> Dict[str, Any]:
        """Effective settings as plain data, for run manifests."""
        data = {name: asdict(getattr(self, attr)) for name, attr in _SECTIONS.items()}
        data["general"] = {"log_level": self.log_level, "debug_mode": self.debug_mode}
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ApplicationSettings":
        """Rebuild settings from ``to_dict`` output."""
        settings = cls()
        for name, attr in _SECTIONS.items():
            if name in data:
                _apply_values(getattr(settings, attr), name, data[name])
        general = data.get("general", {})
        settings.log_level = general.get("log_level", settings.log_level)
        settings.debug_mode = bool(general.get("debug_mode", settings.debug_mode))
        return settings

    def initialize(self) -> None:
        """Initialize the application with this configuration."""
        self.directories.ensure_directories_exist()


def _apply_values(target: Any, section: str, values: Dict[str, Any]) -> None:
    """Set dataclass fields from raw values, converting to each field's type."""
    known = {f.name: f.type for f in fields(target)}
    for key, raw in values.items():
        if key not in known:
            raise ConfigurationError(f"Unknown key [{section}] {key}")
        field_type = known[key]
        try:
            if field_type is bool:
                value = raw if isinstance(raw, bool) else str(raw).strip().lower() in ("1", "true", "yes", "on")
            elif field_type is int:
                value = int(raw)
            elif field_type is float:
                value = float(raw)
            else:
                value = str(raw)
        except (TypeError, ValueError):
            raise ConfigurationError(f"Invalid value for [{section}] {key}: {raw!r}")
        setattr(target, key, value)


# Global settings instance
settings = ApplicationSettings()


def get_settings() -> ApplicationSettings:
    """Get the global application settings."""
    return settings


def configure_app(custom_settings: Optional[ApplicationSettings] = None) -> None:
    """Configure the application with custom settings."""
    global settings
    if custom_settings:
        settings = custom_settings
    settings.initialize()

    configure_logging(settings)
