"""Application-wide constants."""

from enum import Enum


class Algorithm(Enum):
    """Algorithms selectable from the harness."""
    GENESIS = "genesis"
    BEGA100 = "bega100"
    BEGA2000 = "bega2000"
    GDA = "gda"

    @classmethod
    def from_name(cls, name: str) -> "Algorithm":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(a.value for a in cls)
            raise ValueError(ValidationMessages.UNKNOWN_ALGORITHM.format(name, valid))

    @property
    def is_genetic(self) -> bool:
        return self != Algorithm.GDA


class ScenarioGrid:
    """Values crossed to build the experiment grid, in iteration order."""
    N_SFCRS = (32, 48)
    TRAFFIC_SCALES = (1, 2)
    TRAFFIC_VARIANTS = ("A", "B")
    LINK_BANDWIDTHS = (5.0, 10.0)
    HOST_CPUS = (0.5, 1.0, 2.0)
    STAGE_SFCRS = {1: 32, 2: 48}


class FileNames:
    """Standard file names inside a run directory and a report directory."""
    MANIFEST = "manifest.json"
    HISTORY = "history.csv"
    RECORD = "record.json"
    EMBEDDINGS = "embeddings.txt"
    LATENCY = "latency.csv"
    TOPOLOGY = "topology.txt"
    SUMMARY_CSV = "summary.csv"
    SUMMARY_TEXT = "summary.txt"
    SUMMARY_XLSX = "summary.xlsx"


class HistoryColumns:
    """Columns of the per-generation history CSV, in file order."""
    ALL = [
        "generation",
        "mode",
        "best_ar",
        "best_latency",
        "front1_size",
        "evals_surrogate",
        "evals_online",
    ]


class LatencyColumns:
    """Columns of the per-SFC latency breakdown CSV."""
    ALL = ["sfcr_id", "latency_ms", "processing_ms", "link_ms", "congested"]


class SummaryColumns:
    """Columns of the per-algorithm summary table."""
    ALGORITHM = "algorithm"
    RUNS = "runs"
    CONVERGED = "converged"
    MEAN_GENERATIONS = "mean_generations"
    MIN_GENERATIONS = "min_generations"
    MAX_GENERATIONS = "max_generations"
    MEAN_WALL_TIME = "mean_wall_time_s"
    MIN_WALL_TIME = "min_wall_time_s"
    MAX_WALL_TIME = "max_wall_time_s"
    MEAN_FIDELITY_GAP = "mean_fidelity_gap_ms"
    STAGE2_ELIGIBLE = "stage2_eligible"

    ALL = [
        ALGORITHM, RUNS, CONVERGED,
        MEAN_GENERATIONS, MIN_GENERATIONS, MAX_GENERATIONS,
        MEAN_WALL_TIME, MIN_WALL_TIME, MAX_WALL_TIME,
        MEAN_FIDELITY_GAP, STAGE2_ELIGIBLE,
    ]


class ExitCodes:
    """CLI process exit codes."""
    SUCCESS = 0
    UNEXPECTED_ERROR = 1
    USAGE_ERROR = 2


class StreamlitConfig:
    """Streamlit-specific configuration."""
    PAGE_TITLE = "GENESIS Results"
    PAGE_ICON = ":material/hub:"
    LAYOUT = "wide"


class ValidationMessages:
    """Standard validation and error messages."""
    UNKNOWN_ALGORITHM = "Unknown algorithm '{}'. Expected one of: {}"
    INVALID_SCENARIO = "Invalid scenario: {}"
    INVALID_SEED = "Seed must be a non-negative integer, got {}"
    INVALID_STAGE = "Stage must be 1 or 2, got {}"
    NO_RECORDS = "No run records found in {}"
    DIRECTORY_NOT_FOUND = "Directory not found: {}"
    FILE_NOT_FOUND = "File not found: {}"
