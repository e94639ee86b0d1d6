"""Utilities for writing run results to CSV, JSON, text and Excel."""

import json
from pathlib import Path
from typing import Any, Dict, List, Sequence

import pandas as pd

from src.domain.exceptions.domain_exceptions import ExportError
from src.domain.models.embedding import EmbeddingGraph
from src.domain.models.evaluation import EvaluationResult
from src.domain.models.evolution import GenerationRecord
from src.domain.models.topology import Topology
from src.infrastructure.data.file_handlers.excel_handler import ExcelHandler
from src.shared.constants.app_constants import HistoryColumns, LatencyColumns, SummaryColumns


class ExportService:
    """Service for exporting run artefacts."""

    def __init__(self):
        self.excel_handler = ExcelHandler()

    def history_frame(self, history: Sequence[GenerationRecord]) -> pd.DataFrame:
        rows = [{column: getattr(record, column) for column in HistoryColumns.ALL}
                for record in history]
        return pd.DataFrame(rows, columns=HistoryColumns.ALL)

    def write_history(self, history: Sequence[GenerationRecord], file_path: Path) -> None:
        """Per-generation history, one row per generation."""
        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)
            self.history_frame(history).to_csv(file_path, index=False, lineterminator="\n")
        except Exception as e:
            raise ExportError(f"Failed to export history: {str(e)}")

    def write_latency(self, result: EvaluationResult, file_path: Path) -> None:
        """Per-SFC latency breakdown of one evaluation."""
        try:
            rows = [
                {
                    "sfcr_id": item.sfcr_id,
                    "latency_ms": item.latency_ms,
                    "processing_ms": item.processing_ms,
                    "link_ms": item.link_ms,
                    "congested": item.congested,
                }
                for item in result.breakdown
            ]
            file_path.parent.mkdir(parents=True, exist_ok=True)
            pd.DataFrame(rows, columns=LatencyColumns.ALL).to_csv(
                file_path, index=False, lineterminator="\n"
            )
        except Exception as e:
            raise ExportError(f"Failed to export latency breakdown: {str(e)}")

    def format_embedding(self, eg: EmbeddingGraph) -> str:
        """One human-readable record: order, placements, paths and status."""
        order = " > ".join(f"{v.kind.value}#{v.instance}" for v in eg.peg.fg.ordered_vnfs)
        hosts = ", ".join(
            f"{p.kind.value}@{p.host if p.host is not None else 'REJECTED'}"
            for p in eg.peg.placements
        )
        lines = [
            f"sfcr {eg.sfcr_id} [{eg.status.value}]",
            f"  order: {order}",
            f"  placements: {hosts}",
        ]
        for path in eg.paths:
            lines.append("  path: " + " -> ".join(str(n) for n in path))
        return "\n".join(lines)

    def write_embeddings(self, egs: Sequence[EmbeddingGraph], file_path: Path) -> None:
        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)
            text = "\n\n".join(self.format_embedding(eg) for eg in egs)
            file_path.write_text(text + "\n", encoding="utf-8")
        except Exception as e:
            raise ExportError(f"Failed to export embeddings: {str(e)}")

    def write_edge_list(self, topology: Topology, file_path: Path) -> None:
        """``node_a node_b bandwidth delay`` per link."""
        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)
            lines = [f"{link.a} {link.b} {link.bandwidth:g} {link.propagation_delay:g}"
                     for link in sorted(topology.links, key=lambda l: l.endpoints)]
            file_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        except Exception as e:
            raise ExportError(f"Failed to export topology: {str(e)}")

    def write_json(self, data: Dict[str, Any], file_path: Path) -> None:
        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)
            with open(file_path, "w", encoding="utf-8") as f:
                json.dump(data, f, indent=2, sort_keys=True)
                f.write("\n")
        except Exception as e:
            raise ExportError(f"Failed to write {file_path.name}: {str(e)}")

    def write_summary(self, summary: pd.DataFrame, csv_path: Path, text_path: Path,
                      xlsx_path: Path) -> List[Path]:
        """Summary table as CSV, plain-text table and styled workbook."""
        try:
            csv_path.parent.mkdir(parents=True, exist_ok=True)
            summary.to_csv(csv_path, index=False, lineterminator="\n")
            text_path.write_text(summary.to_string(index=False) + "\n", encoding="utf-8")

            workbook = self.excel_handler.create_styled_workbook()
            worksheet = workbook.active
            worksheet.title = "Summary"
            data_range = self.excel_handler.write_dataframe(worksheet, summary)
            flag_column = None
            if SummaryColumns.STAGE2_ELIGIBLE in summary.columns:
                flag_column = list(summary.columns).index(SummaryColumns.STAGE2_ELIGIBLE) + 1
            self.excel_handler.apply_table_styling(worksheet, data_range, flag_column)
            self.excel_handler.auto_adjust_column_widths(worksheet)
            self.excel_handler.save_workbook(workbook, xlsx_path)
        except ExportError:
            raise
        except Exception as e:
            raise ExportError(f"Failed to export summary: {str(e)}")
        return [csv_path, text_path, xlsx_path]
