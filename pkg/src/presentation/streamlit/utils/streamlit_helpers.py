"""Utility functions for Streamlit interface."""

import streamlit as st
from pathlib import Path
from typing import List

import pandas as pd

from src.application.dto.run_response import ReportResponse
from src.domain.models.experiment import RunRecord


def display_error_messages(errors: List[str], title: str = "Errors") -> None:
    """Display error messages in Streamlit."""
    if errors:
        st.error(f"**{title}:**")
        for error in errors:
            st.error(f"• {error}")


def display_warning_messages(warnings: List[str], title: str = "Warnings") -> None:
    """Display warning messages in Streamlit."""
    if warnings:
        st.warning(f"**{title}:**")
        for warning in warnings:
            st.warning(f"• {warning}")


def create_download_button(file_path: Path, label: str = None,
                           mime_type: str = "application/octet-stream") -> None:
    """Create a download button for a file."""
    if not file_path.exists():
        st.error(f"File not found: {file_path}")
        return

    label = label or f"Download {file_path.name}"
    with open(file_path, "rb") as f:
        st.download_button(label=label, data=f.read(), file_name=file_path.name,
                           mime=mime_type, key=str(file_path))


def display_report_results(response: ReportResponse) -> None:
    """Display the summary table, stage-2 eligibility and downloads."""
    if response.success:
        st.success("✅ Summary generated")
        st.dataframe(response.summary, use_container_width=True, hide_index=True)
        if response.stage2_eligible:
            st.info(f"🎯 Eligible for stage 2: {', '.join(response.stage2_eligible)}")
        for file_path in response.generated_files:
            create_download_button(file_path, f"📄 Download {file_path.name}")
    else:
        st.error("❌ Report generation failed!")

    display_warning_messages(response.warnings)
    display_error_messages(response.errors)


def records_frame(records: List[RunRecord]) -> pd.DataFrame:
    """One row per run, most informative columns first."""
    columns = ["algorithm", "scenario", "seed", "converged", "generations_used",
               "final_ar", "final_avg_latency", "evals_surrogate", "evals_online",
               "fidelity_gap_ms", "wall_time_seconds"]
    rows = []
    for record in records:
        data = record.to_dict()
        rows.append({column: data[column] for column in columns})
    return pd.DataFrame(rows, columns=columns)


def display_run_record(record: RunRecord) -> None:
    """Headline metrics of one run."""
    col1, col2, col3, col4 = st.columns(4)
    with col1:
        st.metric("Converged", "Yes" if record.converged else "No")
    with col2:
        st.metric("Generations", record.generations_used)
    with col3:
        st.metric("Acceptance ratio", f"{record.final_ar:.3f}")
    with col4:
        st.metric("Avg latency (ms)", f"{record.final_avg_latency:.2f}")
