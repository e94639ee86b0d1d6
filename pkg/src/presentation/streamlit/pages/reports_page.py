"""Results page: per-algorithm summary and per-run details."""

import streamlit as st
from pathlib import Path

from src.application.dto.run_request import ReportRequest
from src.application.use_cases.generate_report import GenerateReportUseCase
from src.infrastructure.config.paths import PathManager
from src.infrastructure.config.settings import get_settings
from src.infrastructure.data.repositories.results_repository import ResultsRepository
from src.presentation.streamlit.utils.streamlit_helpers import (
    display_error_messages, display_report_results, display_run_record, records_frame
)


def render_reports_page():
    """Render the results page."""
    settings = get_settings()
    st.title("📊 Results")

    results_dir = Path(st.text_input("Results directory", value=settings.directories.results))
    if not results_dir.exists():
        display_error_messages([f"Directory not found: {results_dir}"])
        return

    repository = ResultsRepository(PathManager(results_dir))
    records = repository.load_records(results_dir)
    if not records:
        st.info("No runs found yet. Use the CLI to produce some.")
        return

    st.header("🏁 Summary")
    if st.button("Generate summary files", type="primary"):
        with st.spinner("Summarising runs..."):
            response = GenerateReportUseCase().execute(ReportRequest(input_directory=results_dir))
        display_report_results(response)

    st.header("🔎 Runs")
    st.dataframe(records_frame(records), use_container_width=True, hide_index=True)

    labels = [f"{r.algorithm} / {r.scenario} / {r.seed}" for r in records]
    choice = st.selectbox("Run", range(len(records)), format_func=lambda i: labels[i])
    record = records[choice]
    display_run_record(record)

    run_dir = repository.path_manager.run_dir(record.algorithm, record.scenario, record.seed)
    try:
        history = repository.load_history(run_dir)
    except Exception as e:
        display_error_messages([str(e)])
        return
    if history.empty:
        st.caption("No generation history (single-pass algorithm).")
    else:
        st.subheader("History")
        st.dataframe(history, use_container_width=True, hide_index=True)
