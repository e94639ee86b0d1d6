#!/usr/bin/env python3
"""
Quick entry point: one desk-scale GENESIS run on the default scenario.

For the full interface, use: python -m src.presentation.cli.main
"""

import sys
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent / "src"))

from src.application.dto.run_request import RunRequest
from src.application.use_cases.run_experiment import RunExperimentUseCase
from src.infrastructure.config.settings import configure_app

DEFAULT_SCENARIO = "32_1_A_10_2"


def main():
    """Run GENESIS once and print the outcome."""
    print("🧬 GENESIS - Quick Run")
    print("=" * 40)

    try:
        configure_app()
        response = RunExperimentUseCase().execute(
            RunRequest(scenario=DEFAULT_SCENARIO, algorithm="genesis", seed=0)
        )

        if response.success:
            record = response.record
            status = "✅ Converged" if record.converged else "⚠️ Not converged"
            print(f"{status} on {record.scenario} after {record.generations_used} generations")
            print(f"📊 AR {record.final_ar:.3f}, latency {record.final_avg_latency:.2f} ms")
            print(f"📁 Results: {response.run_directory}")
            if response.execution_time_seconds:
                print(f"⏱️  Processing time: {response.execution_time_seconds:.2f} seconds")
        else:
            print("❌ Run failed!")
            for error in response.errors:
                print(f"   • {error}")

        for warning in response.warnings:
            print(f"⚠️  {warning}")

    except Exception as e:
        print(f"❌ Error: {str(e)}")
        print("\n💡 Browse results with the Streamlit interface:")
        print("   streamlit run streamlit_app.py")
        sys.exit(1)


if __name__ == "__main__":
    main()
