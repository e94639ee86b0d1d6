"""Introduction page for the GENESIS results browser."""

import streamlit as st

from src.infrastructure.config.settings import get_settings


def render_introduction_page():
    """Render the introduction page."""
    settings = get_settings()

    st.title(f"🧬 {settings.app_name}")
    st.markdown(f"*Version {settings.version}*")

    st.markdown("""
    ### 👋 Welcome

    This browser shows the results of service function chain embedding runs.
    Each run embeds a set of SFC requests into a k-ary fat-tree data centre and
    reports the acceptance ratio and the average traffic latency it reached.
    """)

    st.markdown("""
    ### 🔧 Algorithms

    - **genesis**: evolves six output-layer weights of three sine-activated
      predictors that order VNFs, pick hosts and steer A* link routing
    - **bega100 / bega2000**: binary VNF-to-host matrix GA with populations of 100 and 2000
    - **gda**: greedy placement on the host with the most spare CPU, hop-count routing
    """)

    st.markdown("""
    ### 🗂️ Scenario names

    `{SFCRs}_{traffic scale}_{traffic pattern}_{link bandwidth MB/s}_{host CPUs}`,
    for example `48_1_B_5_0.5`.
    """)

    st.markdown("""
    ### 🚀 Producing results

    ```
    python -m src.presentation.cli.main run --scenario 32_1_A_10_2 --algorithm genesis --seed 1
    python -m src.presentation.cli.main grid --algorithm gda --stage 1
    python -m src.presentation.cli.main report --in results
    ```

    Then open the **Results** page and point it at the results directory.
    """)

    st.markdown("---")
    st.markdown(f"""
    <div style='text-align: center; color: #666666; font-size: 12px;'>
        {settings.app_name} v{settings.version} | Powered by Streamlit
    </div>
    """, unsafe_allow_html=True)
