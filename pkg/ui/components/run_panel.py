"""
Run Panel Component
Sidebar controls for choosing a construction, running it and loading certificates
"""
import streamlit as st
from pydantic import ValidationError

from src.app import NAMED_GROUPS, min_degree, run_for_display
from src.config import DEFAULT_SEED, RunConfig
from src.errors import HypothesisError, NonsplitExtError
from src.pipelines.certificate import Certificate
from src.pipelines.verify import verify_certificate

COMMANDS = {
    "even": "Even (p = 2, degree 2k(k-1))",
    "odd": "Odd (p | k, degree pk(k-1)/2)",
    "lemma-cocycle": "Cocycle lemma",
    "min-degree": "Minimal faithful degree",
}

# Small trial counts keep interactive runs short
UI_TRIALS = 500


def initialize_run_state():
    """Initialize session state for runs"""
    if "result" not in st.session_state:
        st.session_state.result = None
    if "status" not in st.session_state:
        st.session_state.status = None
    if "replay" not in st.session_state:
        st.session_state.replay = None


def _run_construction(command: str, k: int, p: int, seed: int, allow_small: bool):
    try:
        config = RunConfig(command=command, k=k, p=p, seed=seed, allow_small=allow_small,
                           cocycle_trials=UI_TRIALS, associativity_trials=UI_TRIALS)
    except (HypothesisError, ValidationError) as exc:
        st.session_state.result, st.session_state.status = None, f"Error: {exc}"
        return
    with st.spinner(f"Running {COMMANDS[command].lower()}..."):
        result, status = run_for_display(config)
    st.session_state.result = result
    st.session_state.status = status
    st.session_state.replay = None


def _run_min_degree(group_name: str):
    with st.spinner(f"Searching the subgroup lattice of {group_name}..."):
        try:
            st.session_state.result = min_degree(name=group_name)
            st.session_state.status = "Successfully finished"
        except (NonsplitExtError, ValueError) as exc:
            st.session_state.result, st.session_state.status = None, f"Error: {exc}"


def show_run_panel():
    """Render the run controls in the sidebar"""
    with st.sidebar:
        st.markdown("<h2 style='margin: -56px 0 0 0; padding: 0;'>Constructions</h2>", unsafe_allow_html=True)
        command = st.selectbox("Construction", list(COMMANDS), format_func=COMMANDS.get)

        if command == "min-degree":
            group_name = st.selectbox("Group", sorted(NAMED_GROUPS))
            if st.button("Run", use_container_width=True):
                _run_min_degree(group_name)
                st.rerun()
        else:
            default_k = {"even": 7, "odd": 12, "lemma-cocycle": 7}[command]
            k = st.number_input("k", min_value=5, max_value=30, value=default_k, step=1)
            p = 2
            allow_small = False
            if command == "odd":
                p = st.number_input("p", min_value=3, max_value=7, value=3, step=2)
                allow_small = st.checkbox("Allow k < 10", help="Runs outside the theorem hypotheses")
            seed = st.number_input("Seed", min_value=0, value=DEFAULT_SEED, step=1)
            if st.button("Run", use_container_width=True):
                _run_construction(command, int(k), int(p), int(seed), allow_small)
                st.rerun()

        st.divider()
        uploaded = st.file_uploader("Load a certificate", type=["json"])
        if uploaded is not None and st.button("Replay checks", use_container_width=True):
            try:
                cert = Certificate.model_validate_json(uploaded.getvalue().decode("utf-8"))
            except ValidationError as exc:
                st.error(f"Not a certificate: {exc.error_count()} validation errors")
                return
            with st.spinner("Replaying..."):
                st.session_state.result = cert
                st.session_state.replay = verify_certificate(cert)
                st.session_state.status = "Successfully replayed" if st.session_state.replay.ok else \
                    "Replay found failing checks"
            st.rerun()
