"""
Streamlit Certificate Dashboard
Main entry point for the UI
"""
import logging
import os
import sys

import streamlit as st

# Add the parent directory to the path
parent_dir = os.path.join(os.path.dirname(__file__), '..')
sys.path.insert(0, parent_dir)

from src.config import LOG_FORMAT, LOG_LEVEL
from ui.components.certificate_view import show_header, show_results
from ui.components.run_panel import initialize_run_state, show_run_panel
from ui.styles.styles import apply_styles

logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)

st.set_page_config(
    page_title="nonsplit-ext",
    page_icon="🧮",
    layout="centered"
)

# Apply CSS styles
apply_styles()

# Initialize session state
initialize_run_state()

# Render run controls in sidebar
show_run_panel()

# Render header and results
show_header()
show_results()
