"""
Streamlit CSS Styling Module

CSS for the certificate dashboard: sidebar width, status badges and the
monospace blocks used for generator images.
"""

DASHBOARD_CSS = """
<style>
    [data-testid="stSidebar"][aria-expanded="true"] {
        min-width: 18% !important;
    }

    hr {
        margin: 1rem 0 !important;
    }

    .status-badge {
        display: inline-block;
        padding: 0.15rem 0.6rem;
        border-radius: 0.8rem;
        font-size: 0.85rem;
        font-weight: 600;
        margin-right: 0.4rem;
    }

    .status-pass {
        background-color: rgba(34, 197, 94, 0.18);
        color: rgb(21, 128, 61);
        border: 1px solid rgba(34, 197, 94, 0.5);
    }

    .status-fail {
        background-color: rgba(239, 68, 68, 0.15);
        color: rgb(185, 28, 28);
        border: 1px solid rgba(239, 68, 68, 0.5);
    }

    .generator-image {
        font-family: ui-monospace, SFMono-Regular, Menlo, monospace;
        font-size: 0.78rem;
        white-space: pre-wrap;
        word-break: break-all;
        background-color: rgba(148, 163, 184, 0.12);
        border-radius: 0.4rem;
        padding: 0.5rem 0.7rem;
        margin-bottom: 0.4rem;
    }
</style>
"""


def apply_styles():
    """Inject the dashboard CSS"""
    import streamlit as st
    st.markdown(DASHBOARD_CSS, unsafe_allow_html=True)


def status_badge(label: str, passed: bool) -> str:
    css = "status-pass" if passed else "status-fail"
    return f'<span class="status-badge {css}">{label}: {"yes" if passed else "no"}</span>'
