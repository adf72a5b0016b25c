"""
Streamlit Web Interface Module

Certificate dashboard: run panel, result views and styles.
"""
