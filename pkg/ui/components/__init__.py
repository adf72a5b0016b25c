"""
Streamlit UI Components Module

Reusable components of the dashboard: the run panel and the certificate view.
"""
