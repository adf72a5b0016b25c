"""
Streamlit Styles Module

Provides CSS styling for the certificate dashboard.
"""
