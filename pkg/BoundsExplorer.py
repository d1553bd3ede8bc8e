from src.utils.config import Defaults
from src.utils.dashboard import BoundsDashboard
import streamlit as st


def set_page_config():
    """Set the Streamlit page configuration"""
    st.set_page_config(
        page_title=f"{Defaults.APP_NAME} bounds explorer",
        page_icon="📐",
        layout="wide",
        initial_sidebar_state="expanded",
    )


def main():
    set_page_config()
    BoundsDashboard()

if __name__ == "__main__":
    main()
