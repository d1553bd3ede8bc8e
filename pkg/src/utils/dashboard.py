import streamlit as st
import plotly.express as px
import pandas as pd

from src.classes.bounds.bound_calculator import (
    WORST_CASE_THRESHOLDS,
    AVERAGE_CASE_THRESHOLDS,
    bound_report,
    circuit_exponents,
    exponent_curve,
    literal_threshold,
    literal_threshold_discrepancy,
    naive_ccz_base,
    branching_fraction,
    statevector_crossover_ratio,
    headline_bounds_report,
    clause_bound_threshold,
    three_sat_base,
    three_sat_comparison,
)
from src.classes.bounds.instance_stats import instance_stats
from src.classes.formula.dimacs import parse_dimacs
from src.utils.config import Defaults
from src.utils.exceptions import ModelCountError


class BoundsDashboard:
    def __init__(self):
        try:
            self.create_dashboard()
        except Exception as e:
            st.error(f"Failed to initialize dashboard: {str(e)}")

    def create_dashboard(self):
        """Create the explorer page with subtabs"""
        st.title("Runtime Bounds Explorer 📐")

        self.display_kpi_metrics()

        tab1, tab2, tab3, tab4 = st.tabs([
            "📈 Density Curves",
            "🧮 #3SAT Branching",
            "⚛️ Circuit Exponents",
            "📄 Instance Report"
        ])

        with tab1:
            self.create_density_tab()
        with tab2:
            self.create_three_sat_tab()
        with tab3:
            self.create_circuit_tab()
        with tab4:
            self.create_instance_tab()

    def display_kpi_metrics(self):
        col1, col2, col3, col4 = st.columns(4)
        with col1:
            st.metric("δ threshold (n + m3)", f"{clause_bound_threshold():.4f}")
        with col2:
            st.metric(
                "d̂ threshold (literals)",
                f"{literal_threshold():.4f}",
                delta=f"{literal_threshold_discrepancy():+.4f} vs printed",
                delta_color="off",
            )
        with col3:
            st.metric("#3SAT base (d = 7)", f"{three_sat_base(7):.4f}")
        with col4:
            st.metric("G/n statevector crossover", f"{statevector_crossover_ratio(1):.2f}")

    def create_density_tab(self):
        max_density = st.slider("Maximum density δ", 0.5, 5.0, float(Defaults.EXPLORER_MAX_DENSITY), 0.25)
        curve = exponent_curve(max_density, Defaults.EXPLORER_GRID_POINTS)
        long = curve.melt(id_vars="density", var_name="bound", value_name="exponent")

        fig = px.line(
            long,
            x="density",
            y="exponent",
            color="bound",
            title="📈 Base-2 exponent per variable against clause density",
            labels={"density": "δ = m / n", "exponent": "log2(base) per variable"},
        )
        fig.update_layout(title_x=0.5, title_font_size=20, legend_title_text="Bound")
        st.plotly_chart(fig, use_container_width=True)

        with st.expander("📊 Stored density thresholds"):
            thresholds = pd.DataFrame({
                "k": list(WORST_CASE_THRESHOLDS),
                "worst case": list(WORST_CASE_THRESHOLDS.values()),
                "average case": [AVERAGE_CASE_THRESHOLDS.get(k) for k in WORST_CASE_THRESHOLDS],
            })
            st.dataframe(thresholds, use_container_width=True)
            st.dataframe(headline_bounds_report(), use_container_width=True)

    def create_three_sat_tab(self):
        degrees = list(range(3, 11))
        frame = pd.DataFrame({
            "d": degrees,
            "branching fraction": [float(branching_fraction(d)) for d in degrees],
            "base": [three_sat_base(d) for d in degrees],
        })
        fig = px.bar(frame, x="d", y="base", title="🧮 #3SAT base against 3-degree d", text_auto=".4f")
        fig.update_layout(title_x=0.5, title_font_size=20)
        st.plotly_chart(fig, use_container_width=True)

        delta = st.number_input("Density δ of a 3-CNF instance", min_value=0.1, max_value=5.0, value=1.5, step=0.1)
        comparison = three_sat_comparison(delta)
        st.dataframe(pd.DataFrame([comparison]).round(4), use_container_width=True)

    def create_circuit_tab(self):
        k = st.slider("Largest C^kZ control count k", 1, 6, 1)
        col1, col2, col3 = st.columns(3)
        with col1:
            st.metric("Base per gate", f"{circuit_exponents(k):.4f}")
        with col2:
            st.metric("G/n crossover", f"{statevector_crossover_ratio(k):.3f}")
        with col3:
            st.metric("Naive CCZ decomposition", f"{naive_ccz_base():.4f}")

        frame = pd.DataFrame({"k": list(range(1, 7))})
        frame["base per gate"] = frame["k"].map(circuit_exponents)
        frame["G/n crossover"] = frame["k"].map(statevector_crossover_ratio)
        st.dataframe(frame.round(4), use_container_width=True)

    def create_instance_tab(self):
        uploaded = st.file_uploader("DIMACS instance", type=["cnf", "dimacs", "txt"])
        if uploaded is None:
            st.info("Upload a CNF file to see its statistics and bound report.")
            return
        try:
            stats = instance_stats(parse_dimacs(uploaded.getvalue().decode("utf-8")))
        except ModelCountError as e:
            st.warning(str(e))
            return
        values = dict(stats.as_dict())
        values.update(bound_report(stats).as_dict())
        st.dataframe(
            pd.DataFrame({"value": [str(value) for value in values.values()]}, index=list(values)),
            use_container_width=True,
        )
        st.dataframe(headline_bounds_report(stats), use_container_width=True)
