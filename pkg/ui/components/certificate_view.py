"""
Certificate View Component
Displays certificates, lemma reports, minimal-degree reports and replay outcomes
"""
import streamlit as st

from src.pipelines.certificate import Certificate
from src.pipelines.lemma import LemmaReport
from src.pipelines.min_degree import MinDegreeReport
from ui.styles.styles import status_badge


def show_header():
    st.markdown('<h1 style="margin: -40px 0 0 0; padding: 0;">Nonsplit extensions of A_k</h1>',
                unsafe_allow_html=True)


def _show_certificate(cert: Certificate):
    c = cert.construction
    st.subheader(f"{c.kind.capitalize()} construction, k = {c.k}, p = {c.p}" + (f" (built at j = {c.j})" if c.j else ""))
    st.markdown(status_badge("transitive", cert.transitive) + status_badge("nonsplit", cert.nonsplit.nonsplit)
                + status_badge("faithful", cert.faithful.faithful), unsafe_allow_html=True)

    col1, col2, col3 = st.columns(3)
    col1.metric("Degree", cert.degrees.get("action", 0))
    col2.metric("dim M", cert.module.dim)
    col3.metric("G-core dim", cert.faithful.gcore_dim)

    with st.expander("Module dimensions", expanded=True):
        st.table({"module": list(cert.module.dims), "dim": list(cert.module.dims.values())})
    with st.expander("Nonsplit record"):
        st.json(cert.nonsplit.model_dump(mode="json"))
    with st.expander("Faithfulness record"):
        st.json(cert.faithful.model_dump(mode="json"))
    if cert.structure:
        with st.expander("Structure"):
            st.json(cert.structure)
    with st.expander("Generator images"):
        for index, image in enumerate(cert.generator_images, start=1):
            st.markdown(f'<div class="generator-image">{index}: {image}</div>', unsafe_allow_html=True)
    for note in cert.annotations:
        st.caption(note)

    st.download_button(label="Download certificate", data=cert.to_json(),
                       file_name=f"{c.kind}-k{c.k}-p{c.p}.json", mime="application/json")


def _show_lemma(report: LemmaReport):
    st.subheader(f"Cocycle lemma at k = {report.k}")
    st.write(f"Selected class: **{report.selected}** (chosen at k = {report.selected_at})")
    st.table({"element": list(report.inner_products), "inner product with u": list(report.inner_products.values())})
    if report.covering_holds is not None:
        st.markdown(status_badge("covering identity", report.covering_holds)
                    + status_badge("projection consistent", bool(report.projection_consistent)),
                    unsafe_allow_html=True)


def _show_min_degree(report: MinDegreeReport):
    st.subheader(f"Minimal faithful degree of {report.group}")
    col1, col2, col3 = st.columns(3)
    col1.metric("Order", report.order)
    col2.metric("Subgroups", report.subgroup_count)
    col3.metric("Minimal degree", report.minimal_degree)
    st.caption(f"Witness: corefree subgroup of order {report.witness_order}; "
               f"unique minimal normal subgroup of order {report.minimal_normal_order}")


def show_results():
    """Render the current result and status"""
    status = st.session_state.status
    if status:
        if status.startswith("Successfully"):
            st.success(status)
        else:
            st.error(status)

    result = st.session_state.result
    if result is None:
        st.info("Choose a construction in the sidebar and press Run.")
        return
    if isinstance(result, Certificate):
        _show_certificate(result)
    elif isinstance(result, LemmaReport):
        _show_lemma(result)
    elif isinstance(result, MinDegreeReport):
        _show_min_degree(result)

    replay = st.session_state.replay
    if replay is not None:
        with st.expander("Replay checks", expanded=True):
            st.markdown("".join(status_badge(name, passed) for name, passed in replay.checks.items()),
                        unsafe_allow_html=True)
            for name, detail in replay.details.items():
                st.caption(f"{name}: {detail}")
