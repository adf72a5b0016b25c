import numpy as np
import pytest

from src.config import RunConfig
from src.errors import HypothesisError
from src.modules import pair_permutation_module
from src.pipelines import Certificate, build_odd, run_even, run_odd, verify_certificate, verify_cocycle_lemma
from src.pipelines.even import lemma_elements, lift_degree
from src.pipelines.lemma import covering_vector, omega_sets
from src.pipelines.verify import closed_form_degree

SEED = 1729
TRIALS = 20


def test_lift_degree():
    assert [lift_degree(k) for k in (7, 8, 9, 10, 11, 12)] == [7, 11, 11, 11, 11, 15]


def test_lemma_elements():
    g1, g2 = lemma_elements(7)
    assert g1.to_cycle_string() == "(1 2)(3 4)"
    assert g2.to_cycle_string() == "(3 4)(5 6)"


def test_even_certificate_k7(even_certificate_k7):
    cert = even_certificate_k7
    assert cert.construction.kind == "even"
    assert cert.construction.j is None
    assert cert.degrees == {"action": 84, "closed_form": 84}
    assert cert.transitive
    assert cert.positive
    assert len(cert.generator_images) == 5 + 14


def test_even_k7_module_structure(even_certificate_k7):
    dims = even_certificate_k7.module.dims
    assert (dims["P"], dims["P1"], dims["P2"], dims["P3"]) == (21, 1, 6, 14)
    assert (dims["M"], dims["M0"]) == (14, 13)
    assert even_certificate_k7.module.factor_dims == [14]
    structure = even_certificate_k7.structure
    assert structure["fixed_points_Y"]["dim"] == 3
    assert structure["endomorphism_dim"] == 3
    assert all(structure["summands_irreducible"].values())
    assert not any(structure["orthogonality"].values())


def test_even_k7_classes_on_young_subgroup(even_certificate_k7):
    rows = even_certificate_k7.structure["y_classes"]
    assert {(r["kind"], r["tau"], r["nu"]) for r in rows} == {("sign_carry", 1, 0), ("spin", 0, 1), ("sum", 1, 1)}
    assert all(r["nontrivial_on_y"] for r in rows)
    assert even_certificate_k7.structure["y_invariants_distinct"]
    assert even_certificate_k7.cocycle["inner_products"] == {"g1": 1, "g2": 0}


def test_even_k7_nonsplit_and_faithful(even_certificate_k7):
    nonsplit = even_certificate_k7.nonsplit
    assert nonsplit.system_dims["unknowns"] == 70
    assert not nonsplit.feasible
    assert nonsplit.order4_sweep.exhaustive and nonsplit.order4_sweep.exhaustive_all_order4
    faithful = even_certificate_k7.faithful
    assert faithful.gcore_dim == 0
    expected = 2 ** 14 * 2520
    assert faithful.order_check == {"expected": expected, "computed": expected}


def test_replay_accepts_k7(even_certificate_k7):
    report = verify_certificate(even_certificate_k7)
    assert report.ok, report.failed
    assert {"relators", "tails", "complement_system", "nonsplit", "gcore", "degree", "transitive",
            "order", "positive"} <= set(report.checks)
    assert closed_form_degree(even_certificate_k7) == 84


def test_replay_detects_tampering(even_certificate_k7):
    wrong_degree = even_certificate_k7.model_copy(deep=True)
    wrong_degree.degrees["action"] = 85
    assert verify_certificate(wrong_degree).failed == ["degree"]

    wrong_core = even_certificate_k7.model_copy(deep=True)
    wrong_core.faithful.gcore_dim = 3
    assert "gcore" in verify_certificate(wrong_core).failed

    missing_action = even_certificate_k7.model_copy(deep=True)
    missing_action.replay.module_action.pop()
    assert not verify_certificate(missing_action).ok


def test_certificate_file_round_trip(even_certificate_k7, tmp_path):
    path = even_certificate_k7.write(tmp_path / "even_k7.json")
    text = path.read_text(encoding="utf-8")
    assert text == even_certificate_k7.to_json()
    assert Certificate.read(path).to_json() == text


def test_cocycle_lemma_k7():
    report = verify_cocycle_lemma(7)
    assert report.inner_products == {"g1": 1, "g2": 0}
    assert report.selected_at == 7
    assert report.covering_holds is None


def test_cocycle_lemma_needs_three_mod_four():
    with pytest.raises(ValueError):
        verify_cocycle_lemma(8)
    with pytest.raises(ValueError):
        verify_cocycle_lemma(3)


def test_omega_sets_cover_u():
    k = 15
    sets = omega_sets(k)
    assert len(sets) == 7
    assert sets[0] == list(range(1, 12))
    assert sets[-1] == list(range(1, 8))
    _, vectors = pair_permutation_module(k, 2)
    assert np.array_equal(covering_vector(k, sets), vectors.u)
    with pytest.raises(ValueError):
        omega_sets(9)


def test_run_config_hypotheses():
    assert RunConfig(command="even", k=7).within_hypotheses
    assert not RunConfig(command="odd", k=9, p=3, allow_small=True).within_hypotheses
    with pytest.raises(HypothesisError):
        RunConfig(command="odd", k=9, p=3)
    with pytest.raises(HypothesisError):
        RunConfig(command="odd", k=12, p=5)
    with pytest.raises(HypothesisError):
        RunConfig(command="odd", k=12, p=2)
    with pytest.raises(HypothesisError):
        RunConfig(command="even", k=6)
    with pytest.raises(HypothesisError):
        RunConfig(command="lemma-cocycle", k=9)


def test_odd_construction_guards_small_degrees():
    with pytest.raises(ValueError):
        build_odd(9, 3)
    with pytest.raises(ValueError):
        run_even(6)


@pytest.mark.slow
def test_even_certificate_k8():
    cert = run_even(8, SEED, cocycle_trials=TRIALS, associativity_trials=TRIALS)
    assert cert.construction.j == 11
    assert cert.degrees == {"action": 112, "closed_form": 112, "ambient": 220}
    assert cert.module.factor_dims and sum(cert.module.factor_dims) == cert.module.dim
    assert cert.positive
    assert verify_certificate(cert).ok


@pytest.mark.slow
def test_even_certificate_k11():
    cert = run_even(11, SEED, cocycle_trials=TRIALS, associativity_trials=TRIALS)
    assert cert.degrees["action"] == 220
    assert sum(cert.module.factor_dims) == cert.module.dim
    assert cert.positive
    assert verify_certificate(cert).ok


@pytest.mark.slow
def test_cocycle_lemma_k11_and_k15():
    assert verify_cocycle_lemma(11).inner_products == {"g1": 1, "g2": 0}
    report = verify_cocycle_lemma(15)
    assert report.selected_at == 11
    assert report.covering_holds
    assert report.projection_consistent


@pytest.mark.slow
def test_even_certificate_k15():
    cert = run_even(15, SEED, cocycle_trials=TRIALS, associativity_trials=TRIALS)
    assert cert.degrees["action"] == 420
    assert cert.positive


@pytest.mark.slow
def test_odd_certificate_k12_p3():
    cert = run_odd(12, 3, SEED, cocycle_trials=TRIALS, associativity_trials=TRIALS)
    assert cert.construction.within_hypotheses
    assert cert.degrees == {"action": 198, "closed_form": 198}
    assert cert.module.dim == 55
    assert cert.module.factor_dims == [10, 45]
    assert cert.structure["M_indecomposable"]
    assert cert.structure["M_indecomposable_by"] != "sampled witness"
    assert cert.positive
    assert verify_certificate(cert).ok
