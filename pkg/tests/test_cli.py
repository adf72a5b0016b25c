import json

from src import app
from src.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, main
from src.config import RunConfig
from src.pipelines import Certificate


def test_min_degree_named_group(capsys):
    assert main(["min-degree", "--group", "A5"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["minimal_degree"] == 5
    assert report["order"] == 60


def test_min_degree_from_file(tmp_path):
    group_file = tmp_path / "v4.txt"
    group_file.write_text("4\n(1 2)(3 4)\n(1 3)(2 4)\n")
    assert main(["min-degree", "--input", str(group_file)]) == EXIT_USAGE


def test_min_degree_order_cap():
    assert main(["min-degree", "--group", "SL(2,5)", "--max-order", "50"]) == EXIT_USAGE


def test_hypotheses_are_usage_errors():
    assert main(["odd", "--k", "9", "--p", "3"]) == EXIT_USAGE
    assert main(["odd", "--k", "12", "--p", "5"]) == EXIT_USAGE
    assert main(["even", "--k", "5"]) == EXIT_USAGE


def test_lemma_cocycle_writes_report(tmp_path):
    out = tmp_path / "lemma" / "k7.json"
    assert main(["lemma-cocycle", "--k", "7", "--out", str(out)]) == EXIT_OK
    report = json.loads(out.read_text())
    assert report["inner_products"] == {"g1": 1, "g2": 0}


def test_verify_certificate_file(even_certificate_k7, tmp_path, capsys):
    path = even_certificate_k7.write(tmp_path / "even_k7.json")
    assert main(["verify", str(path)]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["checks"]["degree"] is True

    tampered = Certificate.read(path)
    tampered.degrees["action"] = 85
    bad = tampered.write(tmp_path / "tampered.json")
    assert main(["verify", str(bad)]) == EXIT_CHECK_FAILED


def test_missing_certificate_file(tmp_path):
    assert main(["verify", str(tmp_path / "absent.json")]) == EXIT_USAGE


def test_display_wrapper_reports_errors():
    result, message = app.run_for_display(RunConfig(command="min-degree"))
    assert result is None
    assert message.startswith("Error:")
