import pytest

from src.errors import BudgetExhaustedError, HypothesisError
from src.groups import Permutation, PermGroup, alternating_group
from src.pipelines import analyze_min_degree, min_faithful_degree, parse_group_file, special_linear_group


def test_named_groups():
    assert min_faithful_degree(alternating_group(5)) == 5
    assert min_faithful_degree(special_linear_group(3)) == 8
    assert min_faithful_degree(special_linear_group(5)) == 24


def test_report_for_sl23():
    report = analyze_min_degree(special_linear_group(3))
    assert report.order == 24
    assert report.degree == 8
    assert report.minimal_normal_order == 2
    assert report.witness_order == 3
    assert report.minimal_degree == report.order // report.witness_order


def test_cyclic_group_of_order_four():
    group = PermGroup([Permutation.from_cycles([(1, 2, 3, 4)], 4)], degree=4, name="C4")
    assert min_faithful_degree(group) == 4


def test_klein_four_group_is_rejected():
    group = PermGroup([Permutation.from_cycles([(1, 2), (3, 4)], 4),
                       Permutation.from_cycles([(1, 3), (2, 4)], 4)], degree=4, name="V4")
    with pytest.raises(HypothesisError):
        analyze_min_degree(group)


def test_order_cap():
    with pytest.raises(BudgetExhaustedError):
        analyze_min_degree(special_linear_group(5), max_order=100)


def test_parse_group_file(tmp_path):
    text = "5\n# A5\n(1 2 3)\n\n(3 4 5)\n"
    group = parse_group_file(text)
    assert group.degree == 5
    assert group.order() == 60
    path = tmp_path / "a5.txt"
    path.write_text(text)
    assert parse_group_file(path).name == "a5"


def test_parse_group_file_errors():
    with pytest.raises(ValueError):
        parse_group_file("# nothing here\n\n")
    with pytest.raises(ValueError):
        parse_group_file("five\n(1 2 3)\n")
    with pytest.raises(ValueError):
        special_linear_group(4)
