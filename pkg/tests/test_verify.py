import json

import pytest

from vertextypes.classify import VertexType, count_type, is_pantypical
from vertextypes.graph import degree_sequence
from vertextypes.verify import (
    VerifyReport,
    expected_f,
    expected_g,
    find_separating_pair,
    max_type_count,
    min_pantypical_size,
    run_survey,
    search_type_witness,
    verify_theorem1,
    verify_theorem3,
)


def test_expected_tables():
    assert [expected_f(n) for n in range(1, 13)] == [
        0, 0, 0, 0, 1, 2, 4, 5, 6, 8, 9, 10,
    ]
    assert [expected_g(n) for n in range(1, 13)] == [
        0, 0, 0, 0, 2, 3, 4, 5, 7, 8, 9, 10,
    ]


def test_report_json_shape():
    r = VerifyReport("x", 5, 1, 1, "DCw", 34, 7, True)
    doc = json.loads(r.to_json())
    assert set(doc) == {
        "claim", "n", "found", "expected", "witness_graph6",
        "scanned", "millis", "pass",
    }
    assert doc["pass"] is True


def test_survey_small():
    survey = run_survey(6)
    assert survey[5].classes == 34
    assert survey[6].classes == 156
    assert survey[5].max_vt == 1
    assert survey[6].max_t == 3
    assert survey[6].pantypical_classes == 0
    assert count_type(survey[5].vt_witness, VertexType.VERY_TYPICAL) == 1


def test_max_type_count():
    count, witness = max_type_count(5, VertexType.TYPICAL)
    assert count == 2
    assert count_type(witness, VertexType.TYPICAL) == 2


def test_verify_theorem1_small():
    reports = verify_theorem1(n_max=6, construct_to=30)
    assert all(r.passed for r in reports)
    claims = {r.claim for r in reports}
    assert "theorem1/f/exhaustive" in claims
    assert "theorem1/g/constructive" in claims
    assert "corollary2/vt" in claims and "corollary2/t" in claims


def test_verify_theorem3_small():
    report = verify_theorem3(n_max=6, construct_to=30)
    assert report.passed
    assert report.found == 0


def test_min_pantypical_size_nonexistent():
    with pytest.raises(ValueError):
        min_pantypical_size(4)


def test_find_separating_pair():
    a, b, ta, tb = find_separating_pair((4, 4, 4, 3, 3, 2))
    assert degree_sequence(a) == degree_sequence(b) == (4, 4, 4, 3, 3, 2)
    assert ta != tb
    assert {ta[6], tb[6]} == {1, 3}
    with pytest.raises(ValueError):
        find_separating_pair((3, 2, 2))  # odd sum
    with pytest.raises(ValueError):
        find_separating_pair((3, 3, 3, 1))  # not realizable
    with pytest.raises(ValueError):
        find_separating_pair((2, 2, 2))  # only C3 realizes it


def test_search_type_witness_exhaustive_range():
    g = search_type_witness(6, VertexType.VERY_TYPICAL)
    assert count_type(g, VertexType.VERY_TYPICAL) == 2


def test_search_type_witness_template_range():
    g = search_type_witness(10, VertexType.VERY_TYPICAL)
    assert count_type(g, VertexType.VERY_TYPICAL) == 8
