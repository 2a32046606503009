import json

import pytest

from vertextypes.cli import main


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_stream(capsys, monkeypatch):
    code, out, err = run(capsys, ["classify"], stdin="C~\nBg\n", monkeypatch=monkeypatch)
    assert code == 0
    docs = [json.loads(line) for line in out.splitlines()]
    assert docs[0]["type_tuple"] == [0, 0, 4, 0, 0, 0, 0]
    assert docs[1]["graph6"] == "Bg"


def test_classify_bad_line_continues(capsys, monkeypatch):
    code, out, err = run(
        capsys, ["classify"], stdin="C~\n!!\nBg\n", monkeypatch=monkeypatch
    )
    assert code == 1
    assert "line 2" in err
    assert len(out.splitlines()) == 2


def test_classify_edge_list(capsys, monkeypatch):
    code, out, err = run(
        capsys,
        ["classify", "--format", "edge-list"],
        stdin="3\n0 1\n1 2\n",
        monkeypatch=monkeypatch,
    )
    assert code == 0
    assert json.loads(out)["graph6"] == "Bg"


def test_construct_check(capsys):
    code, out, _ = run(capsys, ["construct", "t", "9", "--check"])
    assert code == 0
    assert "typical=7" in out
    code, out, _ = run(capsys, ["construct", "vt", "12", "--check"])
    assert code == 0
    assert "very_typical=10" in out


def test_construct_out_of_range(capsys):
    code, _, err = run(capsys, ["construct", "pantypical", "8"])
    assert code == 2
    assert "order" in err


def test_construct_figure1(capsys):
    code, out, _ = run(capsys, ["construct", "figure1"])
    assert code == 0
    assert len(out.splitlines()) == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, ["enumerate", "4"])
    assert code == 0
    assert len(out.splitlines()) == 11


def test_enumerate_pipes_into_classify(capsys, monkeypatch):
    code, out, _ = run(capsys, ["enumerate", "5"])
    code, out, _ = run(capsys, ["classify"], stdin=out, monkeypatch=monkeypatch)
    assert code == 0
    assert len(out.splitlines()) == 34


def test_guard_needs_acknowledgment(capsys):
    code, _, err = run(capsys, ["enumerate", "4", "--guard", "11"])
    assert code == 2
    assert "force-guard" in err
    code, out, _ = run(capsys, ["enumerate", "4", "--guard", "11", "--force-guard"])
    assert code == 0


def test_verify_figure1(capsys):
    code, out, _ = run(capsys, ["verify", "figure1"])
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True
    assert doc["found"] == [1, 3]


def test_verify_theorem1_small(capsys):
    code, out, _ = run(
        capsys, ["verify", "theorem1", "--n-max", "6", "--construct-to", "20"]
    )
    assert code == 0
    for line in out.splitlines():
        assert json.loads(line)["pass"] is True


def test_search_vt(capsys):
    code, out, _ = run(capsys, ["search", "vt", "--n", "6"])
    assert code == 0
    doc = json.loads(out)
    assert doc["objective"] == "VT-max"
    assert doc["achieved"] == 2


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.txt"
    code, out, _ = run(capsys, ["enumerate", "4", "--output", str(target)])
    assert code == 0
    assert out == ""
    assert len(target.read_text().splitlines()) == 11


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
