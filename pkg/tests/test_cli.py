import json

import pytest

from qck import cli, weyl, wiring
from qck.qtorus import QTorusElement


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_reference_word(capsys):
    code, out, err = run(
        capsys, "analyze", "--rank", "2", "--word", "1,2,1,-1,-2"
    )
    assert code == 0
    data = json.loads(out)
    assert (data["m"], data["s"], data["n"], data["d"], data["k"]) == (5, 2, 7, 1, 1)
    assert data["w1"] == "1,2" and data["w2"] == "1,2,1"
    assert data["psi_ok"] is True
    assert "m=5" in err


def test_analyze_usage_error(capsys):
    code, out, err = run(capsys, "analyze", "--rank", "2", "--word", "3,1")
    assert code == 2


def test_image_roundtrip(capsys):
    code, out, _ = run(
        capsys, "image", "--rank", "2", "--word", "1,2,1,-1,-2", "--expr", "x12"
    )
    assert code == 0
    elem = QTorusElement.from_json(json.loads(out))
    A2 = weyl.type_a(2)
    assert elem == wiring.generator_image(A2, (1, 2, 1, -1, -2), 1, 2)


def test_image_minor_flag(capsys):
    code, out, _ = run(
        capsys, "image", "--rank", "2", "--word", "1,2,1,-1,-2", "--minor", "12|12"
    )
    assert code == 0
    elem = QTorusElement.from_json(json.loads(out))
    assert len(elem.terms) == 3


def test_diagram_ascii_columns(capsys):
    code, out, _ = run(
        capsys, "diagram", "--rank", "3", "--word", "-2,1,-3,3,2,-1,-2,1,-1"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    crossing_cols = 0
    for col in range(9):
        cells = [line[3 + 4 * col : 6 + 4 * col] for line in lines]
        if any("/" in c or "\\" in c for c in cells):
            crossing_cols += 1
    assert crossing_cols == 9


def test_diagram_svg(capsys):
    code, out, _ = run(
        capsys, "diagram", "--rank", "2", "--word", "1,2,1,-1,-2", "--format", "svg"
    )
    assert code == 0
    assert out.startswith("<svg") and out.count("<line") == 3 + 5


def test_pivots_table1_exits_zero(capsys):
    code, out, err = run(capsys, "pivots", "table1")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 10 and all(r["passed"] for r in rows)
    assert "10/10" in err


def test_pivots_check_certificate_file(tmp_path, capsys):
    cert = {
        "word": "-1,1",
        "order": [1, 2],
        "claims": [
            {"a_expr": "x11", "elem_expr": "x22"},
            {"a_expr": "x11", "elem_expr": "x22"},
        ],
    }
    path = tmp_path / "cert.json"
    path.write_text(json.dumps(cert))
    code, out, _ = run(capsys, "pivots", "check", "--rank", "1", "--cert", str(path))
    assert code == 0
    bad = dict(cert)
    bad["claims"] = [
        {"a_expr": "x11", "elem_expr": "x11"},
        {"a_expr": "x11", "elem_expr": "x11"},
    ]
    path.write_text(json.dumps(bad))
    code, out, _ = run(capsys, "pivots", "check", "--rank", "1", "--cert", str(path))
    assert code == 1


def test_pivots_auto(capsys):
    code, out, _ = run(capsys, "pivots", "auto", "--rank", "2", "--word", "-1,2")
    assert code == 0
    data = json.loads(out)
    assert data["report"]["passed"] is True
    code, _, _ = run(capsys, "pivots", "auto", "--rank", "1", "--word", "-1,1")
    assert code == 1


def test_normal_form_smith(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("2 0\n0 3\n")
    code, out, _ = run(capsys, "normal-form", "--kind", "smith", "--file", str(path))
    assert code == 0
    data = json.loads(out)
    assert data["invariant_factors"] == [1, 6]


def test_normal_form_skew_json_input(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text("[[0, 2], [-2, 0]]")
    code, out, _ = run(capsys, "normal-form", "--kind", "skew", "--file", str(path))
    assert code == 0
    data = json.loads(out)
    assert data["multipliers"] == [2] and data["zero_dim"] == 0


def test_module_verify_kinds(capsys):
    code, out, _ = run(
        capsys, "module", "verify", "--kind", "HighestWeight", "--truncate", "10"
    )
    assert code == 0
    code, out, _ = run(
        capsys, "module", "verify", "--kind", "Laurent", "--gamma", "-1:1",
        "--eta", "1", "--truncate", "10",
    )
    assert code == 1


def test_module_verify_tensor(capsys):
    code, out, _ = run(
        capsys, "module", "verify", "--tensor", "--rank", "1", "--word", "-1,1",
        "--truncate", "2",
    )
    assert code == 0


def test_module_act(capsys):
    vector = json.dumps([{"n": [0, 0], "coeff": [{"q": 0, "gamma": [], "num": 1, "den": 1}]}])
    code, out, _ = run(
        capsys, "module", "act", "--rank", "1", "--word", "-1,1", "--expr", "x11",
        "--vector", vector,
    )
    assert code == 0
    data = json.loads(out)
    assert len(data) == 1 and data[0]["n"] == [-1, -1]


def test_module_act_with_specialized_params(capsys):
    # y-type action picks up the specialized gamma_1 = -1/2 q^2
    vector = json.dumps([{"n": [1, 0], "coeff": [{"q": 0, "gamma": [], "num": 1, "den": 1}]}])
    code, out, _ = run(
        capsys, "module", "act", "--rank", "1", "--word", "-1,1", "--expr", "x21",
        "--vector", vector, "--params", "g1=-1/2:2",
    )
    assert code == 0
    data = json.loads(out)
    assert len(data) == 1
    (term,) = data
    assert term["coeff"] == [{"q": 3, "gamma": [], "num": -1, "den": 2}]


def test_internal_cross_check_exit_code(monkeypatch, capsys):
    from qck import strings

    def boom(datum, word):
        raise strings.CrossCheckFailed("forced")

    monkeypatch.setattr(strings, "invariants", boom)
    code = cli.main(["analyze", "--rank", "2", "--word", "1,2,1,-1,-2"])
    captured = capsys.readouterr()
    assert code == 3
    assert "cross-check" in captured.err


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemma", "--rank", "2", "--max-len", "3")
    assert code == 0
    code, out, _ = run(
        capsys, "verify", "--suite", "congruence", "--rank", "1", "--max-len", "4"
    )
    assert code == 0
    code, out, _ = run(
        capsys, "verify", "--suite", "psi", "--rank", "2", "--word", "1,2,1,-1,-2"
    )
    assert code == 0
    code, out, _ = run(
        capsys, "verify", "--suite", "relations", "--rank", "2", "--max-len", "2"
    )
    assert code == 0


def test_usage_exit_code():
    with pytest.raises(SystemExit) as err:
        cli.main(["analyze", "--rank", "2"])  # missing --word
    assert err.value.code == 2


@pytest.mark.parametrize(
    "expr,golden",
    [
        ("x12", "ref_word_x12.json"),
        ("minor(12|12)", "ref_word_minor1212.json"),
        ("x21^2 * x33 * minor(23|23)", "ref_word_pivot_unit.json"),
    ],
)
def test_image_golden_files(capsys, expr, golden):
    import pathlib

    path = pathlib.Path(__file__).parent / "golden" / golden
    code, out, _ = run(
        capsys, "image", "--rank", "2", "--word", "1,2,1,-1,-2", "--expr", expr
    )
    assert code == 0
    assert out == path.read_text()  # byte-identical: canonical term order
