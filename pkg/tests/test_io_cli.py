import json

import pytest

from latticeknots import build_knot, torus_knot
from latticeknots.cli import main
from latticeknots.io import (
    dump_tabulation_json,
    knot_from_vertex_csv,
    knot_to_obj,
    knot_to_vertex_csv,
    load_tabulation_json,
    sniff_kind,
)
from latticeknots.torus import generate_torus_tabulation

TREFOIL_JSON = (
    '{"lengths": {"x": [2, 3, 2, 1], "y": [1, 2, 3, 2], "z": [3, 2, 1, 2]}, '
    '"origin": [0, 0, 0], "torus_p": 2, '
    '"types": ["z+", "x+", "y+", "z-", "x-", "y-", '
    '"z+", "x+", "y+", "z-", "x-", "y-"]}\n'
)


def test_tabulation_json_round_trip():
    tab = generate_torus_tabulation(3)
    text = dump_tabulation_json(tab, torus_p=3)
    parsed, origin, torus_p = load_tabulation_json(text)
    assert parsed == tab
    assert origin == (0, 0, 0)
    assert torus_p == 3
    assert dump_tabulation_json(parsed, origin, torus_p) == text


def test_tabulation_json_golden_bytes():
    tab = generate_torus_tabulation(2)
    assert dump_tabulation_json(tab, torus_p=2) == TREFOIL_JSON


def test_tabulation_json_rejects_malformed():
    with pytest.raises(ValueError):
        load_tabulation_json('{"types": ["x+"]}')
    with pytest.raises(ValueError):
        load_tabulation_json('{"types": ["w+"], "lengths": {"x": [1]}}')
    with pytest.raises(ValueError):
        load_tabulation_json(
            '{"types": ["x+"], "lengths": {"x": [1.5], "y": [], "z": []}}'
        )
    with pytest.raises(json.JSONDecodeError):
        load_tabulation_json("{not json")


def test_vertex_csv_round_trip(trefoil):
    text = knot_to_vertex_csv(trefoil)
    again = knot_from_vertex_csv(text)
    assert again == trefoil
    assert knot_to_vertex_csv(again) == text


def test_vertex_csv_flags_critical_vertices(unit_square):
    text = knot_to_vertex_csv(unit_square)
    lines = text.splitlines()
    assert lines[0] == "x,y,z,critical"
    assert lines[1] == "0,0,0,1"
    assert all(line.endswith(",1") for line in lines[1:])


def test_vertex_csv_accepts_three_columns():
    K = knot_from_vertex_csv("0,0,0\n1,0,0\n1,1,0\n0,1,0\n")
    assert K.edge_length == 4


def test_vertex_csv_reports_bad_lines():
    with pytest.raises(ValueError, match="line 2"):
        knot_from_vertex_csv("x,y,z,critical\n1,2\n")
    with pytest.raises(ValueError, match="line 3"):
        knot_from_vertex_csv("0,0,0\n1,0,0\n1,q,0\n")
    with pytest.raises(ValueError):
        knot_from_vertex_csv("")


def test_obj_export(unit_square):
    assert knot_to_obj(unit_square) == (
        "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nl 1 2 3 4 1\n"
    )
    obj = knot_to_obj(torus_knot(7))
    v_lines = [line for line in obj.splitlines() if line.startswith("v ")]
    assert len(v_lines) == 264


def test_sniff_kind(tmp_path):
    assert sniff_kind("knot.json", "") == "json"
    assert sniff_kind("knot.csv", "") == "csv"
    assert sniff_kind("data", '  {"types": []}') == "json"
    assert sniff_kind("data", "0,0,0") == "csv"
    with pytest.raises(ValueError):
        sniff_kind("data", "   ")


# --- CLI ------------------------------------------------------------------


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_generate_matches_golden(capsys):
    code, out, _ = run_cli(capsys, "generate", "--p", "2")
    assert code == 0
    assert out == TREFOIL_JSON


def test_cli_generate_p7_type_count(capsys, tmp_path):
    target = tmp_path / "t7.json"
    code, _, _ = run_cli(capsys, "generate", "--p", "7", "-o", str(target))
    assert code == 0
    data = json.loads(target.read_text())
    assert len(data["types"]) == 42


def test_cli_generate_rejects_p1(capsys):
    code, _, err = run_cli(capsys, "generate", "--p", "1")
    assert code == 2
    assert "at least 2" in err


def test_cli_validate_family_file(capsys, tmp_path):
    target = tmp_path / "t5.json"
    run_cli(capsys, "generate", "--p", "5", "-o", str(target))
    code, out, _ = run_cli(capsys, "validate", str(target))
    assert code == 0
    assert "simple, closed, 30 sticks, length 138" in out
    assert "torus structure checks (p=5): ok" in out


def test_cli_validate_tampered_table(capsys, tmp_path):
    data = json.loads(TREFOIL_JSON)
    data["lengths"]["z"] = [2, 1, 1, 2]
    del data["torus_p"]
    target = tmp_path / "bad.json"
    target.write_text(json.dumps(data))
    code, _, err = run_cli(capsys, "validate", str(target))
    assert code == 1
    assert "self-intersection at (1, 0, 2)" in err


def test_cli_validate_wrongly_tagged_file(capsys, tmp_path):
    data = json.loads(TREFOIL_JSON)
    data["torus_p"] = 3
    target = tmp_path / "mistagged.json"
    target.write_text(json.dumps(data))
    code, _, err = run_cli(capsys, "validate", str(target))
    assert code == 1
    assert "does not match" in err


def test_cli_validate_empty_file(capsys, tmp_path):
    target = tmp_path / "empty.json"
    target.write_text("")
    code, _, err = run_cli(capsys, "validate", str(target))
    assert code == 2


def test_cli_validate_missing_file(capsys):
    code, _, _ = run_cli(capsys, "validate", "/no/such/file.json")
    assert code == 2


def test_cli_distortion_square(capsys, tmp_path):
    target = tmp_path / "square.csv"
    target.write_text("0,0,0\n1,0,0\n1,1,0\n0,1,0\n")
    code, out, _ = run_cli(capsys, "distortion", str(target))
    assert code == 0
    assert out == "1\n"


def test_cli_distortion_torus_with_oracle_and_pairs(capsys, tmp_path):
    target = tmp_path / "t4.json"
    run_cli(capsys, "generate", "--p", "4", "-o", str(target))
    code, out, _ = run_cli(
        capsys, "distortion", str(target), "--pairs", "--oracle"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "41"
    assert lines[-1] == "oracle: agree"
    i, j = map(int, lines[1].split())
    assert 0 <= i < j < 90


def test_cli_reduce_check_irreducible(capsys, tmp_path):
    target = tmp_path / "t3.json"
    run_cli(capsys, "generate", "--p", "3", "-o", str(target))
    code, out, _ = run_cli(capsys, "reduce", str(target), "--check-irreducible")
    assert code == 0
    assert out.strip() == "irreducible"


def test_cli_reduce_applies_move(capsys, tmp_path):
    source = tmp_path / "rect.csv"
    source.write_text("0,0,0\n2,0,0\n2,1,0\n0,1,0\n")
    out_path = tmp_path / "reduced.csv"
    code, _, _ = run_cli(
        capsys,
        "reduce", str(source),
        "--stick", "0", "--direction", "with_orientation", "--amount", "1",
        "-o", str(out_path),
    )
    assert code == 0
    reduced = knot_from_vertex_csv(out_path.read_text())
    assert reduced.edge_length == 4


def test_cli_reduce_collision_exits_one(capsys, tmp_path):
    target = tmp_path / "t2.json"
    run_cli(capsys, "generate", "--p", "2", "-o", str(target))
    code, _, err = run_cli(
        capsys,
        "reduce", str(target),
        "--stick", "0", "--direction", "with", "--amount", "1",
    )
    assert code == 1
    assert "collides" in err


def test_cli_reduce_requires_move_or_check(capsys, tmp_path):
    target = tmp_path / "t2.json"
    run_cli(capsys, "generate", "--p", "2", "-o", str(target))
    code, _, err = run_cli(capsys, "reduce", str(target))
    assert code == 2


def test_cli_export_csv_round_trip(capsys, tmp_path):
    source = tmp_path / "t2.json"
    run_cli(capsys, "generate", "--p", "2", "-o", str(source))
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    run_cli(capsys, "export", str(source), "--format", "csv", "-o", str(first))
    run_cli(capsys, "export", str(first), "--format", "csv", "-o", str(second))
    assert first.read_text() == second.read_text()


def test_cli_export_obj(capsys, tmp_path):
    source = tmp_path / "square.csv"
    source.write_text("0,0,0\n1,0,0\n1,1,0\n0,1,0\n")
    code, out, _ = run_cli(capsys, "export", str(source), "--format", "obj")
    assert code == 0
    assert out == "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nl 1 2 3 4 1\n"


def test_cli_export_json_is_canonical(capsys, tmp_path):
    source = tmp_path / "t2.json"
    run_cli(capsys, "generate", "--p", "2", "-o", str(source))
    code, out1, _ = run_cli(capsys, "export", str(source), "--format", "json")
    assert code == 0
    tab, origin, _ = load_tabulation_json(out1)
    rebuilt = build_knot(tab, origin)
    assert rebuilt.point_set == torus_knot(2).point_set
    _, out2, _ = run_cli(capsys, "export", str(source), "--format", "json")
    assert out1 == out2


def test_cli_survey(capsys):
    code, out, _ = run_cli(capsys, "survey", "--max-p", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("p,edge_length,stick_count,delta_v")
    row6 = next(line for line in lines if line.startswith("6,"))
    cells = row6.split(",")
    assert cells[1] == "196"
    assert cells[3] == "89"
    assert cells[4:6] == ["89", "MATCH"]


def test_cli_survey_even_only(capsys):
    code, out, _ = run_cli(capsys, "survey", "--max-p", "7", "--even-formulas")
    assert code == 0
    ps = [line.split(",")[0] for line in out.splitlines()[1:]]
    assert ps == ["2", "4", "6"]


def test_cli_survey_cap(capsys):
    code, _, err = run_cli(capsys, "survey", "--max-p", "30")
    assert code == 2
    assert "cap" in err


def test_cli_enumerate(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--max-length", "8")
    assert code == 0
    assert out.splitlines() == [
        "edge_length,conformations",
        "4,1",
        "6,3",
        "8,11",
    ]


def test_cli_enumerate_classify_with_golden_dir(capsys, tmp_path):
    golden = tmp_path / "golden"
    code, out, _ = run_cli(
        capsys,
        "enumerate", "--max-length", "6", "--classify",
        "--golden-dir", str(golden),
    )
    assert code == 0
    assert out.splitlines() == [
        "edge_length,distortion_one_count",
        "4,1",
        "6,1",
    ]
    files = sorted(f.name for f in golden.iterdir())
    assert files == [
        "distortion_one_len04_0.csv",
        "distortion_one_len06_0.csv",
    ]
    square = knot_from_vertex_csv((golden / files[0]).read_text())
    assert square.edge_length == 4


def test_cli_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
