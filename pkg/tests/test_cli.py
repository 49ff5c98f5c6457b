import json

import pytest

from richline.algebra import ExactMatrix, sp, validate_spec
from richline.cli import main, parse_algebra, parse_blocks
from richline.diagram import diagram_to_json, even_diagram
from richline.richardson import richardson_element

X1_ITEMS = [(1, 2, 1), (2, 4, 1), (3, 5, 1), (5, 6, -1)]
X2_ITEMS = [(1, 2, 1), (2, 5, 1), (3, 4, 1), (5, 6, -1)]


def _write_matrix(path, n, items):
    matrix = ExactMatrix.from_items(n, items)
    path.write_text(json.dumps(matrix.to_json_obj()))
    return str(path)


def test_parse_algebra():
    assert parse_algebra("sl9").name == "sl9"
    assert parse_algebra("so8").family == "so-even"
    assert parse_blocks("3,1,2,3") == (3, 1, 2, 3)
    with pytest.raises(Exception):
        parse_algebra("e8")


def test_construct_ascii(capsys):
    code = main(["construct", "--algebra", "sl9", "--blocks", "3,1,2,3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "Richardson: true" in out
    assert "1---4---5---7" in out
    assert "dim g^X: 22" in out and "dim m: 22" in out


def test_construct_branched(capsys):
    code = main(["construct", "--algebra", "sp6", "--blocks", "1,1,2,1,1"])
    out = capsys.readouterr().out
    assert code == 0
    assert "dim g^X: 5" in out and "dim m: 5" in out


def test_construct_parse_error(capsys):
    code = main(["construct", "--algebra", "sl5", "--blocks", "6"])
    assert code == 2
    assert "sum" in capsys.readouterr().err


def test_construct_json_matches_library(capsys):
    code = main(["construct", "--algebra", "sp6", "--blocks", "1,2,2,1",
                 "--format", "json"])
    out = capsys.readouterr().out.strip()
    assert code == 0
    report = richardson_element(validate_spec(sp(6), (1, 2, 2, 1)))
    assert out == report.to_json()


def test_construct_output_is_byte_stable(capsys):
    args = ["construct", "--algebra", "so8", "--blocks", "1,1,2,2,1,1", "--format", "json"]
    main(args)
    first = capsys.readouterr().out
    main(args)
    second = capsys.readouterr().out
    assert first == second


def test_construct_probe(capsys):
    code = main(["construct", "--algebra", "sp6", "--blocks", "1,2,2,1",
                 "--probe", "25", "--seed", "3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "minimality probe: ok (25 samples)" in out


def test_verify_exit_codes(tmp_path, capsys):
    x1 = _write_matrix(tmp_path / "x1.json", 6, X1_ITEMS)
    x2 = _write_matrix(tmp_path / "x2.json", 6, X2_ITEMS)
    zero = _write_matrix(tmp_path / "zero.json", 6, [])

    assert main(["verify", x2, "--algebra", "sp6", "--blocks", "1,2,2,1"]) == 0
    out = capsys.readouterr().out
    assert "richardson: true" in out

    assert main(["verify", x1, "--algebra", "sp6", "--blocks", "1,2,2,1"]) == 1
    out = capsys.readouterr().out
    assert "richardson: false" in out and "dim g^X = 7" in out and "dim m = 5" in out

    assert main(["verify", zero, "--algebra", "sp6", "--blocks", "6"]) == 0

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["verify", str(bad), "--algebra", "sp6", "--blocks", "1,2,2,1"]) == 2

    outside = _write_matrix(tmp_path / "outside.json", 6, [(2, 3, 1), (4, 5, -1)])
    assert main(["verify", outside, "--algebra", "sp6", "--blocks", "1,2,2,1"]) == 3


def test_sweep_csv(capsys):
    assert main(["sweep", "--family", "sp", "--max", "6"]) == 0
    out = capsys.readouterr().out
    lines = out.strip().split("\n")
    assert lines[0].startswith("algebra,blocks,case")
    branched = [ln for ln in lines if ln.startswith("sp6,1-1-2-1-1,")]
    assert len(branched) == 1 and branched[0].endswith(",branched")
    assert all("," in ln for ln in lines[1:])


def test_sweep_sl4_all_richardson(capsys):
    assert main(["sweep", "--family", "sl", "--max", "4"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    sl4 = [ln for ln in lines if ln.startswith("sl4,")]
    assert len(sl4) == 8
    assert all(",richardson" in ln for ln in sl4)


def test_sweep_so6_row(capsys):
    assert main(["sweep", "--family", "so", "--max", "6"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    row = [ln for ln in lines if ln.startswith("so6,3-3,")]
    assert len(row) == 1
    fields = row[0].split(",")
    assert fields[3] == "2-2-1-1" and fields[4] == "4-2"  # partition, dual
    assert fields[8] == "true"


def test_render(tmp_path, capsys):
    spec = validate_spec(sp(6), (1, 2, 2, 1))
    path = tmp_path / "diagram.json"
    path.write_text(diagram_to_json(even_diagram(spec)))
    assert main(["render", str(path)]) == 0
    ascii_out = capsys.readouterr().out
    assert "1---2---5---6" in ascii_out
    assert main(["render", str(path), "--format", "dot"]) == 0
    dot_out = capsys.readouterr().out
    assert dot_out.startswith("graph linediagram {")
    bad = tmp_path / "bad.json"
    bad.write_text("[1,2")
    assert main(["render", str(bad)]) == 2
