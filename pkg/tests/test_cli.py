import json

import pytest

from recmath.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_nim(capsys):
    code, out, _ = invoke(capsys, "solve", "nim", "5", "6", "7")
    assert code == 0
    assert out == "outcome: First\ngrundy: 4\nmove: heap 1 take 4\n"


def test_solve_nim_second_player(capsys):
    code, out, _ = invoke(capsys, "solve", "nim", "5", "5")
    assert code == 0
    assert "outcome: Second" in out
    assert "move:" not in out


def test_solve_nim_json(capsys):
    code, out, _ = invoke(capsys, "--json", "solve", "nim", "5", "6")
    assert code == 0
    body = json.loads(out)
    assert body["outcome"] == "First"
    assert body["move"] == {"heapIndex": 1, "take": 1}


def test_solve_make(capsys):
    code, out, _ = invoke(capsys, "solve", "make", "10")
    assert code == 0
    assert "outcome: First" in out
    assert "move: 1" in out
    code, out, _ = invoke(capsys, "solve", "make", "15")
    assert code == 0
    assert "outcome: Second" in out


def test_count_squares(capsys):
    code, out, _ = invoke(capsys, "count", "squares", "8")
    assert code == 0
    assert out == "204\n"


def test_count_rooks_and_triangles(capsys):
    assert invoke(capsys, "count", "rooks", "8")[1] == "40320\n"
    assert invoke(capsys, "count", "triangles", "5")[1] == "48\n"


def test_usage_error_exit_2(capsys):
    code, _, err = invoke(capsys, "count", "pentagons", "8")
    assert code == 2
    code, _, err = invoke(capsys, "frobnicate")
    assert code == 2


def test_domain_error_exit_1(capsys, tmp_path):
    code, _, err = invoke(capsys, "render", "lsystem", "--rules-file",
                          str(tmp_path / "missing.txt"), "--out",
                          str(tmp_path / "x.svg"))
    assert code == 1
    assert "error:" in err


def test_render_lsystem_writes_file(capsys, tmp_path):
    rules = tmp_path / "koch.txt"
    rules.write_text("axiom = F\nangle = 60\nF -> F-F++F-F\n")
    out_svg = tmp_path / "koch.svg"
    code, out, _ = invoke(
        capsys, "render", "lsystem", "--rules-file", str(rules),
        "--order", "4", "--out", str(out_svg),
    )
    assert code == 0
    assert "segments: 256" in out
    assert out_svg.read_text().count("<path") == 1


def test_render_lsystem_bad_rules_exit_1(capsys, tmp_path):
    rules = tmp_path / "bad.txt"
    rules.write_text("F -> FF\n")  # no axiom
    code, _, err = invoke(
        capsys, "render", "lsystem", "--rules-file", str(rules),
        "--out", str(tmp_path / "x.svg"),
    )
    assert code == 1
    assert "axiom" in err


def test_render_outputs_are_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for target in (a, b):
        code, _, _ = invoke(
            capsys, "render", "modular", "-n", "360", "-k", "2",
            "--out", str(target),
        )
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_render_tree(capsys, tmp_path):
    out_svg = tmp_path / "tree.svg"
    code, out, _ = invoke(
        capsys, "render", "tree", "--len", "50", "--theta", "25",
        "--out", str(out_svg),
    )
    assert code == 0
    assert out_svg.exists()


def test_render_stitch_and_curve(capsys, tmp_path):
    code, out, _ = invoke(
        capsys, "render", "stitch", "-n", "10", "--out", str(tmp_path / "s.svg")
    )
    assert code == 0
    assert "segments: 9" in out
    code, _, _ = invoke(
        capsys, "render", "curve", "--kind", "cardioid",
        "--out", str(tmp_path / "c.svg"),
    )
    assert code == 0


def test_solve_sudoku4(capsys, tmp_path):
    grid = tmp_path / "grid.txt"
    grid.write_text("0 2 3 4\n3 4 1 2\n4 3 2 1\n2 1 4 0\n")
    code, out, _ = invoke(capsys, "solve", "sudoku4", str(grid))
    assert code == 0
    assert "solutions: 1" in out
    assert "1234 / 3412 / 4321 / 2143" in out


def test_solve_sudoku4_conflicting_givens(capsys, tmp_path):
    grid = tmp_path / "bad.txt"
    grid.write_text("1 1 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n")
    code, _, err = invoke(capsys, "solve", "sudoku4", str(grid))
    assert code == 1


def test_solve_dominoes(capsys, tmp_path):
    board = tmp_path / "board.txt"
    # 4x4 with opposite corners removed (0 marks a removed cell)
    board.write_text("0 1 1 1\n1 1 1 1\n1 1 1 1\n1 1 1 0\n")
    code, out, _ = invoke(capsys, "solve", "dominoes", str(board))
    assert code == 0
    assert "tileable: False" in out

    board.write_text("1 1\n1 1\n")
    code, out, _ = invoke(capsys, "solve", "dominoes", str(board))
    assert code == 0
    assert "tileable: True" in out
    assert "dominoes: 2" in out


def test_solve_euler(capsys, tmp_path):
    graph = tmp_path / "graph.txt"
    graph.write_text("4\n0 1\n1 2\n2 3\n3 0\n")
    code, out, _ = invoke(capsys, "solve", "euler", str(graph))
    assert code == 0
    assert "class: circuit" in out


def test_estimate_pi(capsys):
    code, out, _ = invoke(
        capsys, "estimate", "pi", "--drops", "200000", "--seed", "42"
    )
    assert code == 0
    assert "estimate:" in out and "crossings:" in out
    code2, out2, _ = invoke(
        capsys, "estimate", "pi", "--drops", "200000", "--seed", "42"
    )
    assert out2 == out
