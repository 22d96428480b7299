from fractions import Fraction

import pytest

from jumpnum.cli import main

from conftest import FIXTURES

CUSP = str(FIXTURES / "cusp.res")
MAXIMAL = str(FIXTURES / "maximal.res")
SAMPLE20 = str(FIXTURES / "sample20.res")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_ok(capsys):
    code, out, err = run(capsys, "validate", CUSP)
    assert (code, out) == (0, "OK\n")


def test_validate_reports_violations(tmp_path, capsys):
    bad = tmp_path / "bad.res"
    bad.write_text("N 4\nP 2 1\nP 3 1\nP 4 2 3\nD 1 0 0 0\n")
    code, out, err = run(capsys, "validate", str(bad))
    assert code == 1
    assert "intersection" in out or "tree" in out


def test_parse_error_goes_to_stderr(tmp_path, capsys):
    bad = tmp_path / "bad.res"
    bad.write_text("N 2\nP 2 3\nD 1 1\n")
    code, out, err = run(capsys, "validate", str(bad))
    assert code == 1
    assert out == ""
    assert "forward reference at line 2" in err


def test_missing_file(capsys):
    code, out, err = run(capsys, "lct", "no-such-file.res")
    assert code == 1
    assert "cannot read" in err


def test_matrices_p(capsys):
    code, out, _ = run(capsys, "matrices", CUSP, "--which", "P")
    assert code == 0
    assert out == "1 0 0\n-1 1 0\n-1 -1 1\n"


def test_matrices_q(capsys):
    _, out, _ = run(capsys, "matrices", CUSP, "--which", "Q")
    assert out == "1 0 0\n1 1 0\n2 1 1\n"


def test_matrices_v(capsys):
    _, out, _ = run(capsys, "matrices", CUSP, "--which", "V")
    assert out == "1 1 2\n1 2 3\n2 3 6\n"


def test_matrices_k(capsys):
    _, out, _ = run(capsys, "matrices", CUSP, "--which", "K")
    assert out == "1 2 4\n"


def test_semigroup_output(capsys):
    code, out, _ = run(capsys, "semigroup", CUSP, "--vertex", "3")
    assert code == 0
    assert out == (
        "s 3 1 2\n"
        "s 3 2 3\n"
        "M_frobenius 1 -2\n"
        "M_frobenius 2 -3\n"
        "S generators: 2 3 6\n"
    )


def test_lct_outputs(capsys):
    assert run(capsys, "lct", MAXIMAL)[1] == "2\n"
    assert run(capsys, "lct", CUSP)[1] == "5/6\n"
    assert run(capsys, "lct", SAMPLE20)[1] == "5/78\n"


def test_jumping_text_default_bound(capsys):
    code, out, _ = run(capsys, "jumping", CUSP)
    assert code == 0
    assert out.splitlines() == ["5/6", "7/6", "4/3", "3/2", "5/3", "11/6", "2"]


def test_jumping_fractions_are_reduced(capsys):
    _, out, _ = run(capsys, "jumping", SAMPLE20, "--vertex", "20", "--bound", "1")
    lines = out.splitlines()
    assert len(lines) == 23
    assert lines[0] == "6/17"
    assert lines[-1] == "1"
    assert all("/1" not in line.partition("/")[2] for line in lines)


def test_jumping_tsv_support(capsys):
    _, out, _ = run(capsys, "jumping", CUSP, "--bound", "1", "--format", "tsv")
    assert out == "5/6\t3\n"


def test_jumping_tsv_multi_support(capsys):
    _, out, _ = run(capsys, "jumping", SAMPLE20, "--bound", "1/2", "--format", "tsv")
    lines = out.splitlines()
    assert lines[0] == "5/78\t3"
    for line in lines:
        xi, _, support = line.partition("\t")
        assert Fraction(xi) <= Fraction(1, 2)
        vertices = [int(v) for v in support.split(",")]
        assert vertices == sorted(vertices)


def test_jumping_prefix_property(capsys):
    _, small, _ = run(capsys, "jumping", CUSP, "--bound", "1")
    _, large, _ = run(capsys, "jumping", CUSP, "--bound", "3")
    assert large.startswith(small)


def test_jumping_deterministic(capsys):
    first = run(capsys, "jumping", SAMPLE20, "--bound", "1")
    second = run(capsys, "jumping", SAMPLE20, "--bound", "1")
    assert first == second


def test_oracle_match(capsys):
    code, out, _ = run(capsys, "oracle", CUSP, "--bound", "1")
    assert code == 0
    assert out == "5/6\nMATCH\n"


def test_oracle_match_maximal(capsys):
    code, out, _ = run(capsys, "oracle", MAXIMAL)
    assert code == 0
    assert out == "2\nMATCH\n"


def test_multiplier_vector(capsys):
    assert run(capsys, "multiplier", CUSP, "--xi", "5/6")[1] == "1 0 0\n"
    assert run(capsys, "multiplier", CUSP, "--xi", "0")[1] == "0 0 0\n"
    assert run(capsys, "multiplier", MAXIMAL, "--xi", "2")[1] == "1\n"


def test_fixture_gen_matches_checked_in_file(capsys):
    code, out, _ = run(capsys, "fixture-gen")
    assert code == 0
    assert out == (FIXTURES / "sample20.res").read_text()


def test_fixture_gen_out_file(tmp_path, capsys):
    target = tmp_path / "regen.res"
    code, _, _ = run(capsys, "fixture-gen", "--out", str(target))
    assert code == 0
    assert target.read_text() == (FIXTURES / "sample20.res").read_text()


def test_vertex_out_of_range(capsys):
    code, out, err = run(capsys, "jumping", CUSP, "--vertex", "9")
    assert code == 1
    assert "out of range" in err


def test_bad_bound_exits_one(capsys):
    with pytest.raises(SystemExit) as info:
        main(["jumping", CUSP, "--bound", "-1"])
    assert info.value.code == 1


def test_oracle_mismatch_exits_two(monkeypatch, capsys):
    # Force a disagreement to check the reporting path and exit code.
    from jumpnum.ideals import JumpingSet

    monkeypatch.setattr(
        "jumpnum.cli.jumping_numbers",
        lambda ideal, bound: JumpingSet(((Fraction(1, 7), frozenset({1})),)),
    )
    code, out, _ = run(capsys, "oracle", CUSP, "--bound", "1")
    assert code == 2
    assert out.endswith("MISMATCH: oracle only: 5/6; formula only: 1/7\n")
