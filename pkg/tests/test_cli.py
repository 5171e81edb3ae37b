"""Command line surface: byte-exact outputs, exit codes, JSON mode."""

import json

import pytest

from monideal.cli import main

EX51_IDEAL = "t1*t2^2, t3*t2^2, t3*t4^2, t1*t4^2\n"
EX52_IDEAL = "(t1*t2^2, t2*t3^2, t3*t1^2)\n"
EX55_IDEAL = "t1*t2^2, t2*t3\n"
EX55_GRAPH = "vertices 3\nweights 1 2 1\nedge 1 2\nedge 2 3\n"

VERTEX_BLOCK = (
    "amb_space 4\n"
    "constraints 8\n"
    "0 1 0 0 >= 0\n"
    "1 0 0 0 >= 0\n"
    "0 0 1 0 >= 0\n"
    "0 0 0 1 >= 0\n"
    "1 2 0 0 >= 1\n"
    "0 2 1 0 >= 1\n"
    "0 0 1 2 >= 1\n"
    "1 0 0 2 >= 1\n"
    "SupportHyperplanes\n"
    "ExtremeRays\n"
    "VerticesOfPolyhedron\n"
)


@pytest.fixture
def workdir(tmp_path):
    (tmp_path / "ex51.ideal").write_text(EX51_IDEAL)
    (tmp_path / "ex52.ideal").write_text(EX52_IDEAL)
    (tmp_path / "ex55.ideal").write_text(EX55_IDEAL)
    (tmp_path / "ex55.graph").write_text(EX55_GRAPH)
    (tmp_path / "block.in").write_text(VERTEX_BLOCK)
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decompose_output(workdir, capsys):
    code, out, err = run(capsys, "decompose", str(workdir / "ex51.ideal"))
    assert code == 0 and err == ""
    assert out == "(t1, t3)\n(t2^2, t4^2)\n"


def test_ass_output(workdir, capsys):
    code, out, _ = run(capsys, "ass", str(workdir / "ex51.ideal"))
    assert code == 0
    assert out == "minimal (t1, t3)\nminimal (t2, t4)\n"


def test_compare_output(workdir, capsys):
    code, out, _ = run(capsys, "compare", str(workdir / "ex52.ideal"), "--n", "2")
    assert code == 0
    assert out == (
        "n: 2\n"
        "I^n: (t2^2*t3^4, t1*t2^3*t3^2, t1^2*t2*t3^3, t1^2*t2^4, t1^3*t2^2*t3, t1^4*t3^2)\n"
        "I<n>: (t2^2*t3^4, t1*t2^3*t3^2, t1^2*t2*t3^3, t1^2*t2^4, t1^3*t2^2*t3, t1^4*t3^2)\n"
        "I^(n): (t1*t2^2*t3^2, t1^2*t2*t3^2, t1^2*t2^2*t3, t2^2*t3^4, t1^2*t2^4, t1^4*t3^2)\n"
        "equal_min: false\n"
        "equal_ass: true\n"
        "witnesses:\n"
        "  t1*t2^2*t3^2\n"
        "  t1^2*t2*t3^2\n"
        "  t1^2*t2^2*t3\n"
    )


def test_symbolic_min_vs_ass(workdir, capsys):
    path = str(workdir / "ex55.ideal")
    code, out, _ = run(capsys, "symbolic", path, "--n", "1", "--min")
    assert (code, out) == (0, "(t2*t3, t1*t2)\n")
    code, out, _ = run(capsys, "symbolic", path, "--n", "1", "--ass")
    assert (code, out) == (0, "(t2*t3, t1*t2^2)\n")


def test_ntf_verdict_exit_zero(workdir, capsys):
    code, out, _ = run(capsys, "ntf", str(workdir / "ex55.ideal"), "--max-n", "2")
    assert code == 0
    assert out == (
        "ass: (t2); (t1, t3); (t2, t3)\n"
        "n=1: stable\n"
        "n=2: stable\n"
        "holds: true\n"
    )


def test_wog_commands(workdir, capsys):
    path = str(workdir / "ex55.graph")
    code, out, _ = run(capsys, "wog-classify", path)
    assert code == 0
    assert out == (
        "square: false\n"
        "all_powers: false\n"
        "ntf: none\n"
        "all_heavy_are_sinks: false\n"
        "heavy_non_sinks: 2\n"
        "has_triangle: false\n"
        "is_bipartite: true\n"
        "odd_girth: none\n"
        "has_embedded_primes: true\n"
    )
    code, out, _ = run(capsys, "wog-covers", path)
    assert code == 0
    assert out == (
        "{2} L1={2} L2={} L3={} ideal=(t2)\n"
        "{1,3} L1={1} L2={3} L3={} ideal=(t1, t3)\n"
        "{2,3} L1={} L2={2} L3={3} ideal=(t2^2, t3)\n"
    )
    code, out, _ = run(capsys, "wog-ideal", path)
    assert (code, out) == (0, "(t2*t3, t1*t2^2)\n")
    code, out, _ = run(capsys, "wog-dual", path)
    assert code == 0
    assert out == "J: (t2^2, t1*t3, t1*t2)\ncomponents:\n  (t2, t3)\n  (t1, t2^2)\n"


def test_polyhedron_commands(workdir, capsys):
    path = str(workdir / "ex51.ideal")
    code, out, _ = run(capsys, "poly-vertices", path)
    assert (code, out) == (0, "(0,1/2,0,1/2)\n(1,0,1,0)\n")
    code, out, _ = run(capsys, "newton", path)
    assert (code, out) == (0, "t3*t4^2\nt2^2*t3\nt1*t4^2\nt1*t2^2\n")
    code, out, _ = run(capsys, "closure", path)
    assert (code, out) == (
        0,
        "(t3*t4^2, t2*t3*t4, t2^2*t3, t1*t4^2, t1*t2*t4, t1*t2^2)\n",
    )
    code, out, _ = run(capsys, "normal", path, "--power-bound", "2")
    assert code == 0
    assert out == (
        "n=1: not closed (t2*t3*t4 joins)\n"
        "n=2: not closed (t2*t3^2*t4^3 joins)\n"
        "normal: false\n"
    )
    code, out, _ = run(capsys, "thm41", path, "--max-n", "2")
    assert code == 0
    assert out == (
        "bound: 2\n"
        "powers_equal: true\n"
        "minimal_decomposition: true\n"
        "closure_intersections: true (n=1 true, n=2 true)\n"
        "newton_equals_irreducible: true\n"
        "vertices_are_component_inverses: true\n"
        "consistent: true\n"
    )


def test_vertex_block_round_trip(workdir, capsys):
    code, out, _ = run(
        capsys, "poly-vertices", str(workdir / "block.in"), "--normaliz-format"
    )
    assert code == 0
    assert out.endswith("VerticesOfPolyhedron 2\n0 1/2 0 1/2\n1 0 1 0\n")
    assert out.startswith("amb_space 4\nconstraints 8\n")


def test_stdin_input(workdir, capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(EX51_IDEAL))
    code, out, _ = run(capsys, "decompose", "-")
    assert (code, out) == (0, "(t1, t3)\n(t2^2, t4^2)\n")


def test_json_mode_is_sorted_and_stable(workdir, capsys):
    path = str(workdir / "ex55.graph")
    code, first, _ = run(capsys, "wog-classify", path, "--json")
    assert code == 0
    payload = json.loads(first)
    assert payload["heavy_non_sinks"] == [2]
    assert payload["ntf"] is None
    assert list(payload) == sorted(payload)
    _, second, _ = run(capsys, "wog-classify", path, "--json")
    assert first == second


def test_examples_command(capsys):
    code, out, _ = run(capsys, "examples", "triangle_sink")
    assert code == 0
    assert out.endswith("7 passed, 0 failed\n")
    assert "[triangle_sink] decomposition: PASS" in out
    code, out, _ = run(capsys, "examples", "--list")
    assert code == 0 and out.startswith("four_cycle_sinks:")
    code, out, _ = run(capsys, "examples", "seven_cycle", "--show")
    assert code == 0 and out.startswith("vertices 7\n")


def test_missing_file_is_a_usage_error(workdir, capsys):
    code, _, err = run(capsys, "decompose", str(workdir / "nope.ideal"))
    assert code == 2
    assert err.startswith("error:")


def test_parse_error_reporting(workdir, capsys):
    bad = workdir / "bad.ideal"
    bad.write_text("(t1*bad^^2)\n")
    code, _, err = run(capsys, "decompose", str(bad))
    assert code == 2
    assert "malformed monomial factor" in err


def test_resource_limit_exit_code(workdir, capsys):
    lines = ["vertices 30"] + [f"edge {i} {i+1}" for i in range(1, 30)]
    big = workdir / "big.graph"
    big.write_text("\n".join(lines) + "\n")
    code, _, err = run(capsys, "wog-covers", str(big))
    assert code == 3
    assert "--max-covers" in err


def test_unknown_example_name(capsys):
    code, _, err = run(capsys, "examples", "mystery_graph")
    assert code == 2
    assert "mystery_graph" in err


def test_bad_flag_value_exits_two(workdir, capsys):
    with pytest.raises(SystemExit) as info:
        main(["compare", str(workdir / "ex52.ideal"), "--n", "0"])
    assert info.value.code == 2
