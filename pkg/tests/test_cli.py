"""
Tests for the lpa command line
"""

import pytest
from click.testing import CliRunner

from lpa_toolkit.commands import create_cli
from lpa_toolkit.error_handlers import EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_USAGE_ERROR, run


@pytest.fixture(autouse=True)
def default_environment(monkeypatch):
    for var in ('LPA_FIELD', 'LPA_LOG_LEVEL', 'LPA_DESINGULARIZE_DEPTH', 'LPA_LATTICE_DIAGNOSTICS'):
        monkeypatch.delenv(var, raising=False)


@pytest.fixture
def invoke():
    """Invoke the click group and return its stdout lines"""
    runner = CliRunner(mix_stderr=False)

    def _invoke(*args, input=None):
        result = runner.invoke(create_cli(), list(args), input=input)
        assert result.exit_code == 0, result.output
        return result.stdout.splitlines()

    return _invoke


class TestGraphCommands:
    """Test validate, props, simple and dot"""

    def test_props_of_loop_graph(self, invoke):
        lines = invoke("props", "R1")
        assert " ".join(lines) == "condition_L=false condition_K=false cofinal=true simple=false"

    def test_props_of_rose(self, invoke):
        assert invoke("props", "r2") == [
            "condition_L=true", "condition_K=true", "cofinal=true", "simple=true",
        ]

    def test_validate(self, invoke):
        assert invoke("validate", "EX5") == ["valid: 6 vertices, 8 edges, 3 bundles"]

    def test_simple_lists_criteria(self, invoke):
        lines = invoke("simple", "T")
        assert lines[0] == "simple=false"
        assert "condition_L=true" in lines
        assert "cofinal=false" in lines

    def test_dot(self, invoke):
        assert invoke("dot", "R1") == ['digraph "E" {', '  "v";', '  "v" -> "v" [label="e"];', "}"]

    def test_graph_from_stdin(self, invoke, example_graph_text):
        assert invoke("validate", "-", input=example_graph_text) == ["valid: 6 vertices, 8 edges, 3 bundles"]

    def test_graph_from_file(self, invoke, temp_dir):
        path = temp_dir / "line.graph"
        path.write_text("vertex a\nvertex b\nedge e a b\n", encoding='utf-8')
        assert invoke("props", str(path))[3] == "simple=true"


class TestIdealCommands:
    """Test vertex set and admissible pair commands"""

    def test_breaking(self, invoke):
        assert invoke("breaking", "EX5", "--H", "y,z") == ["v w"]

    def test_saturate_and_closure(self, invoke):
        assert invoke("saturate", "A3", "--H", "w") == ["u v w"]
        assert invoke("closure", "EX5", "--X", "v") == ["v x y z"]

    def test_pairs(self, invoke):
        lines = invoke("pairs", "EX5")
        assert len(lines) == 10
        assert lines[2] == "H={y,z};S={v}"

    def test_lattice_of_loop_graph(self, invoke):
        assert invoke("lattice", "R1") == ["H={};S={} < H={v};S={}"]

    def test_lattice_dot(self, invoke):
        lines = invoke("lattice", "R1", "--dot")
        assert lines[0] == 'digraph "L_E" {'

    def test_lattice_diagnostics(self, invoke, monkeypatch):
        monkeypatch.setenv('LPA_LATTICE_DIAGNOSTICS', '1')
        lines = invoke("lattice", "R1")
        assert not any(line.startswith("diagnostic:") for line in lines)

    def test_member(self, invoke):
        assert invoke("member", "EX5", "--pair", "H={y,z};S={v}", "uv - uv*vx*vx'") == ["true"]
        assert invoke("member", "EX5", "--pair", "H={y,z}", "uv") == ["false"]


class TestTransformCommands:
    """Test commands printing graphs"""

    def test_quotient(self, invoke):
        lines = invoke("quotient", "EX5", "--pair", "H={y,z};S={v}")
        assert "vertex w'" in lines
        assert "edge uw' u w'" in lines

    def test_restrict(self, invoke):
        assert invoke("restrict", "EX5", "--pair", "H={y,z};S={v}")[-1] == "bundle v y"

    def test_desingularize_uses_configured_depth(self, invoke, monkeypatch):
        monkeypatch.setenv('LPA_DESINGULARIZE_DEPTH', '1')
        assert "vertex w#1" in invoke("desingularize", "A3")
        assert "vertex w#2" not in invoke("desingularize", "A3")
        assert "vertex w#2" in invoke("desingularize", "A3", "--depth", "2")


class TestAlgebraCommands:
    """Test eval and ghost-extract"""

    def test_eval_relation(self, invoke):
        assert invoke("eval", "R1", "v - e*e'") == ["0"]

    def test_eval_ck2_rewrite(self, invoke):
        assert invoke("eval", "R2", "a*a'") == ["v - b*b'"]

    def test_eval_in_prime_field(self, invoke):
        assert invoke("eval", "R2", "--field", "f5", "--", "-a") == ["4*a"]

    def test_ghost_extract_of_ghost(self, invoke):
        assert invoke("ghost-extract", "R2", "a'") == ["ghost=a'", "vertex=-", "beta=-"]


class TestExitCodes:
    """Test run() status codes and error output"""

    def test_success(self, capsys):
        assert run(["eval", "R1", "v - e*e'"]) == EXIT_OK
        assert capsys.readouterr().out == "0\n"

    def test_unknown_graph(self, capsys):
        assert run(["props", "NOPE"]) == EXIT_DOMAIN_ERROR
        captured = capsys.readouterr()
        assert captured.out == ""
        assert captured.err.startswith("error: no graph file or catalogue graph named 'NOPE'")

    def test_parse_error(self, capsys):
        assert run(["eval", "R1", "v + f"]) == EXIT_DOMAIN_ERROR
        assert "position 5" in capsys.readouterr().err

    def test_precondition_error(self, capsys):
        assert run(["breaking", "A3", "--H", "w"]) == EXIT_DOMAIN_ERROR
        assert capsys.readouterr().err.startswith("error:")

    def test_bad_field(self, capsys):
        assert run(["eval", "R1", "--field", "f6", "v"]) == EXIT_DOMAIN_ERROR

    def test_bad_environment(self, capsys, monkeypatch):
        monkeypatch.setenv('LPA_LOG_LEVEL', 'LOUD')
        assert run(["props", "R1"]) == EXIT_DOMAIN_ERROR

    def test_unknown_command(self, capsys):
        assert run(["frobnicate"]) == EXIT_USAGE_ERROR

    def test_missing_option(self, capsys):
        assert run(["quotient", "EX5"]) == EXIT_USAGE_ERROR

    def test_depth_out_of_range(self, capsys):
        assert run(["desingularize", "A3", "--depth", "0"]) == EXIT_USAGE_ERROR

    def test_deterministic_output(self, capsys):
        run(["lattice", "EX5"])
        first = capsys.readouterr().out
        run(["lattice", "EX5"])
        assert capsys.readouterr().out == first
        assert first
