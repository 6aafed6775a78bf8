import json

import pytest
from click.testing import CliRunner

from app.cli import cli


@pytest.fixture
def runner():
    # click >= 8.2 removed mix_stderr; stderr is always captured separately there.
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, list(args), obj={})


def test_simplex_constant(runner):
    result = invoke(runner, "simplex-ck", "--k", "3")
    assert result.exit_code == 0
    assert result.stdout == "21\n# digits = 2\n"


def test_simplex_direct_and_ratio(runner):
    result = invoke(runner, "simplex-ck", "--k", "4", "--direct", "--ratio")
    assert result.stdout.splitlines()[0] == "588"
    assert result.stdout.splitlines()[2].startswith("# C_k / ((k+1)! k^(k+1)) = ")


def test_structured_output(runner):
    result = invoke(runner, "--json", "simplex-ck", "--k", "4")
    payload = json.loads(result.stdout)
    assert payload["value"] == "588"
    assert payload["digits"] == 3


def test_show_preset(runner):
    result = invoke(runner, "show", "--preset", "triangle")
    assert result.stdout == "k=2 n=3\n1 2\n1 3\n2 3\n"
    listing = invoke(runner, "show")
    assert "rowling" in listing.stdout.splitlines()


def test_coefficients_from_file(runner, tmp_path, rowling):
    path = tmp_path / "rowling.txt"
    path.write_text(rowling.to_text())
    result = invoke(runner, "coeffs", "--input", str(path), "--dmax", "6")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[3] == "c_3 = -240"
    assert lines[6] == "c_6 = 28320"


def test_coefficients_with_report(runner):
    result = invoke(runner, "coeffs", "--preset", "rowling", "--dmax", "3", "--report")
    assert result.exit_code == 0
    assert "!! DISCREPANCY c_9 connected part:" in result.stdout


def test_associated_coefficient(runner):
    result = invoke(runner, "assoc", "--preset", "gamma-6-2")
    assert result.stdout.splitlines()[0] == "C = 9/32"
    assert result.stdout.splitlines()[1].startswith("rootings = ")


def test_catalogue(runner):
    result = invoke(runner, "assoc", "--catalogue")
    assert result.exit_code == 0
    assert result.stdout.startswith("# catalogue")


def test_enumeration(runner):
    result = invoke(runner, "enum-veblen", "--k", "3", "--d", "5", "--connected", "--show")
    lines = result.stdout.splitlines()
    assert lines[0] == "2"
    assert lines.count("k=3 n=5") == 2


def test_counts(runner):
    result = invoke(runner, "count", "--preset", "rowling", "--pattern-preset", "gamma-9-4")
    assert result.stdout == "occurrences = 2\n"
    result = invoke(runner, "count", "--preset", "rowling", "--pattern-preset", "single-edge-3")
    assert result.stdout == "subgraphs = 5\n"


def test_threshold(runner):
    result = invoke(runner, "threshold", "--preset", "single-edge-3", "--v", "3", "--dmax", "12")
    assert result.exit_code == 0
    assert "Th_3 = 9" in result.stdout.splitlines()
    assert "f(6) = 3" in result.stdout.splitlines()


def test_expand_polynomial(runner):
    result = invoke(runner, "expand-poly", "--dmax", "9")
    lines = result.stdout.splitlines()
    assert lines[3] == "c_3 = -240"
    assert lines[9] == "c_9 = -2190860"


def test_missing_input_is_usage_error(runner):
    result = invoke(runner, "coeffs", "--dmax", "3")
    assert result.exit_code == 2
    assert result.stderr.startswith("error:")


def test_parse_error_names_the_line(runner, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("k=3 n=5\n1 2 x\n")
    result = invoke(runner, "coeffs", "--input", str(path), "--dmax", "3")
    assert result.exit_code == 2
    assert "line 2, column 6" in result.stderr


def test_cap_error(runner):
    result = invoke(runner, "simplex-ck", "--k", "40", "--direct")
    assert result.exit_code == 2
    assert "direct simplex derangement cap" in result.stderr


def test_negative_degree_rejected(runner):
    result = invoke(runner, "coeffs", "--preset", "rowling", "--dmax", "-1")
    assert result.exit_code == 2
