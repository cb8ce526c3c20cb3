import json
import subprocess

import jsonschema
import pytest


def run(binary, *args, stdin=None):
    return subprocess.run(
        [binary, *args], input=stdin, capture_output=True, text=True, check=False
    )


@pytest.fixture(scope="module")
def schema(root):
    return json.loads((root / "docs" / "report.schema.json").read_text())


def test_paper_verify_json_records_validate(commlab_bin, schema):
    result = run(commlab_bin, "paper-verify", "--n", "2", "--max-depth", "1", "--format", "json")
    assert result.returncode == 0, result.stderr
    lines = result.stdout.splitlines()
    assert len(lines) == 7
    names = []
    for line in lines:
        record = json.loads(line)
        jsonschema.validate(record, schema)
        assert record["outcome"] == "pass"
        names.append(record["name"])
    assert names == [
        "nfequal",
        "corner_lemma",
        "term_lemma",
        "top_commutator",
        "np1_failure",
        "np1_control",
        "simplicity_chains",
    ]


def test_no_timing_output_is_reproducible(commlab_bin, tmp_path):
    outs = []
    for threads in ("1", "3"):
        path = tmp_path / f"run{threads}.jsonl"
        result = run(
            commlab_bin, "paper-verify", "--n", "2", "--max-depth", "1",
            "--format", "json", "--no-timing", "--threads", threads, "--out", str(path),
        )
        assert result.returncode == 0, result.stderr
        assert result.stdout == ""
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    assert b"millis" not in outs[0]


def test_fin_records_validate(commlab_bin, data, schema):
    for cmd in ("commutator", "series", "simple", "tc"):
        result = run(commlab_bin, "fin", cmd, str(data / "z4.json"), "--format", "json")
        assert result.returncode == 0, result.stderr
        jsonschema.validate(json.loads(result.stdout), schema)


def test_printed_elements_reparse(commlab_bin):
    from commlab import Element, Term

    for expr in ("f(a(1,0), b(2,0))", "u(c)", "f(c, f(c, c))", "upqr{d(1);d(2);c}(a(2,1))"):
        result = run(commlab_bin, "eval", "--n", "2", expr)
        assert result.returncode == 0, result.stderr
        text = result.stdout.strip()
        assert str(Element.parse(text)) == text
        assert str(Term.parse(text)) == text


def test_exit_codes(commlab_bin, data):
    assert run(commlab_bin, "paper-verify", "--n", "1").returncode == 2
    assert run(commlab_bin, "paper-verify", "--n", "2", "--budget", "50").returncode == 2
    assert run(commlab_bin, "eval", "f(c,").returncode == 2
    assert run(commlab_bin, "fin", "nonsense", str(data / "z2.json")).returncode == 2
    assert run(commlab_bin, "--help").returncode == 0


def test_budget_env_and_flag_precedence(commlab_bin):
    import os

    env = dict(os.environ, COMMLAB_BUDGET="50")
    low = subprocess.run(
        [commlab_bin, "paper-verify", "--n", "2", "--max-depth", "0"],
        env=env, capture_output=True, text=True, check=False,
    )
    assert low.returncode == 2
    assert "budget" in low.stderr
    high = subprocess.run(
        [commlab_bin, "paper-verify", "--n", "2", "--max-depth", "0", "--budget", "1000000"],
        env=env, capture_output=True, text=True, check=False,
    )
    assert high.returncode == 0, high.stderr


def test_stdin_algebra(commlab_bin, data):
    text = (data / "semilattice2.json").read_text()
    result = run(commlab_bin, "fin", "series", "-", "--max-m", "3", stdin=text)
    assert result.returncode == 0
    assert "theta_2 = {{0,1}}" in result.stdout
    assert "supernilpotence degree: none" in result.stdout


def test_malformed_algebra_reports_line(commlab_bin):
    result = run(commlab_bin, "fin", "simple", "-", stdin='{"size": 2,\n "operations": [}')
    assert result.returncode == 2
    assert "line 2" in result.stderr
