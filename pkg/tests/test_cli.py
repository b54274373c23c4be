import json

import pytest

from hofree.cli import main
from hofree.examples import EXAMPLES, fixture_path


def test_list_json_has_every_example(capsys):
    assert main(["list", "--json"]) == 0
    entries = json.loads(capsys.readouterr().out)
    names = [e["name"] for e in entries]
    assert len(names) >= 12 and len(set(names)) == len(names)
    assert {"name": "lazy", "section": "latent effects"} in entries


def test_list_text(capsys):
    assert main(["list"]) == 0
    assert "bracket-eof" in capsys.readouterr().out


@pytest.mark.parametrize("example", [e for e in EXAMPLES if not e.needs_fixture], ids=lambda e: e.name)
def test_examples_match_their_goldens(example, capsys):
    assert main(["run", example.name, "--check"]) == 0
    assert capsys.readouterr().out == example.golden()


@pytest.mark.parametrize("name, fixture", [("bracket-ok", "foo-ok.json"), ("bracket-eof", "foo-eof.json")])
def test_bracket_examples_with_fixtures(name, fixture, capsys):
    assert main(["run", name, "--fixture", str(fixture_path(fixture)), "--check"]) == 0


def test_state_incr_output(capsys):
    assert main(["run", "state-incr"]) == 0
    assert capsys.readouterr().out == "(5,1)\n"


def test_unknown_example_is_a_usage_error(capsys):
    assert main(["run", "nope"]) == 2
    assert "unknown example" in capsys.readouterr().err


def test_bracket_without_fixture_is_a_usage_error():
    assert main(["run", "bracket-ok"]) == 2


def test_golden_mismatch_exits_one_with_a_diff(tmp_path, capsys):
    fixture = tmp_path / "other.json"
    fixture.write_text(json.dumps({"foo.txt": "XY"}))
    assert main(["run", "bracket-ok", "--fixture", str(fixture), "--check"]) == 1
    err = capsys.readouterr().err
    assert "--- golden" in err and "+('X','Y')" in err


def test_bad_fixture_is_a_usage_error(tmp_path):
    fixture = tmp_path / "bad.json"
    fixture.write_text("[1, 2]")
    assert main(["run", "bracket-ok", "--fixture", str(fixture)]) == 2


def test_laws_json_summary(capsys):
    assert main(["laws", "--n", "10", "--json", "--seed", "4"]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["ok"] and summary["seed"] == 4
    assert all(s["cases"] == 10 and s["failures"] == 0 for s in summary["suites"])


def test_laws_with_a_mutation_exits_nonzero(capsys):
    assert main(["laws", "--n", "40", "--mutation", "tell-flipped"]) == 1
    assert "FAIL writer-log" in capsys.readouterr().out
