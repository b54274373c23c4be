import json

import pytest

from hofree import brckt, h_bracket, hGetC, load_fixture, openF, prnt, pure, readF, transcript
from hofree.bracket import Ok, Raised, SimWorld, prog_bracket
from hofree.show import Char


def _run(m, files):
    return transcript(*h_bracket(m, SimWorld(files=files)))


def test_two_characters_then_release():
    assert _run(prog_bracket(), {"foo.txt": "HELLO, WORLD!"}) == ["HELLO, WORLD!", "('H','E')", "released"]


def test_end_of_file_releases_before_reraising():
    assert _run(prog_bracket(), {"foo.txt": "H"}) == [
        "H", "released", "***Exception: foo.txt hGetChar end of file",
    ]


def test_print_alone():
    assert _run(prnt("x"), {}) == ["x"]


def test_missing_file():
    w, out = h_bracket(readF("nope.txt"), SimWorld())
    assert out == Raised("nope.txt file not found")


def test_release_runs_after_the_use_and_continuation():
    m = brckt(pure((prnt("rel"), prnt("use")))) >> prnt("after")
    assert _run(m, {}) == ["use", "after", "rel"]


def test_exception_in_use_skips_the_rest_of_the_program():
    m = brckt(pure((prnt("rel"), readF("nope.txt")))) >> prnt("after")
    assert _run(m, {}) == ["rel", "***Exception: nope.txt file not found"]


def test_a_failing_release_wins():
    m = brckt(pure((readF("release.txt").map(lambda s: ()), readF("use.txt"))))
    assert _run(m, {})[-1] == "***Exception: release.txt file not found"


def test_nested_brackets_release_inside_out():
    inner = brckt(pure((prnt("inner-rel"), prnt("body"))))
    assert _run(brckt(pure((prnt("outer-rel"), inner))), {}) == ["body", "inner-rel", "outer-rel"]


def test_handles_have_independent_cursors():
    def two(h):
        return hGetC(h).bind(lambda a: hGetC(h).map(lambda b: a.c + b.c))

    m = openF("f").bind(lambda h1: openF("f").bind(lambda h2: two(h1).bind(lambda x: two(h2).map(lambda y: (x, y)))))
    w, out = h_bracket(m, SimWorld(files={"f": "xyz"}))
    assert out == Ok(("xy", "xy"))


def test_characters_are_chars():
    w, out = h_bracket(openF("f").bind(hGetC), SimWorld(files={"f": "q"}))
    assert out == Ok(Char("q"))


def test_fixture_loading(tmp_path):
    good = tmp_path / "ok.json"
    good.write_text(json.dumps({"foo.txt": "HI"}))
    assert load_fixture(good).files == {"foo.txt": "HI"}
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"foo.txt": 3}))
    with pytest.raises(ValueError):
        load_fixture(bad)
