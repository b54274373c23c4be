from hypothesis import given, strategies as st

from hofree import censor, censor_scoped, h_censor, h_write, listen, pass_, pure, reset, run, tell


def test_reset_erases_the_log_written_after_it():
    assert run(h_write(tell("post") >> reset() >> tell("pre"))) == ((), "post")


def test_censor_via_pass_reset():
    assert run(h_write(tell("post") >> censor(lambda w: "", pure(())) >> tell("pre"))) == ((), "post")


def test_reset_via_pass_and_scoped_censor_agree():
    via_pass = run(h_write(tell("post") >> reset() >> tell("pre")))
    scoped = run(h_censor(tell("post") >> censor_scoped(lambda w: "", pure(())) >> tell("pre")))
    assert via_pass == scoped


def test_pure_has_empty_log():
    assert run(h_write(pure(4))) == (4, "")


def test_tells_concatenate():
    assert run(h_write(tell("a") >> tell("b"))) == ((), "ab")


def test_listen_with_nothing_told_sees_empty():
    assert run(h_write(listen(pure(1)))) == ((1, ""), "")


def test_listen_sees_the_body_log():
    assert run(h_write(listen(tell("xy") >> pure(2))))[0] == (2, "xy")


@given(st.integers(), st.sampled_from(["", "a", "bc"]))
def test_pass_with_identity_is_pure(v, w):
    assert run(h_write(tell(w) >> pass_(pure((v, lambda log: log))))) == run(h_write(tell(w) >> pure(v)))


def test_pass_modifies_the_rest_of_the_program():
    prog = pass_(pure(((), str.upper))) >> tell("abc")
    assert run(h_write(prog)) == ((), "ABC")
