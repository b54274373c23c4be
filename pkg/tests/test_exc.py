from hofree import NOTHING, Just, catch, h_exc, pure, throw
from hofree.exc import prog_exc


def test_positive_input_is_shown():
    assert h_exc(prog_exc(5)) == Just("5")


def test_negative_input_recovers():
    assert h_exc(prog_exc(-5)) == Just("Too small")


def test_throw_alone_is_absent():
    assert h_exc(throw()) == NOTHING


def test_pure_is_present():
    assert h_exc(pure(3)) == Just(3)


def test_catch_passes_the_outcome_to_its_continuation():
    seen = lambda r: pure(("seen", r))  # noqa: E731
    assert h_exc(catch(throw(), seen)) == Just(("seen", NOTHING))
    assert h_exc(catch(pure(1), seen)) == Just(("seen", Just(1)))


def test_throw_after_catch_propagates():
    assert h_exc(catch(pure(1), lambda r: throw())) == NOTHING
