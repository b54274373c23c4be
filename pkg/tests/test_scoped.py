import random

import pytest
from hypothesis import given, strategies as st

from hofree import (
    ask, censor_scoped, fail_, h_censor, h_nd, h_once, h_reader, h_state, local, once, or_, pure, put, run, tell,
)
from hofree.errors import EmptyOnceScope
from hofree.laws.gen import GENERIC, alg_tree


def _choices(m):
    return m.bind(lambda x: or_(pure(x), pure(x + 1)))


def test_once_keeps_the_first_result():
    assert run(h_once(_choices(once(or_(pure(1), pure(5)))))) == [1, 2]


def test_without_once_every_result_survives():
    assert run(h_once(_choices(or_(pure(1), pure(5))))) == [1, 2, 5, 6]


def test_once_of_pure():
    assert run(h_once(once(pure(7)).bind(pure))) == [7]


def test_once_over_an_all_fail_scope_raises():
    with pytest.raises(EmptyOnceScope, match="once: empty scope"):
        run(h_once(once(fail_())))


def test_once_forwards_state_inside_its_scope():
    prog = once(put(3) >> or_(pure("a"), pure("b")))
    assert run(h_state(h_once(prog), 0)) == (["a"], 3)


@given(st.integers(0, 10_000))
def test_once_without_once_nodes_agrees_with_nd(seed):
    m = alg_tree(random.Random(seed), GENERIC, 4, lambda r: r.randrange(10), "fo")
    assert run(h_once(m)) == run(h_nd(m))


@given(st.integers(0, 10_000))
def test_once_is_idempotent(seed):
    m = alg_tree(random.Random(seed), GENERIC, 3, lambda r: r.randrange(10), "o")
    assert run(h_once(once(once(m)))) == run(h_once(once(m)))


def test_reader_local_replaces_then_restores():
    prog = ask().bind(lambda a: local(2, ask()).bind(lambda b: ask().bind(lambda c: pure((a, b, c)))))
    assert run(h_reader(prog, 1)) == (1, 2, 1)


def test_local_of_ask():
    assert run(h_reader(local("e", ask()), "outer")) == "e"


def test_scoped_censor_reset_program():
    prog = tell("post") >> censor_scoped(lambda w: "", pure(())) >> tell("pre")
    assert run(h_censor(prog)) == ((), "post")


def test_scoped_censor_drops_the_body_log():
    assert run(h_censor(censor_scoped(lambda w: w, tell("a") >> tell("b")))) == ((), "")


def test_scoped_censor_modifies_the_continuation_log():
    prog = tell("<") >> censor_scoped(str.upper, tell("ab")) >> tell("c")
    assert run(h_censor(prog)) == ((), "<C")


@given(st.lists(st.sampled_from("abc"), max_size=4), st.lists(st.sampled_from("xy"), max_size=4))
def test_nested_censor_applies_only_the_outer_modifier_to_the_rest(body_ws, rest_ws):
    def tells(ws):
        m = pure(())
        for w in ws:
            m = m >> tell(w)
        return m

    rest = tells(rest_ws)
    nested = run(h_censor(censor_scoped(str.upper, censor_scoped(lambda w: w + "!", tells(body_ws))) >> rest))
    assert nested == ((), "".join(rest_ws).upper())
