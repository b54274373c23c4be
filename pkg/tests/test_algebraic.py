from hypothesis import given, strategies as st

from hofree import accum, fail_, get, h_nd, h_state, or_, pure, put, run, tell
from hofree.algebraic import TEXT
from hofree.parallel import h_accum


def test_state_get_put_returns_old_state():
    assert run(h_state(get().bind(lambda s: put(s + 1) >> pure(s)), 0)) == (0, 1)


def test_state_put_then_get():
    assert run(h_state(put(9) >> get(), 0)) == (9, 9)


def test_nd_collects_leaves_left_to_right():
    assert run(h_nd(or_(pure(1), or_(or_(pure(2), pure(3)), fail_())))) == [1, 2, 3]


def test_nd_choice_with_failure():
    assert run(h_nd(or_(pure(1), fail_()))) == [1]
    assert run(h_nd(fail_())) == []


def test_handlers_compose_by_forwarding():
    prog = or_(put(1) >> pure("a"), get().bind(lambda s: pure(s)))
    # nondeterminism inside state: the second branch sees the first branch's write
    assert run(h_state(h_nd(prog), 0)) == (["a", 1], 1)


def test_accum_sequence_combines_in_order():
    assert run(h_accum(accum(3) >> accum(4)))[0] == 7


def test_accum_unit_is_empty():
    assert run(h_accum(accum(0)))[0] == 0


def _tree(draw, depth):
    if depth == 0 or draw(st.booleans()):
        return ("leaf", draw(st.integers(0, 9)))
    if draw(st.booleans()):
        return ("fail",)
    return ("or", _tree(draw, depth - 1), _tree(draw, depth - 1))


@st.composite
def choice_trees(draw):
    return _tree(draw, 5)


def _build(t):
    if t[0] == "leaf":
        return pure(t[1])
    if t[0] == "fail":
        return fail_()
    return or_(_build(t[1]), _build(t[2]))


def _leaves(t):
    if t[0] == "leaf":
        return [t[1]]
    if t[0] == "fail":
        return []
    return _leaves(t[1]) + _leaves(t[2])


@given(choice_trees())
def test_nd_matches_depth_first_leaf_order(t):
    assert run(h_nd(_build(t))) == _leaves(t)


@given(st.lists(st.sampled_from(["a", "b", "cd"]), max_size=5), st.lists(st.sampled_from(["x", "y"]), max_size=5))
def test_tell_log_is_a_homomorphism(ws1, ws2):
    from hofree.writer import h_write

    def prog(ws):
        m = pure(())
        for w in ws:
            m = m >> tell(w)
        return m

    assert run(h_write(prog(ws1) >> prog(ws2))) == ((), TEXT.concat_right(ws1 + ws2, ""))
