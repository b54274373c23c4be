import pytest
from hypothesis import given, strategies as st

from hofree import abs_, app, force, get, h_eager, h_lazy, pure, put, thunk, var
from hofree.errors import ApplyNonFunction, DanglingThunk, UnboundVariable, UnevaluatedThunk
from hofree.latent import Deferred, Left, Right, Val, prog_lazy
from hofree.show import show


def test_call_by_need_leaves_the_unused_argument_suspended():
    out = h_lazy(prog_lazy(), Val(0))
    assert out.state == Val(0)
    assert len(out.store) == 1 and isinstance(out.store[0], Left)
    assert out.result.value == Val(3)
    assert show(out) == "(0,[Left <thunk>],3)"


def test_call_by_value_runs_the_argument():
    out = h_eager(prog_lazy(), Val(0))
    assert (out.state, out.store, out.result.value) == (Val(42), (Right(Val(5)),), Val(3))
    assert show(out) == "(42,[Right 5],3)"


def test_thunk_pointer_is_the_prior_store_length():
    out = h_lazy(thunk(pure(1)) >> thunk(pure(2)), 0)
    assert out.result.value == 1
    assert [type(e) for e in out.store] == [Left, Left]


@pytest.mark.parametrize("handler", [h_lazy, h_eager])
def test_thunk_then_force_is_running_once(handler):
    out = handler(thunk(put(1) >> pure(9)).bind(force), 0)
    assert (out.state, out.store, out.result.value) == (1, (Right(9),), 9)


@given(st.integers(0, 5), st.integers(1, 4))
def test_forcing_repeatedly_runs_the_body_once(s0, times):
    body = get().bind(lambda s: put(s + 1) >> pure(s))
    prog = thunk(body)
    for _ in range(times):
        prog = prog.bind(lambda p: force(p) >> pure(p))
    out = h_lazy(prog, s0)
    assert out.state == s0 + 1
    assert out.store == (Right(s0),)


def test_force_of_memoized_entry_skips_evaluation():
    out = h_lazy(force(0), 7, th=(Right(5),))
    assert (out.state, out.result.value) == (7, 5)


@pytest.mark.parametrize("handler", [h_lazy, h_eager])
def test_identity_application(handler):
    assert handler(app(abs_(var(0)), pure(Val(9))), 0).result.value == Val(9)


def test_abs_is_a_value_immediately():
    assert h_lazy(abs_(pure(3)), 0).store == ()


def test_applying_a_non_function_fails():
    with pytest.raises(ApplyNonFunction):
        h_lazy(app(pure(Val(1)), pure(Val(2))), 0)


@pytest.mark.parametrize("handler", [h_lazy, h_eager])
def test_dangling_pointer(handler):
    with pytest.raises(DanglingThunk, match="pointer 3"):
        handler(force(3), 0)


def test_eager_force_of_a_suspended_entry_fails():
    with pytest.raises(UnevaluatedThunk):
        h_eager(force(0), 0, th=(Left(lambda l: None),))


def test_unbound_environment_entry_fails_when_resolved():
    with pytest.raises(UnboundVariable):
        Deferred((), 2).resolve()
    assert Deferred((Deferred((Val(4),), 0),), 0).resolve() == Val(4)
