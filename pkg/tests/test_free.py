import pytest
from hypothesis import given, strategies as st

from hofree import (
    ANY_SIGNATURE, Coproduct, Handler, Impure, In, KAlg, Out, Pure, bind, case_split, do, fold, get, join,
    or_, pure, put, run, sequence, signature, split, tell,
)
from hofree.algebraic import Get, Or, Put, Tell, h_nd, h_state
from hofree.errors import DepthExceeded, MalformedNode, TagMismatch, UnhandledEffect
from hofree.free import registered_kinds
from hofree.table import Table, args, compose


def test_pure_bind_applies_continuation():
    m = bind(pure(3), lambda x: pure(x + 1))
    assert isinstance(m, Pure) and m.value == 4


def test_impure_bind_pushes_into_continuation():
    m = get().bind(lambda s: pure(s * 10))
    assert isinstance(m, Impure)
    assert run(h_state(m, 4)) == (40, 4)


def test_join_and_sequence():
    assert run(join(pure(pure(7)))) == 7
    assert run(h_state(sequence([get(), put(2) >> get(), get()]), 0)) == ([0, 2, 2], 2)


def test_run_rejects_unhandled_effects():
    with pytest.raises(UnhandledEffect, match="get"):
        run(get())


def test_do_notation_replays_for_multiple_resumptions():
    @do
    def prog():
        x = yield or_(pure(1), pure(2))
        y = yield or_(pure(10), pure(20))
        return x + y

    assert run(h_nd(prog())) == [11, 21, 12, 22]


def test_fold_uses_generator_outside_and_unit_inside():
    h = Handler(unit=lambda x: ("unit", x), alg=lambda node: node.op.k, gen=lambda x: ("gen", x))
    assert fold(h, Impure(KAlg(Tell("w", Pure(1))))) == ("gen", 1)
    assert fold(h, pure(2)) == ("gen", 2)


def test_depth_guard_reports_deep_trees():
    m = pure(0)
    for _ in range(3000):
        m = tell("x") >> m
    with pytest.raises(DepthExceeded):
        fold(Handler(unit=lambda x: x, alg=lambda node: node.op.k), m, max_depth=500)


def test_every_registered_node_kind_has_a_schema():
    kinds = registered_kinds()
    for required in ("alg", "scoped", "par.for", "write.exec", "latent", "res.bracket", "coproduct.in"):
        assert required in kinds
    assert all(info.slots is not None for info in kinds.values())


# -- coproducts ----------------------------------------------------------------------

STATE_SIG = signature("State", Get.kind, Put.kind)
CHOICE_SIG = signature("Choice", Or.kind)


def test_view_classifies_by_membership():
    cop = Coproduct(STATE_SIG, CHOICE_SIG)
    node = get().node
    assert isinstance(cop.view(node), In) and not isinstance(cop.view(node), Out)
    assert isinstance(cop.view(or_(pure(1), pure(2)).node), Out)
    with pytest.raises(UnhandledEffect):
        cop.view(tell("x").node)


def test_three_summands_dispatch_to_their_own_algebra():
    cop = STATE_SIG + (CHOICE_SIG + ANY_SIGNATURE)
    alg = case_split(lambda n: "state", case_split(lambda n: "choice", lambda n: "other"))
    assert alg(cop.inject(get().node)) == "state"
    assert alg(cop.inject(or_(pure(1), pure(2)).node)) == "choice"
    assert alg(cop.inject(tell("x").node)) == "other"


def test_split_sends_foreign_nodes_right():
    route = split(STATE_SIG, lambda n: "mine", lambda n: "forward")
    assert route(put(1).node) == "mine"
    assert route(tell("x").node) == "forward"


def test_injections_map_through_to_the_wrapped_node():
    node = In(get().node)
    mapped = node.fmap(lambda k: k)
    assert isinstance(mapped, In) and mapped.effect_kind == node.effect_kind


# -- tables --------------------------------------------------------------------------


@given(st.dictionaries(st.integers(0, 3), st.integers(-5, 5), min_size=1))
def test_table_tabulation_is_faithful(d):
    t = Table.tabulate(lambda x: d[x], d.keys())
    assert all(t(x) == d[x] for x in d)


def test_table_postcompose_is_eager_and_equal_to_pointwise():
    t = Table.tabulate(lambda x: x + 1, [0, 1, 2])
    u = compose(lambda y: y * 2, t)
    assert isinstance(u, Table)
    assert [u(x) for x in [0, 1, 2]] == [2, 4, 6]


def test_table_rejects_values_outside_its_domain():
    t = Table.tabulate(lambda x: x, [0, 1])
    with pytest.raises((KeyError, TagMismatch)):
        t(7)


def test_table_multiple_arguments():
    t = Table.tabulate(lambda a, b: a + b, [args(1, 2), args(3, 4)])
    assert t(1, 2) == 3 and t(3, 4) == 7


def test_malformed_node_is_reported_by_validate():
    from hofree.algebraic import Accum

    with pytest.raises(MalformedNode):
        KAlg(Accum(1, "not a computation")).validate()
