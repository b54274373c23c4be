from hypothesis import given, strategies as st

from hofree import accum, for_, h_accum, pure, run


def test_branches_accumulate_to_seventeen():
    acc, values = run(h_accum(for_([accum(n) for n in [1, 2, 10, 4]])))
    assert acc == 17
    assert values == [(), (), (), ()]


def test_empty_for_applies_the_continuation_to_nothing():
    assert run(h_accum(for_([]))) == (0, [])


def test_branch_values_reach_the_continuation():
    assert run(h_accum(for_([pure(1), pure(2)]))) == (0, [1, 2])


def test_accumulation_order_with_text():
    from hofree.algebraic import TEXT

    prog = accum("<") >> for_([accum("a") >> pure(1), accum("b") >> pure(2)]).bind(lambda xs: accum(">") >> pure(xs))
    assert run(h_accum(prog, TEXT)) == ("<ab>", [1, 2])


@given(st.lists(st.lists(st.integers(0, 9), max_size=3), max_size=4))
def test_for_matches_a_sequential_oracle(branches):
    def branch(ns):
        m = pure(len(ns))
        for n in reversed(ns):
            m = accum(n) >> m
        return m

    acc, values = run(h_accum(for_([branch(ns) for ns in branches])))
    assert acc == sum(sum(ns) for ns in branches)
    assert values == [len(ns) for ns in branches]
