import random

import pytest
from hypothesis import given, strategies as st

from hofree import Pure, h_state, run
from hofree.algebraic import Get, Put
from hofree.laws import INSTANCES, MUTATIONS, check_handler_equiv, check_roundtrip, diff, iso1, iso2, mutated, run_laws
from hofree.laws import specialized as S
from hofree.laws.gen import MAX_DEPTH, STATES, generic_tree, specialized_tree, tree_depth
from hofree.laws.reference import ParAlgebra, alg_algebra, fold_alg_ref, fold_par_ref, fold_sc_ref, SC_ALGEBRA
from hofree.table import Table

seeds = st.integers(0, 2**32 - 1)


def _state_tree():
    """get, then put the successor, returning the old state."""
    return S.Op(Get(Table.tabulate(lambda s: S.Op(Put(s + 1, S.Var(s))), STATES)))


@pytest.mark.parametrize("instance", INSTANCES)
def test_leaf_roundtrip(instance):
    assert check_roundtrip(instance, S.Var(3)) is None
    assert diff(iso1(instance, iso2(instance, Pure(3))), Pure(3)) is None


@pytest.mark.parametrize("instance", INSTANCES)
@given(seed=seeds)
def test_roundtrips_are_structural_identities(instance, seed):
    rng = random.Random(seed)
    assert check_roundtrip(instance, specialized_tree(instance, rng)) is None
    c = generic_tree(instance, rng)
    assert diff(iso1(instance, iso2(instance, c)), c) is None


@pytest.mark.parametrize("instance", INSTANCES)
@given(seed=seeds)
def test_generated_trees_respect_the_depth_cap(instance, seed):
    assert tree_depth(specialized_tree(instance, random.Random(seed))) <= MAX_DEPTH


def test_converted_state_program_runs_under_the_state_handler():
    assert run(h_state(iso1("alg", _state_tree()), 0)) == (0, 1)


def test_reference_fold_on_the_state_program():
    carrier = fold_alg_ref(lambda x: lambda s: [(x, s, "")], alg_algebra, _state_tree())
    assert carrier(0) == [(0, 1, "")]


def test_reference_scoped_fold_of_a_leaf_is_the_generator():
    gen = lambda x: ("gen", x)  # noqa: E731
    assert fold_sc_ref(gen, SC_ALGEBRA, S.Var(5)) == ("gen", 5)


def test_reference_parallel_fold_sums_to_seventeen():
    iters = [S.Var(n) for n in [1, 2, 10, 4]]
    k = lambda xs: S.Var(sum(xs))  # noqa: E731
    alg = ParAlgebra(var=lambda x: x, for_=lambda branches, k: k(branches))
    assert fold_par_ref(lambda x: x, alg, S.For(iters, k)) == 17


def test_state_program_equivalence():
    assert check_handler_equiv("alg", _state_tree())


@pytest.mark.parametrize("instance", ["alg", "sc", "par"])
@given(seed=seeds)
def test_handler_equivalence(instance, seed):
    eq = check_handler_equiv(instance, specialized_tree(instance, random.Random(seed)))
    assert eq, eq


def test_diff_reports_a_path_to_the_first_difference():
    a = S.Op(Put(1, S.Var(2)))
    b = S.Op(Put(1, S.Var(3)))
    found = diff(a, b)
    assert found is not None and "value" in found.path


def test_diff_compares_tables_pointwise():
    t1 = Table.tabulate(lambda x: x, [0, 1])
    t2 = Table.tabulate(lambda x: x if x == 0 else 9, [0, 1])
    assert diff(t1, t1) is None
    assert diff(t1, t2) is not None


def test_run_laws_is_deterministic_for_a_seed():
    assert run_laws(seed=3, n=15).to_json() == run_laws(seed=3, n=15).to_json()


def test_run_laws_small_run_passes():
    report = run_laws(seed=1, n=25)
    assert report.ok, [s for s in report.suites if not s.ok]


@pytest.mark.parametrize("name", sorted(MUTATIONS))
def test_each_mutation_is_caught(name):
    with mutated(name):
        report = run_laws(seed=0, n=60)
    failing = [s for s in report.suites if not s.ok]
    assert failing
    assert all(s.first_failure for s in failing)


def test_mutations_are_undone_on_exit():
    with mutated("tell-flipped"):
        pass
    assert run_laws(seed=0, n=30, only={"writer-log"}).ok
