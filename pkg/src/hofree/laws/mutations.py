"""Deliberately broken clauses, used to show the suites can fail.

Each mutation is a context manager that swaps one definition for a wrong
one while active.
"""

from __future__ import annotations

import contextlib
from collections.abc import Callable, Iterator
from typing import Any
from unittest import mock

from .. import parallel, writer
from ..algebraic import KAlg, Monoid, Tell
from ..free import Computation, Impure, Pure
from ..scoped import KSc
from ..table import compose
from . import iso
from . import specialized as S


def _iso1_par_reversed(t: S.Tree) -> Computation:
    if isinstance(t, S.Var):
        return Pure(t.value)
    return Impure(parallel.For([iso.iso1_par(i) for i in reversed(t.iters)], compose(iso.iso1_par, t.k)))


def _iso1_sc_shallow(t: S.Tree) -> Computation:
    if isinstance(t, S.Var):
        return Pure(t.value)
    # forgets to convert the trees at the leaves of the scope body
    return Impure(KSc(t.sc.fmap(iso.iso1_sc)))


def _tell_clause_flipped(monoid: Monoid) -> Callable[[KAlg], Computation]:
    def alg(node: KAlg) -> Computation:
        o: Tell = node.op
        return o.k.bind(lambda xw: Pure((xw[0], monoid.combine(xw[1], o.value))))

    return alg


MUTATIONS: dict[str, tuple[str, Any, str, Any]] = {
    "iso1-par-reversed-iters": ("iso1 for parallel nodes reverses the branch order", iso, "iso1_par", _iso1_par_reversed),
    "iso1-sc-shallow": ("iso1 for scoped nodes skips the inner map", iso, "iso1_sc", _iso1_sc_shallow),
    "tell-flipped": ("the tell clause combines the log in the wrong order", writer, "tell_clause", _tell_clause_flipped),
}


@contextlib.contextmanager
def mutated(name: str) -> Iterator[str]:
    description, module, attr, replacement = MUTATIONS[name]
    with mock.patch.object(module, attr, replacement):
        yield description
