"""Parallelisable iteration: ``for_`` over independent inner computations.

Each branch of a ``For`` node is interpreted on its own, so accumulation
handlers combine per-branch results without threading one accumulator
through the branches. Evaluation itself is sequential and deterministic.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from typing import Any

from .algebraic import ACCUM, SUM, Accum, KAlg, Monoid, forward_algebraic
from .free import (
    Computation,
    Handler,
    Impure,
    Pure,
    Role,
    SignatureNode,
    Slot,
    fold,
    sequence,
    signature,
    split,
)
from .table import compose


class For(SignatureNode, kind="par.for"):
    __slots__ = ("iters", "k")
    slots = (
        Slot("iters", Role.INNER, "ordered list of branch computations"),
        Slot("k", Role.CONTINUATION, "list of branch results -> next"),
    )

    def __init__(self, iters: Iterable[Any], k: Callable[[list[Any]], Any]) -> None:
        self.iters = list(iters)
        self.k = k

    def fmap(self, f: Callable[[Any], Any]) -> For:
        return For(self.iters, compose(f, self.k))

    def hmap(self, t: Callable[[Computation], Any]) -> For:
        return For([t(it) for it in self.iters], self.k)

    def __repr__(self) -> str:
        return f"For({self.iters!r}, {self.k!r})"


PAR = signature("Par", For.kind)


def for_(iters: Iterable[Computation]) -> Computation:
    """Run every branch; the result is the list of branch values in order."""
    return Impure(For(iters, lambda xs: Pure(list(xs))))


def accum_handler(monoid: Monoid) -> Handler:
    def accum_op(node: KAlg) -> Computation:
        o: Accum = node.op
        return o.k.map(lambda mx: (monoid.combine(o.value, mx[0]), mx[1]))

    def par_op(node: For) -> Computation:
        def resume(pairs: list[tuple[Any, Any]]) -> Computation:
            ms = [m for m, _ in pairs]
            xs = [x for _, x in pairs]
            return node.k(xs).map(lambda mx: (monoid.concat_right(ms, mx[0]), mx[1]))

        return sequence(node.iters).bind(resume)

    def fwd(node: SignatureNode) -> Computation:
        return Impure(forward_algebraic(node, "h_accum"))

    return Handler(
        unit=lambda x: Pure((monoid.empty, x)),
        alg=split(ACCUM, accum_op, split(PAR, par_op, fwd)),
    )


def h_accum(m: Computation, monoid: Monoid = SUM) -> Computation:
    """Accumulation with branch-isolated ``for_``; result ``(accumulated, value)``."""
    return fold(accum_handler(monoid), m)
