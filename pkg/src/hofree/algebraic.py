"""Algebraic effects: operations without inner computations.

``KAlg`` lifts any first-order operation into a node; its ``hmap`` is the
identity. Shipped operations: state, choice, accumulation and tell. Handlers
interpret their own operations and forward the rest, threading whatever
context their carrier needs.
"""

from __future__ import annotations

import operator
from collections.abc import Callable
from dataclasses import dataclass
from functools import reduce
from typing import Any

from .errors import UnhandledEffect
from .free import (
    Computation,
    Handler,
    Impure,
    Operation,
    Pure,
    Role,
    SignatureNode,
    Slot,
    fold,
    signature,
    split,
)
from .table import compose


class KAlg(SignatureNode, kind="alg"):
    __slots__ = ("op",)

    def __init__(self, op: Operation) -> None:
        self.op = op

    @property
    def effect_kind(self) -> str:
        return self.op.kind

    def fmap(self, f: Callable[[Any], Any]) -> KAlg:
        return KAlg(self.op.fmap(f))

    def hmap(self, t: Callable[[Computation], Any]) -> KAlg:
        return self

    def validate(self) -> None:
        self.op.validate()

    def __repr__(self) -> str:
        return f"KAlg({self.op!r})"


def algebraic(op: Operation) -> Computation:
    return Impure(KAlg(op))


def forward_algebraic(node: SignatureNode, where: str) -> KAlg:
    if not isinstance(node, KAlg):
        raise UnhandledEffect(node.effect_kind, f"{where} forwards algebraic effects only")
    return node


# -- monoids ----------------------------------------------------------------------


@dataclass(frozen=True)
class Monoid:
    name: str
    combine: Callable[[Any, Any], Any]
    empty: Any

    def concat_right(self, xs: list[Any], last: Any) -> Any:
        """``foldr (⋄) last xs``."""
        return reduce(lambda acc, x: self.combine(x, acc), reversed(xs), last)


TEXT = Monoid("text", operator.add, "")
SUM = Monoid("sum", operator.add, 0)


# -- operations -------------------------------------------------------------------


class Get(Operation, kind="state.get"):
    __slots__ = ("k",)
    slots = (Slot("k", Role.CONTINUATION, "state -> next"),)

    def __init__(self, k: Callable[[Any], Any]) -> None:
        self.k = k

    def fmap(self, f: Callable[[Any], Any]) -> Get:
        return Get(compose(f, self.k))

    def __repr__(self) -> str:
        return f"Get({self.k!r})"


class Put(Operation, kind="state.put"):
    __slots__ = ("state", "k")
    slots = (Slot("state", Role.DATA), Slot("k", Role.CONTINUATION, "next"))

    def __init__(self, state: Any, k: Any) -> None:
        self.state = state
        self.k = k

    def fmap(self, f: Callable[[Any], Any]) -> Put:
        return Put(self.state, f(self.k))

    def __repr__(self) -> str:
        return f"Put({self.state!r}, {self.k!r})"


class Fail(Operation, kind="choice.fail"):
    __slots__ = ()

    def fmap(self, f: Callable[[Any], Any]) -> Fail:
        return self

    def __repr__(self) -> str:
        return "Fail()"


class Or(Operation, kind="choice.or"):
    __slots__ = ("left", "right")
    slots = (Slot("left", Role.CONTINUATION), Slot("right", Role.CONTINUATION))

    def __init__(self, left: Any, right: Any) -> None:
        self.left = left
        self.right = right

    def fmap(self, f: Callable[[Any], Any]) -> Or:
        return Or(f(self.left), f(self.right))

    def __repr__(self) -> str:
        return f"Or({self.left!r}, {self.right!r})"


class Accum(Operation, kind="accum"):
    __slots__ = ("value", "k")
    slots = (Slot("value", Role.DATA, "monoid value"), Slot("k", Role.CONTINUATION, "next"))

    def __init__(self, value: Any, k: Any) -> None:
        self.value = value
        self.k = k

    def fmap(self, f: Callable[[Any], Any]) -> Accum:
        return Accum(self.value, f(self.k))

    def __repr__(self) -> str:
        return f"Accum({self.value!r}, {self.k!r})"


class Tell(Operation, kind="tell"):
    __slots__ = ("value", "k")
    slots = (Slot("value", Role.DATA, "monoid value"), Slot("k", Role.CONTINUATION, "next"))

    def __init__(self, value: Any, k: Any) -> None:
        self.value = value
        self.k = k

    def fmap(self, f: Callable[[Any], Any]) -> Tell:
        return Tell(self.value, f(self.k))

    def __repr__(self) -> str:
        return f"Tell({self.value!r}, {self.k!r})"


STATE = signature("State", Get.kind, Put.kind)
CHOICE = signature("Choice", Fail.kind, Or.kind)
ACCUM = signature("Accum", Accum.kind)
TELL = signature("Tell", Tell.kind)


def get() -> Computation:
    return algebraic(Get(Pure))


def put(state: Any) -> Computation:
    return algebraic(Put(state, Pure(())))


def fail_() -> Computation:
    return algebraic(Fail())


def or_(p: Computation, q: Computation) -> Computation:
    return algebraic(Or(p, q))


def accum(value: Any) -> Computation:
    return algebraic(Accum(value, Pure(())))


def tell(value: Any) -> Computation:
    return algebraic(Tell(value, Pure(())))


# -- handlers ---------------------------------------------------------------------


def _state_unit(x: Any) -> Callable[[Any], Computation]:
    return lambda s: Pure((x, s))


def _state_op(node: KAlg) -> Callable[[Any], Any]:
    o = node.op
    if isinstance(o, Get):
        return lambda s: o.k(s)(s)
    return lambda _s: o.k(o.state)


def _state_fwd(node: SignatureNode) -> Callable[[Any], Computation]:
    fwd = forward_algebraic(node, "h_state")
    return lambda s: Impure(fwd.fmap(lambda g: g(s)))


STATE_HANDLER = Handler(unit=_state_unit, alg=split(STATE, _state_op, _state_fwd))


def h_state(m: Computation, s0: Any) -> Computation:
    """State-passing interpretation; the result is ``(value, final_state)``."""
    return fold(STATE_HANDLER, m)(s0)


def _nd_unit(x: Any) -> Computation:
    return Pure([x])


def _nd_op(node: KAlg) -> Computation:
    o = node.op
    if isinstance(o, Fail):
        return Pure([])
    return o.left.bind(lambda xs: o.right.map(lambda ys: xs + ys))


def _nd_fwd(node: SignatureNode) -> Computation:
    return Impure(forward_algebraic(node, "h_nd"))


ND_HANDLER = Handler(unit=_nd_unit, alg=split(CHOICE, _nd_op, _nd_fwd))


def h_nd(m: Computation) -> Computation:
    """All results of a nondeterministic computation, left branch first."""
    return fold(ND_HANDLER, m)
