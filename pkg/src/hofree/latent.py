"""Latent effects: thunks whose evaluation is deferred until forced.

A latent node carries the operation, the latent state ``l`` (fixed to the
identity wrapper ``Id``), a subcomputation interpreter ``st`` that yields an
inner computation of ``Id(x)``, and a continuation on ``Id(result)``.

The handlers interpret a small expression language into functions
``(state, env, store) -> StateL``. The lazy handler suspends thunked
subcomputations in the store and memoizes them on first force; the eager
handler runs them at thunk time.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Any, Union

from .algebraic import STATE, Get, KAlg, Put, put
from .errors import (
    ApplyNonFunction,
    DanglingThunk,
    MalformedNode,
    UnboundVariable,
    UnevaluatedThunk,
    UnhandledEffect,
)
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
from .scoped import ASK, LOCAL, KSc, Local, ask, local
from .table import compose


@dataclass(frozen=True)
class Id:
    value: Any


ONE = "One"  # selector of the single subcomputation of a ``Thunk``
UNIT_STATE = Id(())


class Thunk(Operation, kind="lat.thunk"):
    """Defer a subcomputation; yields a pointer into the store."""

    __slots__ = ()
    arity = (ONE,)

    def fmap(self, f: Callable[[Any], Any]) -> Thunk:
        return self

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Thunk)

    __hash__ = Operation.__hash__

    def __repr__(self) -> str:
        return "Thunk"


class Force(Operation, kind="lat.force"):
    __slots__ = ("ptr",)
    slots = (Slot("ptr", Role.DATA, "store index"),)
    arity = ()

    def __init__(self, ptr: int) -> None:
        self.ptr = ptr

    def fmap(self, f: Callable[[Any], Any]) -> Force:
        return self

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Force) and other.ptr == self.ptr

    __hash__ = Operation.__hash__

    def __repr__(self) -> str:
        return f"Force {self.ptr}"


class LatNode(SignatureNode, kind="latent"):
    __slots__ = ("op", "l", "st", "k")
    slots = (
        Slot("op", Role.DATA, "latent operation"),
        Slot("l", Role.DATA, "latent state"),
        Slot("st", Role.DATA, "(selector, latent state) -> inner computation of Id(x)"),
        Slot("k", Role.CONTINUATION, "Id(result) -> next"),
    )

    def __init__(self, op: Operation, l: Any, st: Callable[[Any, Any], Any], k: Callable[[Any], Any]) -> None:
        self.op = op
        self.l = l
        self.st = st
        self.k = k

    @property
    def effect_kind(self) -> str:
        return self.op.kind

    def fmap(self, f: Callable[[Any], Any]) -> LatNode:
        return LatNode(self.op, self.l, self.st, compose(f, self.k))

    def hmap(self, t: Callable[[Computation], Any]) -> LatNode:
        return LatNode(self.op, self.l, compose(t, self.st), self.k)

    def validate(self) -> None:
        super().validate()
        if not callable(self.st):
            raise MalformedNode(self.effect_kind, "st", f"expected a callable, got {self.st!r}")

    def __repr__(self) -> str:
        return f"LatNode({self.op!r}, {self.l!r}, {self.st!r}, {self.k!r})"


THUNKING = signature("Thunking", Thunk.kind, Force.kind)


def _no_sub(c: Any, l: Any) -> Computation:
    raise MalformedNode(Force.kind, "st", f"force has no subcomputation (selector {c!r})")


def thunk(body: Computation) -> Computation:
    return Impure(LatNode(Thunk(), UNIT_STATE, lambda c, l: body.map(Id), lambda p: Pure(p.value)))


def force(ptr: int) -> Computation:
    return Impure(LatNode(Force(ptr), UNIT_STATE, _no_sub, lambda v: Pure(v.value)))


# -- values of the lambda calculus ----------------------------------------------


@dataclass(frozen=True)
class Val:
    n: int


@dataclass(frozen=True, eq=False)
class Abs:
    body: Computation


@dataclass(frozen=True)
class Deferred:
    """An environment entry looked up only when someone needs its value."""

    env: tuple[Any, ...]
    index: int

    def resolve(self) -> Any:
        if not 0 <= self.index < len(self.env):
            raise UnboundVariable(self.index, len(self.env))
        entry = self.env[self.index]
        return entry.resolve() if isinstance(entry, Deferred) else entry


Value = Union[Val, Abs]


def var(x: int) -> Computation:
    return ask().bind(lambda nv: local((Deferred(tuple(nv), x),), force(0)))


def abs_(body: Computation) -> Computation:
    return Pure(Abs(body))


def app(e1: Computation, e2: Computation) -> Computation:
    def apply(vf: Any) -> Computation:
        if not isinstance(vf, Abs):
            raise ApplyNonFunction(vf)
        return ask().bind(
            lambda nv: thunk(e2).bind(lambda p: local((Deferred(tuple(nv), p),), vf.body))
        )

    return e1.bind(apply)


def prog_lazy() -> Computation:
    """Apply a constant function to an argument that writes the state."""
    return app(abs_(Pure(Val(3))), put(Val(42)) >> Pure(Val(5)))


# -- handlers ---------------------------------------------------------------------


@dataclass(frozen=True)
class Left:
    """A suspended store entry: latent state -> carrier."""

    suspended: Callable[[Any], Any]


@dataclass(frozen=True)
class Right:
    value: Any


@dataclass(frozen=True)
class StateL:
    state: Any
    store: tuple[Left | Right, ...]
    result: Id


Carrier = Callable[[Any, tuple[Any, ...], tuple[Left | Right, ...]], StateL]


def _lookup(store: tuple[Left | Right, ...], ptr: int) -> Left | Right:
    if not 0 <= ptr < len(store):
        raise DanglingThunk(ptr, len(store))
    return store[ptr]


def _unit(x: Any) -> Carrier:
    return lambda s, nv, th: StateL(s, th, Id(x))


def _alg_op(node: KAlg) -> Carrier:
    o = node.op
    if isinstance(o, Get):
        return lambda s, nv, th: o.k(s)(s, nv, th)
    if isinstance(o, Put):
        return lambda s, nv, th: o.k(o.state, nv, th)
    return lambda s, nv, th: o.k(nv)(s, nv, th)


def _local_op(node: KSc) -> Carrier:
    sc: Local = node.sc

    def run(s: Any, nv: Any, th: tuple[Any, ...]) -> StateL:
        r = sc.body(s, tuple(sc.env), th)
        return r.result.value(r.state, nv, r.store)

    return run


def _lazy_lat(node: LatNode) -> Carrier:
    if isinstance(node.op, Thunk):
        st, l, k = node.st, node.l, node.k
        return lambda s, nv, th: k(Id(len(th)))(s, nv, (*th, Left(lambda l2: st(ONE, l2))))

    p, l, k = node.op.ptr, node.l, node.k

    def run(s: Any, nv: Any, th: tuple[Any, ...]) -> StateL:
        entry = _lookup(th, p)
        if isinstance(entry, Right):
            return k(Id(entry.value))(s, nv, th)
        r = entry.suspended(l)(s, nv, th)
        lv: Id = r.result.value
        memo = (*r.store[:p], Right(lv.value), *r.store[p + 1 :])
        return k(lv)(r.state, nv, memo)

    return run


def _eager_lat(node: LatNode) -> Carrier:
    if isinstance(node.op, Thunk):
        st, l, k = node.st, node.l, node.k

        def thunk_now(s: Any, nv: Any, th: tuple[Any, ...]) -> StateL:
            r = st(ONE, l)(s, nv, th)
            return k(Id(len(r.store)))(r.state, nv, (*r.store, Right(r.result.value.value)))

        return thunk_now

    p, k = node.op.ptr, node.k

    def run(s: Any, nv: Any, th: tuple[Any, ...]) -> StateL:
        entry = _lookup(th, p)
        if isinstance(entry, Left):
            raise UnevaluatedThunk(p)
        return k(Id(entry.value))(s, nv, th)

    return run


def _closed(node: SignatureNode) -> Carrier:
    raise UnhandledEffect(node.effect_kind, "expression handler (no forwarding)")


def _expr_handler(lat: Callable[[LatNode], Carrier]) -> Handler:
    alg_sig = signature("State+Ask", *STATE.kinds, *ASK.kinds)
    alg = split(alg_sig, _alg_op, split(LOCAL, _local_op, split(THUNKING, lat, _closed)))
    return Handler(unit=_unit, alg=alg)


LAZY_HANDLER = _expr_handler(_lazy_lat)
EAGER_HANDLER = _expr_handler(_eager_lat)


def _start(h: Handler, m: Computation, s: Any, nv: Any, th: Any) -> StateL:
    return fold(h, m)(s, tuple(nv), tuple(th))


def h_lazy(m: Computation, s: Any, nv: Any = (), th: Any = ()) -> StateL:
    """Call-by-need: thunks are suspended and memoized on first force."""
    return _start(LAZY_HANDLER, m, s, nv, th)


def h_eager(m: Computation, s: Any, nv: Any = (), th: Any = ()) -> StateL:
    """Call-by-value: thunks run immediately and store their value."""
    return _start(EAGER_HANDLER, m, s, nv, th)

