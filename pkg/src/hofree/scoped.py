"""Scoped effects: ``once``, the reader's ``local``, and a scoped ``censor``.

A scoped node wraps an operation whose single slot is an inner computation
returning the continuation. ``hmap`` transforms that inner computation;
``fmap`` maps the continuation sitting at its leaves.
"""

from __future__ import annotations

from collections.abc import Callable
from typing import Any

from .algebraic import CHOICE, KAlg, TELL, TEXT, Monoid, Operation, _nd_op, _nd_unit, forward_algebraic
from .errors import EmptyOnceScope, UnhandledEffect
from .free import (
    Computation,
    Handler,
    Impure,
    Pure,
    Role,
    SignatureNode,
    Slot,
    fold,
    signature,
    split,
)
from .table import compose
from .writer import WRITE, tell_clause, write_clause, writer_unit


class KSc(SignatureNode, kind="scoped"):
    __slots__ = ("sc",)

    def __init__(self, sc: Operation) -> None:
        self.sc = sc

    @property
    def effect_kind(self) -> str:
        return self.sc.kind

    def fmap(self, f: Callable[[Any], Any]) -> KSc:
        return KSc(self.sc.fmap(lambda inner: inner.map(f)))

    def hmap(self, t: Callable[[Computation], Any]) -> KSc:
        return KSc(self.sc.fmap(t))

    def validate(self) -> None:
        self.sc.validate()

    def __repr__(self) -> str:
        return f"KSc({self.sc!r})"


class Once(Operation, kind="once"):
    __slots__ = ("body",)
    slots = (Slot("body", Role.INNER),)

    def __init__(self, body: Any) -> None:
        self.body = body

    def fmap(self, f: Callable[[Any], Any]) -> Once:
        return Once(f(self.body))

    def __repr__(self) -> str:
        return f"Once({self.body!r})"


class Local(Operation, kind="reader.local"):
    __slots__ = ("env", "body")
    slots = (Slot("env", Role.DATA, "replacement environment"), Slot("body", Role.INNER))

    def __init__(self, env: Any, body: Any) -> None:
        self.env = env
        self.body = body

    def fmap(self, f: Callable[[Any], Any]) -> Local:
        return Local(self.env, f(self.body))

    def __repr__(self) -> str:
        return f"Local({self.env!r}, {self.body!r})"


class Censor(Operation, kind="censor"):
    __slots__ = ("modify", "body")
    slots = (Slot("modify", Role.DATA, "log -> log"), Slot("body", Role.INNER))

    def __init__(self, modify: Callable[[Any], Any], body: Any) -> None:
        self.modify = modify
        self.body = body

    def fmap(self, f: Callable[[Any], Any]) -> Censor:
        return Censor(self.modify, f(self.body))

    def __repr__(self) -> str:
        return f"Censor({self.modify!r}, {self.body!r})"


class Ask(Operation, kind="reader.ask"):
    __slots__ = ("k",)
    slots = (Slot("k", Role.CONTINUATION, "environment -> next"),)

    def __init__(self, k: Callable[[Any], Any]) -> None:
        self.k = k

    def fmap(self, f: Callable[[Any], Any]) -> Ask:
        return Ask(compose(f, self.k))

    def __repr__(self) -> str:
        return f"Ask({self.k!r})"


ONCE = signature("Once", Once.kind)
LOCAL = signature("Local", Local.kind)
ASK = signature("Ask", Ask.kind)
CENSOR = signature("Censor", Censor.kind)


def scoped(sc: Operation) -> Computation:
    return Impure(KSc(sc))


def once(body: Computation) -> Computation:
    return scoped(Once(body.map(Pure)))


def local(env: Any, body: Computation) -> Computation:
    return scoped(Local(env, body.map(Pure)))


def censor_scoped(modify: Callable[[Any], Any], body: Computation) -> Computation:
    return scoped(Censor(modify, body.map(Pure)))


def ask() -> Computation:
    return Impure(KAlg(Ask(Pure)))


# -- nondeterminism with once ------------------------------------------------------


def _head(results: list[Any]) -> Any:
    if not results:
        raise EmptyOnceScope()
    return results[0]


def _once_op(node: KSc) -> Computation:
    return node.sc.body.bind(_head)


def _lift_once(branches: list[Computation]) -> Computation:
    acc: Computation = Pure([])
    for branch in reversed(branches):
        acc = branch.bind(lambda xs, rest=acc: rest.map(lambda ys: xs + ys))
    return acc


def _once_fwd(node: SignatureNode) -> Computation:
    if isinstance(node, KSc):
        return Impure(KSc(node.sc.fmap(lambda inner: inner.map(_lift_once))))
    return Impure(forward_algebraic(node, "h_once"))


ONCE_HANDLER = Handler(unit=_nd_unit, alg=split(CHOICE, _nd_op, split(ONCE, _once_op, _once_fwd)))


def h_once(m: Computation) -> Computation:
    """Nondeterminism where ``once`` keeps only the first result of its scope."""
    return fold(ONCE_HANDLER, m)


# -- reader -------------------------------------------------------------------------


def _reader_unit(x: Any) -> Callable[[Any], Computation]:
    return lambda env: Pure(x)


def _ask_op(node: KAlg) -> Callable[[Any], Computation]:
    return lambda env: node.op.k(env)(env)


def _local_op(node: KSc) -> Callable[[Any], Computation]:
    sc: Local = node.sc
    return lambda env: sc.body(sc.env).bind(lambda rest: rest(env))


def _reader_fwd(node: SignatureNode) -> Callable[[Any], Computation]:
    if isinstance(node, KSc):
        return lambda env: Impure(
            KSc(node.sc.fmap(lambda inner: inner(env).map(lambda rest: rest(env))))
        )
    fwd = forward_algebraic(node, "h_reader")
    return lambda env: Impure(fwd.fmap(lambda g: g(env)))


READER_HANDLER = Handler(unit=_reader_unit, alg=split(ASK, _ask_op, split(LOCAL, _local_op, _reader_fwd)))


def h_reader(m: Computation, env: Any) -> Computation:
    """Reader: ``ask`` sees the environment, ``local`` replaces it for its scope."""
    return fold(READER_HANDLER, m)(env)


# -- censor as a scoped effect ------------------------------------------------------


def _censor_op(node: KSc) -> Computation:
    sc: Censor = node.sc
    return sc.body.bind(
        lambda pair: pair[0].map(lambda xw: (xw[0], sc.modify(xw[1])))
    )


def _censor_fwd(node: SignatureNode) -> Computation:
    if isinstance(node, KSc):
        return Impure(KSc(node.sc.fmap(lambda inner: inner.map(lambda pair: pair[0]))))
    if isinstance(node, KAlg):
        return Impure(node)
    raise UnhandledEffect(node.effect_kind, "h_censor")


def censor_handler(monoid: Monoid) -> Handler:
    alg = split(TELL, tell_clause(monoid), split(CENSOR, _censor_op, split(WRITE, write_clause, _censor_fwd)))
    return Handler(unit=writer_unit(monoid), alg=alg)


def h_censor(m: Computation, monoid: Monoid = TEXT) -> Computation:
    """Writer handler extended with scoped ``censor``; result ``(value, log)``."""
    return fold(censor_handler(monoid), m)
