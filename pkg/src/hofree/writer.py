"""Writer effects: ``listen`` and ``pass`` as decorated inner computations.

An ``Exec`` node holds a single inner computation whose result is decorated
by ``Listen`` (a function of the log) or ``Pass`` (a log modifier paired with
the continuation). The decoration carries the continuation, so ``fmap``
reaches it by mapping under the decoration.

The handler drops the log written inside ``listen``/``pass`` bodies after
handing it to the decoration: a ``Pass`` modifier rewrites the log of the
*rest* of the program, which is how ``reset`` erases later output.
"""

from __future__ import annotations

from collections.abc import Callable
from typing import Any

from .algebraic import KAlg, TELL, TEXT, Monoid, Tell, forward_algebraic
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


class Exec(SignatureNode, kind="write.exec"):
    __slots__ = ("body",)
    slots = (Slot("body", Role.INNER, "computation of a decorated continuation"),)

    def __init__(self, body: Any) -> None:
        self.body = body

    def fmap(self, f: Callable[[Any], Any]) -> Exec:
        return Exec(self.body.map(lambda deco: deco.fmap(f)))

    def hmap(self, t: Callable[[Computation], Any]) -> Exec:
        return Exec(t(self.body))

    def __repr__(self) -> str:
        return f"Exec({self.body!r})"


class Listen(Operation, kind="write.listen"):
    __slots__ = ("k",)
    slots = (Slot("k", Role.CONTINUATION, "log -> next"),)

    def __init__(self, k: Callable[[Any], Any]) -> None:
        self.k = k

    def fmap(self, f: Callable[[Any], Any]) -> Listen:
        return Listen(compose(f, self.k))

    def __repr__(self) -> str:
        return f"Listen({self.k!r})"


class Pass(Operation, kind="write.pass"):
    __slots__ = ("modify", "k")
    slots = (Slot("modify", Role.DATA, "log -> log"), Slot("k", Role.CONTINUATION, "next"))

    def __init__(self, modify: Callable[[Any], Any], k: Any) -> None:
        self.modify = modify
        self.k = k

    def fmap(self, f: Callable[[Any], Any]) -> Pass:
        return Pass(self.modify, f(self.k))

    def __repr__(self) -> str:
        return f"Pass({self.modify!r}, {self.k!r})"


WRITE = signature("Write", Exec.kind)


def listen(body: Computation) -> Computation:
    """Run ``body``; the result is ``(value, log written by body)``."""
    return Impure(Exec(body.map(lambda x: Listen(lambda w: Pure((x, w))))))


def pass_(body: Computation) -> Computation:
    """``body`` returns ``(value, modifier)``; the modifier rewrites the log."""
    return Impure(Exec(body.map(lambda vf: Pass(vf[1], Pure(vf[0])))))


def censor(modify: Callable[[Any], Any], m: Computation) -> Computation:
    return pass_(m.map(lambda x: (x, modify)))


def reset(monoid: Monoid = TEXT) -> Computation:
    return pass_(Pure(((), lambda _w: monoid.empty)))


# -- handler ----------------------------------------------------------------------


def tell_clause(monoid: Monoid) -> Callable[[SignatureNode], Computation]:
    def alg(node: KAlg) -> Computation:
        o: Tell = node.op
        return o.k.bind(lambda xw: Pure((xw[0], monoid.combine(o.value, xw[1]))))

    return alg


def write_clause(node: Exec) -> Computation:
    def decorated(pair: tuple[Any, Any]) -> Computation:
        deco, w = pair
        if isinstance(deco, Listen):
            return deco.k(w)
        if isinstance(deco, Pass):
            return deco.k.map(lambda xw: (xw[0], deco.modify(xw[1])))
        return Impure(Exec(Pure(deco)))

    return node.body.bind(decorated)


def forward_writer(node: SignatureNode, where: str) -> Computation:
    if isinstance(node, Exec):
        return Impure(node)
    return Impure(forward_algebraic(node, where))


def writer_unit(monoid: Monoid) -> Callable[[Any], Computation]:
    return lambda x: Pure((x, monoid.empty))


def write_handler(monoid: Monoid) -> Handler:
    fwd = lambda node: Impure(forward_algebraic(node, "h_write"))  # noqa: E731
    alg = split(TELL, tell_clause(monoid), split(WRITE, write_clause, fwd))
    return Handler(unit=writer_unit(monoid), alg=alg)


def h_write(m: Computation, monoid: Monoid = TEXT) -> Computation:
    """Interpret tell/listen/pass; the result is ``(value, log)``."""
    return fold(write_handler(monoid), m)


def unhandled(node: SignatureNode, where: str) -> Any:
    raise UnhandledEffect(node.effect_kind, where)
