"""Exceptions as a higher-order signature, handled into an optional value."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from .erased import Tag, guard
from .errors import UnhandledEffect
from .free import Computation, Handler, Impure, Pure, Role, SignatureNode, Slot, fold, signature
from .table import compose


@dataclass(frozen=True)
class Just:
    value: Any


@dataclass(frozen=True)
class Nothing:
    pass


NOTHING = Nothing()
MAYBE = Tag("Maybe", lambda v: isinstance(v, (Just, Nothing)))


class Throw(SignatureNode, kind="exc.throw"):
    __slots__ = ()

    def fmap(self, f: Callable[[Any], Any]) -> Throw:
        return self

    def hmap(self, t: Callable[[Computation], Any]) -> Throw:
        return self

    def __repr__(self) -> str:
        return "Throw()"


class Catch(SignatureNode, kind="exc.catch"):
    """``body`` runs first; ``k`` receives ``Just(result)`` or ``NOTHING``."""

    __slots__ = ("body", "k")
    slots = (
        Slot("body", Role.INNER, "computation that may throw"),
        Slot("k", Role.CONTINUATION, "Maybe -> next"),
    )

    def __init__(self, body: Any, k: Callable[[Any], Any]) -> None:
        self.body = body
        self.k = k

    def fmap(self, f: Callable[[Any], Any]) -> Catch:
        return Catch(self.body, compose(f, self.k))

    def hmap(self, t: Callable[[Computation], Any]) -> Catch:
        return Catch(t(self.body), self.k)

    def __repr__(self) -> str:
        return f"Catch({self.body!r}, {self.k!r})"


EXC = signature("Exc", Throw.kind, Catch.kind)


def throw() -> Computation:
    return Impure(Throw())


def catch(body: Computation, k: Callable[[Any], Computation]) -> Computation:
    return Impure(Catch(body, guard(MAYBE, Catch.kind, "k", k)))


def _alg(node: SignatureNode) -> Any:
    if isinstance(node, Throw):
        return NOTHING
    if isinstance(node, Catch):
        return node.k(node.body)
    raise UnhandledEffect(node.effect_kind, "h_exc")


def _unit(x: Any) -> Just:
    return Just(x)


EXC_HANDLER = Handler(unit=_unit, alg=_alg)


def h_exc(m: Computation) -> Just | Nothing:
    return fold(EXC_HANDLER, m)


def prog_exc(x: int) -> Computation:
    def k(r: Any) -> Computation:
        if isinstance(r, Nothing):
            return Pure("Too small")
        return Pure(str(r.value))

    return catch(Pure(x) if x >= 0 else throw(), k)
