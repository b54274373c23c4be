"""Direct encodings of the per-family free monads.

Each family has its own tree type sharing the ``Var`` leaf. These are the
"before" side of the isomorphisms with the generic free monad; every node
type supports ``map`` (the functor action on the final result).
"""

from __future__ import annotations

from collections.abc import Callable
from typing import Any

from ..free import Computation, Operation
from ..table import compose


class Tree:
    """Base of the specialized free monads."""

    __slots__ = ()

    def map(self, f: Callable[[Any], Any]) -> Tree:
        raise NotImplementedError


class Var(Tree):
    __slots__ = ("value",)

    def __init__(self, value: Any) -> None:
        self.value = value

    def map(self, f: Callable[[Any], Any]) -> Tree:
        return Var(f(self.value))

    def __repr__(self) -> str:
        return f"Var({self.value!r})"


def _map_tree(f: Callable[[Any], Any]) -> Callable[[Tree], Tree]:
    return lambda t: t.map(f)


class Op(Tree):
    """Algebraic node: an operation whose continuation slots hold trees."""

    __slots__ = ("op",)

    def __init__(self, op: Operation) -> None:
        self.op = op

    def map(self, f: Callable[[Any], Any]) -> Tree:
        return Op(self.op.fmap(_map_tree(f)))

    def __repr__(self) -> str:
        return f"Op({self.op!r})"


class Enter(Tree):
    """Scoped node: the operation's inner slot holds a tree of trees."""

    __slots__ = ("sc",)

    def __init__(self, sc: Operation) -> None:
        self.sc = sc

    def map(self, f: Callable[[Any], Any]) -> Tree:
        return Enter(self.sc.fmap(lambda inner: inner.map(_map_tree(f))))

    def __repr__(self) -> str:
        return f"Enter({self.sc!r})"


class For(Tree):
    __slots__ = ("iters", "k")

    def __init__(self, iters: list[Tree], k: Callable[[list[Any]], Tree]) -> None:
        self.iters = list(iters)
        self.k = k

    def map(self, f: Callable[[Any], Any]) -> Tree:
        return For(self.iters, compose(_map_tree(f), self.k))

    def __repr__(self) -> str:
        return f"For({self.iters!r}, {self.k!r})"


class Exec(Tree):
    """Writer node: ``body`` is a tree whose leaves are decorated trees."""

    __slots__ = ("body",)

    def __init__(self, body: Tree) -> None:
        self.body = body

    def map(self, f: Callable[[Any], Any]) -> Tree:
        return Exec(self.body.map(lambda deco: deco.fmap(_map_tree(f))))

    def __repr__(self) -> str:
        return f"Exec({self.body!r})"


class Node(Tree):
    """Latent node: ``sub(selector, l)`` is a tree of ``Id`` values."""

    __slots__ = ("op", "l", "sub", "k")

    def __init__(self, op: Operation, l: Any, sub: Callable[..., Tree], k: Callable[[Any], Tree]) -> None:
        self.op = op
        self.l = l
        self.sub = sub
        self.k = k

    def map(self, f: Callable[[Any], Any]) -> Tree:
        return Node(self.op, self.l, self.sub, compose(_map_tree(f), self.k))

    def __repr__(self) -> str:
        return f"Node({self.op!r}, {self.l!r}, {self.sub!r}, {self.k!r})"


class Bracket(Tree):
    """Bracket node: ``res`` is a tree of ``(release, use)`` tree pairs."""

    __slots__ = ("res",)

    def __init__(self, res: Tree) -> None:
        self.res = res

    def map(self, f: Callable[[Any], Any]) -> Tree:
        return Bracket(self.res.map(lambda ru: (ru[0], ru[1].map(f))))

    def __repr__(self) -> str:
        return f"Bracket({self.res!r})"


def tree_map(f: Callable[[Any], Any], t: Tree | Computation) -> Tree | Computation:
    """``fmap`` on either representation."""
    return t.map(f)
