"""Runtime tags for values crossing existentially-typed positions.

Continuation inputs of a node are only known to the effect kind that built
it. Each kind documents the type it feeds into a continuation with a ``Tag``;
``guard`` wraps a continuation so that feeding it anything else raises
``TagMismatch`` instead of silently producing a corrupt tree.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from .errors import TagMismatch
from .table import Table, compose


@dataclass(frozen=True)
class Tag:
    name: str
    accepts: Callable[[Any], bool]

    def check(self, value: Any, kind: str, slot: str) -> Any:
        if not self.accepts(value):
            raise TagMismatch(kind, slot, self.name, value)
        return value


ANY = Tag("any", lambda v: True)
UNIT = Tag("()", lambda v: v == ())
INT = Tag("int", lambda v: isinstance(v, int) and not isinstance(v, bool))
TEXT = Tag("text", lambda v: isinstance(v, str))
CHAR = Tag("char", lambda v: isinstance(v, str) and len(v) == 1)
SEQUENCE = Tag("sequence", lambda v: isinstance(v, (list, tuple)))


def instance_of(*types: type) -> Tag:
    name = "|".join(t.__name__ for t in types)
    return Tag(name, lambda v: isinstance(v, types))


class Guarded:
    """A continuation that checks its argument against a tag before running."""

    __slots__ = ("tag", "kind", "slot", "fn")

    def __init__(self, tag: Tag, kind: str, slot: str, fn: Callable[[Any], Any]) -> None:
        self.tag = tag
        self.kind = kind
        self.slot = slot
        self.fn = fn

    def __call__(self, value: Any) -> Any:
        return self.fn(self.tag.check(value, self.kind, self.slot))

    def postcompose(self, f: Callable[[Any], Any]) -> Guarded:
        return Guarded(self.tag, self.kind, self.slot, compose(f, self.fn))


def guard(tag: Tag, kind: str, slot: str, fn: Callable[[Any], Any]) -> Callable[[Any], Any]:
    if tag is ANY or isinstance(fn, Table):
        return fn
    return Guarded(tag, kind, slot, fn)
