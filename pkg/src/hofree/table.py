"""Finite lookup tables standing in for function-valued slots.

A ``Table`` is callable like the function it replaces, but its graph is
explicit, so two tables can be compared entry by entry. Post-composition
(``postcompose``) is eager and returns another table; ``compose`` uses it whenever
the function being extended is already a table, which keeps trees built from
tables free of opaque closures.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from typing import Any

from .errors import TagMismatch


def _key(value: Any) -> Any:
    if isinstance(value, list):
        return tuple(_key(v) for v in value)
    if isinstance(value, tuple):
        return tuple(_key(v) for v in value)
    return value


class Table:
    __slots__ = ("_entries", "_index", "name")

    def __init__(self, entries: Iterable[tuple[Any, Any]], name: str = "table") -> None:
        self._entries = tuple((_key(k), v) for k, v in entries)
        self._index = dict(self._entries)
        if len(self._index) != len(self._entries):
            raise ValueError("duplicate keys in table")
        self.name = name

    @classmethod
    def tabulate(cls, fn: Callable[..., Any], domain: Iterable[Any], name: str = "table") -> Table:
        return cls(((k, fn(*k) if isinstance(k, _Args) else fn(k)) for k in domain), name)

    @property
    def domain(self) -> tuple[Any, ...]:
        return tuple(k for k, _ in self._entries)

    def items(self) -> tuple[tuple[Any, Any], ...]:
        return self._entries

    def __call__(self, *args: Any) -> Any:
        key = _key(args[0]) if len(args) == 1 else _key(args)
        try:
            return self._index[key]
        except (KeyError, TypeError):
            raise TagMismatch(self.name, "key", f"one of {self.domain!r}", key) from None

    def postcompose(self, f: Callable[[Any], Any]) -> Table:
        return Table(((k, f(v)) for k, v in self._entries), self.name)

    def __len__(self) -> int:
        return len(self._entries)

    def __repr__(self) -> str:
        body = ", ".join(f"{k!r}: {v!r}" for k, v in self._entries)
        return f"Table({{{body}}})"


class _Args(tuple):
    """Marks a multi-argument key for ``Table.tabulate``."""


def args(*values: Any) -> _Args:
    return _Args(values)


def compose(f: Callable[[Any], Any], k: Callable[..., Any]) -> Callable[..., Any]:
    """``f . k``; tables (and guarded continuations) keep their shape."""
    post = getattr(k, "postcompose", None)
    if post is not None:
        return post(f)
    return lambda *a: f(k(*a))
