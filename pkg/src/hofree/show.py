"""Haskell ``show``-style rendering of results, used by goldens and the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Char:
    """A single character; renders in single quotes."""

    c: str

    def __post_init__(self) -> None:
        if len(self.c) != 1:
            raise ValueError(f"Char needs exactly one character, got {self.c!r}")


_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\t": "\\t", "\r": "\\r"}


def _quote(s: str, q: str) -> str:
    out = []
    for ch in s:
        if ch == q:
            out.append("\\" + q)
        elif ch in _ESCAPES and ch != ('"' if q == "'" else ""):
            out.append(_ESCAPES[ch])
        else:
            out.append(ch)
    return q + "".join(out) + q


def show(v: Any) -> str:
    # imported lazily: those modules render through this one
    from .exc import Just, Nothing
    from .latent import Abs, Deferred, Id, Left, Right, StateL, Val

    if isinstance(v, bool):
        return "True" if v else "False"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, str):
        return _quote(v, '"')
    if isinstance(v, Char):
        return _quote(v.c, "'")
    if isinstance(v, tuple):
        return "(" + ",".join(show(x) for x in v) + ")"
    if isinstance(v, list):
        return "[" + ",".join(show(x) for x in v) + "]"
    if isinstance(v, Just):
        return "Just " + _atom(v.value)
    if isinstance(v, Nothing):
        return "Nothing"
    if isinstance(v, Val):
        return str(v.n)
    if isinstance(v, Abs):
        return "<function>"
    if isinstance(v, Deferred):
        return show(v.resolve())
    if isinstance(v, Id):
        return show(v.value)
    if isinstance(v, Left):
        return "Left <thunk>"
    if isinstance(v, Right):
        return "Right " + _atom(v.value)
    if isinstance(v, StateL):
        return f"({show(v.state)},{show(list(v.store))},{show(v.result.value)})"
    return repr(v)


def _atom(v: Any) -> str:
    s = show(v)
    if s[:1] in "([\"'<" or " " not in s and not s.startswith("-"):
        return s
    return f"({s})"
