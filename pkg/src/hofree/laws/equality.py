"""Structural equality on tabulated trees, reporting the first mismatch."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from enum import Enum
from typing import Any

from ..table import Table


@dataclass(frozen=True)
class Mismatch:
    path: str
    left: str
    right: str
    reason: str

    def __str__(self) -> str:
        return f"at {self.path}: {self.reason} (left={self.left}, right={self.right})"


def _short(v: Any, limit: int = 120) -> str:
    s = repr(v)
    return s if len(s) <= limit else s[: limit - 3] + "..."


def _slot_names(cls: type) -> list[str]:
    names: list[str] = []
    for klass in reversed(cls.__mro__):
        slots = klass.__dict__.get("__slots__", ())
        if isinstance(slots, str):
            slots = (slots,)
        names.extend(s for s in slots if s not in names and not s.startswith("__"))
    return names


def diff(a: Any, b: Any, path: str = "$") -> Mismatch | None:
    """``None`` when ``a`` and ``b`` are structurally equal, else the first difference.

    Tables compare entry by entry; any other function compares by identity.
    """
    if type(a) is not type(b):
        return Mismatch(path, _short(a), _short(b), f"{type(a).__name__} vs {type(b).__name__}")
    if isinstance(a, Table):
        if a.domain != b.domain:
            return Mismatch(path, _short(a.domain), _short(b.domain), "table domains differ")
        for (k, va), (_, vb) in zip(a.items(), b.items()):
            found = diff(va, vb, f"{path}[{k!r}]")
            if found:
                return found
        return None
    if isinstance(a, (list, tuple)):
        if len(a) != len(b):
            return Mismatch(path, _short(a), _short(b), f"length {len(a)} vs {len(b)}")
        for i, (x, y) in enumerate(zip(a, b)):
            found = diff(x, y, f"{path}[{i}]")
            if found:
                return found
        return None
    if isinstance(a, (str, int, float, bool, Enum)) or a is None:
        return None if a == b else Mismatch(path, _short(a), _short(b), "values differ")
    if dataclasses.is_dataclass(a):
        for f in dataclasses.fields(a):
            found = diff(getattr(a, f.name), getattr(b, f.name), f"{path}.{f.name}")
            if found:
                return found
        return None
    names = _slot_names(type(a))
    if names:
        for name in names:
            found = diff(getattr(a, name), getattr(b, name), f"{path}.{name}")
            if found:
                return found
        return None
    if callable(a):
        return None if a is b else Mismatch(path, _short(a), _short(b), "opaque functions differ")
    if isinstance(a, dict):
        if a.keys() != b.keys():
            return Mismatch(path, _short(a), _short(b), "keys differ")
        return diff([a[k] for k in a], [b[k] for k in a], path)
    if hasattr(a, "__dict__"):
        return diff(vars(a), vars(b), path)
    # stateless slotted objects such as ``Fail()``
    return None


def equal(a: Any, b: Any) -> bool:
    return diff(a, b) is None
