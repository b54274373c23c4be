"""Resource bracketing over a deterministic simulated I/O world.

``Bracket`` holds one inner computation producing ``(release, use)``. The
handler runs it, then runs ``use`` (which carries the rest of the program),
then runs ``release`` exactly once, whether or not ``use`` raised. A raised
exception resumes propagating after the release.

The carrier is ``world -> (world, Ok | Raised)``: exceptions live in the
semantic domain, not in Python's exception machinery.
"""

from __future__ import annotations

import json
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import Any, Union

from .algebraic import KAlg
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
from .show import Char, show
from .table import compose


class Bracket(SignatureNode, kind="res.bracket"):
    __slots__ = ("res",)
    slots = (Slot("res", Role.INNER, "computation of (release, use)"),)

    def __init__(self, res: Any) -> None:
        self.res = res

    def fmap(self, f: Callable[[Any], Any]) -> Bracket:
        return Bracket(self.res.map(lambda ru: (ru[0], ru[1].map(f))))

    def hmap(self, t: Callable[[Computation], Any]) -> Bracket:
        return Bracket(t(self.res.map(lambda ru: (t(ru[0]), t(ru[1])))))

    def __repr__(self) -> str:
        return f"Bracket({self.res!r})"


class IOMode(Enum):
    READ = "ReadMode"
    WRITE = "WriteMode"
    APPEND = "AppendMode"


@dataclass(frozen=True)
class Handle:
    ident: int
    path: str

    def __repr__(self) -> str:
        return f"{{handle: {self.path}}}"


class HGetChar(Operation, kind="tty.hgetchar"):
    __slots__ = ("h", "k")
    slots = (Slot("h", Role.DATA, "handle"), Slot("k", Role.CONTINUATION, "Char -> next"))

    def __init__(self, h: Handle, k: Callable[[Char], Any]) -> None:
        self.h = h
        self.k = k

    def fmap(self, f: Callable[[Any], Any]) -> HGetChar:
        return HGetChar(self.h, compose(f, self.k))


class Print(Operation, kind="tty.print"):
    __slots__ = ("s", "k")
    slots = (Slot("s", Role.DATA, "line"), Slot("k", Role.CONTINUATION, "next"))

    def __init__(self, s: str, k: Any) -> None:
        self.s = s
        self.k = k

    def fmap(self, f: Callable[[Any], Any]) -> Print:
        return Print(self.s, f(self.k))


class ReadFile(Operation, kind="tty.readfile"):
    __slots__ = ("fp", "k")
    slots = (Slot("fp", Role.DATA, "path"), Slot("k", Role.CONTINUATION, "contents -> next"))

    def __init__(self, fp: str, k: Callable[[str], Any]) -> None:
        self.fp = fp
        self.k = k

    def fmap(self, f: Callable[[Any], Any]) -> ReadFile:
        return ReadFile(self.fp, compose(f, self.k))


class OpenFile(Operation, kind="tty.openfile"):
    __slots__ = ("fp", "mode", "k")
    slots = (
        Slot("fp", Role.DATA, "path"),
        Slot("mode", Role.DATA, "IOMode"),
        Slot("k", Role.CONTINUATION, "Handle -> next"),
    )

    def __init__(self, fp: str, mode: IOMode, k: Callable[[Handle], Any]) -> None:
        self.fp = fp
        self.mode = mode
        self.k = k

    def fmap(self, f: Callable[[Any], Any]) -> OpenFile:
        return OpenFile(self.fp, self.mode, compose(f, self.k))


TELETYPE = signature("Teletype", HGetChar.kind, Print.kind, ReadFile.kind, OpenFile.kind)
RES = signature("Res", Bracket.kind)


def hGetC(h: Handle) -> Computation:  # noqa: N802
    return Impure(KAlg(HGetChar(h, Pure)))


def prnt(s: str) -> Computation:
    return Impure(KAlg(Print(s, Pure(()))))


def readF(fp: str) -> Computation:  # noqa: N802
    return Impure(KAlg(ReadFile(fp, Pure)))


def openF(fp: str, mode: IOMode = IOMode.READ) -> Computation:  # noqa: N802
    return Impure(KAlg(OpenFile(fp, mode, Pure)))


def brckt(res: Computation) -> Computation:
    """``res`` acquires and returns ``(release, use)``."""
    return Impure(Bracket(res.map(lambda ru: (ru[0], Pure(ru[1])))))


# -- the simulated world ------------------------------------------------------------


@dataclass(frozen=True)
class SimWorld:
    files: Mapping[str, str] = field(default_factory=dict)
    handles: Mapping[int, tuple[str, int]] = field(default_factory=dict)
    transcript: tuple[str, ...] = ()
    next_handle: int = 0

    def emit(self, line: str) -> SimWorld:
        return replace(self, transcript=(*self.transcript, line))

    def cursor(self, h: Handle) -> int:
        return self.handles[h.ident][1]


@dataclass(frozen=True)
class Ok:
    value: Any


@dataclass(frozen=True)
class Raised:
    message: str


Outcome = Union[Ok, Raised]
Carrier = Callable[[SimWorld], tuple[SimWorld, Outcome]]


def load_fixture(path: str | Path) -> SimWorld:
    """A fixture is a JSON object mapping file paths to contents."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict) or not all(isinstance(k, str) and isinstance(v, str) for k, v in data.items()):
        raise ValueError(f"{path}: fixture must map paths to string contents")
    return SimWorld(files=dict(data))


def _unit(x: Any) -> Carrier:
    return lambda w: (w, Ok(x))


def _then(c: Carrier, w: SimWorld) -> tuple[SimWorld, Outcome]:
    """Run ``c``; if it yields another carrier, run that too."""
    w, out = c(w)
    if isinstance(out, Raised):
        return w, out
    return out.value(w)


def _tty(node: KAlg) -> Carrier:
    o = node.op
    if isinstance(o, Print):
        return lambda w: o.k(w.emit(o.s))
    if isinstance(o, ReadFile):

        def read(w: SimWorld) -> tuple[SimWorld, Outcome]:
            if o.fp not in w.files:
                return w, Raised(f"{o.fp} file not found")
            return o.k(w.files[o.fp])(w)

        return read
    if isinstance(o, OpenFile):

        def open_(w: SimWorld) -> tuple[SimWorld, Outcome]:
            files = dict(w.files)
            if o.fp not in files:
                if o.mode is IOMode.READ:
                    return w, Raised(f"{o.fp} file not found")
                files[o.fp] = ""
            if o.mode is IOMode.WRITE:
                files[o.fp] = ""
            h = Handle(w.next_handle, o.fp)
            handles = {**w.handles, h.ident: (o.fp, 0)}
            return o.k(h)(replace(w, files=files, handles=handles, next_handle=h.ident + 1))

        return open_

    def get_char(w: SimWorld) -> tuple[SimWorld, Outcome]:
        h = o.h
        if not isinstance(h, Handle) or h.ident not in w.handles:
            return w, Raised("invalid handle")
        path, pos = w.handles[h.ident]
        contents = w.files.get(path, "")
        if pos >= len(contents):
            return w, Raised(f"{path} hGetChar end of file")
        w2 = replace(w, handles={**w.handles, h.ident: (path, pos + 1)})
        return o.k(Char(contents[pos]))(w2)

    return get_char


def _res(node: Bracket) -> Carrier:
    def run(w: SimWorld) -> tuple[SimWorld, Outcome]:
        w, acquired = node.res(w)
        if isinstance(acquired, Raised):
            return w, acquired
        release, use = acquired.value
        w, used = _then(use, w)
        w, released = release(w)
        if isinstance(released, Raised):
            return w, released
        return w, used

    return run


def _unknown(node: SignatureNode) -> Carrier:
    raise UnhandledEffect(node.effect_kind, "h_bracket")


BRACKET_HANDLER = Handler(unit=_unit, alg=split(TELETYPE, _tty, split(RES, _res, _unknown)))


def h_bracket(m: Computation, world: SimWorld) -> tuple[SimWorld, Outcome]:
    return fold(BRACKET_HANDLER, m)(world)


def transcript(world: SimWorld, outcome: Outcome) -> list[str]:
    lines = list(world.transcript)
    if isinstance(outcome, Raised):
        lines.append(f"***Exception: {outcome.message}")
    return lines


# -- the worked example -------------------------------------------------------------


def first_two() -> Computation:
    """Open ``foo.txt``, print its first two characters, then release."""

    def use(h: Handle) -> Computation:
        return hGetC(h).bind(lambda x: hGetC(h).bind(lambda y: prnt(show((x, y)))))

    return brckt(openF("foo.txt", IOMode.READ).map(lambda h: (prnt("released"), use(h))))


def prog_bracket() -> Computation:
    return readF("foo.txt").bind(prnt) >> first_two()
