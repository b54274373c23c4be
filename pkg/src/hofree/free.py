"""The free monad over higher-order signatures and its fold.

A computation is either a ``Pure`` leaf or an ``Impure`` node wrapping a
``SignatureNode``. Every node kind knows how to map over its continuation
slots (``fmap``) and over its inner-computation slots (``hmap``); bind and
fold are written once against that interface.

``fold`` interprets a tree into a handler's carrier. The outer pass uses the
handler's generator at leaves; inner computations are interpreted by a second
pass that uses the carrier's unit instead, with the same algebra.
"""

from __future__ import annotations

import functools
import threading
from collections.abc import Callable, Generator, Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, ClassVar

from .errors import DepthExceeded, MalformedNode, UnhandledEffect

MAX_DEPTH = 100_000


class Computation:
    """A tree of effect nodes with pure leaves. Compare with ``hofree.laws``, not ``==``."""

    __slots__ = ()
    __hash__ = object.__hash__

    def bind(self, k: Callable[[Any], Computation]) -> Computation:
        raise NotImplementedError

    def map(self, f: Callable[[Any], Any]) -> Computation:
        return self.bind(lambda x: Pure(f(x)))

    def seq(self, other: Computation) -> Computation:
        return self.bind(lambda _: other)

    def __rshift__(self, other: Computation) -> Computation:
        return self.seq(other)


class Pure(Computation):
    __slots__ = ("value",)

    def __init__(self, value: Any) -> None:
        self.value = value

    def bind(self, k: Callable[[Any], Computation]) -> Computation:
        return k(self.value)

    def __repr__(self) -> str:
        return f"Pure({self.value!r})"


class Impure(Computation):
    __slots__ = ("node",)

    def __init__(self, node: SignatureNode) -> None:
        self.node = node

    def bind(self, k: Callable[[Any], Computation]) -> Computation:
        return Impure(self.node.fmap(lambda m: m.bind(k)))

    def __repr__(self) -> str:
        return f"Impure({self.node!r})"


def pure(value: Any) -> Computation:
    return Pure(value)


def bind(m: Computation, k: Callable[[Any], Computation]) -> Computation:
    return m.bind(k)


def join(mm: Computation) -> Computation:
    return mm.bind(lambda m: m)


def sequence(ms: Iterable[Computation]) -> Computation:
    """Run computations left to right, collecting their results in a list."""
    acc: Computation = Pure([])
    for m in ms:
        acc = acc.bind(lambda xs, m=m: m.map(lambda x, xs=xs: [*xs, x]))
    return acc


# -- signatures ---------------------------------------------------------------


class Role(Enum):
    INNER = "inner"
    CONTINUATION = "continuation"
    DATA = "data"


@dataclass(frozen=True)
class Slot:
    name: str
    role: Role
    doc: str = ""


@dataclass(frozen=True)
class SignatureInfo:
    kind: str
    cls: type
    slots: tuple[Slot, ...]


SIGNATURES: dict[str, SignatureInfo] = {}


def _registered(cls: type, kind: str | None, slots: tuple[Slot, ...]) -> None:
    if kind is None:
        return
    if kind in SIGNATURES and SIGNATURES[kind].cls is not cls:
        raise ValueError(f"effect kind {kind!r} registered twice")
    SIGNATURES[kind] = SignatureInfo(kind, cls, slots)


class SignatureNode:
    """One effect node. Subclasses register a kind id and a slot schema.

    ``fmap`` touches only continuation slots, ``hmap`` only inner-computation
    slots.
    """

    __slots__ = ()
    kind: ClassVar[str] = "node"
    slots: ClassVar[tuple[Slot, ...]] = ()

    def __init_subclass__(cls, kind: str | None = None, **kwargs: Any) -> None:
        super().__init_subclass__(**kwargs)
        if kind is not None:
            cls.kind = kind
        _registered(cls, kind, cls.slots)

    @property
    def effect_kind(self) -> str:
        return self.kind

    def fmap(self, f: Callable[[Any], Any]) -> SignatureNode:
        raise NotImplementedError

    def hmap(self, t: Callable[[Computation], Any]) -> SignatureNode:
        raise NotImplementedError

    def validate(self) -> None:
        validate_slots(self.effect_kind, self, self.slots)


class Operation:
    """A first-order operation (a plain functor value) carried inside a node.

    ``fmap`` maps the operation's result position, the ``a`` in ``σ a``.
    Operations register in the same kind registry as nodes.
    """

    __slots__ = ()
    kind: ClassVar[str] = "operation"
    slots: ClassVar[tuple[Slot, ...]] = ()

    def __init_subclass__(cls, kind: str | None = None, **kwargs: Any) -> None:
        super().__init_subclass__(**kwargs)
        if kind is not None:
            cls.kind = kind
        _registered(cls, kind, cls.slots)

    def fmap(self, f: Callable[[Any], Any]) -> Operation:
        raise NotImplementedError

    def validate(self) -> None:
        validate_slots(self.kind, self, self.slots)


def validate_slots(kind: str, payload: Any, slots: Iterable[Slot]) -> None:
    for slot in slots:
        value = getattr(payload, slot.name)
        if slot.role is Role.INNER:
            values = value if isinstance(value, (list, tuple)) else [value]
            for v in values:
                if not isinstance(v, Computation):
                    raise MalformedNode(kind, slot.name, f"expected a computation, got {v!r}")
        elif slot.role is Role.CONTINUATION:
            if not (callable(value) or isinstance(value, Computation)):
                raise MalformedNode(kind, slot.name, f"expected a continuation, got {value!r}")


def map_continuation(f: Callable[[Any], Any], node: SignatureNode) -> SignatureNode:
    return node.fmap(f)


def map_inner(t: Callable[[Computation], Any], node: SignatureNode) -> SignatureNode:
    return node.hmap(t)


def op(node: SignatureNode) -> Computation:
    node.validate()
    return Impure(node)


# -- interpretation -------------------------------------------------------------


@dataclass(frozen=True)
class Handler:
    """A pointed carrier: ``unit`` is the carrier's unit, ``gen`` interprets
    the leaves of the outermost tree (defaults to ``unit``), ``alg``
    interprets a node whose slots already hold carrier values."""

    unit: Callable[[Any], Any]
    alg: Callable[[SignatureNode], Any]
    gen: Callable[[Any], Any] | None = None

    @property
    def generator(self) -> Callable[[Any], Any]:
        return self.gen if self.gen is not None else self.unit


_depth = threading.local()


class _Guard:
    __slots__ = ("limit",)

    def __init__(self, limit: int) -> None:
        self.limit = limit

    def __enter__(self) -> None:
        d = getattr(_depth, "n", 0) + 1
        if d > self.limit:
            raise DepthExceeded(self.limit)
        _depth.n = d

    def __exit__(self, *exc: object) -> None:
        _depth.n -= 1


def fold(h: Handler, m: Computation, *, max_depth: int = MAX_DEPTH) -> Any:
    guard = _Guard(max_depth)
    unit, alg, gen = h.unit, h.alg, h.generator

    def inner(c: Computation) -> Any:
        with guard:
            if isinstance(c, Pure):
                return unit(c.value)
            return alg(c.node.fmap(inner).hmap(inner))

    def outer(c: Computation) -> Any:
        with guard:
            if isinstance(c, Pure):
                return gen(c.value)
            return alg(c.node.fmap(outer).hmap(inner))

    outermost = getattr(_depth, "n", 0) == 0
    try:
        return outer(m)
    except RecursionError:
        if outermost:
            raise DepthExceeded(max_depth) from None
        raise


def run(m: Computation) -> Any:
    """Extract the value of a fully handled computation."""
    if isinstance(m, Pure):
        return m.value
    raise UnhandledEffect(m.node.effect_kind, "top level")


# -- coproducts -----------------------------------------------------------------


@dataclass(frozen=True)
class Signature:
    """A named set of effect kinds; membership drives coproduct dispatch."""

    name: str
    kinds: frozenset[str] = field(default_factory=frozenset)
    everything: bool = False

    def __contains__(self, node: SignatureNode) -> bool:
        return self.everything or node.effect_kind in self.kinds

    def __add__(self, other: Signature) -> Coproduct:
        return Coproduct(self, other)


def signature(name: str, *kinds: str) -> Signature:
    return Signature(name, frozenset(kinds))


ANY_SIGNATURE = Signature("*", everything=True)


class In(SignatureNode, kind="coproduct.in"):
    """Left injection into a coproduct of signatures."""

    __slots__ = ("inner",)
    side = "left"

    def __init__(self, inner: SignatureNode) -> None:
        self.inner = inner

    @property
    def effect_kind(self) -> str:
        return self.inner.effect_kind

    def fmap(self, f: Callable[[Any], Any]) -> SignatureNode:
        return type(self)(self.inner.fmap(f))

    def hmap(self, t: Callable[[Computation], Any]) -> SignatureNode:
        return type(self)(self.inner.hmap(t))

    def validate(self) -> None:
        self.inner.validate()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.inner!r})"


class Out(In, kind="coproduct.out"):
    """Right injection into a coproduct of signatures."""

    __slots__ = ()
    side = "right"


CoproductNode = In  # ``Out`` subclasses ``In``; ``side`` tells them apart


@dataclass(frozen=True, init=False)
class Coproduct(Signature):
    """``left ⊕ right``; n-ary sums nest to the right."""

    left: Signature = ANY_SIGNATURE
    right: Signature = ANY_SIGNATURE

    def __init__(self, left: Signature, right: Signature) -> None:
        object.__setattr__(self, "name", f"({left.name} + {right.name})")
        object.__setattr__(self, "kinds", left.kinds | right.kinds)
        object.__setattr__(self, "everything", left.everything or right.everything)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def view(self, node: SignatureNode) -> In:
        """Classify ``node`` as an injection; explicit ``In``/``Out`` pass through."""
        if isinstance(node, In):
            return node
        if node in self.left:
            return In(node)
        if node in self.right:
            return Out(node)
        raise UnhandledEffect(node.effect_kind, self.name)

    def inject(self, node: SignatureNode) -> SignatureNode:
        """Wrap ``node`` in explicit injections down the right-nested spine."""
        side = self.view(node)
        if isinstance(side, Out):
            inner = self.right.inject(node) if isinstance(self.right, Coproduct) else node
            return Out(inner)
        inner = self.left.inject(node) if isinstance(self.left, Coproduct) else node
        return In(inner)


def case_split(lft: Callable[[SignatureNode], Any], rht: Callable[[SignatureNode], Any]) -> Callable[[In], Any]:
    """The separator: dispatch an injected node to the algebra for its side."""

    def alg(node: In) -> Any:
        if node.side == "left":
            return lft(node.inner)
        return rht(node.inner)

    return alg


def split(sig: Signature, lft: Callable[[SignatureNode], Any], rht: Callable[[SignatureNode], Any]) -> Callable[[SignatureNode], Any]:
    """``lft`` for nodes of ``sig``, ``rht`` (usually forwarding) for the rest."""
    cop = Coproduct(sig, ANY_SIGNATURE)
    dispatch = case_split(lft, rht)
    return lambda node: dispatch(cop.view(node))


# -- do-notation ----------------------------------------------------------------


def do(fn: Callable[..., Generator[Computation, Any, Any]]) -> Callable[..., Computation]:
    """Write a computation as a generator that yields sub-computations.

    Continuations may be resumed more than once (``or_`` resumes both
    branches), which a Python generator cannot do, so each resumption replays
    the generator from the start with the recorded results. The generator body
    must therefore be free of Python side effects.
    """

    @functools.wraps(fn)
    def build(*args: Any, **kwargs: Any) -> Computation:
        def step(history: tuple[Any, ...]) -> Computation:
            gen = fn(*args, **kwargs)
            try:
                m = gen.send(None)
                for v in history:
                    m = gen.send(v)
            except StopIteration as stop:
                return Pure(stop.value)
            return m.bind(lambda v: step((*history, v)))

        return step(())

    return build


def registered_kinds() -> Mapping[str, SignatureInfo]:
    return dict(SIGNATURES)
