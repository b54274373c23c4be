"""Seeded generators of tabulated trees for every family.

Each generator takes a ``Builder`` so the same random choices can produce a
specialized tree or a generic computation. Depth is geometric and capped;
every function-valued slot is a ``Table`` over a domain of at most four
elements, drawn from booleans and ``0..3``.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from .. import bracket as res_mod
from .. import latent, parallel, writer
from ..algebraic import Accum, Fail, Get, KAlg, Or, Put, Tell
from ..free import Computation, Impure, Operation, Pure
from ..scoped import KSc, Local, Once
from ..table import Table, args
from . import specialized as S

MAX_DEPTH = 4
LEAVES: tuple[Any, ...] = (False, True, 0, 1, 2, 3)
STATES = (0, 1, 2, 3)
BOOLS = (False, True)
LOGS = ("", "a", "b", "ab")
STOP = 0.35  # chance of a leaf at each level while depth remains


def drop_log(w: str) -> str:
    return ""


def double_log(w: str) -> str:
    return w + w


def keep_log(w: str) -> str:
    return w


# shared module-level functions so trees built from them compare by identity
MODIFIERS: tuple[Callable[[str], str], ...] = (drop_log, double_log, keep_log)


@dataclass(frozen=True)
class Builder:
    name: str
    var: Callable[[Any], Any]
    op: Callable[[Operation], Any]
    enter: Callable[[Operation], Any]
    for_: Callable[[list[Any], Any], Any]
    exec_: Callable[[Any], Any]
    node: Callable[[Operation, Any, Any, Any], Any]
    pair: Callable[[Any, Any], tuple[Any, Any]]
    bracket: Callable[[Any], Any]


SPECIALIZED = Builder(
    name="specialized",
    var=S.Var,
    op=S.Op,
    enter=S.Enter,
    for_=S.For,
    exec_=S.Exec,
    node=S.Node,
    pair=lambda rel, use: (rel, use),
    bracket=S.Bracket,
)

GENERIC = Builder(
    name="generic",
    var=Pure,
    op=lambda o: Impure(KAlg(o)),
    enter=lambda sc: Impure(KSc(sc)),
    for_=lambda iters, k: Impure(parallel.For(iters, k)),
    exec_=lambda body: Impure(writer.Exec(body)),
    node=lambda op, l, st, k: Impure(latent.LatNode(op, l, st, k)),
    # bracket trees in the image of the specialized encoding keep ``use`` pure
    pair=lambda rel, use: (rel, Pure(use)),
    bracket=lambda res: Impure(res_mod.Bracket(res)),
)


def _stop(rng: random.Random, depth: int) -> bool:
    return depth <= 0 or rng.random() < STOP


def _const(leaves: tuple[Any, ...]) -> Callable[[random.Random], Any]:
    return lambda rng: rng.choice(leaves)


# -- algebraic: state, choice, tell, accumulate --------------------------------------


def alg_tree(rng: random.Random, b: Builder, depth: int = MAX_DEPTH, leaf: Callable[[random.Random], Any] = _const(LEAVES), ops: str = "gpfotc") -> Any:
    """``ops`` picks from: g(et) p(ut) f(ail) o(r) t(ell) (a)c(cum)."""
    if _stop(rng, depth):
        return b.var(leaf(rng))

    def sub() -> Any:
        return alg_tree(rng, b, depth - 1, leaf, ops)

    kind = rng.choice(ops)
    if kind == "g":
        return b.op(Get(Table.tabulate(lambda s: sub(), STATES, "get")))
    if kind == "p":
        return b.op(Put(rng.choice(STATES), sub()))
    if kind == "f":
        return b.op(Fail())
    if kind == "o":
        return b.op(Or(sub(), sub()))
    if kind == "t":
        return b.op(Tell(rng.choice("ab"), sub()))
    return b.op(Accum(rng.randint(1, 3), sub()))


# -- scoped: once and local ---------------------------------------------------------


def sc_tree(rng: random.Random, b: Builder, depth: int = MAX_DEPTH, leaf: Callable[[random.Random], Any] = _const(LEAVES)) -> Any:
    if _stop(rng, depth):
        return b.var(leaf(rng))
    body_depth = rng.randint(0, depth - 1)
    rest = depth - 1 - body_depth

    def body() -> Any:
        return sc_tree(rng, b, body_depth, lambda r: sc_tree(r, b, rest, leaf))

    if rng.random() < 0.5:
        return b.enter(Once(body()))
    return b.enter(Local(rng.choice(STATES), body()))


# -- parallel -----------------------------------------------------------------------


def par_tree(rng: random.Random, b: Builder, depth: int = MAX_DEPTH, leaf: Callable[[random.Random], Any] = _const(LEAVES)) -> Any:
    if _stop(rng, depth):
        return b.var(leaf(rng))
    n = rng.randint(0, 2)
    branch = _const(BOOLS)
    iters = [par_tree(rng, b, depth - 1, branch) for _ in range(n)]
    domain = list(itertools.product(BOOLS, repeat=n))
    k = Table.tabulate(lambda xs: par_tree(rng, b, depth - 1, leaf), domain, "for")
    return b.for_(iters, k)


# -- writer -------------------------------------------------------------------------


def write_tree(rng: random.Random, b: Builder, depth: int = MAX_DEPTH, leaf: Callable[[random.Random], Any] = _const(LEAVES)) -> Any:
    if _stop(rng, depth):
        return b.var(leaf(rng))
    body_depth = rng.randint(0, depth - 1)
    rest = depth - 1 - body_depth

    def decoration(r: random.Random) -> Any:
        if r.random() < 0.5:
            return writer.Listen(Table.tabulate(lambda w: write_tree(r, b, rest, leaf), LOGS, "listen"))
        return writer.Pass(r.choice(MODIFIERS), write_tree(r, b, rest, leaf))

    return b.exec_(write_tree(rng, b, body_depth, decoration))


# -- latent -------------------------------------------------------------------------


def lat_tree(rng: random.Random, b: Builder, depth: int = MAX_DEPTH, leaf: Callable[[random.Random], Any] = _const(LEAVES)) -> Any:
    if _stop(rng, depth):
        return b.var(leaf(rng))
    l = latent.UNIT_STATE
    id_leaf: Callable[[random.Random], Any] = lambda r: latent.Id(r.choice(STATES))  # noqa: E731
    if rng.random() < 0.5:
        op: Operation = latent.Thunk()
        st = Table.tabulate(lambda c, l2: lat_tree(rng, b, depth - 1, id_leaf), [args(latent.ONE, l)], "st")
        k_domain = [latent.Id(p) for p in STATES]
    else:
        op = latent.Force(rng.choice(STATES))
        st = Table((), "st")
        k_domain = [latent.Id(v) for v in STATES]
    k = Table.tabulate(lambda p: lat_tree(rng, b, depth - 1, leaf), k_domain, "k")
    return b.node(op, l, st, k)


# -- bracketing ---------------------------------------------------------------------


def res_tree(rng: random.Random, b: Builder, depth: int = MAX_DEPTH, leaf: Callable[[random.Random], Any] = _const(LEAVES)) -> Any:
    if _stop(rng, depth):
        return b.var(leaf(rng))
    res_depth = rng.randint(0, depth - 1)
    rest = depth - 1 - res_depth

    def pair(r: random.Random) -> Any:
        return b.pair(res_tree(r, b, rest, _const(((),))), res_tree(r, b, rest, leaf))

    return b.bracket(res_tree(rng, b, res_depth, pair))


GENERATORS: dict[str, Callable[..., Any]] = {
    "alg": alg_tree,
    "sc": sc_tree,
    "par": par_tree,
    "write": write_tree,
    "lat": lat_tree,
    "res": res_tree,
}


def specialized_tree(instance: str, rng: random.Random, depth: int = MAX_DEPTH) -> S.Tree:
    return GENERATORS[instance](rng, SPECIALIZED, depth)


def generic_tree(instance: str, rng: random.Random, depth: int = MAX_DEPTH) -> Computation:
    return GENERATORS[instance](rng, GENERIC, depth)


def tree_depth(t: Any) -> int:
    """Nesting depth of effect nodes through inner and continuation positions."""
    from ..free import SignatureNode
    from .equality import _slot_names

    def walk(v: Any) -> int:
        if isinstance(v, (Pure, S.Var)):
            return walk(v.value)
        if isinstance(v, Impure):
            return walk(v.node)
        if isinstance(v, Table):
            return max((walk(x) for _, x in v.items()), default=0)
        if isinstance(v, (list, tuple)):
            return max((walk(x) for x in v), default=0)
        if isinstance(v, (SignatureNode, Operation, S.Tree)):
            inner = max((walk(getattr(v, n)) for n in _slot_names(type(v))), default=0)
            return inner + (0 if isinstance(v, Operation) else 1)
        return 0

    return walk(t)
