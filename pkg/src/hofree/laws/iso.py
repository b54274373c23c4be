"""Witnesses that each specialized free monad is the generic one in disguise.

``iso1[X]`` maps a specialized tree to a generic computation, ``iso2[X]``
maps back. Instances: alg, sc, par, write, lat, res.
"""

from __future__ import annotations

from collections.abc import Callable
from typing import Any

from .. import bracket as res_mod
from .. import latent, parallel, writer
from ..algebraic import KAlg
from ..errors import MalformedNode
from ..free import Computation, Impure, Pure, join
from ..scoped import KSc
from ..table import compose
from . import specialized as S
from .equality import Mismatch, diff

INSTANCES = ("alg", "sc", "par", "write", "lat", "res")


def _leaf(t: Any) -> Computation | None:
    return Pure(t.value) if isinstance(t, S.Var) else None


def _var(c: Computation) -> S.Tree | None:
    return S.Var(c.value) if isinstance(c, Pure) else None


def _unexpected(instance: str, value: Any) -> MalformedNode:
    return MalformedNode(instance, "tree", f"not a {instance} tree: {type(value).__name__}")


# -- algebraic ----------------------------------------------------------------------


def iso1_alg(t: S.Tree) -> Computation:
    if (leaf := _leaf(t)) is not None:
        return leaf
    if isinstance(t, S.Op):
        return Impure(KAlg(t.op.fmap(iso1_alg)))
    raise _unexpected("alg", t)


def iso2_alg(c: Computation) -> S.Tree:
    if (v := _var(c)) is not None:
        return v
    if isinstance(c.node, KAlg):
        return S.Op(c.node.op.fmap(iso2_alg))
    raise _unexpected("alg", c.node)


# -- scoped -------------------------------------------------------------------------


def iso1_sc(t: S.Tree) -> Computation:
    if (leaf := _leaf(t)) is not None:
        return leaf
    if isinstance(t, S.Enter):
        return Impure(KSc(t.sc.fmap(lambda inner: iso1_sc(inner.map(iso1_sc)))))
    raise _unexpected("sc", t)


def iso2_sc(c: Computation) -> S.Tree:
    if (v := _var(c)) is not None:
        return v
    if isinstance(c.node, KSc):
        return S.Enter(c.node.sc.fmap(lambda inner: iso2_sc(inner.map(iso2_sc))))
    raise _unexpected("sc", c.node)


# -- parallel -----------------------------------------------------------------------


def iso1_par(t: S.Tree) -> Computation:
    if (leaf := _leaf(t)) is not None:
        return leaf
    if isinstance(t, S.For):
        return Impure(parallel.For([iso1_par(i) for i in t.iters], compose(iso1_par, t.k)))
    raise _unexpected("par", t)


def iso2_par(c: Computation) -> S.Tree:
    if (v := _var(c)) is not None:
        return v
    if isinstance(c.node, parallel.For):
        return S.For([iso2_par(i) for i in c.node.iters], compose(iso2_par, c.node.k))
    raise _unexpected("par", c.node)


# -- writer -------------------------------------------------------------------------


def iso1_write(t: S.Tree) -> Computation:
    if (leaf := _leaf(t)) is not None:
        return leaf
    if isinstance(t, S.Exec):
        return Impure(writer.Exec(iso1_write(t.body.map(lambda deco: deco.fmap(iso1_write)))))
    raise _unexpected("write", t)


def iso2_write(c: Computation) -> S.Tree:
    if (v := _var(c)) is not None:
        return v
    if isinstance(c.node, writer.Exec):
        return S.Exec(iso2_write(c.node.body.map(lambda deco: deco.fmap(iso2_write))))
    raise _unexpected("write", c.node)


# -- latent -------------------------------------------------------------------------


def iso1_lat(t: S.Tree) -> Computation:
    if (leaf := _leaf(t)) is not None:
        return leaf
    if isinstance(t, S.Node):
        return Impure(latent.LatNode(t.op, t.l, compose(iso1_lat, t.sub), compose(iso1_lat, t.k)))
    raise _unexpected("lat", t)


def iso2_lat(c: Computation) -> S.Tree:
    if (v := _var(c)) is not None:
        return v
    n = c.node
    if isinstance(n, latent.LatNode):
        return S.Node(n.op, n.l, compose(iso2_lat, n.st), compose(iso2_lat, n.k))
    raise _unexpected("lat", n)


# -- bracketing ---------------------------------------------------------------------


def iso1_res(t: S.Tree) -> Computation:
    if (leaf := _leaf(t)) is not None:
        return leaf
    if isinstance(t, S.Bracket):
        pairs = t.res.map(lambda ru: (iso1_res(ru[0]), Pure(iso1_res(ru[1]))))
        return Impure(res_mod.Bracket(iso1_res(pairs)))
    raise _unexpected("res", t)


def iso2_res(c: Computation) -> S.Tree:
    """Inverse of ``iso1_res`` on trees whose ``use`` components are ``Pure``.

    ``iso1_res`` only produces such trees. On other trees ``join`` flattens the
    ``use`` component, so the roundtrip holds observationally but not
    structurally.
    """
    if (v := _var(c)) is not None:
        return v
    if isinstance(c.node, res_mod.Bracket):
        pairs = c.node.res.map(lambda ru: (iso2_res(ru[0]), iso2_res(join(ru[1]))))
        return S.Bracket(iso2_res(pairs))
    raise _unexpected("res", c.node)


def _lookup(prefix: str, instance: str) -> Callable[[Any], Any]:
    if instance not in INSTANCES:
        raise KeyError(f"unknown instance {instance!r}; expected one of {INSTANCES}")
    # looked up by name so that a patched clause takes effect everywhere
    return globals()[f"{prefix}_{instance}"]


def iso1(instance: str, t: S.Tree) -> Computation:
    return _lookup("iso1", instance)(t)


def iso2(instance: str, c: Computation) -> S.Tree:
    return _lookup("iso2", instance)(c)


def check_roundtrip(instance: str, tree: S.Tree) -> Mismatch | None:
    """First structural difference between ``tree`` and ``iso2(iso1(tree))``, if any."""
    return diff(iso2(instance, iso1(instance, tree)), tree)
