"""Reference folds over the specialized trees, and sample carriers for them.

``check_handler_equiv`` runs a specialized fold and the generic ``fold`` (after
``iso1``) with the same generator and algebra, then compares the results
extensionally.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from ..algebraic import Accum, Fail, Get, KAlg, Or, Put, Tell
from ..errors import UnhandledEffect
from ..free import Handler, Operation, SignatureNode, fold
from ..parallel import For
from ..scoped import KSc, Local, Once
from ..table import compose
from . import specialized as S
from .gen import STATES
from .iso import iso1

# -- algebraic ------------------------------------------------------------------------


def fold_alg_ref(gen: Callable[[Any], Any], alg: Callable[[Operation], Any], t: S.Tree) -> Any:
    if isinstance(t, S.Var):
        return gen(t.value)
    return alg(t.op.fmap(lambda sub: fold_alg_ref(gen, alg, sub)))


# -- scoped ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EndoAlgebra:
    """``ret`` is the carrier's unit; ``enter`` interprets a scope whose
    inner slot already holds a carrier of carriers."""

    ret: Callable[[Any], Any]
    enter: Callable[[Operation], Any]


def fold_sc_ref(gen: Callable[[Any], Any], alg: EndoAlgebra, t: S.Tree) -> Any:
    """Same algebra for the scope bodies and for the base (the ``enter_B = enter_E`` case)."""
    if isinstance(t, S.Var):
        return gen(t.value)

    def cata(u: S.Tree) -> Any:
        if isinstance(u, S.Var):
            return alg.ret(u.value)
        return alg.enter(u.sc.fmap(lambda inner: cata(inner.map(cata))))

    def endo(inner: S.Tree) -> Any:
        return cata(inner.map(lambda leaf: fold_sc_ref(gen, alg, leaf)))

    return alg.enter(t.sc.fmap(endo))


# -- parallel -------------------------------------------------------------------------


@dataclass(frozen=True)
class ParAlgebra:
    var: Callable[[Any], Any]
    for_: Callable[[list[Any], Callable[[list[Any]], Any]], Any]


def fold_par_ref(gen: Callable[[Any], Any], alg: ParAlgebra, t: S.Tree) -> Any:
    if isinstance(t, S.Var):
        return gen(t.value)
    branches = [fold_par_ref(alg.var, alg, i) for i in t.iters]
    return alg.for_(branches, compose(lambda sub: fold_par_ref(gen, alg, sub), t.k))


# -- sample carriers ----------------------------------------------------------------
# Algebraic: s -> [(value, s, log)], covering state, choice, tell and accumulate.


def _alg_unit(x: Any) -> Callable[[Any], list[tuple[Any, Any, str]]]:
    return lambda s: [(x, s, "")]


def _alg_gen(x: Any) -> Callable[[Any], list[tuple[Any, Any, str]]]:
    return lambda s: [(("gen", x), s, "")]


def _prefix(w: str, k: Callable[[Any], list[tuple[Any, Any, str]]]) -> Callable[[Any], list[tuple[Any, Any, str]]]:
    return lambda s: [(x, s2, w + lg) for x, s2, lg in k(s)]


def alg_algebra(op: Operation) -> Callable[[Any], list[tuple[Any, Any, str]]]:
    if isinstance(op, Get):
        return lambda s: op.k(s)(s)
    if isinstance(op, Put):
        return lambda s: op.k(op.state)
    if isinstance(op, Fail):
        return lambda s: []
    if isinstance(op, Or):
        return lambda s: op.left(s) + op.right(s)
    if isinstance(op, Tell):
        return _prefix(op.value, op.k)
    if isinstance(op, Accum):
        return _prefix(f"+{op.value}", op.k)
    raise UnhandledEffect(op.kind, "reference algebra")


# Scoped: s -> [(value, s)] with ``once`` keeping the first result and ``local``
# running the body in a replaced state, then resuming in the outer one.


def _sc_ret(x: Any) -> Callable[[Any], list[tuple[Any, Any]]]:
    return lambda s: [(x, s)]


def _sc_gen(x: Any) -> Callable[[Any], list[tuple[Any, Any]]]:
    return lambda s: [(("gen", x), s)]


def _sc_enter(sc: Operation) -> Callable[[Any], list[tuple[Any, Any]]]:
    if isinstance(sc, Once):

        def once(s: Any) -> list[tuple[Any, Any]]:
            rs = sc.body(s)
            return rs[0][0](rs[0][1]) if rs else []

        return once
    if isinstance(sc, Local):
        return lambda s: [r for c, _ in sc.body(sc.env) for r in c(s)]
    raise UnhandledEffect(sc.kind, "reference algebra")


SC_ALGEBRA = EndoAlgebra(ret=_sc_ret, enter=_sc_enter)


# Parallel: (trace, value), tracing leaf kinds and branch counts.


def _par_var(x: Any) -> tuple[tuple[Any, ...], Any]:
    return ((("var", x),), x)


def _par_gen(x: Any) -> tuple[tuple[Any, ...], Any]:
    return ((("gen", x),), x)


def _par_for(branches: list[tuple[tuple[Any, ...], Any]], k: Callable[[list[Any]], Any]) -> tuple[tuple[Any, ...], Any]:
    traces = [m for m, _ in branches]
    trace, y = k([x for _, x in branches])
    return ((("for", len(branches)),) + sum(traces, ()) + trace, y)


PAR_ALGEBRA = ParAlgebra(var=_par_var, for_=_par_for)


# -- equivalence checks -------------------------------------------------------------


@dataclass(frozen=True)
class Equivalence:
    ok: bool
    reference: Any
    generic: Any
    probe: Any = None

    def __bool__(self) -> bool:
        return self.ok


def _extensional(lhs: Callable[[Any], Any], rhs: Callable[[Any], Any]) -> Equivalence:
    for s in STATES:
        a, b = lhs(s), rhs(s)
        if a != b:
            return Equivalence(False, a, b, s)
    return Equivalence(True, None, None)


def _alg_generic(node: SignatureNode) -> Any:
    if not isinstance(node, KAlg):
        raise UnhandledEffect(node.effect_kind, "algebraic equivalence")
    return alg_algebra(node.op)


def _sc_generic(node: SignatureNode) -> Any:
    if not isinstance(node, KSc):
        raise UnhandledEffect(node.effect_kind, "scoped equivalence")
    return _sc_enter(node.sc)


def _par_generic(node: SignatureNode) -> Any:
    if not isinstance(node, For):
        raise UnhandledEffect(node.effect_kind, "parallel equivalence")
    return _par_for(node.iters, node.k)


def check_handler_equiv(instance: str, t: S.Tree) -> Equivalence:
    """Reference fold vs generic fold after ``iso1``, with one shared algebra."""
    if instance == "alg":
        ref = fold_alg_ref(_alg_gen, alg_algebra, t)
        gen = fold(Handler(unit=_alg_unit, alg=_alg_generic, gen=_alg_gen), iso1("alg", t))
        return _extensional(ref, gen)
    if instance == "sc":
        ref = fold_sc_ref(_sc_gen, SC_ALGEBRA, t)
        gen = fold(Handler(unit=_sc_ret, alg=_sc_generic, gen=_sc_gen), iso1("sc", t))
        return _extensional(ref, gen)
    if instance == "par":
        ref = fold_par_ref(_par_gen, PAR_ALGEBRA, t)
        gen = fold(Handler(unit=_par_var, alg=_par_generic, gen=_par_gen), iso1("par", t))
        return Equivalence(ref == gen, ref, gen)
    raise KeyError(f"no handler-equivalence theorem for instance {instance!r}")


EQUIV_INSTANCES = ("alg", "sc", "par")
