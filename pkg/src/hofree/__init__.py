"""A free monad for higher-order effects, with handlers for six effect families."""

from .algebraic import (
    KAlg, Monoid, SUM, TEXT,
    accum, fail_, get, h_nd, h_state, or_, put, tell,
)
from .bracket import SimWorld, brckt, h_bracket, hGetC, load_fixture, openF, prnt, readF, transcript
from .errors import (
    ApplyNonFunction, DanglingThunk, DepthExceeded, EffectError, EmptyOnceScope,
    MalformedNode, TagMismatch, UnboundVariable, UnevaluatedThunk, UnhandledEffect,
)
from .exc import NOTHING, Just, Nothing, catch, h_exc, throw
from .free import (
    ANY_SIGNATURE, Computation, Coproduct, Handler, Impure, In, Out, Pure, Signature, SignatureNode,
    bind, case_split, do, fold, join, pure, run, sequence, signature, split,
)
from .latent import abs_, app, force, h_eager, h_lazy, thunk, var
from .parallel import for_, h_accum
from .scoped import ask, censor_scoped, h_censor, h_once, h_reader, local, once
from .show import show
from .table import Table
from .writer import censor, h_write, listen, pass_, reset

__all__ = [
    "ANY_SIGNATURE", "ApplyNonFunction", "Computation", "Coproduct", "DanglingThunk", "DepthExceeded",
    "EffectError", "EmptyOnceScope", "Handler", "Impure", "In", "Just", "KAlg", "MalformedNode", "Monoid",
    "NOTHING", "Nothing", "Out", "Pure", "SUM", "Signature", "SignatureNode", "SimWorld", "TEXT", "Table",
    "TagMismatch", "UnboundVariable", "UnevaluatedThunk", "UnhandledEffect",
    "abs_", "accum", "app", "ask", "bind", "brckt", "case_split", "catch", "censor", "censor_scoped", "do",
    "fail_", "fold", "for_", "force", "get", "hGetC", "h_accum", "h_bracket", "h_censor", "h_eager", "h_exc",
    "h_lazy", "h_nd", "h_once", "h_reader", "h_state", "h_write", "join", "listen", "load_fixture", "local",
    "once", "openF", "or_", "pass_", "prnt", "pure", "put", "readF", "reset", "run", "sequence", "show",
    "signature", "split", "tell", "throw", "thunk", "transcript", "var",
]
