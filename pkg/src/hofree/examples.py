"""Registry of the worked example programs, each rendered to output lines."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import bracket as B
from .algebraic import accum, fail_, get, h_nd, h_state, or_, put, tell
from .exc import h_exc, prog_exc
from .free import Computation, do, pure, run
from .latent import Val, h_eager, h_lazy, prog_lazy
from .parallel import for_, h_accum
from .scoped import censor_scoped, h_censor, h_once, once
from .show import show
from .writer import censor, h_write, reset


@dataclass(frozen=True)
class Example:
    name: str
    topic: str
    summary: str
    render: Callable[[B.SimWorld | None], list[str]]
    needs_fixture: bool = False

    def golden(self) -> str:
        return resources.files("hofree").joinpath("goldens", f"{self.name}.txt").read_text(encoding="utf-8")


@do
def _incr():
    x = yield get()
    yield put(x + 1)
    return 5


def _state_basic() -> Computation:
    return get().bind(lambda s: put(s + 1) >> pure(s))


def _choices(m: Computation) -> Computation:
    return m.bind(lambda x: or_(pure(x), pure(x + 1)))


def _writer_program(reset_log: Computation) -> Computation:
    return tell("post") >> reset_log >> tell("pre")


def _drop(_w: str) -> str:
    return ""


def _bracket(world: B.SimWorld | None) -> list[str]:
    if world is None:
        raise ValueError("bracket examples run against a fixture world")
    return B.transcript(*B.h_bracket(B.prog_bracket(), world))


def _lines(value_of: Callable[[], object]) -> Callable[[B.SimWorld | None], list[str]]:
    return lambda _world: [show(value_of())]


_NUMBERS = [1, 2, 10, 4]

EXAMPLES: tuple[Example, ...] = (
    Example("state-basic", "state", "get, then put the successor, return the old state; from 0",
            _lines(lambda: run(h_state(_state_basic(), 0)))),
    Example("exc-pos", "exceptions", "catch on a non-negative input shows it",
            _lines(lambda: h_exc(prog_exc(5)))),
    Example("exc-neg", "exceptions", "catch on a negative input recovers from the throw",
            _lines(lambda: h_exc(prog_exc(-5)))),
    Example("state-incr", "algebraic effects", "do-block incrementing the state, returning 5; from 0",
            _lines(lambda: run(h_state(_incr(), 0)))),
    Example("nd-flat", "algebraic effects", "nested choice with a failing branch, all results",
            _lines(lambda: run(h_nd(or_(pure(1), or_(or_(pure(2), pure(3)), fail_())))))),
    Example("once", "scoped effects", "once keeps the first result of its scope",
            _lines(lambda: run(h_once(_choices(once(or_(pure(1), pure(5)))))))),
    Example("no-once", "scoped effects", "the same program without once",
            _lines(lambda: run(h_once(_choices(or_(pure(1), pure(5))))))),
    Example("accum-for", "parallel effects", "branches accumulate 1, 2, 10 and 4; accumulated total",
            _lines(lambda: run(h_accum(for_([accum(n) for n in _NUMBERS])))[0])),
    Example("write-reset", "writer effects", "tell, reset via pass, tell",
            _lines(lambda: run(h_write(_writer_program(reset()))))),
    Example("censor-pass", "censoring the log", "reset written as censor in terms of pass",
            _lines(lambda: run(h_write(_writer_program(censor(_drop, pure(()))))))),
    Example("censor", "censoring the log", "reset written with the scoped censor",
            _lines(lambda: run(h_censor(_writer_program(censor_scoped(_drop, pure(()))))))),
    Example("lazy", "latent effects", "unused argument stays suspended under call-by-need; state 0",
            _lines(lambda: h_lazy(prog_lazy(), Val(0)))),
    Example("eager", "latent effects", "the same program under call-by-value; state 0",
            _lines(lambda: h_eager(prog_lazy(), Val(0)))),
    Example("bracket-ok", "bracketing", "read foo.txt, print two characters, release", _bracket, True),
    Example("bracket-eof", "bracketing", "as bracket-ok on a one-character file", _bracket, True),
)

_BY_NAME = {e.name: e for e in EXAMPLES}


def lookup(name: str) -> Example | None:
    return _BY_NAME.get(name)


def fixture_path(name: str) -> Path:
    """Path of a fixture shipped with the package (``foo-ok.json``, ``foo-eof.json``)."""
    return Path(str(resources.files("hofree").joinpath("fixtures", name)))


def run_example(name: str, world: B.SimWorld | None = None) -> list[str]:
    example = _BY_NAME[name]
    if example.needs_fixture and world is None:
        raise ValueError(f"example {name!r} needs a fixture")
    return example.render(world)

