"""Property suites over seeded generated inputs, and the ``run_laws`` driver."""

from __future__ import annotations

import random
from collections.abc import Callable, Iterator
from dataclasses import asdict, dataclass, field
from typing import Any

from .. import bracket as B
from .. import latent as L
from ..algebraic import KAlg, Or, Put, Fail, Get, Tell, get, put, h_nd, h_state, tell
from ..exc import NOTHING, Catch, Just, Throw, h_exc
from ..free import (
    ANY_SIGNATURE,
    Computation,
    Coproduct,
    Impure,
    In,
    Out,
    Pure,
    SignatureNode,
    case_split,
    registered_kinds,
    run,
    signature,
    split,
)
from ..table import Table
from ..writer import h_write
from .equality import diff
from .gen import BOOLS, GENERIC, STATES, alg_tree, generic_tree, specialized_tree
from .iso import INSTANCES, check_roundtrip, iso1, iso2
from .reference import EQUIV_INSTANCES, check_handler_equiv

DEFAULT_COUNTS = {
    "roundtrip": 1000,
    "equivalence": 500,
    "monad": 300,
    "algebraicity": 300,
    "hfunctor": 300,
    "coproduct": 300,
    "bracket-release": 300,
    "memoization": 200,
    "nd-oracle": 300,
    "writer-log": 300,
}


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: int = 0
    first_failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def record(self, problem: str | None) -> None:
        self.cases += 1
        if problem is not None:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = f"case {self.cases - 1}: {problem}"


@dataclass
class LawsReport:
    seed: int
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)

    def suite(self, name: str) -> SuiteResult:
        return next(s for s in self.suites if s.name == name)

    def to_json(self) -> dict[str, Any]:
        return {"seed": self.seed, "ok": self.ok, "suites": [asdict(s) for s in self.suites]}


def _guarded(check: Callable[[], str | None]) -> str | None:
    try:
        return check()
    except Exception as exc:  # a crash is a failure with a witness, not an abort
        return f"raised {type(exc).__name__}: {exc}"


# -- isomorphisms -----------------------------------------------------------------------


def roundtrip_suite(instance: str, rng: random.Random, n: int) -> SuiteResult:
    result = SuiteResult(f"roundtrip:{instance}")
    for _ in range(n):
        t = specialized_tree(instance, rng)
        c = generic_tree(instance, rng)

        def check() -> str | None:
            there = check_roundtrip(instance, t)
            if there:
                return f"iso2.iso1 {there}"
            back = diff(iso1(instance, iso2(instance, c)), c)
            return f"iso1.iso2 {back}" if back else None

        result.record(_guarded(check))
    return result


def equivalence_suite(instance: str, rng: random.Random, n: int) -> SuiteResult:
    result = SuiteResult(f"equivalence:{instance}")
    for _ in range(n):
        t = specialized_tree(instance, rng)

        def check() -> str | None:
            eq = check_handler_equiv(instance, t)
            return None if eq else f"probe {eq.probe!r}: reference {eq.reference!r} vs generic {eq.generic!r}"

        result.record(_guarded(check))
    return result


# -- kernel laws ------------------------------------------------------------------------


def _exc_tree(rng: random.Random, depth: int, leaves: tuple[Any, ...]) -> Computation:
    if depth <= 0 or rng.random() < 0.35:
        return Pure(rng.choice(leaves))
    if rng.random() < 0.3:
        return Impure(Throw())
    body = _exc_tree(rng, depth - 1, BOOLS)
    domain = [NOTHING, Just(False), Just(True)]
    k = Table.tabulate(lambda r: _exc_tree(rng, depth - 1, leaves), domain, "catch")
    return Impure(Catch(body, k))


def _observers() -> list[tuple[str, Callable[[random.Random], Computation], Callable[[Computation], Any]]]:
    leaves = STATES
    return [
        ("nd", lambda r: alg_tree(r, GENERIC, 4, lambda q: q.choice(leaves), "fo"), lambda m: run(h_nd(m))),
        ("state", lambda r: alg_tree(r, GENERIC, 4, lambda q: q.choice(leaves), "gp"),
         lambda m: [run(h_state(m, s)) for s in STATES]),
        ("exc", lambda r: _exc_tree(r, 4, leaves), h_exc),
    ]


def monad_suite(rng: random.Random, n: int) -> SuiteResult:
    result = SuiteResult("monad-laws")
    observers = _observers()
    for i in range(n):
        name, make, observe = observers[i % len(observers)]
        m = make(rng)
        f = Table.tabulate(lambda x: make(rng), STATES, "f")
        g = Table.tabulate(lambda x: make(rng), STATES, "g")
        a = rng.choice(STATES)

        def check() -> str | None:
            laws = {
                "left identity": (Pure(a).bind(f), f(a)),
                "right identity": (m.bind(Pure), m),
                "associativity": (m.bind(f).bind(g), m.bind(lambda x: f(x).bind(g))),
            }
            for law, (lhs, rhs) in laws.items():
                x, y = observe(lhs), observe(rhs)
                if x != y:
                    return f"{law} under {name}: {x!r} vs {y!r}"
            return None

        result.record(_guarded(check))
    return result


def algebraicity_suite(rng: random.Random, n: int) -> SuiteResult:
    result = SuiteResult("algebraicity")
    for _ in range(n):
        m = alg_tree(rng, GENERIC, 4, lambda q: q.choice(STATES))
        while not isinstance(m, Impure):
            m = alg_tree(rng, GENERIC, 4, lambda q: q.choice(STATES))
        k = Table.tabulate(lambda x: alg_tree(rng, GENERIC, 2, lambda q: q.choice(STATES)), STATES, "k")

        def check() -> str | None:
            lhs = m.bind(k)
            rhs = Impure(KAlg(m.node.op.fmap(lambda c: c.bind(k))))
            found = diff(lhs, rhs)
            return str(found) if found else None

        result.record(_guarded(check))
    return result


def _wrap_tell(tag: str) -> Callable[[Computation], Computation]:
    def t(m: Computation) -> Computation:
        return Impure(KAlg(Tell(tag, m)))

    return t


def _wrap_or(m: Computation) -> Computation:
    return Impure(KAlg(Or(m, Impure(KAlg(Fail())))))


def _node_samples(rng: random.Random) -> dict[str, Callable[[], SignatureNode]]:
    """One random-node maker per registered node kind."""

    def rooted(instance: str) -> Callable[[], SignatureNode]:
        def make() -> SignatureNode:
            while True:
                c = generic_tree(instance, rng)
                if isinstance(c, Impure):
                    return c.node

        return make

    def exc_node(kind: type) -> Callable[[], SignatureNode]:
        def make() -> SignatureNode:
            while True:
                c = _exc_tree(rng, 3, STATES)
                if isinstance(c, Impure) and isinstance(c.node, kind):
                    return c.node

        return make

    return {
        "alg": rooted("alg"),
        "scoped": rooted("sc"),
        "par.for": rooted("par"),
        "write.exec": rooted("write"),
        "latent": rooted("lat"),
        "res.bracket": rooted("res"),
        "exc.throw": exc_node(Throw),
        "exc.catch": exc_node(Catch),
        "coproduct.in": lambda: In(rooted("alg")()),
        "coproduct.out": lambda: Out(rooted("sc")()),
    }


def registered_node_kinds() -> set[str]:
    return {k for k, info in registered_kinds().items() if issubclass(info.cls, SignatureNode)}


def hfunctor_suite(rng: random.Random, n: int) -> SuiteResult:
    result = SuiteResult("hfunctor")
    makers = _node_samples(rng)
    missing = registered_node_kinds() - makers.keys()
    if missing:
        result.record(f"no generator for registered node kinds {sorted(missing)}")
        return result
    kinds = sorted(makers)
    t1, t2 = _wrap_tell("t1"), _wrap_or
    f1, f2 = _wrap_tell("f1"), _wrap_tell("f2")
    identity: Callable[[Any], Any] = lambda m: m  # noqa: E731
    for i in range(n):
        kind = kinds[i % len(kinds)]
        node = makers[kind]()

        def check() -> str | None:
            laws = {
                "hmap identity": (node.hmap(identity), node),
                "hmap composition": (node.hmap(t1).hmap(t2), node.hmap(lambda m: t2(t1(m)))),
                "fmap identity": (node.fmap(identity), node),
                "fmap composition": (node.fmap(f1).fmap(f2), node.fmap(lambda m: f2(f1(m)))),
                "fmap/hmap commute": (node.fmap(f1).hmap(t1), node.hmap(t1).fmap(f1)),
            }
            for law, (lhs, rhs) in laws.items():
                found = diff(lhs, rhs)
                if found:
                    return f"{kind} {law}: {found}"
            return None

        result.record(_guarded(check))
    return result


def coproduct_suite(rng: random.Random, n: int) -> SuiteResult:
    result = SuiteResult("coproduct")
    first = signature("State+Choice", Get.kind, Put.kind, Fail.kind, Or.kind)
    second = signature("Scoped", "once", "reader.local")
    cop = Coproduct(first, Coproduct(second, ANY_SIGNATURE))
    dispatch = case_split(lambda x: ("first", x), case_split(lambda x: ("second", x), lambda x: ("rest", x)))
    makers = _node_samples(rng)
    kinds = sorted(k for k in makers if not k.startswith("coproduct"))
    for i in range(n):
        node = makers[kinds[i % len(kinds)]]()

        def check() -> str | None:
            expected = "first" if node in first else "second" if node in second else "rest"
            side, got = dispatch(cop.inject(node))
            if side != expected or got is not node:
                return f"{node.effect_kind}: dispatched to {side}, expected {expected}"
            tagged = split(first, lambda x: ("first", x), lambda x: ("other", x))(node)
            if tagged[1] is not node or (tagged[0] == "first") != (expected == "first"):
                return f"{node.effect_kind}: split misrouted to {tagged[0]}"
            if case_split(lambda x: "l", lambda x: "r")(In(node)) != "l":
                return "In not routed left"
            if case_split(lambda x: "l", lambda x: "r")(Out(node)) != "r":
                return "Out not routed right"
            return None

        result.record(_guarded(check))
    return result


# -- semantic properties ------------------------------------------------------------


def _bracket_plan(rng: random.Random, depth: int, ids: Iterator[int]) -> Any:
    roll = rng.random()
    if depth <= 0 or roll < 0.25:
        return ("print", next(ids))
    if roll < 0.4:
        return ("get",)
    if roll < 0.45:
        return ("missing",)
    if roll < 0.7:
        return ("seq", _bracket_plan(rng, depth - 1, ids), _bracket_plan(rng, depth - 1, ids))
    return ("bracket", next(ids), _bracket_plan(rng, depth - 1, ids))


def _compile(plan: Any, h: B.Handle | None) -> Computation:
    tag = plan[0]
    if tag == "print":
        return B.prnt(f"p{plan[1]}")
    if tag == "get":
        return B.hGetC(h).map(lambda c: ()) if h is not None else B.prnt("no-handle")
    if tag == "missing":
        return B.readF("missing.txt").map(lambda s: ())
    if tag == "seq":
        return _compile(plan[1], h) >> _compile(plan[2], h)
    i, body = plan[1], plan[2]
    acquire = B.prnt(f"acq{i}") >> B.openF("f.txt")
    return B.brckt(acquire.map(lambda h2: (B.prnt(f"rel{i}"), _compile(body, h2))))


def _bracket_ids(plan: Any) -> list[int]:
    if plan[0] == "bracket":
        return [plan[1], *_bracket_ids(plan[2])]
    if plan[0] == "seq":
        return _bracket_ids(plan[1]) + _bracket_ids(plan[2])
    return []


def bracket_release_suite(rng: random.Random, n: int) -> SuiteResult:
    result = SuiteResult("bracket-release-once")
    for _ in range(n):
        plan = _bracket_plan(rng, 4, iter(range(10_000)))
        contents = "xyz"[: rng.randint(0, 3)]

        def check() -> str | None:
            world = B.SimWorld(files={"f.txt": contents})
            w, out = B.h_bracket(_compile(plan, None) >> B.prnt("done"), world)
            lines = list(w.transcript)
            for i in _bracket_ids(plan):
                acq, rel = lines.count(f"acq{i}"), lines.count(f"rel{i}")
                if acq > 1 or rel != acq:
                    return f"bracket {i}: acquired {acq}x, released {rel}x in {lines}"
                if acq and lines.index(f"rel{i}") < lines.index(f"acq{i}"):
                    return f"bracket {i}: released before acquired in {lines}"
            if isinstance(out, B.Raised) == ("done" in lines):
                return f"exception transparency violated: {out!r} with {lines}"
            return None

        result.record(_guarded(check))
    return result


def _memo_program(rng: random.Random, slots: int) -> tuple[Computation, int]:
    """Create thunks that bump their own counter, then force pointers repeatedly."""

    def bump(i: int) -> Computation:
        return get().bind(lambda s: put(s[:i] + (s[i] + 1,) + s[i + 1 :]))

    created = 0
    prog: Computation = Pure(())
    for _ in range(rng.randint(1, 8)):
        if created < slots and (created == 0 or rng.random() < 0.5):
            i = created
            inner = [rng.randrange(i) for _ in range(rng.randint(0, 2))] if i else []
            body = bump(i)
            for j in inner:
                body = body >> L.force(j)
            body = body >> Pure(L.Val(10 + i))
            prog = prog >> L.thunk(body).bind(lambda p, i=i: Pure(()) if p == i else Pure(("bad-pointer", p, i)))
            created += 1
        else:
            p = rng.randrange(created)
            prog = prog >> L.force(p).bind(lambda v, p=p: Pure(()) if v == L.Val(10 + p) else Pure(("bad-value", p, v)))
    return prog, created


def memoization_suite(rng: random.Random, n: int) -> SuiteResult:
    result = SuiteResult("memoization")
    slots = 4
    for _ in range(n):
        prog, created = _memo_program(rng, slots)

        def check() -> str | None:
            out = L.h_lazy(prog, (0,) * slots)
            if any(c > 1 for c in out.state):
                return f"a suspended body ran more than once: counts {out.state}"
            if len(out.store) != created:
                return f"store holds {len(out.store)} entries for {created} thunks"
            if out.result.value != ():
                return f"unexpected result {out.result.value!r}"
            return None

        result.record(_guarded(check))
    return result


def _leaf_oracle(c: Computation) -> list[Any]:
    if isinstance(c, Pure):
        return [c.value]
    op = c.node.op
    if isinstance(op, Fail):
        return []
    return _leaf_oracle(op.left) + _leaf_oracle(op.right)


def nd_oracle_suite(rng: random.Random, n: int) -> SuiteResult:
    result = SuiteResult("nd-oracle")
    for _ in range(n):
        m = alg_tree(rng, GENERIC, 4, lambda q: q.randrange(100), "fooo")

        def check() -> str | None:
            got, want = run(h_nd(m)), _leaf_oracle(m)
            return None if got == want else f"{got} vs oracle {want}"

        result.record(_guarded(check))
    return result


def writer_log_suite(rng: random.Random, n: int) -> SuiteResult:
    result = SuiteResult("writer-log")

    def program(ws: list[str]) -> Computation:
        m: Computation = Pure(())
        for w in ws:
            m = m >> tell(w)
        return m

    for _ in range(n):
        ws1 = [rng.choice(["a", "b", "cd"]) for _ in range(rng.randint(0, 4))]
        ws2 = [rng.choice(["a", "b", "cd"]) for _ in range(rng.randint(0, 4))]

        def check() -> str | None:
            log1 = run(h_write(program(ws1)))[1]
            log2 = run(h_write(program(ws2)))[1]
            both = run(h_write(program(ws1) >> program(ws2)))[1]
            if both != log1 + log2:
                return f"log({ws1} >> {ws2}) = {both!r}, expected {log1 + log2!r}"
            if log1 != "".join(ws1):
                return f"log({ws1}) = {log1!r}"
            return None

        result.record(_guarded(check))
    return result


# -- driver ---------------------------------------------------------------------------


def run_laws(seed: int = 0, n: int | None = None, only: set[str] | None = None) -> LawsReport:
    """Run every suite; ``n`` overrides all case counts, ``only`` filters suite groups."""

    def count(group: str) -> int:
        return n if n is not None else DEFAULT_COUNTS[group]

    def wanted(group: str) -> bool:
        return only is None or group in only

    report = LawsReport(seed)
    # every suite gets its own stream so results do not depend on which others ran
    stream = lambda name: random.Random(f"{seed}:{name}")  # noqa: E731
    if wanted("roundtrip"):
        for inst in INSTANCES:
            report.suites.append(roundtrip_suite(inst, stream(f"roundtrip:{inst}"), count("roundtrip")))
    if wanted("equivalence"):
        for inst in EQUIV_INSTANCES:
            report.suites.append(equivalence_suite(inst, stream(f"equiv:{inst}"), count("equivalence")))
    kernel: list[tuple[str, Callable[[random.Random, int], SuiteResult]]] = [
        ("monad", monad_suite),
        ("algebraicity", algebraicity_suite),
        ("hfunctor", hfunctor_suite),
        ("coproduct", coproduct_suite),
        ("bracket-release", bracket_release_suite),
        ("memoization", memoization_suite),
        ("nd-oracle", nd_oracle_suite),
        ("writer-log", writer_log_suite),
    ]
    for group, suite in kernel:
        if wanted(group):
            report.suites.append(suite(stream(group), count(group)))
    return report


SUITE_GROUPS = tuple(DEFAULT_COUNTS)
