"""Exit gate: one PASS/FAIL line per acceptance criterion.

Run directly (``python3 tests/test_acceptance.py``) or under pytest, where the
lines are repeated in the terminal summary.
"""

import functools
import subprocess
import sys
import time


from hofree.examples import EXAMPLES, fixture_path
from hofree.laws import MUTATIONS, mutated, run_laws
from hofree.laws.iso import INSTANCES

RESULTS: dict[int, str] = {}

BRACKET_FIXTURES = {"bracket-ok": "foo-ok.json", "bracket-eof": "foo-eof.json"}
REQUIRED_GOLDENS = {
    "state-incr", "state-basic", "nd-flat", "exc-pos", "exc-neg", "once", "no-once", "accum-for",
    "write-reset", "censor", "lazy", "eager", "bracket-ok", "bracket-eof",
}


def report(criterion: int, ok: bool, detail: str) -> None:
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} - {detail}"
    RESULTS[criterion] = line
    print(line)


@functools.lru_cache(maxsize=None)
def full_laws():
    start = time.perf_counter()
    result = run_laws(seed=0)
    return result, time.perf_counter() - start


def _suites(prefix):
    result, _ = full_laws()
    return [s for s in result.suites if s.name.startswith(prefix)]


def _summary(suites):
    return ", ".join(f"{s.name} {s.cases - s.failures}/{s.cases}" for s in suites)


def test_criterion_1_golden_transcripts():
    names = {e.name for e in EXAMPLES}
    missing = REQUIRED_GOLDENS - names
    failures = []
    for e in EXAMPLES:
        cmd = [sys.executable, "-m", "hofree", "run", e.name, "--check"]
        if e.name in BRACKET_FIXTURES:
            cmd += ["--fixture", str(fixture_path(BRACKET_FIXTURES[e.name]))]
        proc = subprocess.run(cmd, capture_output=True)
        if proc.returncode != 0 or proc.stdout != e.golden().encode():
            failures.append(e.name)
    ok = not missing and not failures
    report(1, ok, f"{len(EXAMPLES) - len(failures)}/{len(EXAMPLES)} examples byte-exact"
           + (f"; missing {sorted(missing)}" if missing else "") + (f"; failed {failures}" if failures else ""))
    assert ok


def test_criterion_2_roundtrips():
    suites = _suites("roundtrip:")
    _, elapsed = full_laws()
    ok = (
        {s.name.split(":")[1] for s in suites} == set(INSTANCES)
        and all(s.ok and s.cases >= 1000 for s in suites)
        and elapsed < 60
    )
    report(2, ok, f"{_summary(suites)}; whole law run {elapsed:.1f}s")
    assert ok


def test_criterion_3_handler_equivalence():
    suites = _suites("equivalence:")
    ok = len(suites) == 3 and all(s.ok and s.cases >= 500 for s in suites)
    report(3, ok, _summary(suites))
    assert ok


def test_criterion_4_kernel_laws():
    names = ("monad-laws", "algebraicity", "hfunctor", "coproduct")
    suites = [s for n in names for s in _suites(n)]
    ok = len(suites) == len(names) and all(s.ok and s.cases >= 300 for s in suites)
    report(4, ok, _summary(suites))
    assert ok


def test_criterion_5_semantic_properties():
    minimum = {"bracket-release-once": 300, "memoization": 200, "nd-oracle": 300, "writer-log": 300}
    suites = [s for n in minimum for s in _suites(n)]
    ok = len(suites) == len(minimum) and all(s.ok and s.cases >= minimum[s.name] for s in suites)
    report(5, ok, _summary(suites))
    assert ok


def test_criterion_6_mutation_sanity():
    caught = {}
    for name in MUTATIONS:
        with mutated(name):
            result = run_laws(seed=0, n=100)
        caught[name] = [s.name for s in result.suites if not s.ok]
    ok = len(caught) >= 3 and all(caught.values())
    detail = "; ".join(f"{n} caught by {', '.join(v) or 'nothing'}" for n, v in caught.items())
    report(6, ok, detail)
    assert ok


if __name__ == "__main__":
    failed = 0
    for test in (
        test_criterion_1_golden_transcripts, test_criterion_2_roundtrips, test_criterion_3_handler_equivalence,
        test_criterion_4_kernel_laws, test_criterion_5_semantic_properties, test_criterion_6_mutation_sanity,
    ):
        try:
            test()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
