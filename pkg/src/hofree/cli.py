"""Command line: list and replay the worked examples, run the law suites."""

from __future__ import annotations

import argparse
import contextlib
import difflib
import json
import sys
from collections.abc import Sequence

from .bracket import load_fixture
from .examples import EXAMPLES, lookup, run_example

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _list(opts: argparse.Namespace) -> int:
    if opts.json:
        print(json.dumps([{"name": e.name, "section": e.topic} for e in EXAMPLES]))
        return EXIT_OK
    width = max(len(e.name) for e in EXAMPLES)
    for e in EXAMPLES:
        extra = "  (needs --fixture)" if e.needs_fixture else ""
        print(f"{e.name:<{width}}  {e.topic}: {e.summary}{extra}")
    return EXIT_OK


def _run(opts: argparse.Namespace) -> int:
    example = lookup(opts.name)
    if example is None:
        print(f"unknown example {opts.name!r}; try `hofree list`", file=sys.stderr)
        return EXIT_USAGE
    world = None
    if example.needs_fixture:
        if opts.fixture is None:
            print(f"example {opts.name!r} needs --fixture <path>", file=sys.stderr)
            return EXIT_USAGE
        try:
            world = load_fixture(opts.fixture)
        except (OSError, ValueError) as exc:
            print(f"bad fixture: {exc}", file=sys.stderr)
            return EXIT_USAGE
    output = "".join(line + "\n" for line in run_example(example.name, world))
    sys.stdout.write(output)
    if not opts.check:
        return EXIT_OK
    expected = example.golden()
    if output == expected:
        return EXIT_OK
    delta = difflib.unified_diff(
        expected.splitlines(keepends=True), output.splitlines(keepends=True), "golden", "actual"
    )
    sys.stderr.writelines(delta)
    return EXIT_FAIL


def _laws(opts: argparse.Namespace) -> int:
    from .laws.mutations import mutated
    from .laws.suites import run_laws

    guard = mutated(opts.mutation) if opts.mutation else contextlib.nullcontext()
    with guard:
        report = run_laws(seed=opts.seed, n=opts.n)
    if opts.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        for s in report.suites:
            status = "ok  " if s.ok else "FAIL"
            print(f"{status} {s.name}: {s.cases - s.failures}/{s.cases}")
            if s.first_failure:
                print(f"     first failure: {s.first_failure}")
        print("all suites passed" if report.ok else "some suites failed")
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    from .laws.mutations import MUTATIONS

    parser = argparse.ArgumentParser(prog="hofree", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list the example programs")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_list)

    p = sub.add_parser("run", help="run one example and print its output")
    p.add_argument("name")
    p.add_argument("--fixture", help="JSON object of file paths to contents, for bracket examples")
    p.add_argument("--check", action="store_true", help="compare against the golden output")
    p.set_defaults(func=_run)

    p = sub.add_parser("laws", help="run the property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=None, help="cases per suite (default: each suite's own count)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--mutation", choices=sorted(MUTATIONS), help="run with a deliberately broken clause")
    p.set_defaults(func=_laws)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    opts = build_parser().parse_args(argv)
    return opts.func(opts)


if __name__ == "__main__":
    sys.exit(main())
