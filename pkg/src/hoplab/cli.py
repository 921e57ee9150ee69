"""Command-line driver.

Exit codes: 0 success (or equivalent), 1 domain failure (or not equivalent),
2 usage error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .cover import COVER_CSV_HEADER, CoverSpec, cover_csv_row, minimize_cover
from .dfa import cyclic_automaton, de_bruijn_sequence
from .errors import HoplabError, SearchBudgetExceeded, SizeTooLarge
from .hopcroft import STATS_CSV_HEADER, ChoiceTrace, TiePolicy, hopcroft_minimize, quotient, stats_csv_row
from .oracle import (
    DEFAULT_BRANCH_CAP,
    MAX_ENUM_SIZE,
    SEARCH_STATE_GUARD,
    dfa_equivalent,
    enumerate_cyclic,
    enumeration_csv,
    exhaustive_tie_search,
    moore_partition,
)

OK, FAIL, USAGE, BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text}")
    return v


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text}")
    return v


def _emit(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load(path):
    return io.read_dfa(path)


def cmd_gen_debruijn(args):
    try:
        word = de_bruijn_sequence(args.order)
        d = cyclic_automaton(word, args.start_offset)
    except (HoplabError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    _emit(io.format_dfa(d), args.out)
    return OK


def cmd_minimize(args):
    d = _load(args.file)
    trace = None
    if args.trace:
        trace = ChoiceTrace.from_json(Path(args.trace).read_text())
        policy = TiePolicy("trace", "trace", trace)
    else:
        policy = TiePolicy(args.policy, args.placement)
    part, stats, _ = hopcroft_minimize(d, args.strategy, policy)
    print(f"blocks={len(part)} mass={stats.total_splitter_mass}")
    if args.stats:
        row = stats_csv_row(Path(args.file).name, d, args.strategy, policy, stats, len(part))
        Path(args.stats).write_text(STATS_CSV_HEADER + "\n" + row + "\n")
    if args.emit_min or args.emit_dot:
        m = quotient(d, part)
        if args.emit_min:
            io.write_dfa(m, args.emit_min)
        if args.emit_dot:
            Path(args.emit_dot).write_text(io.to_dot(m))
    return OK


def cmd_search_ties(args):
    d = _load(args.file)
    if not d.is_unary:
        raise UsageError("search-ties only accepts unary automata")
    try:
        res = exhaustive_tie_search(d, args.strategy, branch_cap=args.budget, max_states=args.max_states)
        code = OK
    except SearchBudgetExceeded as exc:
        res, code = exc.best, BUDGET
    except SizeTooLarge as exc:
        raise UsageError(str(exc)) from exc
    print(f"max_mass={res.objective} branch_count={res.branch_count}")
    if args.witness:
        Path(args.witness).write_text(res.witness.to_json() + "\n")
    if code == BUDGET:
        print("search budget exhausted; value is a lower bound", file=sys.stderr)
    return code


def cmd_enumerate_cyclic(args):
    if args.size > MAX_ENUM_SIZE:
        raise UsageError(f"--size must be <= {MAX_ENUM_SIZE}")
    rows = enumerate_cyclic(args.size, args.strategy, jobs=args.jobs)
    _emit(enumeration_csv(rows, args.strategy), args.out)
    return OK


def cmd_oracle_min(args):
    d = _load(args.file)
    part = moore_partition(d)
    print(f"blocks={len(part)}")
    if args.emit_min:
        io.write_dfa(quotient(d, part), args.emit_min)
    return OK


def cmd_cover_minimize(args):
    d = _load(args.file)
    spec = CoverSpec(args.l)
    res = minimize_cover(d, spec, args.strategy, TiePolicy(args.policy, args.placement))
    print(f"states_in={d.num_states} states_out={res.automaton.num_states}")
    if args.out:
        io.write_dfa(res.automaton, args.out)
    if args.stats:
        row = cover_csv_row(Path(args.file).name, d, spec, res)
        Path(args.stats).write_text(COVER_CSV_HEADER + "\n" + row + "\n")
    return OK


def cmd_equiv(args):
    try:
        a, b = _load(args.file_a), _load(args.file_b)
        same = dfa_equivalent(a, b)
    except (HoplabError, OSError) as exc:
        raise UsageError(str(exc)) from exc
    print("equivalent" if same else "not equivalent")
    return OK if same else FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hoplab", description="Hopcroft minimization laboratory")
    sub = parser.add_subparsers(dest="command", required=True)

    def strategy_opt(p):
        p.add_argument("--strategy", choices=["fifo", "lifo"], default="fifo")

    def policy_opts(p, default="lookahead"):
        p.add_argument("--policy", choices=["minstate", "maxstate", "lookahead"], default=default)
        p.add_argument("--placement", choices=["larger", "smaller"], default="larger")

    p = sub.add_parser("gen-debruijn", help="write the cyclic automaton of a de Bruijn word")
    p.add_argument("--order", type=_positive, required=True)
    p.add_argument("--start-offset", type=_nonneg, default=0)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_gen_debruijn)

    p = sub.add_parser("minimize", help="run Hopcroft's algorithm")
    p.add_argument("file")
    strategy_opt(p)
    policy_opts(p)
    p.add_argument("--trace", help="replay decisions from a witness file")
    p.add_argument("--stats", help="write a CSV stats row")
    p.add_argument("--emit-min", help="write the minimized DFA")
    p.add_argument("--emit-dot", help="write the minimized DFA as Graphviz")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("search-ties", help="maximise splitter mass over all tie decisions")
    p.add_argument("file")
    strategy_opt(p)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BRANCH_CAP)
    p.add_argument("--max-states", type=_positive, default=SEARCH_STATE_GUARD)
    p.add_argument("--witness", help="write the witness trace (JSON)")
    p.set_defaults(func=cmd_search_ties)

    p = sub.add_parser("enumerate-cyclic", help="tie search over every cyclic finality pattern")
    p.add_argument("--size", type=_positive, required=True)
    strategy_opt(p)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_enumerate_cyclic)

    p = sub.add_parser("oracle-min", help="Moore-style reference minimization")
    p.add_argument("file")
    p.add_argument("--emit-min")
    p.set_defaults(func=cmd_oracle_min)

    p = sub.add_parser("cover-minimize", help="minimal cover automaton for words up to length l")
    p.add_argument("file")
    p.add_argument("--l", type=_nonneg, required=True)
    strategy_opt(p)
    policy_opts(p, default="minstate")
    p.add_argument("--out")
    p.add_argument("--stats", help="write a CSV stats row")
    p.set_defaults(func=cmd_cover_minimize)

    p = sub.add_parser("equiv", help="exit 0 iff both automata accept the same language")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_equiv)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse: --help or a usage error
        return exc.code if isinstance(exc.code, int) else USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hoplab {args.command}: {exc}", file=sys.stderr)
        return USAGE
    except (HoplabError, OSError) as exc:
        print(f"hoplab {args.command}: {exc}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
