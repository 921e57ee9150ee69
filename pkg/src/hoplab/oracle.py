"""Ground truth that shares no code path with the Hopcroft engine.

Moore refinement for equivalence classes, product reachability for language
equivalence, and a depth-first enumeration of every tie/placement decision
Hopcroft's algorithm can take on a given input.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .dfa import Dfa, cyclic_automaton, is_de_bruijn, validate_dfa
from .errors import AlphabetMismatch, NotUnary, SearchBudgetExceeded, SizeTooLarge
from .hopcroft import ChoiceTrace, Decision, Strategy, _recorded_run
from .partition import RefinablePartition

DEFAULT_BRANCH_CAP = 10**7
SEARCH_STATE_GUARD = 32
MAX_ENUM_SIZE = 16


def moore_partition(d: Dfa) -> RefinablePartition:
    validate_dfa(d)
    labels = [1 if q in d.finals else 0 for q in range(d.num_states)]
    count = len(set(labels))
    while True:
        sigs = {}
        new = []
        for q in range(d.num_states):
            key = (labels[q],) + tuple(labels[t] for t in d.transitions[q])
            new.append(sigs.setdefault(key, len(sigs)))
        labels = new
        if len(sigs) == count:
            return RefinablePartition.from_labels(labels)
        count = len(sigs)


def dfa_equivalent(a: Dfa, b: Dfa) -> bool:
    if a.alphabet_size != b.alphabet_size:
        raise AlphabetMismatch(f"{a.alphabet_size} letters vs {b.alphabet_size}")
    seen = {(a.start, b.start)}
    todo = deque(seen)
    while todo:
        p, q = todo.popleft()
        if (p in a.finals) != (q in b.finals):
            return False
        for x in range(a.alphabet_size):
            nxt = (a.transitions[p][x], b.transitions[q][x])
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return True


class Objective(str, Enum):
    TOTAL_SPLITTER_MASS = "total_splitter_mass"


@dataclass
class SearchResult:
    objective: int
    witness: ChoiceTrace
    branch_count: int


def exhaustive_tie_search(
    d: Dfa,
    strategy="fifo",
    objective=Objective.TOTAL_SPLITTER_MASS,
    branch_cap: int = DEFAULT_BRANCH_CAP,
    max_states: int = SEARCH_STATE_GUARD,
) -> SearchResult:
    """Maximise the objective over all tie and placement decisions.

    Each complete run records its decision sequence; the next run flips the
    deepest 0-decision to 1 and lets later decisions default to 0, which
    visits every leaf of the decision tree exactly once.
    """
    validate_dfa(d)
    if not d.is_unary:
        raise NotUnary("tie search is restricted to unary automata")
    if d.num_states > max_states:
        raise SizeTooLarge(f"{d.num_states} states exceeds search guard {max_states}")
    Objective(objective)
    strategy = Strategy(strategy)

    best = None
    count = 0
    prefix: list[Decision] = []
    while True:
        _, stats, trace = _recorded_run(d, strategy, ChoiceTrace(list(prefix)))
        count += 1
        value = stats.total_splitter_mass
        if best is None or value > best.objective:
            best = SearchResult(value, trace, count)
        best.branch_count = count
        decisions = trace.decisions
        j = len(decisions) - 1
        while j >= 0 and decisions[j].choice == 1:
            j -= 1
        if j < 0:
            return best
        if count >= branch_cap:
            raise SearchBudgetExceeded(best)
        flipped = decisions[j]
        prefix = decisions[:j] + [Decision(flipped.kind, flipped.step, flipped.block, 1)]


def _pattern_row(args):
    pattern, strategy, branch_cap = args
    res = exhaustive_tie_search(cyclic_automaton(pattern, 0), strategy, branch_cap=branch_cap)
    return pattern, is_de_bruijn(pattern), res.objective, res.branch_count


def enumerate_cyclic(size: int, strategy="fifo", jobs: int = 1, branch_cap: int = DEFAULT_BRANCH_CAP):
    """Max splitter mass for every finality word of the given length.

    Rows are ``(pattern, is_de_bruijn, max_mass, branch_count)`` ordered by the
    pattern read as a binary number.
    """
    if size < 1:
        raise ValueError("size must be >= 1")
    if size > MAX_ENUM_SIZE:
        raise SizeTooLarge(f"size {size} exceeds {MAX_ENUM_SIZE}")
    strategy = Strategy(strategy)
    work = [(format(v, f"0{size}b"), strategy, branch_cap) for v in range(1 << size)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_pattern_row, work, chunksize=16))
    return [_pattern_row(w) for w in work]


ENUM_CSV_HEADER = "pattern,is_de_bruijn,strategy,max_mass,branch_count"


def enumeration_csv(rows, strategy) -> str:
    lines = [ENUM_CSV_HEADER]
    for pattern, db, mass, branches in rows:
        lines.append(f"{pattern},{str(db).lower()},{Strategy(strategy).value},{mass},{branches}")
    return "\n".join(lines) + "\n"
