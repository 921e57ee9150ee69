"""Cover automata for finite languages.

A DFA is a cover automaton (DFCA) for a finite language L with longest word
length ``l`` when it agrees with L on every word of length at most ``l``.
Two states are *similar* when no word short enough to matter, i.e. of length
at most ``l - max(level(p), level(q))``, tells them apart.  Similar states can
be merged, the higher-level one into the lower-level one.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .dfa import Dfa, accepted_lengths, validate_dfa
from .errors import LengthExceedsL, NotSimilarBlock, NotUnary, UnreachableState
from .hopcroft import (
    EMPTY,
    Placement,
    RunStats,
    Strategy,
    TieChoice,
    TiePolicy,
    Worklist,
    predecessors,
)
from .partition import RefinablePartition


@dataclass(frozen=True)
class CoverSpec:
    l: int

    def __post_init__(self):
        if self.l < 0:
            raise ValueError("l must be >= 0")


def state_levels(d: Dfa) -> list[int]:
    """Length of the shortest word leading from the start state to each state."""
    level = [-1] * d.num_states
    level[d.start] = 0
    todo = deque([d.start])
    while todo:
        p = todo.popleft()
        for q in d.transitions[p]:
            if level[q] < 0:
                level[q] = level[p] + 1
                todo.append(q)
    for q, lv in enumerate(level):
        if lv < 0:
            raise UnreachableState(q)
    return level


def _words(k, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(range(k), repeat=n)


def _walk(d, p, w):
    for a in w:
        p = d.transitions[p][a]
    return p


def similar_states(d: Dfa, spec: CoverSpec, p: int, q: int, levels=None) -> bool:
    """Brute force over every word of length <= l - max(level(p), level(q))."""
    levels = state_levels(d) if levels is None else levels
    bound = spec.l - max(levels[p], levels[q])
    if bound < 0:
        return True
    if d.is_unary:
        for _ in range(bound + 1):
            if (p in d.finals) != (q in d.finals):
                return False
            p, q = d.transitions[p][0], d.transitions[q][0]
        return True
    return all(
        (_walk(d, p, w) in d.finals) == (_walk(d, q, w) in d.finals)
        for w in _words(d.alphabet_size, bound)
    )


def right_language(d: Dfa, spec: CoverSpec, p: int, levels=None) -> set:
    """Words ``w`` with ``|w| <= l - level(p)`` that lead from ``p`` to a final state."""
    levels = state_levels(d) if levels is None else levels
    bound = spec.l - levels[p]
    if bound < 0:
        return set()
    return {w for w in _words(d.alphabet_size, bound) if _walk(d, p, w) in d.finals}


def truncated_right_languages_agree(d: Dfa, spec: CoverSpec, p: int, q: int, levels=None) -> bool:
    """Compare ``R_p`` and ``R_q`` restricted to words of length <= l - max level."""
    levels = state_levels(d) if levels is None else levels
    m = max(levels[p], levels[q])
    cut = spec.l - m
    rp = {w for w in right_language(d, spec, p, levels) if len(w) <= cut}
    rq = {w for w in right_language(d, spec, q, levels) if len(w) <= cut}
    return rp == rq


def _pick_smaller(policy: TiePolicy, frags) -> int:
    s0, s1 = len(frags[0]), len(frags[1])
    if s0 != s1:
        return 0 if s0 < s1 else 1
    if policy.equal_size_choice is TieChoice.MAX_STATE:
        return 0 if max(frags[0]) > max(frags[1]) else 1
    return 0 if min(frags[0]) < min(frags[1]) else 1


def _keeps_id(policy: TiePolicy, frags) -> int:
    s0, s1 = len(frags[0]), len(frags[1])
    if s0 == s1:
        smaller = 0 if min(frags[0]) < min(frags[1]) else 1
    else:
        smaller = 0 if s0 < s1 else 1
    if policy.replacement_placement is Placement.SMALLER_STAYS:
        return smaller
    return 1 - smaller


class LengthWorklist:
    """Triples ``(block, letter, l1)`` popped by increasing ``l1``.

    Entries of equal length leave in FIFO or LIFO order.  Taking short
    lengths first means a pair of states is always first separated by the
    shortest splitter able to do it, which the length cutoffs rely on.
    """

    def __init__(self, strategy):
        self.strategy = Strategy(strategy)
        self._buckets: dict[int, Worklist] = {}
        self._where: dict[tuple[int, int], int] = {}
        self._size = 0

    def __len__(self):
        return self._size

    def __contains__(self, key):
        return key in self._where

    def push(self, block: int, letter: int, length: int) -> None:
        bucket = self._buckets.get(length)
        if bucket is None:
            bucket = self._buckets[length] = Worklist(self.strategy)
        bucket.push(block, letter, length)
        if block != EMPTY:
            self._where[block, letter] = length
        self._size += 1

    def pop(self) -> tuple[int, int, int]:
        length = min(self._buckets)
        bucket = self._buckets[length]
        entry = bucket.pop()
        if not bucket:
            del self._buckets[length]
        if entry[0] != EMPTY:
            del self._where[entry[0], entry[1]]
        self._size -= 1
        return entry

    def length_of(self, block: int, letter: int) -> int:
        return self._where[block, letter]


def korner_minimize(d: Dfa, spec: CoverSpec, strategy="fifo", policy: TiePolicy | None = None):
    """Hopcroft over ``(block, letter, length)`` triples; returns ``(partition, stats)``.

    A splitter ``(C, a, l1)`` only looks at states ``p`` with
    ``level(p) + l1 < l``; it separates those whose a-successor lies in C from
    those whose a-successor does not.  States outside that range stay with
    the fragment that keeps the block id.  New fragments enter the worklist
    with length ``l1 + 1``; fragments replacing a listed entry inherit its
    length.  Triples are extracted shortest first (see :class:`LengthWorklist`).
    """
    validate_dfa(d)
    policy = policy or TiePolicy()
    if TieChoice.FROM_TRACE in (policy.equal_size_choice, policy.replacement_placement):
        raise ValueError("trace replay is not supported for cover minimization")
    levels = state_levels(d)
    n, k, l = d.num_states, d.alphabet_size, spec.l
    pred = predecessors(d)
    stats = RunStats()
    wl = LengthWorklist(strategy)

    finals = sorted(d.finals)
    others = [q for q in range(n) if q not in d.finals]
    part = RefinablePartition(n, [finals, others])
    if not finals or not others:
        first = EMPTY
    else:
        first = (0, 1)[_pick_smaller(policy, (finals, others))]

    def push(block, letter, length):
        wl.push(block, letter, length)
        stats.insertions += 1
        stats.max_worklist_size = max(stats.max_worklist_size, len(wl))

    for a in range(k):
        push(first, a, 0)

    while wl:
        cblock, a, l1 = wl.pop()
        splitter = [] if cblock == EMPTY else sorted(part.members(cblock))
        stats.extractions += 1
        stats.total_splitter_mass += len(splitter)
        added = 0
        in_x = set()
        order = []
        for c in splitter:
            for p in pred[a][c]:
                if levels[p] + l1 < l:
                    in_x.add(p)
                    b = part.block_of[p]
                    if b not in order:
                        order.append(b)
        for blk in order:
            members = part.members(blk)
            xs = sorted(p for p in members if p in in_x)
            ys = sorted(p for p in members if p not in in_x and levels[p] + l1 < l)
            if not ys:
                continue
            ignored = [p for p in members if levels[p] + l1 >= l]
            keep = _keeps_id(policy, (xs, ys))
            moved = (xs, ys)[1 - keep]
            kept = sorted((xs, ys)[keep] + ignored)
            for p in moved:
                part.mark(p)
            new = part.split(blk)
            part.finish_round()
            stats.splits += 1
            frags, ids = (kept, moved), (blk, new)
            pick = _pick_smaller(policy, frags)
            for b in range(k):
                if (blk, b) in wl:
                    push(new, b, wl.length_of(blk, b))
                    stats.in_list_replacements += 1
                elif l1 + 1 <= l:
                    push(ids[pick], b, l1 + 1)
                    added += len(frags[pick])
        stats.per_splitter_added.append((len(splitter), added))
    return part, stats


def _check_blocks(d, spec, blocks, levels):
    for i, blk in enumerate(blocks):
        for p, q in itertools.combinations(blk, 2):
            if not similar_states(d, spec, p, q, levels):
                raise NotSimilarBlock(i, p, q)


def merge_similar(d: Dfa, blocks, spec: CoverSpec | None = None) -> Dfa:
    """Collapse each block onto its lowest-level state, then drop unreachable states.

    ``blocks`` is a RefinablePartition or an iterable of state groups.  With
    ``spec`` given, every block is first checked pairwise with the similarity
    oracle.  The result has at most one state per block.
    """
    groups = blocks.blocks() if isinstance(blocks, RefinablePartition) else [tuple(b) for b in blocks]
    levels = state_levels(d)
    if spec is not None:
        _check_blocks(d, spec, groups, levels)
    rep = list(range(d.num_states))
    for blk in groups:
        keep = min(blk, key=lambda s: (levels[s], s))
        for s in blk:
            rep[s] = keep
    start = rep[d.start]
    seen = {start: 0}
    order = [start]
    i = 0
    while i < len(order):
        p = order[i]
        i += 1
        for t in d.transitions[p]:
            r = rep[t]
            if r not in seen:
                seen[r] = len(order)
                order.append(r)
    trans = [tuple(seen[rep[t]] for t in d.transitions[p]) for p in order]
    finals = frozenset(seen[p] for p in order if p in d.finals)
    return Dfa(len(order), d.alphabet_size, trans, 0, finals)


def is_cover_automaton(candidate: Dfa, lengths, spec: CoverSpec) -> bool:
    if not candidate.is_unary:
        raise NotUnary("cover check works on unary automata")
    lengths = set(lengths)
    if any(m > spec.l for m in lengths):
        raise LengthExceedsL(f"lengths above l={spec.l}: {sorted(m for m in lengths if m > spec.l)}")
    return accepted_lengths(candidate, spec.l) == lengths


def similar_pairs(d: Dfa, spec: CoverSpec, levels=None):
    levels = state_levels(d) if levels is None else levels
    return [
        (p, q)
        for p, q in itertools.combinations(range(d.num_states), 2)
        if similar_states(d, spec, p, q, levels)
    ]


def minimal_dfca_check(d: Dfa, spec: CoverSpec) -> bool:
    levels = state_levels(d)
    return not any(
        similar_states(d, spec, p, q, levels)
        for p, q in itertools.combinations(range(d.num_states), 2)
    )


@dataclass
class CoverResult:
    automaton: Dfa
    blocks: int  # blocks found by the first korner_minimize pass
    stats: RunStats
    rounds: int


def minimize_cover(d: Dfa, spec: CoverSpec, strategy="fifo", policy: TiePolicy | None = None) -> CoverResult:
    """Körner refinement, merge, and repeat until no two states are similar.

    When a refinement pass leaves only singletons but the automaton is still
    not minimal, the lowest similar pair found by brute force is merged.
    """
    strategy = Strategy(strategy)
    part, stats = korner_minimize(d, spec, strategy, policy)
    first_blocks = len(part)
    current = d
    rounds = 0
    while True:
        rounds += 1
        if any(part.size(b) > 1 for b in range(len(part))):
            current = merge_similar(current, part, spec)
        else:
            pairs = similar_pairs(current, spec)
            if not pairs:
                return CoverResult(current, first_blocks, stats, rounds)
            levels = state_levels(current)
            p, q = min(pairs, key=lambda pq: (max(levels[pq[0]], levels[pq[1]]), pq))
            groups = [(p, q)] + [(s,) for s in range(current.num_states) if s not in (p, q)]
            current = merge_similar(current, groups, spec)
        part, _ = korner_minimize(current, spec, strategy, policy)


COVER_CSV_HEADER = "input,l,states_in,states_out,blocks,total_splitter_mass,minimal"


def cover_csv_row(name, d: Dfa, spec: CoverSpec, result: CoverResult) -> str:
    minimal = minimal_dfca_check(result.automaton, spec)
    return (
        f"{name},{spec.l},{d.num_states},{result.automaton.num_states},{result.blocks},"
        f"{result.stats.total_splitter_mass},{str(minimal).lower()}"
    )
