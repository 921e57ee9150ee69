"""Hopcroft minimization with every source of nondeterminism made explicit.

Three knobs decide a run:

* the worklist ``strategy`` (FIFO queue or LIFO stack),
* ``TiePolicy.equal_size_choice``: which fragment is enqueued when a block
  splits into two halves of equal size (also used for ``min(F, Q-F)``),
* ``TiePolicy.replacement_placement``: when a block that is already in the
  worklist splits, which fragment keeps the existing slot; the other one is
  appended as a new entry.

Every decision taken is written to a :class:`ChoiceTrace`, and a trace can be
fed back to reproduce (or steer) a run exactly.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import asdict, dataclass, field
from enum import Enum

from .dfa import Dfa, validate_dfa
from .errors import TraceMismatch, UnstablePartition
from .partition import RefinablePartition

EMPTY = -1  # block id of the empty splitter min(F, Q-F) when F or Q-F is empty


class Strategy(str, Enum):
    FIFO = "fifo"
    LIFO = "lifo"


class TieChoice(str, Enum):
    MIN_STATE = "minstate"
    MAX_STATE = "maxstate"
    LOOKAHEAD = "lookahead"
    FROM_TRACE = "trace"


class Placement(str, Enum):
    SMALLER_STAYS = "smaller"
    LARGER_STAYS = "larger"
    FROM_TRACE = "trace"


@dataclass(frozen=True)
class Decision:
    """One resolved choice.

    ``choice`` 0 selects the fragment whose successors fall in the splitter
    (B'), 1 selects the rest (B'').  For the initial ``min(F, Q-F)`` tie, 0 is
    F and 1 is Q-F.
    """

    kind: str  # "tie" or "place"
    step: int  # extractions completed before this decision
    block: int
    choice: int

    @property
    def site(self):
        return (self.kind, self.step, self.block)


@dataclass
class ChoiceTrace:
    decisions: list = field(default_factory=list)

    def __len__(self):
        return len(self.decisions)

    def to_json(self) -> str:
        return json.dumps({"decisions": [asdict(d) for d in self.decisions]})

    @classmethod
    def from_json(cls, text: str) -> "ChoiceTrace":
        raw = json.loads(text)
        return cls([Decision(**d) for d in raw["decisions"]])


@dataclass(frozen=True)
class TiePolicy:
    equal_size_choice: TieChoice = TieChoice.MIN_STATE
    replacement_placement: Placement = Placement.LARGER_STAYS
    trace: ChoiceTrace | None = None

    def __post_init__(self):
        object.__setattr__(self, "equal_size_choice", TieChoice(self.equal_size_choice))
        object.__setattr__(self, "replacement_placement", Placement(self.replacement_placement))
        uses_trace = (
            self.equal_size_choice is TieChoice.FROM_TRACE
            or self.replacement_placement is Placement.FROM_TRACE
        )
        if uses_trace and self.trace is None:
            raise ValueError("FromTrace policy requires a ChoiceTrace")

    @property
    def name(self) -> str:
        return self.equal_size_choice.value


@dataclass
class RunStats:
    total_splitter_mass: int = 0
    insertions: int = 0
    extractions: int = 0
    in_list_replacements: int = 0
    splits: int = 0
    max_worklist_size: int = 0
    per_splitter_added: list = field(default_factory=list)


STATS_CSV_HEADER = (
    "input,states,alphabet,strategy,policy,total_splitter_mass,insertions,"
    "extractions,in_list_replacements,splits,max_worklist_size,blocks_final"
)


def stats_csv_row(name, d: Dfa, strategy, policy: TiePolicy, stats: RunStats, blocks: int) -> str:
    return ",".join(
        str(v)
        for v in (
            name,
            d.num_states,
            d.alphabet_size,
            Strategy(strategy).value,
            policy.name,
            stats.total_splitter_mass,
            stats.insertions,
            stats.extractions,
            stats.in_list_replacements,
            stats.splits,
            stats.max_worklist_size,
            blocks,
        )
    )


class _Entry:
    __slots__ = ("block", "letter", "length")

    def __init__(self, block, letter, length):
        self.block = block
        self.letter = letter
        self.length = length


class Worklist:
    """Splitter list with FIFO/LIFO extraction and O(1) membership.

    Entries are ``(block, letter, length)``; plain Hopcroft leaves length at 0,
    the cover-automata variant uses it for the word length considered.
    """

    def __init__(self, strategy):
        self.strategy = Strategy(strategy)
        self._items: deque[_Entry] = deque()
        self._index: dict[tuple[int, int], _Entry] = {}
        self._by_block: dict[int, int] = {}

    def __len__(self):
        return len(self._items)

    def __contains__(self, key):
        return key in self._index

    def has_block(self, block: int) -> bool:
        return self._by_block.get(block, 0) > 0

    def push(self, block: int, letter: int, length: int = 0) -> None:
        e = _Entry(block, letter, length)
        self._items.append(e)
        if block != EMPTY:
            self._index[(block, letter)] = e
            self._by_block[block] = self._by_block.get(block, 0) + 1

    def pop(self) -> tuple[int, int, int]:
        e = self._items.popleft() if self.strategy is Strategy.FIFO else self._items.pop()
        if e.block != EMPTY:
            del self._index[(e.block, e.letter)]
            self._by_block[e.block] -= 1
        return e.block, e.letter, e.length

    def length_of(self, block: int, letter: int) -> int:
        return self._index[(block, letter)].length

    def relabel(self, old: int, new: int, letter: int) -> None:
        """Point the entry (old, letter) at block ``new`` without moving it."""
        e = self._index.pop((old, letter))
        e.block = new
        self._index[(new, letter)] = e
        self._by_block[old] -= 1
        self._by_block[new] = self._by_block.get(new, 0) + 1

    def entries(self) -> list[tuple[int, int, int]]:
        return [(e.block, e.letter, e.length) for e in self._items]


def predecessors(d: Dfa) -> list[list[list[int]]]:
    """``pred[a][q]``: sorted states p with δ(p, a) = q."""
    pred = [[[] for _ in range(d.num_states)] for _ in range(d.alphabet_size)]
    for p in range(d.num_states):
        for a, q in enumerate(d.transitions[p]):
            pred[a][q].append(p)
    return pred


class _Run:
    def __init__(self, d: Dfa, strategy, policy: TiePolicy):
        self.d = d
        self.k = d.alphabet_size
        self.strategy = Strategy(strategy)
        self.policy = policy
        self.pred = predecessors(d)
        self.stats = RunStats()
        self.trace = ChoiceTrace()
        self.worklist = Worklist(self.strategy)
        self._replay = {"tie": [], "place": []}
        self._cursor = {"tie": 0, "place": 0}
        if policy.trace is not None:
            for i, dec in enumerate(policy.trace.decisions):
                self._replay[dec.kind].append((i, dec))

    # -- decisions -------------------------------------------------------

    def _from_trace(self, kind, step, block):
        cur = self._cursor[kind]
        recorded = self._replay[kind]
        if cur >= len(recorded):
            return 0  # prefix exhausted: default branch
        i, dec = recorded[cur]
        if dec.site != (kind, step, block):
            raise TraceMismatch(i, dec.site, (kind, step, block))
        self._cursor[kind] = cur + 1
        return dec.choice

    def _record(self, kind, block, choice):
        self.trace.decisions.append(Decision(kind, self.stats.extractions, block, choice))
        return choice

    def _tie(self, block, frags):
        rule = self.policy.equal_size_choice
        if rule is TieChoice.FROM_TRACE:
            choice = self._from_trace("tie", self.stats.extractions, block)
        elif rule is TieChoice.MAX_STATE:
            choice = 0 if max(frags[0]) > max(frags[1]) else 1
        elif rule is TieChoice.LOOKAHEAD:
            choice = self._lookahead(frags)
        else:
            choice = 0 if min(frags[0]) < min(frags[1]) else 1
        return self._record("tie", block, choice)

    def _placement(self, block, frags):
        rule = self.policy.replacement_placement
        if rule is Placement.FROM_TRACE:
            choice = self._from_trace("place", self.stats.extractions, block)
        else:
            s0, s1 = len(frags[0]), len(frags[1])
            if s0 == s1:
                smaller = 0 if min(frags[0]) < min(frags[1]) else 1
            else:
                smaller = 0 if s0 < s1 else 1
            choice = smaller if rule is Placement.SMALLER_STAYS else 1 - smaller
        return self._record("place", block, choice)

    def _lookahead(self, frags):
        bad = [self._splits_pending(f) for f in frags]
        if bad[0] != bad[1]:
            return 1 if bad[0] else 0
        return 0 if min(frags[0]) < min(frags[1]) else 1

    def _splits_pending(self, cand) -> bool:
        """Would ``cand``, used as a splitter, cut a block waiting in the list?"""
        part = self.part
        for b in range(self.k):
            counts: dict[int, int] = {}
            for x in cand:
                for p in self.pred[b][x]:
                    blk = part.block_of[p]
                    counts[blk] = counts.get(blk, 0) + 1
            for blk, c in counts.items():
                if c < part.size(blk) and self.worklist.has_block(blk):
                    return True
        return False

    # -- algorithm -------------------------------------------------------

    def _push(self, block, letter):
        self.worklist.push(block, letter)
        self.stats.insertions += 1
        if len(self.worklist) > self.stats.max_worklist_size:
            self.stats.max_worklist_size = len(self.worklist)

    def execute(self):
        d = self.d
        finals = sorted(d.finals)
        others = [q for q in range(d.num_states) if q not in d.finals]
        self.part = part = RefinablePartition(d.num_states, [finals, others])
        if not finals or not others:
            first = EMPTY
        elif len(finals) != len(others):
            first = 0 if len(finals) < len(others) else 1
        else:
            first = self._tie(EMPTY, (finals, others))
        for a in range(self.k):
            self._push(first, a)

        while self.worklist:
            cblock, a, _ = self.worklist.pop()
            splitter = [] if cblock == EMPTY else sorted(part.members(cblock))
            self.stats.extractions += 1
            self.stats.total_splitter_mass += len(splitter)
            added = 0
            pred_a = self.pred[a]
            for c in splitter:
                for p in pred_a[c]:
                    part.mark(p)
            touched = part.touched()
            part.finish_round()
            for blk in touched:
                if part.marked_count(blk) == part.size(blk):
                    part.unmark(blk)
                    continue
                new = part.split(blk)
                self.stats.splits += 1
                added += self._after_split(blk, new)
            self.stats.per_splitter_added.append((len(splitter), added))
        return part

    def _after_split(self, old, new) -> int:
        """Worklist bookkeeping for lines 9-13; returns states newly enqueued."""
        part = self.part
        frags = (part.members(new), part.members(old))  # (B', B'')
        ids = (new, old)
        in_list = [b for b in range(self.k) if (old, b) in self.worklist]
        if in_list:
            stay = self._placement(old, frags)
            if ids[stay] != old:
                for b in in_list:
                    self.worklist.relabel(old, new, b)
            other = ids[1 - stay]
            for b in in_list:
                self._push(other, b)
                self.stats.in_list_replacements += 1
        if len(in_list) == self.k:
            return 0
        s0, s1 = len(frags[0]), len(frags[1])
        if s0 == s1:
            pick = self._tie(old, frags)
        else:
            pick = 0 if s0 < s1 else 1
        added = 0
        for b in range(self.k):
            if b in in_list:
                continue
            self._push(ids[pick], b)
            added += len(frags[pick])
        return added


def hopcroft_minimize(d: Dfa, strategy="fifo", policy: TiePolicy | None = None):
    """Run Hopcroft's algorithm and return ``(partition, stats, trace)``."""
    validate_dfa(d)
    run = _Run(d, strategy, policy or TiePolicy())
    part = run.execute()
    if policy is not None and policy.trace is not None:
        for kind, recorded in run._replay.items():
            if run._cursor[kind] < len(recorded) and _fully_traced(policy, kind):
                i, dec = recorded[run._cursor[kind]]
                raise TraceMismatch(i, dec.site, "end of run")
    return part, run.stats, run.trace


def _fully_traced(policy, kind):
    if kind == "tie":
        return policy.equal_size_choice is TieChoice.FROM_TRACE
    return policy.replacement_placement is Placement.FROM_TRACE


def run_with_trace(d: Dfa, strategy, trace: ChoiceTrace):
    """Replay ``trace``; decisions past its end take branch 0."""
    policy = TiePolicy(TieChoice.FROM_TRACE, Placement.FROM_TRACE, trace)
    part, stats, _ = hopcroft_minimize(d, strategy, policy)
    return part, stats


def _recorded_run(d: Dfa, strategy, trace: ChoiceTrace):
    policy = TiePolicy(TieChoice.FROM_TRACE, Placement.FROM_TRACE, trace)
    return hopcroft_minimize(d, strategy, policy)


def quotient(d: Dfa, p: RefinablePartition) -> Dfa:
    """Merge each block into one state; blocks are numbered by smallest member."""
    labels = p.labels()
    nblocks = max(labels) + 1
    rows: list = [None] * nblocks
    finals = set()
    for q in range(d.num_states):
        b = labels[q]
        row = tuple(labels[t] for t in d.transitions[q])
        fin = q in d.finals
        if rows[b] is None:
            rows[b] = row
            if fin:
                finals.add(b)
        elif rows[b] != row or (b in finals) != fin:
            raise UnstablePartition(f"block {b} is not stable at state {q}")
    return Dfa(nblocks, d.alphabet_size, rows, labels[d.start], frozenset(finals))
