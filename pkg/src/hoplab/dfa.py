"""Complete deterministic automata, de Bruijn words and cyclic unary automata.

States are the integers ``0 .. num_states - 1`` and letters the integers
``0 .. alphabet_size - 1``.  A unary automaton uses the single letter 0,
printed as ``a``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    BadLetter,
    IncompleteTransition,
    IndexOutOfRange,
    NotUnary,
    OffsetOutOfRange,
    OrderTooLarge,
)

MAX_DE_BRUIJN_ORDER = 24


@dataclass(frozen=True)
class Dfa:
    """Complete DFA.

    ``transitions[p][a]`` is the target of state ``p`` on letter ``a``.  The
    constructor only normalises containers; call :func:`validate_dfa` (or
    :func:`check_dfa`) to enforce completeness and index ranges.
    """

    num_states: int
    alphabet_size: int
    transitions: tuple
    start: int = 0
    finals: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "transitions", tuple(tuple(row) for row in self.transitions))
        object.__setattr__(self, "finals", frozenset(self.finals))

    @property
    def is_unary(self) -> bool:
        return self.alphabet_size == 1

    def step(self, state: int, letter: int = 0) -> int:
        return self.transitions[state][letter]

    def is_final(self, state: int) -> bool:
        return state in self.finals


def validate_dfa(d: Dfa) -> None:
    """Raise if ``d`` breaks any structural invariant, return None otherwise."""
    if d.num_states < 1:
        raise IndexOutOfRange("num_states", d.num_states)
    if d.alphabet_size < 1:
        raise IndexOutOfRange("alphabet_size", d.alphabet_size)
    if not 0 <= d.start < d.num_states:
        raise IndexOutOfRange("start", d.start)
    for q in d.finals:
        if not 0 <= q < d.num_states:
            raise IndexOutOfRange("finals", q)
    if len(d.transitions) > d.num_states:
        raise IndexOutOfRange("transitions", len(d.transitions))
    for p in range(d.num_states):
        row = d.transitions[p] if p < len(d.transitions) else ()
        if len(row) > d.alphabet_size:
            raise IndexOutOfRange("transitions", (p, len(row)))
        for a in range(d.alphabet_size):
            if a >= len(row) or row[a] is None:
                raise IncompleteTransition(p, a)
            t = row[a]
            if not isinstance(t, int) or not 0 <= t < d.num_states:
                raise IndexOutOfRange("transitions", (p, a, t))


def check_dfa(d: Dfa) -> Dfa:
    """Validate and return ``d``; the entry-point guard used by estimators."""
    if not isinstance(d, Dfa):
        raise TypeError(f"expected a Dfa, got {type(d).__name__}")
    validate_dfa(d)
    return d


def _as_word(w) -> str:
    if isinstance(w, str):
        s = w
    else:
        s = "".join("1" if int(b) else "0" for b in w)
    if set(s) - {"0", "1"}:
        raise ValueError(f"not a binary word: {w!r}")
    return s


def de_bruijn_sequence(order: int) -> str:
    """Binary de Bruijn word of the given order, rotated to start with ``1 * order``.

    Built with the prefer-one greedy rule from ``0 * order``.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if order > MAX_DE_BRUIJN_ORDER:
        raise OrderTooLarge(f"order {order} exceeds {MAX_DE_BRUIJN_ORDER}")
    mask = (1 << order) - 1
    window = 0
    seen = bytearray(1 << order)
    seen[0] = 1
    bits = [0] * order
    while True:
        one = ((window << 1) | 1) & mask
        zero = (window << 1) & mask
        if not seen[one]:
            window, bit = one, 1
        elif not seen[zero]:
            window, bit = zero, 0
        else:
            break
        seen[window] = 1
        bits.append(bit)
    # the linear word has 2**order + order - 1 bits; its first 2**order are the cycle
    cyc = "".join(map(str, bits[: 1 << order]))
    k = (cyc + cyc).index("1" * order)
    return cyc[k:] + cyc[:k]


def is_de_bruijn(w) -> bool:
    w = _as_word(w)
    n = len(w)
    if n < 2 or n & (n - 1):
        return False
    k = n.bit_length() - 1
    ext = w + w[: k - 1]
    return len({ext[i : i + k] for i in range(n)}) == n


def cyclic_automaton(w, start_offset: int = 0) -> Dfa:
    """Unary cycle over ``len(w)`` states; state ``i`` is final iff ``w[i] == '1'``."""
    w = _as_word(w)
    n = len(w)
    if n < 1:
        raise ValueError("word must be nonempty")
    if not 0 <= start_offset < n:
        raise OffsetOutOfRange(f"start_offset {start_offset} not in [0, {n})")
    return Dfa(
        num_states=n,
        alphabet_size=1,
        transitions=[((i + 1) % n,) for i in range(n)],
        start=start_offset,
        finals=frozenset(i for i, b in enumerate(w) if b == "1"),
    )


def state_signature(d: Dfa, p: int, k: int) -> str:
    """Finality of ``p, δ(p), δ²(p), ...`` as a word of length ``k``."""
    if not d.is_unary:
        raise NotUnary("state signatures are defined for unary automata")
    if not 0 <= p < d.num_states:
        raise IndexOutOfRange("state", p)
    out = []
    for _ in range(k):
        out.append("1" if p in d.finals else "0")
        p = d.transitions[p][0]
    return "".join(out)


def run(d: Dfa, word: Iterable[int], state: int | None = None) -> int:
    q = d.start if state is None else state
    for a in word:
        if not 0 <= a < d.alphabet_size:
            raise BadLetter(f"letter {a} not in alphabet of size {d.alphabet_size}")
        q = d.transitions[q][a]
    return q


def accepts(d: Dfa, word: Sequence[int]) -> bool:
    return run(d, word) in d.finals


def accepted_lengths(d: Dfa, max_len: int) -> set[int]:
    """``{m <= max_len : a^m is accepted}`` for a unary automaton."""
    if not d.is_unary:
        raise NotUnary("accepted_lengths needs a unary automaton")
    out = set()
    q = d.start
    for m in range(max_len + 1):
        if q in d.finals:
            out.add(m)
        q = d.transitions[q][0]
    return out


def random_dfa(num_states: int, alphabet_size: int, final_density: float, seed) -> Dfa:
    """Uniformly random complete DFA; identical output for identical arguments."""
    if num_states < 1:
        raise ValueError("num_states must be >= 1")
    rng = random.Random(seed)
    trans = [
        tuple(rng.randrange(num_states) for _ in range(alphabet_size))
        for _ in range(num_states)
    ]
    finals = frozenset(q for q in range(num_states) if rng.random() < final_density)
    return Dfa(num_states, alphabet_size, trans, 0, finals)


def random_unary_dfa(num_states: int, final_density: float, seed) -> Dfa:
    """Random unary DFA in which every state is reachable from the start.

    The shape is a tail leading into a cycle, with state labels shuffled.
    """
    if num_states < 1:
        raise ValueError("num_states must be >= 1")
    rng = random.Random(seed)
    tail = rng.randrange(num_states)
    labels = list(range(num_states))
    rng.shuffle(labels)
    trans = [None] * num_states
    for i in range(num_states):
        j = i + 1 if i + 1 < num_states else tail
        trans[labels[i]] = (labels[j],)
    finals = frozenset(labels[i] for i in range(num_states) if rng.random() < final_density)
    return Dfa(num_states, 1, trans, labels[0], finals)
