"""Plain-text DFA files and Graphviz export.

Format, one item per line, ``#`` starts a comment, blank lines ignored::

    states 8
    alphabet 1
    start 0
    finals 0 1 2 4
    trans 0 0 1
    ...

followed by exactly one ``trans S L T`` line per (state, letter) pair.
"""

from __future__ import annotations

from .dfa import Dfa, validate_dfa
from .errors import DfaFormatError, InvalidDfaError


def _ints(lineno, parts, what):
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise DfaFormatError(lineno, f"expected integers after '{what}'") from None


def parse_dfa(text: str) -> Dfa:
    items = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            items.append((lineno, line.split()))
    header = ["states", "alphabet", "start", "finals"]
    last = items[-1][0] if items else 0
    if len(items) < 4:
        raise DfaFormatError(last + 1, f"missing '{header[len(items)]}' line")
    values = {}
    for (lineno, parts), key in zip(items[:4], header):
        if parts[0] != key:
            raise DfaFormatError(lineno, f"expected '{key}', found '{parts[0]}'")
        nums = _ints(lineno, parts[1:], key)
        if key != "finals" and len(nums) != 1:
            raise DfaFormatError(lineno, f"'{key}' takes exactly one integer")
        values[key] = nums if key == "finals" else nums[0]
    n, k = values["states"], values["alphabet"]
    if n < 1:
        raise DfaFormatError(items[0][0], "states must be >= 1")
    if k < 1:
        raise DfaFormatError(items[1][0], "alphabet must be >= 1")
    rows = [[None] * k for _ in range(n)]
    for lineno, parts in items[4:]:
        if parts[0] != "trans":
            raise DfaFormatError(lineno, f"expected 'trans', found '{parts[0]}'")
        nums = _ints(lineno, parts[1:], "trans")
        if len(nums) != 3:
            raise DfaFormatError(lineno, "'trans' takes three integers")
        s, a, t = nums
        if not (0 <= s < n and 0 <= a < k and 0 <= t < n):
            raise DfaFormatError(lineno, f"transition {s} {a} {t} out of range")
        if rows[s][a] is not None:
            raise DfaFormatError(lineno, f"duplicate transition for ({s}, {a})")
        rows[s][a] = t
    d = Dfa(n, k, rows, values["start"], frozenset(values["finals"]))
    try:
        validate_dfa(d)
    except InvalidDfaError as exc:
        raise DfaFormatError(last, str(exc)) from exc
    return d


def format_dfa(d: Dfa) -> str:
    lines = [
        f"states {d.num_states}",
        f"alphabet {d.alphabet_size}",
        f"start {d.start}",
        " ".join(["finals"] + [str(q) for q in sorted(d.finals)]),
    ]
    for p in range(d.num_states):
        for a in range(d.alphabet_size):
            lines.append(f"trans {p} {a} {d.transitions[p][a]}")
    return "\n".join(lines) + "\n"


def read_dfa(path) -> Dfa:
    with open(path) as fh:
        return parse_dfa(fh.read())


def write_dfa(d: Dfa, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_dfa(d))


def letter_name(a: int, k: int) -> str:
    if k <= 26:
        return chr(ord("a") + a)
    return str(a)


def to_dot(d: Dfa, name: str = "dfa") -> str:
    """Graphviz source: double circles for finals, an arrow from a point into the start."""
    out = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q in range(d.num_states):
        shape = "doublecircle" if q in d.finals else "circle"
        out.append(f'  q{q} [shape={shape}, label="{q}"];')
    out.append(f"  __start -> q{d.start};")
    for p in range(d.num_states):
        for a in range(d.alphabet_size):
            out.append(f'  q{p} -> q{d.transitions[p][a]} [label="{letter_name(a, d.alphabet_size)}"];')
    out.append("}")
    return "\n".join(out) + "\n"
