"""Refinable partition with mark-and-split.

States of a block occupy a contiguous slice of ``elements``; the marked ones
are kept at the front of the slice so a split touches only marked states.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class RefinablePartition:
    def __init__(self, n: int, blocks: Iterable[Sequence[int]]):
        self.n = n
        self.elements: list[int] = []
        self.location = [0] * n
        self.block_of = [-1] * n
        self.first: list[int] = []
        self.end: list[int] = []
        self.marked: list[int] = []
        self._touched: list[int] = []
        for members in blocks:
            members = list(members)
            if not members:
                continue
            b = len(self.first)
            self.first.append(len(self.elements))
            for s in members:
                if self.block_of[s] != -1:
                    raise ValueError(f"state {s} appears in two blocks")
                self.location[s] = len(self.elements)
                self.block_of[s] = b
                self.elements.append(s)
            self.end.append(len(self.elements))
            self.marked.append(0)
        if len(self.elements) != n:
            raise ValueError("blocks do not cover all states")

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "RefinablePartition":
        groups: dict[int, list[int]] = {}
        for s, lab in enumerate(labels):
            groups.setdefault(lab, []).append(s)
        return cls(len(labels), [groups[k] for k in sorted(groups, key=lambda k: groups[k][0])])

    def __len__(self) -> int:
        return len(self.first)

    @property
    def num_blocks(self) -> int:
        return len(self.first)

    def size(self, b: int) -> int:
        return self.end[b] - self.first[b]

    def members(self, b: int) -> list[int]:
        return self.elements[self.first[b] : self.end[b]]

    def mark(self, s: int) -> None:
        b = self.block_of[s]
        i = self.location[s]
        j = self.first[b] + self.marked[b]
        if i < j:
            return  # already marked
        if self.marked[b] == 0:
            self._touched.append(b)
        t = self.elements[j]
        self.elements[i], self.elements[j] = t, s
        self.location[t], self.location[s] = i, j
        self.marked[b] += 1

    def marked_count(self, b: int) -> int:
        return self.marked[b]

    def marked_members(self, b: int) -> list[int]:
        return self.elements[self.first[b] : self.first[b] + self.marked[b]]

    def touched(self) -> list[int]:
        """Blocks with at least one mark, in order of first mark."""
        return list(self._touched)

    def unmark(self, b: int) -> None:
        self.marked[b] = 0

    def unmark_all(self) -> None:
        for b in self._touched:
            self.marked[b] = 0
        self._touched.clear()

    def split(self, b: int) -> int | None:
        """Move the marked states of ``b`` into a new block and return its id.

        Returns None (and clears the marks) when all or none of ``b`` is marked.
        """
        m = self.marked[b]
        self.marked[b] = 0
        if m == 0 or m == self.size(b):
            return None
        nb = len(self.first)
        lo = self.first[b]
        self.first.append(lo)
        self.end.append(lo + m)
        self.marked.append(0)
        self.first[b] = lo + m
        for i in range(lo, lo + m):
            self.block_of[self.elements[i]] = nb
        return nb

    def finish_round(self) -> None:
        self._touched.clear()

    def blocks(self) -> list[tuple[int, ...]]:
        """Canonical form: sorted tuples ordered by smallest member."""
        return sorted(tuple(sorted(self.members(b))) for b in range(len(self.first)))

    def labels(self) -> list[int]:
        """Block index per state, numbering blocks by smallest member."""
        out = [0] * self.n
        for i, blk in enumerate(self.blocks()):
            for s in blk:
                out[s] = i
        return out

    def same_as(self, other: "RefinablePartition") -> bool:
        return self.blocks() == other.blocks()

    def __repr__(self) -> str:
        return f"RefinablePartition({self.blocks()})"
