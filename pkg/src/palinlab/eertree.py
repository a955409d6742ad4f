"""Palindromic tree (eertree).

Nodes are the distinct nonempty palindromic factors of the word read so
far, plus two roots: node 0 of length -1 and node 1 (the empty word) of
length 0.  An edge ``u --x--> v`` means ``v = x u x``.  Appending a symbol
creates at most one node, so the tree never has more than ``len(w) + 2``
nodes.
"""
from __future__ import annotations

from typing import Iterable

ROOT_NEG = 0
ROOT_EMPTY = 1


class PalindromicTree:
    __slots__ = ("q", "text", "length", "link", "edges", "end", "last")

    def __init__(self, q: int, symbols: Iterable[int] = ()):
        self.q = q
        self.text: list[int] = []
        self.length = [-1, 0]
        self.link = [ROOT_NEG, ROOT_NEG]
        self.edges: list[dict[int, int]] = [{}, {}]
        # end position (exclusive) of the first occurrence of each node
        self.end = [0, 0]
        self.last = ROOT_EMPTY
        for c in symbols:
            self.append(c)

    def _extendable(self, node: int, c: int) -> int:
        text, length, link = self.text, self.length, self.link
        i = len(text) - 1
        while True:
            j = i - 1 - length[node]
            if j >= 0 and text[j] == c:
                return node
            node = link[node]

    def append(self, c: int) -> bool:
        """Append one symbol; return True when a new palindrome appeared."""
        if not 0 <= c < self.q:
            raise ValueError(f"symbol {c} outside [0, {self.q})")
        self.text.append(c)
        cur = self._extendable(self.last, c)
        child = self.edges[cur].get(c)
        if child is not None:
            self.last = child
            return False
        node = len(self.length)
        self.length.append(self.length[cur] + 2)
        self.edges.append({})
        self.end.append(len(self.text))
        if self.length[node] == 1:
            self.link.append(ROOT_EMPTY)
        else:
            self.link.append(self.edges[self._extendable(self.link[cur], c)][c])
        self.edges[cur][c] = node
        self.last = node
        return True

    def __len__(self) -> int:
        """Number of distinct nonempty palindromic factors."""
        return len(self.length) - 2

    def nodes(self) -> range:
        return range(2, len(self.length))

    def palindrome(self, node: int) -> tuple[int, ...]:
        e = self.end[node]
        return tuple(self.text[e - self.length[node]:e])

    def palindromes(self) -> list[tuple[int, ...]]:
        return [self.palindrome(v) for v in self.nodes()]

    def length_histogram(self) -> list[int]:
        """``h[k-1]`` = number of distinct palindromic factors of length ``k``."""
        hist = [0] * len(self.text)
        for v in self.nodes():
            hist[self.length[v] - 1] += 1
        return hist

    def valence_histogram(self) -> list[list[int]]:
        """``t[k-1][j]`` = palindromes of length ``k`` with exactly ``j`` children."""
        table = [[0] * (self.q + 1) for _ in range(len(self.text))]
        for v in self.nodes():
            table[self.length[v] - 1][len(self.edges[v])] += 1
        return table


def palindrome_count(symbols: Iterable[int], q: int) -> int:
    return len(PalindromicTree(q, symbols))
