"""Cyclic double occurrence words and their interlacement graphs.

A double occurrence word is a cyclic sequence in which every letter appears
exactly twice; it presents a chord diagram in generic position. Words are
stored in canonical form (lexicographically least rotation or reflection),
so equality of values is equality of cyclic words.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable

from .graphs import Graph

__all__ = ["DOWord", "interlacement_graph", "parse_word", "format_word"]


def _canonical(letters: tuple[str, ...]) -> tuple[str, ...]:
    if not letters:
        return ()
    m = len(letters)
    best = None
    for seq in (letters, letters[::-1]):
        for r in range(m):
            cand = seq[r:] + seq[:r]
            if best is None or cand < best:
                best = cand
    return best


class DOWord:
    """A cyclic word with every letter occurring exactly twice."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[str]) -> None:
        letters = tuple(str(x) for x in letters)
        counts = Counter(letters)
        bad = sorted(name for name, k in counts.items() if k != 2)
        if bad:
            raise ValueError(f"letters must occur exactly twice, violated by {bad}")
        self.letters = _canonical(letters)

    def names(self) -> tuple[str, ...]:
        """Letter names in order of first occurrence."""
        seen: list[str] = []
        for x in self.letters:
            if x not in seen:
                seen.append(x)
        return tuple(seen)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DOWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"DOWord({' '.join(self.letters)!r})"

    def __str__(self) -> str:
        return " ".join(self.letters)


def interlacement_graph(w: DOWord) -> Graph:
    """Graph on the word's letters joining pairs whose occurrences alternate."""
    names = w.names()
    index = {name: i for i, name in enumerate(names)}
    spots: dict[str, list[int]] = {name: [] for name in names}
    for pos, name in enumerate(w.letters):
        spots[name].append(pos)
    edges = []
    for i, a in enumerate(names):
        a1, a2 = spots[a]
        for b in names[i + 1 :]:
            b1, b2 = spots[b]
            if (a1 < b1 < a2) != (a1 < b2 < a2):
                edges.append((index[a], index[b]))
    return Graph(len(names), edges, labels=names)


def parse_word(text: str) -> DOWord:
    """Parse the one-line word format (whitespace separated, ``#`` comments)."""
    tokens: list[str] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            tokens.extend(line.split())
    return DOWord(tokens)


def format_word(w: DOWord) -> str:
    return " ".join(w.letters) + "\n"
