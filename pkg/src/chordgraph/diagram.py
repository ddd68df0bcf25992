"""Chord diagrams on the rational circle and the geometric moves on them.

A diagram is an ordered sequence of named chords; order matters so that the
vertex numbering of the intersection graph is reproducible. Two
intersection modes are supported: CLOSED joins chords that meet anywhere
(shared circle point or interior crossing), CROSSING joins interior
crossings only, which is the right notion for diagrams in generic position.

The three moves each preserve an exact relationship between a diagram and
its intersection graph:

* ``reembed_incremental`` replays the diagram into fresh rational points by
  repeated arc bisection, preserving the full cyclic order of endpoints.
* ``blow_up`` spreads shared endpoints into small disjoint clusters so that
  the CROSSING graph of the output equals the CLOSED graph of the input.
* ``flip_interval`` reflects one of the two arcs bounded by a chord, which
  realizes local complementation at that chord on the CROSSING graph.
"""

from __future__ import annotations

from bisect import bisect_left
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator

from .circle import CirclePoint, insert_between, interleaves, parse_rational
from .graphs import Graph
from .words import DOWord

__all__ = [
    "Chord",
    "ChordDiagram",
    "IntersectionMode",
    "blow_up",
    "embed_word",
    "flip_interval",
    "format_diagram",
    "intersection_graph",
    "intersects",
    "parse_diagram",
    "reembed_incremental",
    "to_word",
]


class IntersectionMode(Enum):
    """Which chord contacts count as edges of the intersection graph."""

    CLOSED = "closed"
    CROSSING = "crossing"


class Chord:
    """An unordered pair of distinct circle points, stored sorted."""

    __slots__ = ("p", "q")

    def __init__(self, a: CirclePoint, b: CirclePoint) -> None:
        if a == b:
            raise ValueError("chord endpoints must be distinct")
        self.p, self.q = (a, b) if a < b else (b, a)

    def endpoints(self) -> tuple[CirclePoint, CirclePoint]:
        return (self.p, self.q)

    def has_endpoint(self, x: CirclePoint) -> bool:
        return x == self.p or x == self.q

    def other(self, x: CirclePoint) -> CirclePoint:
        if x == self.p:
            return self.q
        if x == self.q:
            return self.p
        raise ValueError(f"{x} is not an endpoint of this chord")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Chord) and self.p == other.p and self.q == other.q

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def __repr__(self) -> str:
        return f"Chord({self.p!r}, {self.q!r})"


class ChordDiagram:
    """An ordered sequence of (name, chord) with unique names and chords."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[tuple[str, Chord]]) -> None:
        entries = tuple((str(name), chord) for name, chord in entries)
        names = [name for name, _ in entries]
        if len(set(names)) != len(names):
            raise ValueError("chord names must be unique")
        chords = [chord for _, chord in entries]
        if len(set(chords)) != len(chords):
            raise ValueError("chords must be pairwise distinct point sets")
        self.entries = entries

    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.entries)

    def chord(self, name: str) -> Chord:
        for entry_name, chord in self.entries:
            if entry_name == name:
                return chord
        raise ValueError(f"no chord named {name!r}")

    def endpoints(self) -> tuple[CirclePoint, ...]:
        """Distinct endpoint values in increasing order."""
        return tuple(sorted({x for _, c in self.entries for x in c.endpoints()}))

    def is_generic(self) -> bool:
        """True iff no circle point is used by more than one chord endpoint."""
        seen: set[CirclePoint] = set()
        for _, chord in self.entries:
            for x in chord.endpoints():
                if x in seen:
                    return False
                seen.add(x)
        return True

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[str, Chord]]:
        return iter(self.entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ChordDiagram) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        inner = ", ".join(f"{name}=({c.p}, {c.q})" for name, c in self.entries)
        return f"ChordDiagram({inner})"


def intersects(c1: Chord, c2: Chord, mode: IntersectionMode) -> bool:
    """Whether two distinct chords meet, under the given mode.

    CROSSING: endpoints interleave (interior crossing). CLOSED: interior
    crossing, or the chords share exactly one endpoint.
    """
    if c1 == c2:
        raise ValueError("chords coincide")
    crossing = interleaves(c1.endpoints(), c2.endpoints())
    if mode is IntersectionMode.CLOSED:
        shared = len({c1.p, c1.q} & {c2.p, c2.q})
        return crossing or shared == 1
    return crossing


def intersection_graph(d: ChordDiagram, mode: IntersectionMode) -> Graph:
    """Labeled graph on the diagram's names, in diagram order."""
    entries = d.entries
    edges = []
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            if intersects(entries[i][1], entries[j][1], mode):
                edges.append((i, j))
    return Graph(len(entries), edges, labels=[name for name, _ in entries])


def to_word(d: ChordDiagram) -> DOWord:
    """Read the chord names counterclockwise around the circle from 0."""
    if not d.is_generic():
        raise ValueError("diagram is not in generic position")
    at: dict[CirclePoint, str] = {}
    for name, chord in d:
        at[chord.p] = name
        at[chord.q] = name
    return DOWord(at[x] for x in sorted(at))


def embed_word(w: DOWord) -> ChordDiagram:
    """Generic rational diagram realizing a word: occurrence i of 2n sits at
    the circle point i/(2n)."""
    m = len(w.letters)
    spots: dict[str, list[CirclePoint]] = {}
    for i, name in enumerate(w.letters):
        spots.setdefault(name, []).append(CirclePoint(Fraction(i, m)))
    return ChordDiagram((name, Chord(*spots[name])) for name in w.names())


def reembed_incremental(d: ChordDiagram) -> ChordDiagram:
    """Replay the diagram onto fresh rational points, one chord at a time.

    The first chord is normalized to (0, 1/2); every later endpoint is
    bisected into the arc between its cyclic neighbors among the points
    placed so far, so the full cyclic order of endpoints (and hence both
    intersection graphs and the incidence pattern) is preserved.
    """
    placed: dict[CirclePoint, CirclePoint] = {}
    order: list[CirclePoint] = []  # placed original points, sorted

    def place(x: CirclePoint) -> None:
        if x in placed:
            return
        if not placed:
            placed[x] = CirclePoint(0)
        elif len(placed) == 1:
            placed[x] = CirclePoint(Fraction(1, 2))
        else:
            i = bisect_left(order, x)
            succ = order[i % len(order)]
            pred = order[i - 1]
            placed[x] = insert_between(placed[pred], placed[succ])
        order.insert(bisect_left(order, x), x)

    entries = []
    for name, chord in d:
        place(chord.p)
        place(chord.q)
        entries.append((name, Chord(placed[chord.p], placed[chord.q])))
    return ChordDiagram(entries)


def blow_up(d: ChordDiagram) -> ChordDiagram:
    """Spread each endpoint into a cluster so the output is generic and its
    CROSSING graph equals the input's CLOSED graph, labels and all.

    Each original point gets a small arc centered on it; the arcs are kept
    pairwise disjoint by capping the radius at a quarter of the cyclic gap
    to the neighboring points (and at 1/(4m) overall, m the number of
    points). Inside its arc, the endpoints of the chords incident to the
    point appear in the cyclic order of their opposite endpoints, which is
    exactly what turns formerly incident chords into crossing ones while
    preserving every other contact. A chord whose endpoint is alone in its
    cluster lands back on the original point, so generic diagrams are
    fixed.
    """
    points = d.endpoints()
    m = len(points)
    if m == 0:
        return ChordDiagram(())
    cap = Fraction(1, 4 * m)
    radius: dict[CirclePoint, Fraction] = {}
    for i, pt in enumerate(points):
        left_gap = (pt.value - points[i - 1].value) % 1
        right_gap = (points[(i + 1) % m].value - pt.value) % 1
        if left_gap == 0:  # single point cannot happen: chords have 2 ends
            raise AssertionError("duplicate endpoint values")
        radius[pt] = min(cap, left_gap / 4, right_gap / 4)

    # For every point, the incident chords sorted by where the opposite
    # endpoint sits counterclockwise from it.
    incident: dict[CirclePoint, list[str]] = {pt: [] for pt in points}
    chord_of = dict(d.entries)
    for name, chord in d:
        incident[chord.p].append(name)
        incident[chord.q].append(name)
    new_end: dict[tuple[str, CirclePoint], CirclePoint] = {}
    for pt in points:
        names = sorted(
            incident[pt],
            key=lambda nm: (chord_of[nm].other(pt).value - pt.value) % 1,
        )
        k = len(names)
        step = (2 * radius[pt]) / (k + 1)
        start = pt.value - radius[pt]
        for j, nm in enumerate(names, start=1):
            new_end[(nm, pt)] = CirclePoint(start + j * step)

    entries = [
        (name, Chord(new_end[(name, chord.p)], new_end[(name, chord.q)]))
        for name, chord in d
    ]
    return ChordDiagram(entries)


def flip_interval(d: ChordDiagram, v: str) -> ChordDiagram:
    """Reflect every endpoint strictly inside the counterclockwise arc from
    the smaller to the larger endpoint of chord v; everything else is fixed.

    On the CROSSING intersection graph this is local complementation at v.
    Applying the same flip twice restores the diagram exactly.
    """
    if not d.is_generic():
        raise ValueError("diagram is not in generic position")
    pivot = d.chord(v)  # raises on unknown name
    s, t = pivot.p.value, pivot.q.value

    def move(x: CirclePoint) -> CirclePoint:
        if s < x.value < t:
            return CirclePoint(s + t - x.value)
        return x

    entries = []
    for name, chord in d:
        if name == v:
            entries.append((name, chord))
        else:
            entries.append((name, Chord(move(chord.p), move(chord.q))))
    return ChordDiagram(entries)


# -- text format ---------------------------------------------------------------


def parse_diagram(text: str) -> ChordDiagram:
    """Parse the line-oriented diagram format: ``chord <name> <p> <q>``."""
    entries = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] != "chord" or len(parts) != 4:
            raise ValueError(f"bad diagram line: {raw!r}")
        a = CirclePoint(parse_rational(parts[2]))
        b = CirclePoint(parse_rational(parts[3]))
        if a == b:
            raise ValueError(f"degenerate chord in line: {raw!r}")
        entries.append((parts[1], Chord(a, b)))
    return ChordDiagram(entries)


def format_diagram(d: ChordDiagram) -> str:
    lines = [f"chord {name} {c.p} {c.q}" for name, c in d]
    return "\n".join(lines) + ("\n" if lines else "")
