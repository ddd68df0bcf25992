"""Circle-graph recognition by two independent routes, plus vertex minors.

Route one realizes a graph directly: exhaustive search for a double
occurrence word whose interlacement graph is isomorphic to the input.
Route two excludes the three known obstructions (the 5-wheel, the 7-wheel,
and the 3-wheel with subdivided spokes) as vertex minors. The obstruction
table is shipped as data but never trusted blindly: the test suite checks
all three against the brute-force searcher and cross-checks the two routes
on every graph with up to six vertices, and ``method="both"`` raises
loudly on any disagreement at runtime.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .graphs import (
    Graph,
    canonical_form,
    deleted,
    graph_from_form,
    isomorphic,
    local_complement,
)
from .words import DOWord

REALIZE_BOUND = 8
CLOSURE_BOUND = 8

__all__ = [
    "CLOSURE_BOUND",
    "REALIZE_BOUND",
    "OBSTRUCTION_NAMES",
    "RecognitionMismatch",
    "RecognitionResult",
    "VertexMinorTrace",
    "has_vertex_minor",
    "is_circle_graph",
    "obstruction_graph",
    "realize_brute_force",
    "vertex_minor_closure",
]


class RecognitionMismatch(Exception):
    """The realization search and the obstruction test disagreed.

    This should be impossible; it means either the obstruction table or
    the searcher is wrong, so it is raised loudly instead of picking a
    side.
    """


# -- obstruction table ----------------------------------------------------------


def _wheel(rim: int) -> Graph:
    """Wheel graph: a rim cycle plus a hub adjacent to every rim vertex."""
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph(rim + 1, edges)


def _subdivided_w3() -> Graph:
    """The 3-wheel with every spoke subdivided once (7 vertices, 9 edges).

    Hub 0, rim triangle 1-2-3, subdivision vertices 4, 5, 6 sitting on the
    spokes to 1, 2, 3 respectively.
    """
    edges = [(1, 2), (2, 3), (1, 3), (0, 4), (4, 1), (0, 5), (5, 2), (0, 6), (6, 3)]
    return Graph(7, edges)


OBSTRUCTION_NAMES = ("W5", "W7", "BW3")


def obstruction_graph(name: str) -> Graph:
    if name == "W5":
        return _wheel(5)
    if name == "W7":
        return _wheel(7)
    if name == "BW3":
        return _subdivided_w3()
    raise ValueError(f"unknown obstruction {name!r}")


@lru_cache(maxsize=1)
def _obstruction_forms() -> dict[str, str]:
    return {canonical_form(obstruction_graph(name)): name for name in OBSTRUCTION_NAMES}


# -- brute-force realization -----------------------------------------------------


def realize_brute_force(g: Graph) -> DOWord | None:
    """Search for a double occurrence word whose interlacement graph is
    isomorphic to g; None if no such word exists.

    Enumerates the perfect matchings of 2n circle positions (each chord
    pairs two positions) by always pairing the first free position, so that
    chords are numbered in first-occurrence order. Pruning: a finished
    chord's crossings with finished chords bound its final degree from
    below, crossings still to come add at most one per unfinished chord,
    and the running crossing total must be able to reach exactly the edge
    count of g. The witness is relabeled through the isomorphism found and
    returned in canonical form.
    """
    n = g.n
    if n > REALIZE_BOUND:
        raise ValueError(f"realization search capped at {REALIZE_BOUND} vertices")
    if n == 0:
        return DOWord(())
    m = 2 * n
    target_degrees = sorted(row.bit_count() for row in g.rows)
    dmax = target_degrees[-1]
    dmin = target_degrees[0]
    edge_target = sum(target_degrees) // 2

    partner = [-1] * m
    chords: list[tuple[int, int]] = []
    cross = [0] * n

    def leaf_word() -> DOWord | None:
        edges = []
        for i in range(n):
            a1, a2 = chords[i]
            for j in range(i + 1, n):
                b1, b2 = chords[j]
                if (a1 < b1 < a2) != (a1 < b2 < a2):
                    edges.append((i, j))
        iso = isomorphic(Graph(n, edges), g)
        if iso is None:
            return None
        letters = [""] * m
        for idx, (a, b) in enumerate(chords):
            name = g.label(iso[idx])
            letters[a] = name
            letters[b] = name
        return DOWord(letters)

    def search(total_cross: int) -> DOWord | None:
        first = 0
        while partner[first] >= 0:
            first += 1
        k = len(chords)
        rem_after = n - k - 1  # chords still to start once this one closes
        for j in range(first + 1, m):
            if partner[j] >= 0:
                continue
            new_cross = 0
            touched = []
            ok = True
            for idx in range(k):
                if first < chords[idx][1] < j:
                    if cross[idx] + 1 > dmax:
                        ok = False
                        break
                    new_cross += 1
                    touched.append(idx)
            if not ok or new_cross > dmax:
                continue
            if new_cross + rem_after < dmin:
                continue
            t = total_cross + new_cross
            if t > edge_target:
                continue
            # even crossing every remaining pair cannot reach the target
            if t + rem_after * (k + 1) + rem_after * (rem_after - 1) // 2 < edge_target:
                continue
            if rem_after == 0 and t != edge_target:
                continue
            partner[first] = j
            partner[j] = first
            chords.append((first, j))
            for idx in touched:
                cross[idx] += 1
            cross[k] = new_cross
            if rem_after == 0:
                found = leaf_word() if sorted(cross) == target_degrees else None
            else:
                found = search(t)
            if found is None:
                cross[k] = 0
                for idx in touched:
                    cross[idx] -= 1
                chords.pop()
                partner[first] = -1
                partner[j] = -1
            else:
                return found
        return None

    return search(0)


# -- vertex minors ---------------------------------------------------------------


@dataclass(frozen=True)
class VertexMinorTrace:
    """A replayable recipe: local complementations and vertex deletions.

    Each step is ("lc", v) or ("del", v); indices refer to the graph at
    that point in the replay (deletions renumber the remaining vertices in
    increasing order, exactly like ``induced``).
    """

    steps: tuple[tuple[str, int], ...]

    def replay(self, g: Graph) -> Graph:
        for op, v in self.steps:
            if op == "lc":
                g = local_complement(g, v)
            elif op == "del":
                g = deleted(g, v)
            else:
                raise ValueError(f"unknown trace step {op!r}")
        return g

    def __str__(self) -> str:
        if not self.steps:
            return "identity"
        return " ".join(f"{op}:{v}" for op, v in self.steps)


@lru_cache(maxsize=None)
def _minor_children(form: str) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Canonical forms reachable from a canonical representative in one step:
    (local complementations, single vertex deletions)."""
    g = graph_from_form(form)
    lc = sorted({canonical_form(local_complement(g, v)) for v in range(g.n)})
    dl = sorted({canonical_form(deleted(g, v)) for v in range(g.n)})
    return tuple(lc), tuple(dl)


def _form_order(form: str) -> int:
    return int(form.partition(":")[0])


def vertex_minor_closure(g: Graph, min_vertices: int = 0) -> set[str]:
    """Canonical forms of every graph obtainable from g by interleaving
    local complementations and vertex deletions, keeping at least
    ``min_vertices`` vertices. Includes g itself.
    """
    if g.n > CLOSURE_BOUND:
        raise ValueError(f"vertex-minor closure capped at {CLOSURE_BOUND} vertices")
    start = canonical_form(g)
    seen = {start}
    queue = deque([start])
    while queue:
        form = queue.popleft()
        lc, dl = _minor_children(form)
        children = lc if _form_order(form) <= min_vertices else lc + dl
        for child in children:
            if child not in seen:
                seen.add(child)
                queue.append(child)
    return seen


def has_vertex_minor(g: Graph, h: Graph) -> VertexMinorTrace | None:
    """A replayable trace turning g into a graph isomorphic to h, or None.

    Breadth-first over labeled graphs, deduplicated by canonical form, so
    the returned trace is one of minimum step count.
    """
    if g.n > CLOSURE_BOUND:
        raise ValueError(f"vertex-minor search capped at {CLOSURE_BOUND} vertices")
    target = canonical_form(h)
    if h.n > g.n:
        return None
    start = Graph.from_rows(g.n, g.rows)  # drop labels: traces are index-based
    if canonical_form(start) == target:
        return VertexMinorTrace(())
    seen = {canonical_form(start)}
    queue: deque[tuple[Graph, tuple[tuple[str, int], ...]]] = deque([(start, ())])
    while queue:
        current, steps = queue.popleft()
        moves: list[tuple[str, int]] = [("lc", v) for v in range(current.n)]
        if current.n > h.n:
            moves += [("del", v) for v in range(current.n)]
        for op, v in moves:
            child = (
                local_complement(current, v) if op == "lc" else deleted(current, v)
            )
            form = canonical_form(child)
            if form in seen:
                continue
            seen.add(form)
            trace = steps + ((op, v),)
            if form == target:
                return VertexMinorTrace(trace)
            queue.append((child, trace))
    return None


# -- the two recognizers ----------------------------------------------------------

# Canonical forms whose whole vertex-minor closure is known obstruction-free.
_KNOWN_FREE: set[str] = set()


def _find_obstruction(g: Graph) -> str | None:
    """Name of an obstruction occurring as a vertex minor of g, or None.

    Searches the closure with early exit; when a closure is fully explored
    without hitting an obstruction, every visited form is remembered as
    clean, which makes bulk runs over related graphs cheap.
    """
    forms = _obstruction_forms()
    start = canonical_form(g)
    if start in _KNOWN_FREE:
        return None
    if start in forms:
        return forms[start]
    seen = {start}
    queue = deque([start])
    while queue:
        form = queue.popleft()
        lc, dl = _minor_children(form)
        for child in lc + dl:
            if child in seen or child in _KNOWN_FREE:
                continue
            if child in forms:
                return forms[child]
            seen.add(child)
            queue.append(child)
    _KNOWN_FREE.update(seen)
    return None


@dataclass(frozen=True)
class RecognitionResult:
    """Outcome of a circle-graph check.

    ``word`` is the realization witness when the brute-force route ran and
    accepted; ``obstruction``/``trace`` name and reach the excluded vertex
    minor when the obstruction route rejected.
    """

    is_circle: bool
    word: DOWord | None = None
    obstruction: str | None = None
    trace: VertexMinorTrace | None = None


def is_circle_graph(g: Graph, method: str = "both") -> RecognitionResult:
    """Decide circle-graph membership; ``method`` is "brute", "obstruction"
    or "both". With "both" the two independent routes must agree, and a
    disagreement raises RecognitionMismatch."""
    if method not in ("brute", "obstruction", "both"):
        raise ValueError(f"unknown method {method!r}")
    word = None
    brute_answer = None
    if method in ("brute", "both"):
        word = realize_brute_force(g)
        brute_answer = word is not None
        if method == "brute":
            return RecognitionResult(brute_answer, word=word)
    hit = _find_obstruction(g)
    if hit is None:
        result = RecognitionResult(True, word=word)
    else:
        trace = has_vertex_minor(g, obstruction_graph(hit))
        if trace is None:
            raise RecognitionMismatch(
                f"closure reached {hit} but no trace was found; searcher bug"
            )
        result = RecognitionResult(False, word=word, obstruction=hit, trace=trace)
    if brute_answer is not None and brute_answer != result.is_circle:
        raise RecognitionMismatch(
            "realization search says "
            f"{'circle' if brute_answer else 'not a circle graph'} but the "
            f"obstruction test says {'circle' if result.is_circle else hit}; "
            "the obstruction table or the searcher is wrong"
        )
    return result
