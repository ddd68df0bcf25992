"""Boundary cliques, edge classes, and lifting graph automorphisms to
endpoint maps.

All chords through one circle point pairwise meet there, so each point
carries a clique of the CLOSED intersection graph (its boundary clique).
An automorphism of that graph lifts to a bijection of the diagram's
endpoints only if it maps each boundary clique onto a boundary clique and
maps every chord onto the chord spanned by the image endpoints. Finite
diagrams routinely refuse: the lift then fails with a witness saying which
requirement broke, either an incident pair of chords sent to a crossing
pair (or vice versa), or a boundary clique with no consistent image.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circle import CirclePoint
from .diagram import ChordDiagram, IntersectionMode, intersection_graph, intersects
from .graphs import automorphisms

__all__ = [
    "EdgeClasses",
    "LiftFailure",
    "LiftResult",
    "boundary_cliques",
    "class_preserving_automorphisms",
    "edge_classes",
    "format_permutation",
    "lift_automorphism",
    "parse_permutation",
]

AUTOMORPHISM_BOUND = 10


def boundary_cliques(d: ChordDiagram) -> dict[CirclePoint, frozenset[str]]:
    """Group chord names by endpoint; every value is a CLOSED-mode clique."""
    out: dict[CirclePoint, set[str]] = {}
    for name, chord in d:
        out.setdefault(chord.p, set()).add(name)
        out.setdefault(chord.q, set()).add(name)
    return {pt: frozenset(names) for pt, names in out.items()}


@dataclass(frozen=True)
class EdgeClasses:
    """Partition of the CLOSED-mode edges into incident and crossing pairs.

    Pairs are frozensets of two chord names.
    """

    incident: frozenset[frozenset[str]]
    crossing: frozenset[frozenset[str]]

    def classify(self, a: str, b: str) -> str | None:
        pair = frozenset((a, b))
        if pair in self.incident:
            return "incident"
        if pair in self.crossing:
            return "crossing"
        return None


def edge_classes(d: ChordDiagram) -> EdgeClasses:
    incident = set()
    crossing = set()
    entries = d.entries
    for i in range(len(entries)):
        name_i, chord_i = entries[i]
        for j in range(i + 1, len(entries)):
            name_j, chord_j = entries[j]
            if intersects(chord_i, chord_j, IntersectionMode.CROSSING):
                crossing.add(frozenset((name_i, name_j)))
            elif intersects(chord_i, chord_j, IntersectionMode.CLOSED):
                incident.add(frozenset((name_i, name_j)))
    return EdgeClasses(frozenset(incident), frozenset(crossing))


@dataclass(frozen=True)
class LiftFailure:
    """Why an automorphism admits no endpoint lift.

    kind "incidence": an incident pair of chords was mapped to a crossing
    pair or vice versa (detail names the pair and its image). kind
    "boundary": boundary cliques cannot be matched consistently (detail
    names the stuck point or records that no assignment survived).
    """

    kind: str
    detail: str


@dataclass(frozen=True)
class LiftResult:
    mapping: dict[CirclePoint, CirclePoint] | None
    failure: LiftFailure | None

    @property
    def ok(self) -> bool:
        return self.mapping is not None


def _check_automorphism(d: ChordDiagram, perm: dict[str, str]) -> None:
    names = d.names()
    if sorted(perm) != sorted(names) or sorted(perm.values()) != sorted(names):
        raise ValueError("permutation does not match the diagram's chord names")
    graph = intersection_graph(d, IntersectionMode.CLOSED)
    index = {name: i for i, name in enumerate(names)}
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            iu, iv = index[perm[names[u]]], index[perm[names[v]]]
            if graph.has_edge(u, v) != graph.has_edge(iu, iv):
                raise ValueError("not an automorphism of the closed intersection graph")


def lift_automorphism(d: ChordDiagram, perm: dict[str, str]) -> LiftResult:
    """Lift an automorphism of the CLOSED graph to an endpoint bijection.

    The lift h' must send every chord uv to the chord perm(uv) spanned by
    h'(u), h'(v). Candidate images are constrained boundary clique by
    boundary clique, then resolved by exhaustive search over consistent
    assignments; the first consistent assignment (points and candidates in
    increasing circle order) is returned.
    """
    _check_automorphism(d, perm)
    classes = edge_classes(d)
    for pair in sorted(classes.incident, key=sorted):
        a, b = sorted(pair)
        if frozenset((perm[a], perm[b])) not in classes.incident:
            return LiftResult(
                None,
                LiftFailure(
                    "incidence",
                    f"incident pair {{{a}, {b}}} maps to crossing pair "
                    f"{{{perm[a]}, {perm[b]}}}",
                ),
            )
    for pair in sorted(classes.crossing, key=sorted):
        a, b = sorted(pair)
        if frozenset((perm[a], perm[b])) not in classes.crossing:
            return LiftResult(
                None,
                LiftFailure(
                    "incidence",
                    f"crossing pair {{{a}, {b}}} maps to incident pair "
                    f"{{{perm[a]}, {perm[b]}}}",
                ),
            )

    cliques = boundary_cliques(d)
    points = sorted(cliques)
    by_set: dict[frozenset[str], list[CirclePoint]] = {}
    for pt in points:
        by_set.setdefault(cliques[pt], []).append(pt)
    candidates: dict[CirclePoint, list[CirclePoint]] = {}
    for pt in points:
        image_set = frozenset(perm[name] for name in cliques[pt])
        matches = by_set.get(image_set, [])
        if not matches:
            return LiftResult(
                None,
                LiftFailure(
                    "boundary",
                    f"chords at {pt} map to {sorted(image_set)}, which is "
                    "not the chord set of any point",
                ),
            )
        candidates[pt] = matches

    chord_points: dict[str, tuple[CirclePoint, CirclePoint]] = {
        name: chord.endpoints() for name, chord in d
    }
    assignment: dict[CirclePoint, CirclePoint] = {}
    used: set[CirclePoint] = set()

    def consistent(pt: CirclePoint) -> bool:
        # once both endpoints of a chord are assigned, they must span the
        # image chord exactly
        for name in cliques[pt]:
            u, v = chord_points[name]
            if u in assignment and v in assignment:
                image = {assignment[u], assignment[v]}
                if image != set(chord_points[perm[name]]):
                    return False
        return True

    def assign(i: int) -> bool:
        if i == len(points):
            return True
        pt = points[i]
        for target in candidates[pt]:
            if target in used:
                continue
            assignment[pt] = target
            used.add(target)
            if consistent(pt) and assign(i + 1):
                return True
            used.remove(target)
            del assignment[pt]
        return False

    if assign(0):
        return LiftResult(dict(assignment), None)
    return LiftResult(
        None,
        LiftFailure("boundary", "no consistent assignment of boundary cliques exists"),
    )


def class_preserving_automorphisms(d: ChordDiagram) -> list[dict[str, str]]:
    """Automorphisms of the CLOSED graph preserving both edge classes."""
    if len(d) > AUTOMORPHISM_BOUND:
        raise ValueError(f"automorphism search capped at {AUTOMORPHISM_BOUND} chords")
    names = d.names()
    graph = intersection_graph(d, IntersectionMode.CLOSED)
    classes = edge_classes(d)
    out = []
    for image in automorphisms(graph):
        perm = {names[i]: names[image[i]] for i in range(len(names))}
        ok = True
        for pair in classes.incident:
            a, b = tuple(pair)
            if frozenset((perm[a], perm[b])) not in classes.incident:
                ok = False
                break
        if ok:
            for pair in classes.crossing:
                a, b = tuple(pair)
                if frozenset((perm[a], perm[b])) not in classes.crossing:
                    ok = False
                    break
        if ok:
            out.append(perm)
    return out


# -- cycle notation ----------------------------------------------------------------


def format_permutation(perm: dict[str, str]) -> str:
    """Cycle notation, fixed points omitted; the identity prints as ``()``."""
    remaining = sorted(perm)
    seen: set[str] = set()
    cycles = []
    for start in remaining:
        if start in seen or perm[start] == start:
            seen.add(start)
            continue
        cycle = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = perm[x]
        cycles.append("(" + " ".join(cycle) + ")")
    return "".join(cycles) if cycles else "()"


def parse_permutation(text: str, names: tuple[str, ...]) -> dict[str, str]:
    """Parse cycle notation like ``(a c)(b e)`` over the given names."""
    perm = {name: name for name in names}
    text = text.strip()
    if text in ("", "()"):
        return perm
    if text.count("(") != text.count(")"):
        raise ValueError(f"unbalanced parentheses in permutation {text!r}")
    depth = 0
    cycles: list[list[str]] = []
    current: list[str] = []
    token = ""

    def flush_token() -> None:
        nonlocal token
        if token:
            current.append(token)
            token = ""

    for ch in text:
        if ch == "(":
            if depth:
                raise ValueError(f"nested parentheses in permutation {text!r}")
            depth = 1
            current = []
        elif ch == ")":
            if not depth:
                raise ValueError(f"stray ')' in permutation {text!r}")
            flush_token()
            depth = 0
            if current:
                cycles.append(current)
        elif ch.isspace():
            flush_token()
        else:
            if not depth:
                raise ValueError(f"text outside parentheses in permutation {text!r}")
            token += ch
    if depth:
        raise ValueError(f"unclosed '(' in permutation {text!r}")
    moved: set[str] = set()
    for cycle in cycles:
        for name in cycle:
            if name not in perm:
                raise ValueError(f"unknown name {name!r} in permutation")
            if name in moved:
                raise ValueError(f"name {name!r} appears twice in permutation")
            moved.add(name)
        for i, name in enumerate(cycle):
            perm[name] = cycle[(i + 1) % len(cycle)]
    return perm
