"""The extension property, BIT-graph witnesses, and the witness-set
transformation for local complementation.

The BIT graph joins i < j whenever bit i of j is set; it is the concrete
model used here because extension witnesses can be computed in closed form.
``locomp_witness_sets`` transports an extension query (U, W) across one
local complementation: a vertex adjacent to exactly U' within U' + W'
before complementing at v is adjacent to exactly U within U + W afterwards.
The transformation is pure set algebra and holds on arbitrary finite
graphs, which is how the tests validate it.

In the v-in-U case the returned sets are

    U' = (U - N(v)) + (W * N(v))
    W' = (U * N(v)) + (W - N(v))

(- difference, * intersection, + union). Note the W - N(v) term: replacing
it with U - N(v), which makes W' collapse to U, breaks the transported
property outright; the test suite exhibits counterexamples.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .graphs import MAX_VERTICES, Graph

__all__ = [
    "ExtensionReport",
    "bit_graph",
    "bit_witness",
    "check_extension",
    "extension_witness",
    "locomp_witness_sets",
]


def bit_graph(n: int) -> Graph:
    """Graph on 0..n-1 with i < j adjacent iff bit i of j is set."""
    if n > MAX_VERTICES:
        raise ValueError(f"bit graph capped at {MAX_VERTICES} vertices")
    edges = [(i, j) for j in range(n) for i in range(j) if (j >> i) & 1]
    return Graph(n, edges)


def bit_witness(u_set: set[int], w_set: set[int]) -> int:
    """Least x larger than every element of U + W whose binary expansion has
    every bit of U set and every bit of W unset.

    Read inside the (unbounded) BIT graph, x is adjacent to exactly U
    within U + W: adjacency of x to smaller integers is decided by the
    bits of x.
    """
    u_set, w_set = set(u_set), set(w_set)
    if u_set & w_set:
        raise ValueError("U and W must be disjoint")
    if any(k < 0 for k in u_set | w_set):
        raise ValueError("set elements must be non-negative")
    mask_u = sum(1 << i for i in u_set)
    mask_w = sum(1 << i for i in w_set)
    lower = max(u_set | w_set, default=-1) + 1
    if mask_u >= lower:
        return mask_u  # the smallest valid value overall
    if lower & mask_u == mask_u and lower & mask_w == 0:
        return lower
    # Otherwise the answer exceeds ``lower`` at some highest position p:
    # it copies lower's bits above p, raises bit p from 0 to 1, and below p
    # keeps only the required bits. Scanning p gives the minimum without
    # enumerating values.
    best = None
    top = max(lower.bit_length(), mask_w.bit_length()) + 1
    for p in range(top + 1):
        if (mask_w >> p) & 1:
            continue  # bit p must stay clear
        if (lower >> p) & 1:
            continue  # x must exceed lower at p
        high = (lower >> (p + 1)) << (p + 1)
        if high & mask_w:
            continue  # copied prefix raises a forbidden bit
        if mask_u & ~high & ~((1 << (p + 1)) - 1):
            continue  # a required bit above p is missing from the prefix
        candidate = high | (1 << p) | (mask_u & ((1 << p) - 1))
        if best is None or candidate < best:
            best = candidate
    assert best is not None  # the position above all w bits always qualifies
    return best


def extension_witness(g: Graph, u_set: set[int], w_set: set[int]) -> int | None:
    """Least vertex outside U + W adjacent to exactly U within U + W."""
    u_set, w_set = set(u_set), set(w_set)
    if u_set & w_set:
        raise ValueError("U and W must be disjoint")
    both = u_set | w_set
    if any(not 0 <= v < g.n for v in both):
        raise ValueError("set elements must be vertices of the graph")
    union_mask = sum(1 << v for v in both)
    u_mask = sum(1 << v for v in u_set)
    for x in range(g.n):
        if (union_mask >> x) & 1:
            continue
        if g.rows[x] & union_mask == u_mask:
            return x
    return None


def locomp_witness_sets(
    g: Graph, v: int, u_set: set[int], w_set: set[int]
) -> tuple[set[int], set[int]]:
    """Transport an extension query across local complementation at v.

    Any x outside U' + W' with N(x) * (U' + W') = U' in g satisfies
    N(x) * (U + W) = U in the complemented graph.
    """
    u_set, w_set = set(u_set), set(w_set)
    if u_set & w_set:
        raise ValueError("U and W must be disjoint")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if not (u_set | w_set) <= set(range(g.n)):
        raise ValueError("set elements must be vertices of the graph")
    if v not in u_set:
        return u_set, w_set | {v}
    nv = set(g.neighbors(v))
    u_prime = (u_set - nv) | (w_set & nv)
    w_prime = (u_set & nv) | (w_set - nv)
    return u_prime, w_prime


@dataclass(frozen=True)
class ExtensionReport:
    """Outcome of testing the extension property over a ground set.

    ``entries`` lists (U, W, witness or None) for every disjoint pair of
    subsets of the ground set, in a fixed enumeration order; ``passed`` is
    True iff every pair has a witness.
    """

    ground: tuple[int, ...]
    entries: tuple[tuple[tuple[int, ...], tuple[int, ...], int | None], ...]

    @property
    def passed(self) -> bool:
        return all(w is not None for _, _, w in self.entries)


def check_extension(g: Graph, ground: set[int]) -> ExtensionReport:
    """Test every disjoint (U, W) pair drawn from the ground set.

    Each ground element is independently assigned to U, W or neither, so a
    ground set of size k yields 3**k queries.
    """
    ground = tuple(sorted(set(ground)))
    if any(not 0 <= v < g.n for v in ground):
        raise ValueError("ground set must consist of vertices of the graph")
    entries = []
    for assignment in product((None, "u", "w"), repeat=len(ground)):
        u_set = {v for v, a in zip(ground, assignment) if a == "u"}
        w_set = {v for v, a in zip(ground, assignment) if a == "w"}
        witness = extension_witness(g, u_set, w_set)
        entries.append((tuple(sorted(u_set)), tuple(sorted(w_set)), witness))
    return ExtensionReport(ground, tuple(entries))
