"""Finite simple graphs on bitset rows.

Adjacency rows are plain integers used as bitmasks, which keeps local
complementation an XOR of masked rows and makes graph values cheap to hash,
compare and cache. The brute-force machinery (automorphisms, canonical
form, isomorphism-class enumeration) is capped at SEARCH_BOUND vertices;
everything this package computes stays well inside that.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

MAX_VERTICES = 64
SEARCH_BOUND = 10


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``rows[v]`` has bit u set iff uv is an edge. ``labels`` optionally
    names the vertices (chord names, word letters); two graphs are equal
    only if their labels agree as well.
    """

    __slots__ = ("n", "rows", "labels")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[str] | None = None,
    ) -> None:
        if n < 0 or n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.rows = tuple(rows)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError("label count does not match vertex count")
            if len(set(labels)) != n:
                raise ValueError("labels must be distinct")
        self.labels = labels

    @classmethod
    def from_rows(
        cls, n: int, rows: Sequence[int], labels: Sequence[str] | None = None
    ) -> "Graph":
        g = cls(n, (), labels)
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError("row count does not match vertex count")
        for v, row in enumerate(rows):
            if row >> n:
                raise ValueError(f"row {v} has bits beyond vertex {n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at {v}")
        for u in range(n):
            for v in range(u + 1, n):
                if ((rows[u] >> v) & 1) != ((rows[v] >> u) & 1):
                    raise ValueError("adjacency rows are not symmetric")
        g.rows = rows
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (self.rows[u] >> v) & 1
        ]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def label_index(self, name: str) -> int:
        if self.labels is None:
            v = int(name)
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {name} out of range")
            return v
        try:
            return self.labels.index(name)
        except ValueError:
            raise ValueError(f"unknown vertex label {name!r}") from None

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.rows == other.rows
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows, self.labels))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()!r})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def local_complement(g: Graph, v: int) -> Graph:
    """Toggle every edge with both ends in N(v); everything else unchanged."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    mask = g.rows[v]
    rows = list(g.rows)
    for u in _bits(mask):
        rows[u] ^= mask & ~(1 << u)
    return Graph.from_rows(g.n, rows, g.labels)


def induced(g: Graph, keep: Iterable[int]) -> Graph:
    """Induced subgraph on ``keep``, renumbered in increasing vertex order."""
    keep = sorted(set(keep))
    if keep and not (0 <= keep[0] and keep[-1] < g.n):
        raise ValueError("vertex set out of range")
    pos = {v: i for i, v in enumerate(keep)}
    rows = [0] * len(keep)
    for v in keep:
        row = 0
        for u in _bits(g.rows[v]):
            if u in pos:
                row |= 1 << pos[u]
        rows[pos[v]] = row
    labels = None
    if g.labels is not None:
        labels = [g.labels[v] for v in keep]
    return Graph.from_rows(len(keep), rows, labels)


def deleted(g: Graph, v: int) -> Graph:
    """Delete one vertex (induced subgraph on the rest)."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return induced(g, [u for u in range(g.n) if u != v])


def _degree_multiset(g: Graph) -> list[int]:
    return sorted(row.bit_count() for row in g.rows)


def isomorphic(g: Graph, h: Graph) -> list[int] | None:
    """First isomorphism g -> h in lexicographic backtracking order, or None.

    The returned list sends vertex i of g to image[i] in h.
    """
    if g.n != h.n or len(g.edges()) != len(h.edges()):
        return None
    if _degree_multiset(g) != _degree_multiset(h):
        return None
    n = g.n
    image = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        gi = g.rows[i]
        for t in range(n):
            if (used >> t) & 1:
                continue
            if g.degree(i) != h.degree(t):
                continue
            ok = True
            for j in range(i):
                if ((gi >> j) & 1) != ((h.rows[t] >> image[j]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[i] = t
            used |= 1 << t
            if extend(i + 1):
                return True
            used ^= 1 << t
            image[i] = -1
        return False

    return image if extend(0) else None


def automorphisms(g: Graph) -> list[list[int]]:
    """All adjacency-preserving bijections, in lexicographic order."""
    if g.n > SEARCH_BOUND:
        raise ValueError(f"automorphism search capped at {SEARCH_BOUND} vertices")
    n = g.n
    out: list[list[int]] = []
    image = [-1] * n
    used = 0

    def extend(i: int) -> None:
        nonlocal used
        if i == n:
            out.append(image.copy())
            return
        gi = g.rows[i]
        for t in range(n):
            if (used >> t) & 1:
                continue
            if g.degree(i) != g.degree(t):
                continue
            ok = True
            for j in range(i):
                if ((gi >> j) & 1) != ((g.rows[t] >> image[j]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[i] = t
            used |= 1 << t
            extend(i + 1)
            used ^= 1 << t
            image[i] = -1

    extend(0)
    return out


# -- canonical form -----------------------------------------------------------
#
# The canonical bit string is the minimum, over all vertex orderings, of the
# upper-triangle adjacency bits read column by column: placing the k-th vertex
# appends its adjacency bits to the k vertices already placed. Column order
# makes the string prefix-decidable, so the search can prune against the best
# ordering found so far.


def _bits_for_order(rows: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    bits: list[int] = []
    for k in range(1, len(order)):
        vk = order[k]
        for i in range(k):
            bits.append((rows[vk] >> order[i]) & 1)
    return tuple(bits)


@lru_cache(maxsize=None)
def _canonical_bits(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    if n <= 1:
        return ()
    # Vertices with identical adjacency outside a pair are twins; swapping
    # them is an automorphism, so only the lowest unplaced twin is explored.
    twin_mask = [0] * n
    for v in range(n):
        for u in range(n):
            if u != v:
                pair = (1 << u) | (1 << v)
                if (rows[u] & ~pair) == (rows[v] & ~pair):
                    twin_mask[v] |= 1 << u
    seed = sorted(range(n), key=lambda v: (rows[v].bit_count(), v))
    best = _bits_for_order(rows, seed)
    prefix: list[int] = []
    placed: list[int] = []

    def dfs(unplaced: int) -> None:
        nonlocal best
        cur = tuple(prefix)
        if cur > best[: len(cur)]:
            return
        k = len(placed)
        if k == n:
            if cur < best:
                best = cur
            return
        options = []
        mask = unplaced
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            mask ^= low
            if twin_mask[v] & unplaced & (low - 1):
                continue
            col = tuple((rows[v] >> p) & 1 for p in placed)
            options.append((col, v))
        options.sort()
        for col, v in options:
            prefix.extend(col)
            placed.append(v)
            dfs(unplaced ^ (1 << v))
            del prefix[len(prefix) - len(col) :]
            placed.pop()

    dfs((1 << n) - 1)
    return best


def canonical_bits(g: Graph) -> str:
    """Canonical upper-triangle bit string; equal iff graphs are isomorphic
    and have the same vertex count."""
    if g.n > SEARCH_BOUND:
        raise ValueError(f"canonical form capped at {SEARCH_BOUND} vertices")
    return "".join(str(b) for b in _canonical_bits(g.n, g.rows))


def canonical_form(g: Graph) -> str:
    """Compact canonical key ``<n>:<hex>`` packing the canonical bit string."""
    if g.n > SEARCH_BOUND:
        raise ValueError(f"canonical form capped at {SEARCH_BOUND} vertices")
    bits = _canonical_bits(g.n, g.rows)
    if not bits:
        return f"{g.n}:"
    value = 0
    for b in bits:
        value = (value << 1) | b
    width = (len(bits) + 3) // 4
    return f"{g.n}:{value:0{width}x}"


def graph_from_form(form: str) -> Graph:
    """Rebuild the canonical representative encoded by ``canonical_form``."""
    head, _, hexpart = form.partition(":")
    n = int(head)
    total = n * (n - 1) // 2
    value = int(hexpart, 16) if hexpart else 0
    bits = [(value >> (total - 1 - i)) & 1 for i in range(total)]
    edges = []
    pos = 0
    for k in range(1, n):
        for i in range(k):
            if bits[pos]:
                edges.append((i, k))
            pos += 1
    return Graph(n, edges)


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """Representatives of every isomorphism class on exactly n vertices,
    sorted by canonical form. Grown by attaching a new vertex to each
    class on n-1 vertices in every possible way."""
    if n == 0:
        return (Graph(0),)
    out: dict[str, Graph] = {}
    for smaller in all_graphs(n - 1):
        for mask in range(1 << (n - 1)):
            rows = list(smaller.rows) + [mask]
            for i in range(n - 1):
                if (mask >> i) & 1:
                    rows[i] |= 1 << (n - 1)
            form = canonical_form(Graph.from_rows(n, rows))
            if form not in out:
                out[form] = graph_from_form(form)
    return tuple(out[f] for f in sorted(out))


# -- text format ---------------------------------------------------------------


def parse_graphs(text: str) -> list[Graph]:
    """Parse one or more ``graph <n>`` blocks with ``edge <u> <v>`` lines."""
    out: list[Graph] = []
    n = -1
    edges: list[tuple[int, int]] = []
    started = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "graph":
            if len(parts) != 2:
                raise ValueError(f"bad graph header: {raw!r}")
            if started:
                out.append(Graph(n, edges))
            try:
                n = int(parts[1])
            except ValueError:
                raise ValueError(f"bad vertex count: {raw!r}") from None
            edges = []
            started = True
        elif parts[0] == "edge":
            if not started:
                raise ValueError("edge line before graph header")
            if len(parts) != 3:
                raise ValueError(f"bad edge line: {raw!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ValueError(f"bad edge line: {raw!r}") from None
            edges.append((u, v))
        else:
            raise ValueError(f"unknown directive: {raw!r}")
    if started:
        out.append(Graph(n, edges))
    if not out:
        raise ValueError("no graph block found")
    return out


def parse_graph(text: str) -> Graph:
    graphs = parse_graphs(text)
    if len(graphs) != 1:
        raise ValueError(f"expected exactly one graph block, found {len(graphs)}")
    return graphs[0]


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.n}"]
    lines.extend(f"edge {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])
