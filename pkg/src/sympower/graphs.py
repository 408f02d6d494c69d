"""Finite simple graphs over 0-indexed vertices with bitset adjacency.

Vertex sets are plain int bitmasks (bit v set = vertex v present), so set
algebra stays single operations on Python ints. Graphs are immutable after
construction; every operation here is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExhaustedError, GraphFormatError
from . import mis


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbour bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal the vertex count")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} adjacent to ids beyond {self.n - 1}")
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            m = mask
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return edge_pairs(self)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2


def vertex_mask(vertices: Iterable[int]) -> int:
    """Bitmask with the given vertex ids set."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def mask_members(mask: int) -> list[int]:
    """Sorted vertex ids present in a bitmask."""
    out = []
    while mask:
        lsb = mask & -mask
        out.append(lsb.bit_length() - 1)
        mask ^= lsb
    return out


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse silently."""
    if n < 1:
        raise ValueError("a graph needs at least one vertex")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def edge_pairs(g) -> list[tuple[int, int]]:
    """Edges (u, v) with u < v of any object exposing ``n`` and ``adj``."""
    out = []
    for u in range(g.n):
        m = g.adj[u] & ~((1 << (u + 1)) - 1)
        while m:
            lsb = m & -m
            out.append((u, lsb.bit_length() - 1))
            m ^= lsb
    return out


def to_edge_list(g) -> str:
    """Serialize to the edge-list format: header ``n m``, then one ``u v`` per edge."""
    pairs = edge_pairs(g)
    lines = [f"{g.n} {len(pairs)}"]
    lines.extend(f"{u} {v}" for u, v in pairs)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# named constructors


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("a complete graph needs at least 1 vertex")
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("an empty graph needs at least 1 vertex")
    return Graph(n, (0,) * n)


def petersen() -> Graph:
    # Kneser construction: vertices are the 2-subsets of {0..4} in lex order,
    # adjacent exactly when disjoint.
    pairs = [(a, b) for a in range(5) for b in range(a + 1, 5)]
    edges = []
    for i, p in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            q = pairs[j]
            if not set(p) & set(q):
                edges.append((i, j))
    return from_edges(10, edges)


_FAMILIES = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "empty": empty_graph,
}


def construct_named(name: str, size: int = 1) -> Graph:
    """Build a named graph family member; ``petersen`` ignores ``size``."""
    if name == "petersen":
        return petersen()
    builder = _FAMILIES.get(name)
    if builder is None:
        raise ValueError(f"unknown graph family {name!r}")
    if size < 1:
        raise ValueError("size must be positive")
    return builder(size)


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^C(n,2) labeled simple graphs on n vertices."""
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(slots)):
        yield from_edges(n, [slots[i] for i in range(len(slots)) if mask >> i & 1])


# ---------------------------------------------------------------------------
# parsing


def parse_graph(text: str) -> Graph:
    """Parse edge-list or DIMACS ``.col`` content into a Graph."""
    lines = text.splitlines()
    for line in lines:
        stripped = line.strip()
        if not stripped:
            continue
        if stripped[0] in ("c", "p"):
            return _parse_dimacs(lines)
        return _parse_edge_list(lines)
    raise GraphFormatError("empty graph input")


def _int_pair(tokens: list[str], line: str) -> tuple[int, int]:
    if len(tokens) != 2:
        raise GraphFormatError(f"expected two integers, got {line!r}")
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError:
        raise GraphFormatError(f"expected two integers, got {line!r}") from None


def _parse_edge_list(lines: list[str]) -> Graph:
    rows = [ln for ln in lines if ln.strip()]
    n, m = _int_pair(rows[0].split(), rows[0])
    if n < 1:
        raise GraphFormatError("vertex count must be positive")
    if m < 0 or len(rows) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        u, v = _int_pair(row.split(), row)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in {row!r}")
        if u == v:
            raise GraphFormatError(f"self-loop in {row!r}")
        edges.append((u, v))
    return from_edges(n, edges)


def _parse_dimacs(lines: list[str]) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    for line in lines:
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise GraphFormatError(f"malformed problem line {line!r}")
            n, m = _int_pair(tokens[2:], line)
            if n < 1 or m < 0:
                raise GraphFormatError("problem line must declare n >= 1 and m >= 0")
        elif tokens[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before problem line")
            u, v = _int_pair(tokens[1:], line)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex out of range in {line!r}")
            if u == v:
                raise GraphFormatError(f"self-loop in {line!r}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unrecognized line {line!r}")
    if n is None:
        raise GraphFormatError("missing problem line")
    if len(edges) != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(edges)}")
    return from_edges(n, edges)


# ---------------------------------------------------------------------------
# basic operations


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ g.adj[v]) & ~(1 << v) for v in range(g.n)))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on distinct vertices, relabelled 0..len-1 in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise ValueError("duplicate vertices")
    adj = [0] * len(vertices)
    for i, v in enumerate(vertices):
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        for u in mask_members(g.adj[v]):
            j = index.get(u)
            if j is not None:
                adj[i] |= 1 << j
    return Graph(len(vertices), tuple(adj))


def is_independent(g, members_mask: int) -> bool:
    """True iff no edge of g has both endpoints inside the bitmask."""
    m = members_mask
    while m:
        lsb = m & -m
        v = lsb.bit_length() - 1
        m ^= lsb
        if g.adj[v] & members_mask:
            return False
    return True


def closed_neighborhood(g, v: int) -> int:
    """Bitmask of v together with its neighbours."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return g.adj[v] | (1 << v)


# ---------------------------------------------------------------------------
# exact base parameters


def alpha_exact(g, max_nodes: int = mis.DEFAULT_MAX_NODES,
                max_seconds: float = mis.DEFAULT_MAX_SECONDS) -> int:
    """Exact independence number; raises when the solver budget runs out."""
    report = mis.solve_exact(g, max_nodes=max_nodes, max_seconds=max_seconds)
    if not report.optimal:
        raise BudgetExhaustedError("independence-number search exceeded its budget")
    return report.alpha


def clique_cover_number(g: Graph, max_nodes: int = 10**7) -> int:
    """Minimum number of cliques covering the vertices, via exact coloring
    of the complement."""
    return chromatic_number(complement(g), max_nodes=max_nodes)


def _greedy_clique_mask(g: Graph) -> int:
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    clique = 0
    for v in order:
        if clique & ~g.adj[v] == 0:
            clique |= 1 << v
    return clique


def _greedy_color_count(g: Graph, order: Sequence[int]) -> int:
    classes: list[int] = []
    for v in order:
        av = g.adj[v]
        for i, cls in enumerate(classes):
            if av & cls == 0:
                classes[i] = cls | (1 << v)
                break
        else:
            classes.append(1 << v)
    return len(classes)


def chromatic_number(g: Graph, max_nodes: int = 10**7) -> int:
    """Exact chromatic number by branch and bound over vertex colorings.

    Vertices are colored in descending degree order; a greedy clique gives
    the initial lower bound and a greedy coloring the incumbent.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    best = _greedy_color_count(g, order)
    if _greedy_clique_mask(g).bit_count() >= best:
        return best

    color = [-1] * g.n
    nodes = 0

    def assign(i: int, used: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExhaustedError("coloring search exceeded its node budget")
        if used >= best:
            return
        if i == g.n:
            best = used
            return
        v = order[i]
        forbidden = 0
        m = g.adj[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if color[u] >= 0:
                forbidden |= 1 << color[u]
        for c in range(used):
            if not forbidden >> c & 1:
                color[v] = c
                assign(i + 1, used)
        if used + 1 < best:
            color[v] = used
            assign(i + 1, used + 1)
        color[v] = -1

    assign(0, 0)
    return best
