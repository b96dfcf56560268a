"""Immutable graphs on dense integer vertices with bit-set adjacency.

Vertex sets are plain Python ints used as bit masks (bit v set <=> vertex v in
the set).  All the partitioning machinery reduces to unions, intersections and
popcounts of these masks, which big-int arithmetic handles efficiently up to
the few-thousand-vertex scale this package targets.

The text interchange format is a header line "n m" followed by m lines "u v",
one edge per line; '#' starts a comment.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CapabilityError

# odd_girth value for graphs without odd cycles
INFINITE_GIRTH = math.inf

_CLIQUE_LIMIT = 12
_CYCLE_LIMIT = 15


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


class Graph:
    """Immutable simple graph; construct through build_graph."""

    __slots__ = ("n", "m", "edges", "adj")

    def __init__(self, n: int, edges: tuple[tuple[int, int], ...], adj: tuple[int, ...]):
        self.n = n
        self.m = len(edges)
        self.edges = edges
        self.adj = adj

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def delete_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        drop = set()
        for u, v in pairs:
            e = (u, v) if u < v else (v, u)
            if not self.has_edge(*e):
                raise ValueError(f"edge ({u}, {v}) not present")
            drop.add(e)
        kept = tuple(e for e in self.edges if e not in drop)
        return build_graph(self.n, kept)

    def induced(self, vmask: int) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on the masked vertices plus the local->global map."""
        if vmask & ~self.full_mask:
            raise ValueError("vertex mask out of range")
        verts = bits_list(vmask)
        index = {g: i for i, g in enumerate(verts)}
        edges = []
        for g in verts:
            for h in iter_bits(self.adj[g] & vmask):
                if g < h:
                    edges.append((index[g], index[h]))
        return build_graph(len(verts), edges), tuple(verts)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validate, deduplicate and normalize an edge list into a Graph."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    seen = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"edge ({u}, {v}) is a self-loop")
        seen.add((u, v) if u < v else (v, u))
    edges = tuple(sorted(seen))
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, edges, tuple(adj))


def bfs_layers(G: Graph, v: int, depth: int) -> list[int]:
    """Masks of vertices at distance exactly 0..depth from v (empty once exhausted)."""
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    layers = [1 << v]
    seen = 1 << v
    for _ in range(depth):
        nxt = 0
        for u in iter_bits(layers[-1]):
            nxt |= G.adj[u]
        nxt &= ~seen
        seen |= nxt
        layers.append(nxt)
    return layers


def degree_sum(G: Graph, S: int) -> int:
    """Sum of degrees over the masked vertices (internal edges count twice)."""
    if S & ~G.full_mask:
        raise ValueError("vertex mask out of range")
    return sum(G.adj[u].bit_count() for u in iter_bits(S))


def edges_between(G: Graph, S: int, T: int) -> int:
    """Ordered-pair edge count |{(u,v) in S x T : uv is an edge}|."""
    if (S | T) & ~G.full_mask:
        raise ValueError("vertex mask out of range")
    return sum((G.adj[u] & T).bit_count() for u in iter_bits(S))


def edges_inside(G: Graph, S: int) -> int:
    """Number of edges with both endpoints in the masked set."""
    return edges_between(G, S, S) // 2


def neighborhood(G: Graph, S: int, within: Optional[int] = None) -> int:
    """Union of neighborhoods of the masked set, minus the set itself."""
    if within is None:
        within = G.full_mask
    nb = 0
    for u in iter_bits(S):
        nb |= G.adj[u]
    return nb & within & ~S


def odd_girth(G: Graph) -> float:
    """Length of the shortest odd cycle, or INFINITE_GIRTH if none exists.

    Layered BFS from every vertex; the first layer containing an internal edge
    closes an odd cycle of length 2*depth + 1, and minimizing over start
    vertices is exact for the shortest odd cycle.
    """
    best = INFINITE_GIRTH
    for v in range(G.n):
        frontier = 1 << v
        seen = frontier
        depth = 0
        while frontier and 2 * depth + 1 < best:
            if any(G.adj[u] & frontier for u in iter_bits(frontier)):
                best = 2 * depth + 1
                break
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= G.adj[u]
            frontier = nxt & ~seen
            seen |= frontier
            depth += 1
        if best == 3:
            return 3
    return best


def find_clique(G: Graph, r: int) -> Optional[tuple[int, ...]]:
    """Lexicographically least r-clique (as a sorted tuple), or None."""
    if r < 1:
        raise ValueError("r must be positive")
    if r > _CLIQUE_LIMIT:
        raise CapabilityError(f"clique search supports r <= {_CLIQUE_LIMIT}, got {r}")
    if r == 1:
        return (0,) if G.n else None
    cand0 = mask_of(v for v in range(G.n) if G.degree(v) >= r - 1)

    def grow(prefix: tuple[int, ...], cand: int, need: int) -> Optional[tuple[int, ...]]:
        if need == 0:
            return prefix
        if cand.bit_count() < need:
            return None
        for v in iter_bits(cand):
            above = ~((1 << (v + 1)) - 1)
            hit = grow(prefix + (v,), cand & G.adj[v] & above, need - 1)
            if hit is not None:
                return hit
        return None

    return grow((), cand0, r)


def contains_clique(G: Graph, r: int) -> bool:
    return find_clique(G, r) is not None


def find_cycle_of_length(G: Graph, length: int) -> Optional[tuple[int, ...]]:
    """First cycle on exactly `length` vertices under lowest-index DFS order.

    Anchored at each start vertex s in turn; only vertices above s may appear,
    so s is the least vertex of the returned cycle.  A partial path is pruned
    when the BFS distance back to s exceeds the remaining step budget.
    Returns None when no such cycle exists (in particular when length > n).
    """
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    if length > _CYCLE_LIMIT:
        raise CapabilityError(f"cycle search supports length <= {_CYCLE_LIMIT}, got {length}")
    if length > G.n:
        return None
    for s in range(G.n):
        region = G.full_mask & ~((1 << s) - 1)
        # BFS distances from s within the region
        dist = [-1] * G.n
        dist[s] = 0
        frontier = 1 << s
        seen = frontier
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= G.adj[u]
            nxt &= region & ~seen
            for u in iter_bits(nxt):
                dist[u] = d
            seen |= nxt
            frontier = nxt

        path = [s]

        def dfs(u: int, used: int, count: int) -> Optional[tuple[int, ...]]:
            if count == length:
                if G.adj[u] >> s & 1 and path[1] < path[-1]:
                    return tuple(path)
                return None
            budget = length - count
            for w in iter_bits(G.adj[u] & region & ~used):
                if dist[w] < 0 or dist[w] > budget:
                    continue
                path.append(w)
                hit = dfs(w, used | (1 << w), count + 1)
                if hit is not None:
                    return hit
                path.pop()
            return None

        found = dfs(s, 1 << s, 1)
        if found is not None:
            return found
    return None


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" header plus "u v" lines format ('#' comments allowed)."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header announces {m} edges but {len(rows) - 1} lines follow")
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must be 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(n, edges)


def format_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"
