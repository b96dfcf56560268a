"""Exact references the heuristics are audited against.

min_internal_partition / exact_h solve the minimum-deletion k-partition
problem by branch and bound over canonical assignments (vertex 0 pinned to
block 0, a new block index only once all earlier ones appear).  exact_h_plain
re-solves it by unpruned enumeration for cross-checks.  The search is metered:
every tree node counts against a budget (default 10**7, overridable via the
KDELETE_BUDGET environment variable) and overruns raise BudgetExceeded rather
than silently stalling.

enumerate_graphs yields every labeled graph on up to 7 vertices (optionally
one representative per isomorphism class for n <= 5), and
mantel_worst_uncovered sweeps all of them at once with vectorized bit tricks
to evaluate worst-case single-neighborhood coverage.
"""

from __future__ import annotations

import os
from itertools import combinations, permutations, product
from typing import Iterator, Optional

import numpy as np

from .errors import BudgetExceeded, CapabilityError
from .graphs import Graph, build_graph, edges_inside
from .partition import VertexPartition, greedy_complete, trivial_distinct

DEFAULT_BUDGET = 10**7
_PLAIN_LIMIT = 2 * 10**7
_ENUM_LIMIT = 7
_ISO_LIMIT = 5


def _resolve_budget(budget: Optional[int]) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("KDELETE_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


def min_internal_partition(
    G: Graph, k: int, budget: Optional[int] = None
) -> tuple[int, VertexPartition]:
    """Minimum internal-edge count over all k-block partitions, with an
    optimal partition realizing it.

    Branch and bound: vertices are assigned in index order, each to an
    existing block or the first unused one (so each partition is enumerated
    exactly once), pruning as soon as the accumulated cost reaches the best
    known.  The greedy completion seeds the incumbent.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = G.n
    if n == 0:
        return 0, VertexPartition(0, (0,) * k)
    if k >= n:
        return 0, trivial_distinct(n, k)
    limit = _resolve_budget(budget)
    part, _ = greedy_complete(G, [0] * k)
    best_cost = part.internal_count(G)
    best_blocks = list(part.blocks)
    blocks = [0] * k
    adj = G.adj
    nodes = 0

    def dfs(v: int, used: int, cost: int) -> None:
        nonlocal nodes, best_cost, best_blocks
        nodes += 1
        if nodes > limit:
            raise BudgetExceeded(
                f"exact search exceeded {limit} nodes (n={n}, k={k})"
            )
        if v == n:
            if cost < best_cost:
                best_cost = cost
                best_blocks = blocks.copy()
            return
        top = used + 1 if used < k else k
        bit = 1 << v
        av = adj[v]
        for i in range(top):
            extra = (av & blocks[i]).bit_count()
            if cost + extra < best_cost:
                blocks[i] |= bit
                dfs(v + 1, used + (1 if i == used else 0), cost + extra)
                blocks[i] ^= bit

    if best_cost > 0:
        dfs(0, 0, 0)
    return best_cost, VertexPartition(n, tuple(best_blocks))


def exact_h(G: Graph, k: int, budget: Optional[int] = None) -> int:
    """Minimum number of edge deletions making G k-colorable."""
    return min_internal_partition(G, k, budget=budget)[0]


def exact_h_plain(G: Graph, k: int) -> int:
    """exact_h by unpruned enumeration of all assignments (vertex 0 fixed).

    Deliberately independent of the branch-and-bound path so the two can
    cross-check each other.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = G.n
    if n == 0:
        return 0
    if k ** (n - 1) > _PLAIN_LIMIT:
        raise CapabilityError(
            f"exact_h_plain needs k**(n-1) <= {_PLAIN_LIMIT} (got {k}**{n - 1})"
        )
    edges = G.edges
    best = G.m
    for rest in product(range(k), repeat=n - 1):
        labels = (0,) + rest
        internal = 0
        for u, v in edges:
            if labels[u] == labels[v]:
                internal += 1
                if internal >= best:
                    break
        if internal < best:
            best = internal
            if best == 0:
                break
    return best


def is_k_colorable(G: Graph, k: int) -> bool:
    """Proper k-colorability by canonical backtracking."""
    if k < 1:
        raise ValueError("k must be positive")
    n = G.n
    if k >= n:
        return True
    blocks = [0] * k
    adj = G.adj

    def dfs(v: int, used: int) -> bool:
        if v == n:
            return True
        top = used + 1 if used < k else k
        bit = 1 << v
        av = adj[v]
        for i in range(top):
            if not av & blocks[i]:
                blocks[i] |= bit
                if dfs(v + 1, used + (1 if i == used else 0)):
                    return True
                blocks[i] ^= bit
        return False

    return dfs(0, 0)


def _graph_from_code(n: int, code: int, pairs: list[tuple[int, int]]) -> Graph:
    return build_graph(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])


def canonical_code(G: Graph) -> int:
    """Smallest edge-bitmask over all vertex relabelings (n <= 7)."""
    n = G.n
    if n > _ENUM_LIMIT:
        raise CapabilityError(f"canonical_code needs n <= {_ENUM_LIMIT}")
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    best = None
    for perm in permutations(range(n)):
        code = 0
        for u, v in G.edges:
            a, b = perm[u], perm[v]
            code |= 1 << index[(a, b) if a < b else (b, a)]
        if best is None or code < best:
            best = code
    return best or 0


def enumerate_graphs(n: int, up_to_iso: bool = False) -> Iterator[Graph]:
    """All labeled graphs on n vertices, in edge-bitmask order.

    With up_to_iso=True only the lexicographically least member of each
    isomorphism class is yielded (kept to n <= 5, where the permutation
    work stays trivial).
    """
    if n < 1 or n > _ENUM_LIMIT:
        raise CapabilityError(f"enumerate_graphs needs 1 <= n <= {_ENUM_LIMIT}")
    if up_to_iso and n > _ISO_LIMIT:
        raise CapabilityError(f"isomorphism filtering needs n <= {_ISO_LIMIT}")
    pairs = list(combinations(range(n), 2))
    if not up_to_iso:
        for code in range(1 << len(pairs)):
            yield _graph_from_code(n, code, pairs)
        return
    index = {p: i for i, p in enumerate(pairs)}
    # perm_maps[p][i] = image of pair-bit i under vertex permutation p
    perm_maps = []
    for perm in permutations(range(n)):
        row = []
        for u, v in pairs:
            a, b = perm[u], perm[v]
            row.append(index[(a, b) if a < b else (b, a)])
        perm_maps.append(row)
    nbits = len(pairs)
    for code in range(1 << nbits):
        canon = code
        for row in perm_maps:
            mapped = 0
            for i in range(nbits):
                if code >> i & 1:
                    mapped |= 1 << row[i]
            if mapped < canon:
                canon = mapped
                break  # a smaller image exists, so code is not canonical
        if canon == code:
            yield _graph_from_code(n, code, pairs)


def _popcount_u32(a: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(a).astype(np.int64)
    lut = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int64)
    return lut[a & 0xFFFF] + lut[a >> 16]


def min_uncovered_single(G: Graph) -> int:
    """min over vertices v of (m - e(G[N(v)])): the edges a single
    neighborhood must leave behind."""
    if G.n == 0:
        return 0
    return min(G.m - edges_inside(G, G.adj[v]) for v in range(G.n))


def mantel_worst_uncovered(n: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    """max over all labeled graphs on n vertices of min_uncovered_single,
    with a witness graph attaining it.

    Vectorized over all 2^C(n,2) edge subsets at once: for each vertex the
    incident-edge bits index a neighborhood lookup table, a pair-mask table
    turns neighborhoods into the edge set they span, and popcounts do the
    rest.  The extremal value is floor(n^2/4), attained by balanced complete
    bipartite graphs.
    """
    if n < 1 or n > _ENUM_LIMIT:
        raise CapabilityError(f"mantel_worst_uncovered needs 1 <= n <= {_ENUM_LIMIT}")
    pairs = list(combinations(range(n), 2))
    nbits = len(pairs)
    if nbits == 0:
        return 0, ()
    index = {p: i for i, p in enumerate(pairs)}
    codes = np.arange(1 << nbits, dtype=np.uint32)
    m_all = _popcount_u32(codes)

    # pairmask[mask] = bitset of pair indices with both endpoints in mask
    pairmask = np.zeros(1 << n, dtype=np.uint32)
    for mask in range(1 << n):
        bits = 0
        for i, (u, v) in enumerate(pairs):
            if mask >> u & 1 and mask >> v & 1:
                bits |= 1 << i
        pairmask[mask] = bits

    best_min = None
    for v in range(n):
        others = [u for u in range(n) if u != v]
        inc = [index[(u, v) if u < v else (v, u)] for u in others]
        pat = np.zeros_like(codes)
        for slot, bit in enumerate(inc):
            pat |= ((codes >> np.uint32(bit)) & np.uint32(1)) << np.uint32(slot)
        nbr = np.zeros(1 << (n - 1), dtype=np.uint32)
        for p in range(1 << (n - 1)):
            mask = 0
            for slot in range(n - 1):
                if p >> slot & 1:
                    mask |= 1 << others[slot]
            nbr[p] = mask
        inside = _popcount_u32(codes & pairmask[nbr[pat]])
        unc = m_all - inside
        best_min = unc if best_min is None else np.minimum(best_min, unc)

    worst = int(best_min.max())
    code = int(best_min.argmax())
    witness = tuple(pairs[i] for i in range(nbits) if code >> i & 1)
    return worst, witness
