"""Packing edges inside few neighborhoods.

The quantity that drives the deletion bounds downstream is the number of
edges *not* captured by a union of neighborhoods: choose k centers v_1..v_k,
keep disjoint pieces S_i of their neighborhoods, and count
e(G) - e(G[S_1 | ... | S_k]).  Disjointifying never changes the union, so it
never changes the covered edge count either; it only makes the pieces usable
as partition seeds.

Three selectors are provided.  select_cover_random replays the probabilistic
argument directly (best of `trials` uniform draws).  select_cover_greedy is
plain max-coverage.  select_cover_expectation walks through the random draw
one center at a time, always moving to a center whose conditional expected
uncovered count does not exceed the current one; since the initial
expectation is below n^2/(e*k), the finished selection satisfies

    uncovered_edges <= n^2 / (e * k)

on every run, not merely on average.  All expectation comparisons are done in
exact integer arithmetic (scaled by n^j), so the chain of inequalities never
passes through a float.

even_parts refines a t-center selection into exactly 2t sets of size at most
n/t without losing covered edges; the recursive partitioners feed those
chunks to their per-piece subproblems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Optional, Sequence

from ._rng import SplitMix64, derive_seed
from .bounds import E_LOWER
from .errors import CapabilityError, InvariantViolation
from .graphs import Graph, bits_list, edges_inside, iter_bits

_EXACT_U_LIMIT = 10**7

STRATEGIES = ("greedy", "random", "expectation", "best")


@dataclass(frozen=True)
class CoverSelection:
    """Centers plus disjoint neighborhood pieces and the uncovered edge count.

    Invariants: disjoint_sets[i] is a subset of N(centers[i]), the sets are
    pairwise disjoint, and uncovered_edges = e(G) - e(G[union of the sets]).
    """

    centers: tuple[int, ...]
    disjoint_sets: tuple[int, ...]
    uncovered_edges: int

    @property
    def k(self) -> int:
        return len(self.centers)

    @property
    def union(self) -> int:
        u = 0
        for s in self.disjoint_sets:
            u |= s
        return u

    def validate(self, G: Graph) -> "CoverSelection":
        if len(self.centers) != len(self.disjoint_sets):
            raise InvariantViolation("centers and sets are misaligned")
        taken = 0
        for v, s in zip(self.centers, self.disjoint_sets):
            if s & ~G.adj[v]:
                raise InvariantViolation(f"set for center {v} leaves N({v})")
            if s & taken:
                raise InvariantViolation("cover sets overlap")
            taken |= s
        if G.m - edges_inside(G, taken) != self.uncovered_edges:
            raise InvariantViolation("uncovered_edges is stale")
        return self

    def to_json(self):
        return {
            "centers": list(self.centers),
            "sets": [bits_list(s) for s in self.disjoint_sets],
            "uncovered_edges": self.uncovered_edges,
        }


def disjointify(G: Graph, centers: Sequence[int]) -> list[int]:
    """N(v_i) minus the earlier neighborhoods, in center order."""
    taken = 0
    out = []
    for v in centers:
        piece = G.adj[v] & ~taken
        out.append(piece)
        taken |= piece
    return out


def selection_from_centers(G: Graph, centers: Sequence[int]) -> CoverSelection:
    sets = disjointify(G, centers)
    union = 0
    for s in sets:
        union |= s
    uncovered = G.m - edges_inside(G, union)
    return CoverSelection(tuple(centers), tuple(sets), uncovered)


def select_cover_random(
    G: Graph, k: int, trials: int = 1, seed: int = 0
) -> CoverSelection:
    """Best of `trials` independent uniform draws of k centers (repeats allowed)."""
    if k < 1:
        raise ValueError("k must be positive")
    if trials < 1:
        raise ValueError("trials must be positive")
    if G.n == 0:
        raise ValueError("cannot select centers in an empty graph")
    rng = SplitMix64(derive_seed(seed, 0x11, G.n, G.m, k))
    best: Optional[CoverSelection] = None
    for _ in range(trials):
        centers = tuple(rng.randrange(G.n) for _ in range(k))
        sel = selection_from_centers(G, centers)
        if best is None or sel.uncovered_edges < best.uncovered_edges:
            best = sel
    assert best is not None
    return best


def select_cover_greedy(G: Graph, k: int) -> CoverSelection:
    """k centers picked iteratively, each maximizing the newly covered edge
    count; ties break toward the lowest vertex index.

    With union U so far, adding v covers the edges incident to W = N(v) \\ U
    that stay inside U | W, i.e. e(W, U) + e(G[W]).
    """
    if k < 1:
        raise ValueError("k must be positive")
    if G.n == 0:
        raise ValueError("cannot select centers in an empty graph")
    union = 0
    centers = []
    for _ in range(k):
        best_v = 0
        best_gain = -1
        for v in range(G.n):
            fresh = G.adj[v] & ~union
            to_union = 0
            inside = 0
            for w in iter_bits(fresh):
                to_union += (G.adj[w] & union).bit_count()
                inside += (G.adj[w] & fresh).bit_count()
            gain = to_union + inside // 2
            if gain > best_gain:
                best_gain = gain
                best_v = v
        centers.append(best_v)
        union |= G.adj[best_v]
    return selection_from_centers(G, centers)


def _scaled_expectation(G: Graph, covered: int, j: int, pair_pow) -> int:
    """E[uncovered edges after j more uniform picks] * n**j, exactly.

    An endpoint x stays uncovered with probability ((n - d(x)) / n)**j if it
    is uncovered now, and an edge survives if either endpoint does, so by
    inclusion-exclusion the scaled expectation is

        sum_{x uncovered} d(x) * (n - d(x))**j
        - sum_{edges with both endpoints uncovered} (n - u_e)**j

    with u_e = |N(x) | N(y)|.  pair_pow maps an edge index to (n - u_e)**j.
    """
    n = G.n
    total = 0
    for x in range(n):
        if not (covered >> x & 1):
            d = G.degree(x)
            total += d * (n - d) ** j
    for idx, (x, y) in enumerate(G.edges):
        if not (covered >> x & 1) and not (covered >> y & 1):
            total -= pair_pow(idx)
    return total


def select_cover_expectation(G: Graph, k: int) -> CoverSelection:
    """Derandomized uniform draw: uncovered_edges <= n^2/(e*k) on every run.

    Maintains the conditional expectation of the final uncovered count and, at
    each step, picks the lowest-indexed center that does not increase it.  The
    average over all n candidate centers equals the current expectation, so
    such a center always exists; at j = 0 the expectation *is* the uncovered
    count, which is therefore bounded by the initial expectation n^2/(e*k).
    """
    if k < 1:
        raise ValueError("k must be positive")
    if G.n == 0:
        raise ValueError("cannot select centers in an empty graph")
    n = G.n
    union_size = [0] * G.m
    for idx, (x, y) in enumerate(G.edges):
        union_size[idx] = (G.adj[x] | G.adj[y]).bit_count()
    degs = [G.degree(v) for v in range(n)]

    covered = 0
    centers: list[int] = []
    for step in range(k):
        j = k - step - 1
        # Weights at the exponent for *after* this pick.
        w_vertex = [degs[x] * (n - degs[x]) ** j for x in range(n)]
        w_edge = [(n - u) ** j for u in union_size]

        # Active edges: both endpoints currently uncovered.
        s1 = 0
        for x in range(n):
            if not (covered >> x & 1):
                s1 += w_vertex[x]
        s2 = 0
        incident = [0] * n  # sum of active-edge weights at each endpoint
        pair_bonus = [0] * n  # weight of active edges inside N(v), per v
        for idx, (x, y) in enumerate(G.edges):
            if (covered >> x & 1) or (covered >> y & 1):
                continue
            w = w_edge[idx]
            s2 += w
            incident[x] += w
            incident[y] += w
            both = G.adj[x] & G.adj[y]
            if both:
                for v in iter_bits(both):
                    pair_bonus[v] += w

        # Previous-state expectation, scaled by n**(j+1).
        prev = _scaled_expectation(
            G, covered, j + 1, lambda i: (n - union_size[i]) ** (j + 1)
        )

        best_v = -1
        best_val = None
        for v in range(n):
            fresh = G.adj[v] & ~covered
            drop1 = 0
            drop_inc = 0
            for u in iter_bits(fresh):
                drop1 += w_vertex[u]
                drop_inc += incident[u]
            # Edges with both endpoints in `fresh` were subtracted twice.
            val = (s1 - drop1) - (s2 - drop_inc + pair_bonus[v])
            if best_val is None or val < best_val:
                best_val = val
                best_v = v
        assert best_val is not None
        if best_val * n > prev:
            raise InvariantViolation(
                "conditional expectation increased; selection logic is broken"
            )
        centers.append(best_v)
        covered |= G.adj[best_v]

    sel = selection_from_centers(G, centers)
    if Fraction(sel.uncovered_edges) * E_LOWER * k > n * n:
        raise InvariantViolation(
            f"derandomized cover left {sel.uncovered_edges} edges uncovered, "
            f"above n^2/(e*k) with n={n}, k={k}"
        )
    return sel


def select_cover(
    G: Graph, k: int, strategy: str = "best", trials: int = 1, seed: int = 0
) -> CoverSelection:
    """Dispatch by strategy.  "best" takes the expectation-guided selection or
    the max-coverage one, whichever leaves fewer edges uncovered (expectation
    wins ties so the n^2/(e*k) guarantee is always inherited)."""
    if strategy == "greedy":
        return select_cover_greedy(G, k)
    if strategy == "random":
        return select_cover_random(G, k, trials=trials, seed=seed)
    if strategy == "expectation":
        return select_cover_expectation(G, k)
    if strategy == "best":
        exp = select_cover_expectation(G, k)
        grd = select_cover_greedy(G, k)
        return grd if grd.uncovered_edges < exp.uncovered_edges else exp
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def exact_u(G: Graph, k: int) -> int:
    """Maximum covered edge count e(G[N(v_1) | ... | N(v_k)]) by brute force."""
    if k < 1:
        raise ValueError("k must be positive")
    if G.n == 0:
        raise ValueError("empty graph")
    if G.n**k > _EXACT_U_LIMIT:
        raise CapabilityError(
            f"exact_u needs n**k <= {_EXACT_U_LIMIT} (got {G.n}**{k})"
        )
    best = 0
    for centers in combinations_with_replacement(range(G.n), k):
        union = 0
        for v in centers:
            union |= G.adj[v]
        got = edges_inside(G, union)
        if got > best:
            best = got
    return best


def even_parts(
    G: Graph, t: int, strategy: str = "best", trials: int = 1, seed: int = 0
) -> CoverSelection:
    """Select t centers, then refine the disjoint pieces into exactly 2t sets
    of size at most floor(n/t) each, preserving the covered edge set.

    Cutting a piece of size s into chunks of size c = floor(n/t) yields
    ceil(s/c) <= (s + c - 1)/c chunks.  The t pieces are disjoint, so their
    sizes sum to at most n and the chunk count stays below
    t + (n - t)/c < 2t, using t*c = t*floor(n/t) > n - t.  The list is padded
    with empty sets (subsets of any neighborhood) up to exactly 2t.
    """
    if t < 1:
        raise ValueError("t must be positive")
    if t > G.n:
        raise ValueError(f"even_parts needs t <= n (got t={t}, n={G.n})")
    base = select_cover(G, t, strategy=strategy, trials=trials, seed=seed)
    chunk = G.n // t
    centers: list[int] = []
    sets: list[int] = []
    for v, piece in zip(base.centers, base.disjoint_sets):
        verts = bits_list(piece)
        for i in range(0, len(verts), chunk):
            m = 0
            for w in verts[i : i + chunk]:
                m |= 1 << w
            centers.append(v)
            sets.append(m)
    if len(sets) > 2 * t:
        raise InvariantViolation(
            f"even_parts produced {len(sets)} > 2t = {2 * t} chunks"
        )
    while len(sets) < 2 * t:
        centers.append(base.centers[0])
        sets.append(0)
    out = CoverSelection(tuple(centers), tuple(sets), base.uncovered_edges)
    if any(s.bit_count() > chunk for s in out.disjoint_sets):
        raise InvariantViolation("even_parts produced an oversized chunk")
    return out
