"""Max-k-cut: exact small cases, guaranteed local search, coarsening, and
the dense-regime driver built on the odd-cycle-free partitioner.

Everything returns a CutResult whose crossing count is recomputed from the
partition, so a reported guarantee can always be re-checked.  The working
guarantees on any graph:

  * local_search_cut:    crossing * k >= m * (k - 1)
  * coarsen_cut:         crossing * C(k,2) >= (C(k,2) - sum C(s_i,2)) * fine
  * surplus_compose:     (crossing - sum inner) * l >= (l - 1) * (m - sum m_i)
  * maxcut_dense_driver: 2 * crossing >= m always, and in the dense regime
    (k-partitioning deletes at most m/(2k) edges) the two-cut reaches
    m/2 + m/(4(k-1)), beating the plain local-search floor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

from ._rng import SplitMix64, derive_seed
from .bounds import iroot
from .errors import CapabilityError, InvariantViolation
from .graphs import Graph, bits_list, edges_between, edges_inside
from .oddgirth import partition_odd_cycle_free
from .oracle import min_internal_partition
from .partition import VertexPartition, lift_blocks

_EXACT_CUT_LIMIT = 5 * 10**6
_GROUPING_ENUM_LIMIT = 10**5
_COMPOSE_LABEL_LIMIT = 8


@dataclass(frozen=True)
class CutResult:
    """A k-partition viewed as a cut: crossing edges are the objective."""

    partition: VertexPartition
    crossing: int
    method: str
    meta: dict = field(default_factory=dict)

    @property
    def k(self) -> int:
        return self.partition.k

    def validate(self, G: Graph) -> "CutResult":
        got = self.partition.crossing_count(G)
        if got != self.crossing:
            raise InvariantViolation(
                f"stored crossing {self.crossing} != recomputed {got}"
            )
        return self

    def to_json(self, G=None):
        from .serialize import to_jsonable

        return {
            "crossing": self.crossing,
            "k": self.k,
            "method": self.method,
            "partition": self.partition.to_json(G),
            "meta": to_jsonable(self.meta),
        }


def max_k_cut_exact(G: Graph, k: int, budget=None) -> CutResult:
    """Provably maximum k-cut via the branch-and-bound deletion oracle.

    Only the first vertex's label is pinned, so the state space is k**(n-1);
    inputs beyond 5e6 states are refused up front.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if G.n > 0 and k ** (G.n - 1) > _EXACT_CUT_LIMIT:
        raise CapabilityError(
            f"exact max-k-cut needs k**(n-1) <= {_EXACT_CUT_LIMIT}"
        )
    internal, part = min_internal_partition(G, k, budget=budget)
    return CutResult(
        partition=part,
        crossing=G.m - internal,
        method="exact",
        meta={"internal": internal},
    )


def local_search_cut(
    G: Graph, k: int, starts: int = 3, seed: int = 0
) -> CutResult:
    """Single-vertex moves to a local optimum, best of several seeded starts.

    At a local optimum every vertex has at most deg(v)/k neighbors in its
    own block, so internal <= m/k and crossing * k >= m * (k - 1); that
    floor is checked exactly on the returned cut.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if starts < 1:
        raise ValueError("starts must be positive")
    n = G.n
    rng = SplitMix64(derive_seed(seed, 0x61, n, G.m, k))
    best_blocks = None
    best_internal = None
    for _ in range(starts):
        labels = [v % k for v in range(n)]
        rng.shuffle(labels)
        blocks = [0] * k
        for v, lab in enumerate(labels):
            blocks[lab] |= 1 << v
        internal = sum(
            (G.adj[v] & blocks[labels[v]]).bit_count() for v in range(n)
        ) // 2
        improved = True
        while improved:
            improved = False
            for v in range(n):
                here = labels[v]
                cost_here = (G.adj[v] & blocks[here]).bit_count()
                target, cost = here, cost_here
                for b in range(k):
                    if b == here:
                        continue
                    c = (G.adj[v] & blocks[b]).bit_count()
                    if c < cost:
                        target, cost = b, c
                if target != here:
                    blocks[here] &= ~(1 << v)
                    blocks[target] |= 1 << v
                    labels[v] = target
                    internal += cost - cost_here
                    improved = True
        if best_internal is None or internal < best_internal:
            best_internal = internal
            best_blocks = tuple(blocks)
    part = VertexPartition(n, best_blocks)
    crossing = G.m - best_internal
    if crossing * k < G.m * (k - 1):
        raise InvariantViolation("local search ended below the (1-1/k) floor")
    return CutResult(
        partition=part,
        crossing=crossing,
        method="local-search",
        meta={"starts": starts, "internal": best_internal},
    )


def balanced_group_sizes(k: int, l: int) -> tuple[int, ...]:
    """Sizes of l near-equal groups of k labels, descending."""
    q, rem = divmod(k, l)
    return tuple([q + 1] * rem + [q] * (l - rem))


def d_l_complete(l: int, k: int) -> Fraction:
    """Best l-cut density of the complete graph on k vertices.

    Grouping the k vertices into l parts leaves sum C(s_i, 2) edges inside,
    minimized by near-equal sizes (the sum is convex in each s_i), so the
    density is 1 - sum C(s_i,2)/C(k,2).  For even k and l = 2 this is the
    familiar k/(2(k-1)).
    """
    if k < 2:
        raise ValueError("needs k >= 2 (no edges otherwise)")
    if l < 1:
        raise ValueError("l must be positive")
    if l >= k:
        return Fraction(1)
    inside = sum(comb(s, 2) for s in balanced_group_sizes(k, l))
    return Fraction(comb(k, 2) - inside, comb(k, 2))


def _grouping_count(k: int, sizes: tuple[int, ...]) -> int:
    """Number of ways to split k labels into unlabeled groups of these sizes."""
    total = factorial(k)
    for s in sizes:
        total //= factorial(s)
    mult: dict[int, int] = {}
    for s in sizes:
        mult[s] = mult.get(s, 0) + 1
    for c in mult.values():
        total //= factorial(c)
    return total


def _pair_weights(G: Graph, fine: VertexPartition) -> list[list[int]]:
    k = fine.k
    assign = fine.assignment()
    w = [[0] * k for _ in range(k)]
    for u, v in G.edges:
        a, b = assign[u], assign[v]
        if a != b:
            w[a][b] += 1
            w[b][a] += 1
    return w


def _grouping_internal(w, groups) -> int:
    total = 0
    for g in groups:
        for i, a in enumerate(g):
            for b in g[i + 1 :]:
                total += w[a][b]
    return total


def _ce_grouping(w: list[list[int]], sizes: tuple[int, ...]) -> list[list[int]]:
    """Conditional-expectation greedy: place each label in the group that
    minimizes the expected internal weight of a random equitable completion.

    All expectations are compared after scaling by R'(R'-1) > 0 (R' labels
    left after the current one), which clears every denominator and keeps
    the comparison in exact integers; the final grouping is therefore at
    most the initial expectation, i.e. internal <= sum C(s_i,2)/C(k,2) * W.
    """
    k = len(w)
    l = len(sizes)
    groups: list[list[int]] = [[] for _ in range(l)]
    cap = list(sizes)
    row_total = [sum(w[u]) for u in range(k)]
    # W_g(v): weight from unassigned v to group g; S_g = sum over unassigned;
    # U2 = total weight between unassigned pairs.
    wg = [[0] * l for _ in range(k)]
    s_g = [0] * l
    u2 = sum(row_total) // 2
    unassigned = set(range(k))
    for u in range(k):
        unassigned.discard(u)
        rprime = len(unassigned)
        row_u = sum(w[u][v] for v in unassigned)
        best_g, best_score = -1, None
        for g in range(l):
            if cap[g] == 0:
                continue
            if rprime >= 2:
                term_assigned = 0
                term_pairs = 0
                for gp in range(l):
                    cp = cap[gp] - (1 if gp == g else 0)
                    term_assigned += cp * (s_g[gp] - wg[u][gp])
                    term_pairs += cp * (cp - 1)
                score = (
                    wg[u][g] * rprime * (rprime - 1)
                    + (rprime - 1) * term_assigned
                    + (rprime - 1) * (cap[g] - 1) * row_u
                    + (u2 - row_u) * term_pairs
                )
            elif rprime == 1:
                v = next(iter(unassigned))
                gv = g
                for gp in range(l):
                    cp = cap[gp] - (1 if gp == g else 0)
                    if cp > 0:
                        gv = gp
                        break
                score = wg[u][g] + wg[v][gv] + (w[u][v] if gv == g else 0)
            else:
                score = wg[u][g]
            if best_score is None or score < best_score:
                best_g, best_score = g, score
        groups[best_g].append(u)
        cap[best_g] -= 1
        for v in unassigned:
            wg[v][best_g] += w[u][v]
        s_g = [
            sum(wg[v][g] for v in unassigned) for g in range(l)
        ]
        u2 -= row_u
    return groups


def coarsen_cut(
    G: Graph,
    fine: VertexPartition,
    l: int,
    seed: int = 0,
    trials: int = 0,
) -> CutResult:
    """Merge the k blocks of a fine cut into l groups, keeping at least a
    d_l(K_k) fraction of the fine crossing weight.

    A uniformly random equitable grouping keeps each crossing edge with
    probability 1 - sum C(s_i,2)/C(k,2) = d_l(K_k), and the conditional-
    expectation greedy never falls below that average; small instances are
    additionally enumerated exhaustively and optional seeded trials can only
    improve the incumbent, so the guarantee is asserted on the result.
    """
    if l < 1:
        raise ValueError("l must be positive")
    k = fine.k
    fine_crossing = fine.crossing_count(G)
    if l >= k:
        return CutResult(
            partition=fine.padded(l) if l > k else fine,
            crossing=fine_crossing,
            method="coarsen-identity",
            meta={"l": l, "fine_crossing": fine_crossing},
        )
    sizes = balanced_group_sizes(k, l)
    w = _pair_weights(G, fine)
    candidates: list[tuple[int, str, list[list[int]]]] = []
    ce = _ce_grouping(w, sizes)
    candidates.append((_grouping_internal(w, ce), "coarsen-ce", ce))
    if _grouping_count(k, sizes) <= _GROUPING_ENUM_LIMIT:
        best = None
        for grouping in _enumerate_groupings(k, sizes):
            got = _grouping_internal(w, grouping)
            if best is None or got < best[0]:
                best = (got, [list(g) for g in grouping])
        candidates.append((best[0], "coarsen-exhaustive", best[1]))
    if trials > 0:
        rng = SplitMix64(derive_seed(seed, 0x71, G.n, G.m, k, l))
        order = list(range(k))
        best = None
        for _ in range(trials):
            rng.shuffle(order)
            groups = []
            at = 0
            for s in sizes:
                groups.append(sorted(order[at : at + s]))
                at += s
            got = _grouping_internal(w, groups)
            if best is None or got < best[0]:
                best = (got, [list(g) for g in groups])
        candidates.append((best[0], "coarsen-trials", best[1]))
    internal, method, groups = min(candidates, key=lambda c: c[0])
    blocks = []
    for g in groups:
        m = 0
        for a in g:
            m |= fine.blocks[a]
        blocks.append(m)
    part = VertexPartition(G.n, tuple(blocks))
    crossing = part.crossing_count(G)
    expect_num = comb(k, 2) - sum(comb(s, 2) for s in sizes)
    if crossing * comb(k, 2) < expect_num * fine_crossing:
        raise InvariantViolation("coarsening fell below the d_l(K_k) share")
    return CutResult(
        partition=part,
        crossing=crossing,
        method=method,
        meta={
            "l": l,
            "fine_k": k,
            "fine_crossing": fine_crossing,
            "grouped_internal_weight": internal,
        },
    )


def _enumerate_groupings(k: int, sizes: tuple[int, ...]):
    """All partitions of 0..k-1 into unlabeled groups of the given sizes.

    The smallest unplaced label anchors a fresh group of each still-needed
    size (one representative size per multiplicity), which visits every
    grouping exactly once.
    """
    from itertools import combinations

    def rec(remaining: tuple[int, ...], needed: tuple[int, ...]):
        if not needed:
            yield []
            return
        anchor = remaining[0]
        rest = remaining[1:]
        seen_sizes = set()
        for idx, s in enumerate(needed):
            if s in seen_sizes:
                continue
            seen_sizes.add(s)
            left_needed = needed[:idx] + needed[idx + 1 :]
            for mates in combinations(rest, s - 1):
                group = [anchor, *mates]
                taken = set(mates)
                rem = tuple(v for v in rest if v not in taken)
                for tail in rec(rem, left_needed):
                    yield [group, *tail]

    yield from rec(tuple(range(k)), tuple(sorted(sizes, reverse=True)))


def surplus_compose(
    G: Graph,
    pieces: list[int],
    parts: list[VertexPartition],
    l: int,
) -> CutResult:
    """Stitch per-piece l-cuts into one l-cut of G, aligning each piece's
    labels by the permutation that maximizes crossing edges to the vertices
    already placed (all l! permutations are tried; the first piece keeps its
    labels).

    Averaging over permutations shows the best one crosses at least a
    (1 - 1/l) fraction of the edges between the piece and the placed part,
    so crossing >= sum_i crossing_i + (1 - 1/l)(m - sum_i m_i), checked
    exactly.
    """
    if l < 1:
        raise ValueError("l must be positive")
    if l > _COMPOSE_LABEL_LIMIT:
        raise CapabilityError(
            f"label alignment enumerates l! permutations; needs l <= "
            f"{_COMPOSE_LABEL_LIMIT}"
        )
    if len(pieces) != len(parts):
        raise ValueError("pieces and parts are misaligned")
    union = 0
    for mask in pieces:
        if mask & union:
            raise ValueError("pieces overlap")
        union |= mask
    if union != G.full_mask:
        raise ValueError("pieces must cover every vertex")
    totals = [0] * l
    inner_crossing = 0
    inner_edges = 0
    for mask, part in zip(pieces, parts):
        if part.k != l:
            raise ValueError("every piece needs exactly l blocks")
        verts = bits_list(mask)
        lifted = lift_blocks(verts, part)
        piece_m = sum(
            edges_between(G, lifted[i], lifted[j])
            for i in range(l)
            for j in range(i + 1, l)
        )
        inner_edges += edges_inside(G, mask)
        inner_crossing += piece_m
        match = [
            [edges_between(G, lb, tb) for tb in totals] for lb in lifted
        ]
        best_perm, best_cost = None, None
        for perm in permutations(range(l)):
            cost = sum(match[j][perm[j]] for j in range(l))
            if best_cost is None or cost < best_cost:
                best_perm, best_cost = perm, cost
        for j, target in enumerate(best_perm):
            totals[target] |= lifted[j]
    part = VertexPartition(G.n, tuple(totals))
    crossing = part.crossing_count(G)
    if (crossing - inner_crossing) * l < (l - 1) * (G.m - inner_edges):
        raise InvariantViolation("label alignment fell below the (1-1/l) share")
    return CutResult(
        partition=part,
        crossing=crossing,
        method="surplus-compose",
        meta={
            "l": l,
            "pieces": len(pieces),
            "inner_crossing": inner_crossing,
            "inner_edges": inner_edges,
        },
    )


def maxcut_dense_driver(G: Graph, r: int, seed: int = 0) -> CutResult:
    """Two-cut of a (2r+1)-cycle-free graph that beats m/2 by m/(4(k-1)) in
    the dense regime.

    k is the smallest even number with k^r * m >= 2 c_r n^2 (clamped to the
    largest even number <= n when the graph is too sparse for that to fit);
    the odd-cycle-free partitioner then deletes m_0 <= c_r n^2 / k^r <= m/(2k)
    edges, so its k-cut crosses m - m_0 edges and coarsening to two groups
    keeps a d_2(K_k) = k/(2(k-1)) share:

        crossing >= (m - m/(2k)) * k/(2(k-1)) = m/2 + m/(4(k-1)).

    A plain local-search two-cut is always computed as well and the better
    cut returned, so 2 * crossing >= m holds unconditionally.
    """
    if r < 1:
        raise ValueError("r must be positive")
    n, m = G.n, G.m
    if m == 0:
        return CutResult(
            partition=VertexPartition(n, (G.full_mask, 0)),
            crossing=0,
            method="trivial",
            meta={"k": 2},
        )
    c_r = 4 * (12 * r) ** r + (100 * r**4 if r >= 2 else 0)
    need = (2 * c_r * n * n + m - 1) // m
    k0 = iroot(need, r)
    if k0**r < need:
        k0 += 1
    k_raw = k0 + (k0 % 2)
    k_cap = n - (n % 2)
    k = max(2, min(k_raw, k_cap))
    clamped = k != k_raw
    report = partition_odd_cycle_free(G, k, r)
    m0 = report.deleted
    fine = report.partition
    coarse = coarsen_cut(G, fine, 2, seed=seed)
    greedy2 = local_search_cut(G, 2, seed=seed)
    best = coarse if coarse.crossing >= greedy2.crossing else greedy2
    dense = 2 * k * m0 <= m
    if dense and best.crossing * 4 * (k - 1) < m * (2 * k - 1):
        raise InvariantViolation(
            "dense-regime cut fell below m/2 + m/(4(k-1))"
        )
    if 2 * best.crossing < m:
        raise InvariantViolation("cut fell below m/2")
    return CutResult(
        partition=best.partition,
        crossing=best.crossing,
        method=f"driver/{best.method}",
        meta={
            "r": r,
            "k": k,
            "k_raw": k_raw,
            "clamped": clamped,
            "deleted_by_partitioner": m0,
            "dense_regime": dense,
            "coarse_crossing": coarse.crossing,
            "local_search_crossing": greedy2.crossing,
        },
    )


def maxcut_odd_cycle_free(G: Graph, r: int, seed: int = 0) -> CutResult:
    """Two-cut of a (2r+1)-cycle-free graph: run the dense driver on the
    high-degree core when it holds at least half the edges, cut the rest by
    local search, and align the halves; otherwise plain local search.

    The core is U = {v : deg(v)^(r+4) >= m^2}; both branches keep
    2 * crossing >= m, checked exactly.
    """
    if r < 1:
        raise ValueError("r must be positive")
    n, m = G.n, G.m
    if m == 0:
        return CutResult(
            partition=VertexPartition(n, (G.full_mask, 0)),
            crossing=0,
            method="trivial",
            meta={"k": 2},
        )
    core = 0
    msq = m * m
    for v in range(n):
        if G.degree(v) ** (r + 4) >= msq:
            core |= 1 << v
    Hc, _ = G.induced(core)
    if 2 * Hc.m >= m:
        rest = G.full_mask & ~core
        Hr, _ = G.induced(rest)
        core_cut = maxcut_dense_driver(Hc, r, seed=seed)
        rest_cut = local_search_cut(Hr, 2, seed=seed)
        stitched = surplus_compose(
            G, [core, rest], [core_cut.partition, rest_cut.partition], 2
        )
        greedy2 = local_search_cut(G, 2, seed=seed)
        best = stitched if stitched.crossing >= greedy2.crossing else greedy2
        method = f"core/{best.method}"
        meta = {
            "branch": "dense-core",
            "r": r,
            "core_size": core.bit_count(),
            "core_edges": Hc.m,
            "core_crossing": core_cut.crossing,
            "stitched_crossing": stitched.crossing,
            "local_search_crossing": greedy2.crossing,
        }
    else:
        best = local_search_cut(G, 2, seed=seed)
        method = f"sparse/{best.method}"
        meta = {"branch": "sparse", "r": r, "core_size": core.bit_count(),
                "core_edges": Hc.m}
    if 2 * best.crossing < m:
        raise InvariantViolation("cut fell below m/2")
    surplus = Fraction(2 * best.crossing - m, 2)
    meta["surplus"] = surplus
    meta["surplus_ratio"] = float(surplus) / m ** (1.0 - 1.0 / (r + 4))
    return CutResult(
        partition=best.partition,
        crossing=best.crossing,
        method=method,
        meta=meta,
    )
