"""Vertex partitions, deletion accounting, and the generic builders.

A partition into k blocks certifies k-colorability of the graph left after
deleting the edges internal to blocks, so every partitioner here reports its
internal-edge count next to a proved ceiling for it (BoundReport).  The
builders shared by all of them:

* greedy_complete   -- extend seed blocks over the remaining vertices; the
                       completion adds at most (m - e(G[union of seeds])) / k
                       internal edges
* compose_partition -- lift per-piece partitions into seed blocks and finish
                       with greedy_complete
* random_partition  -- best-of-trials uniform labeling with a greedy floor
* balanced_partition -- greedy from empty seeds; internal edges <= m/k
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from ._rng import SplitMix64, derive_seed
from .errors import InvariantViolation
from .graphs import Graph, bits_list, iter_bits
from .serialize import fraction_str, to_jsonable


@dataclass(frozen=True)
class VertexPartition:
    """Blocks as disjoint bit masks covering 0..n-1 (empty blocks allowed)."""

    n: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        union = 0
        for b in self.blocks:
            if b & union:
                raise InvariantViolation("partition blocks overlap")
            union |= b
        if union != (1 << self.n) - 1:
            raise InvariantViolation("partition blocks do not cover the vertex set")

    @property
    def k(self) -> int:
        return len(self.blocks)

    def sizes(self) -> tuple[int, ...]:
        return tuple(b.bit_count() for b in self.blocks)

    def assignment(self) -> list[int]:
        out = [-1] * self.n
        for i, b in enumerate(self.blocks):
            for v in iter_bits(b):
                out[v] = i
        return out

    def block_of(self, v: int) -> int:
        for i, b in enumerate(self.blocks):
            if b >> v & 1:
                return i
        raise ValueError(f"vertex {v} out of range")

    def internal_edges(self, G: Graph) -> tuple[tuple[int, int], ...]:
        if G.n != self.n:
            raise ValueError("graph size does not match partition")
        lookup = self.assignment()
        return tuple((u, v) for u, v in G.edges if lookup[u] == lookup[v])

    def internal_count(self, G: Graph) -> int:
        lookup = self.assignment()
        return sum(1 for u, v in G.edges if lookup[u] == lookup[v])

    def crossing_count(self, G: Graph) -> int:
        return G.m - self.internal_count(G)

    def padded(self, k: int) -> "VertexPartition":
        if k < self.k:
            raise ValueError("cannot pad down")
        return VertexPartition(self.n, self.blocks + (0,) * (k - self.k))

    def relabeled(self, order: Sequence[int]) -> "VertexPartition":
        """Blocks permuted by `order` (order[i] = old index of new block i)."""
        if sorted(order) != list(range(self.k)):
            raise ValueError("order must be a permutation of the block indices")
        return VertexPartition(self.n, tuple(self.blocks[i] for i in order))

    def to_json(self, G: Optional[Graph] = None):
        out = {"k": self.k, "labels": self.assignment()}
        if G is not None:
            out["internal_edges"] = self.internal_count(G)
        return out


@dataclass(frozen=True)
class BoundReport:
    """A finished partition, its deletion count, and the ceiling it satisfies.

    `deleted` counts every edge the construction removed (for scrubbing
    pipelines this can exceed the partition's internal count on the input
    graph, since scrubbed edges are gone whether or not they would have been
    internal).  `bound` is the closed-form ceiling as an exact rational;
    `guarantee_holds` simply compares the two.  `precondition_checked`
    records whether the structural hypothesis behind the bound was verified
    rather than assumed.
    """

    partition: VertexPartition
    deleted: int
    bound: Fraction
    bound_formula: str
    precondition_checked: bool = False
    meta: dict = field(default_factory=dict)

    @property
    def guarantee_holds(self) -> bool:
        return Fraction(self.deleted) <= self.bound

    def require(self) -> "BoundReport":
        if not self.guarantee_holds:
            raise InvariantViolation(
                f"deleted {self.deleted} exceeds the proved ceiling "
                f"{self.bound} = {self.bound_formula}"
            )
        return self

    def to_json(self, G: Optional[Graph] = None):
        return {
            "partition": self.partition.to_json(G),
            "deleted": self.deleted,
            "bound": fraction_str(self.bound),
            "bound_decimal": float(self.bound),
            "bound_formula": self.bound_formula,
            "guarantee_holds": self.guarantee_holds,
            "precondition_checked": self.precondition_checked,
            "meta": to_jsonable(self.meta),
        }


def trivial_distinct(n: int, k: int) -> VertexPartition:
    """One vertex per block; only legal when k >= n.  Deletes nothing."""
    if k < n:
        raise ValueError("trivial partition needs k >= n")
    return VertexPartition(n, tuple(1 << v for v in range(n)) + (0,) * (k - n))


def greedy_complete(
    G: Graph, seeds: Sequence[int], k: Optional[int] = None
) -> tuple[VertexPartition, int]:
    """Grow the seed blocks over the unassigned vertices, returning the
    finished partition and the number of internal edges added on the way.

    Vertices are placed in ascending index order into the block gaining the
    fewest internal edges (lowest block index on ties).  Each placement costs
    at most the average over all K blocks, and summing those averages counts
    every edge outside G[union of seeds] at most once, so

        added <= (m - e(G[union of seeds])) / K.

    Pass k to pad the seed list with empty blocks first (a larger K only
    strengthens the averaging).
    """
    blocks = list(seeds)
    if k is not None:
        if k < len(blocks):
            raise ValueError("k smaller than the number of seed blocks")
        blocks.extend([0] * (k - len(blocks)))
    if not blocks:
        raise ValueError("need at least one block")
    taken = 0
    for b in blocks:
        if b & taken:
            raise ValueError("seed blocks must be disjoint")
        taken |= b
    added = 0
    for v in range(G.n):
        if taken >> v & 1:
            continue
        best = 0
        best_cost = (G.adj[v] & blocks[0]).bit_count()
        for i in range(1, len(blocks)):
            cost = (G.adj[v] & blocks[i]).bit_count()
            if cost < best_cost:
                best, best_cost = i, cost
                if cost == 0:
                    break
        blocks[best] |= 1 << v
        taken |= 1 << v
        added += best_cost
    return VertexPartition(G.n, tuple(blocks)), added


def lift_blocks(verts: Sequence[int], local: VertexPartition) -> list[int]:
    """Translate a partition of an induced subgraph back to global masks."""
    if local.n != len(verts):
        raise ValueError("partition size does not match the vertex list")
    out = []
    for b in local.blocks:
        g = 0
        for i in iter_bits(b):
            g |= 1 << verts[i]
        out.append(g)
    return out


def compose_partition(
    G: Graph,
    outer_sets: Sequence[int],
    inner_parts: Sequence[VertexPartition],
    k: Optional[int] = None,
) -> tuple[VertexPartition, int]:
    """Lift per-set partitions into seed blocks and greedily complete.

    outer_sets are disjoint vertex masks; inner_parts[i] partitions the
    induced subgraph on outer_sets[i] (local indices, ascending vertex
    order).  With s blocks per piece and t pieces, the completion adds at
    most (m - e(G[union of the sets])) / (s*t) internal edges on top of
    whatever the pieces already contain.
    """
    if len(outer_sets) != len(inner_parts):
        raise ValueError("outer sets and inner partitions are misaligned")
    if not outer_sets:
        raise ValueError("need at least one piece")
    seeds: list[int] = []
    taken = 0
    for mask, part in zip(outer_sets, inner_parts):
        if mask & taken:
            raise ValueError("outer sets must be disjoint")
        taken |= mask
        seeds.extend(lift_blocks(bits_list(mask), part))
    return greedy_complete(G, seeds, k=k)


def random_partition(
    G: Graph, k: int, trials: int = 1, seed: int = 0
) -> VertexPartition:
    """Best of `trials` uniform labelings, floored by one greedy completion.

    The greedy candidate guarantees the result never exceeds m/k internal
    edges, whatever the draws do.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = SplitMix64(derive_seed(seed, 0x21, G.n, G.m, k))
    best: Optional[VertexPartition] = None
    best_internal = -1
    for _ in range(trials):
        blocks = [0] * k
        for v in range(G.n):
            blocks[rng.randrange(k)] |= 1 << v
        cand = VertexPartition(G.n, tuple(blocks))
        internal = cand.internal_count(G)
        if best is None or internal < best_internal:
            best, best_internal = cand, internal
    greedy, greedy_internal = greedy_complete(G, [0] * k)
    assert best is not None
    return best if best_internal <= greedy_internal else greedy


def balanced_partition(G: Graph, k: int) -> tuple[VertexPartition, int]:
    """Greedy completion from k empty seeds: internal edges <= m/k."""
    part, added = greedy_complete(G, [0] * k)
    if added * k > G.m:
        raise InvariantViolation("balanced partition exceeded the m/k guarantee")
    return part, added
