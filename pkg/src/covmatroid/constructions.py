"""Concrete matroid constructions: k-rank, partition, union, covering,
transversal and partition-circuit matroids, plus the conversions between
the covering and transversal presentations and the dual-parameter formula
for partition matroids.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .core import (
    DEFAULT_ENUM_CAP,
    GroundSet,
    SetFamily,
    SubsetMask,
    ValidationError,
    check_enum_cap,
)
from .matroid import Matroid

#: Matchings are memoized per handle only while the state table stays small.
_MEMO_CAP = 16

#: With few blocks the maximum flow is evaluated as the minimum cut over
#: block subsets instead of by augmenting paths; 2^m stays negligible here.
_CUT_CAP = 6


@dataclass(frozen=True)
class CapacitatedCovering:
    """Covering blocks K_1..K_m paired with nonnegative integer capacities.

    Blocks are kept in the given order (capacities are aligned by position);
    they must be nonempty, pairwise distinct, and union to the universe.
    """

    ground: GroundSet
    blocks: tuple[SubsetMask, ...]
    capacities: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.blocks) != len(self.capacities):
            raise ValidationError("capacities must align with blocks")
        if not self.blocks:
            raise ValidationError("a covering needs at least one block")
        union = 0
        seen = set()
        for b in self.blocks:
            if b.ground != self.ground:
                raise ValidationError("blocks must share the covering's ground set")
            if not b.bits:
                raise ValidationError("covering blocks must be nonempty")
            if b.bits in seen:
                raise ValidationError("duplicate covering blocks are not allowed")
            seen.add(b.bits)
            union |= b.bits
        if union != self.ground.full_mask:
            raise ValidationError("covering blocks must union to the universe")
        for k in self.capacities:
            if k < 0:
                raise ValidationError("capacities must be nonnegative")

    @classmethod
    def from_labels(
        cls,
        ground: GroundSet,
        blocks: Iterable[Iterable[str]],
        capacities: Iterable[int],
    ) -> CapacitatedCovering:
        return cls(
            ground,
            tuple(ground.subset(b) for b in blocks),
            tuple(capacities),
        )

    @property
    def m(self) -> int:
        return len(self.blocks)

    def is_partition(self) -> bool:
        total = 0
        for b in self.blocks:
            if total & b.bits:
                return False
            total |= b.bits
        return True

    def block_family(self) -> SetFamily:
        return SetFamily(self.ground, self.blocks)

    def with_capacities(self, capacities: Sequence[int]) -> CapacitatedCovering:
        return CapacitatedCovering(self.ground, self.blocks, tuple(capacities))


@dataclass(frozen=True)
class PartitionWitness:
    """A capacitated covering whose blocks are pairwise disjoint."""

    covering: CapacitatedCovering

    def __post_init__(self) -> None:
        if not self.covering.is_partition():
            raise ValidationError("partition blocks must be pairwise disjoint")

    @classmethod
    def from_labels(
        cls,
        ground: GroundSet,
        blocks: Iterable[Iterable[str]],
        capacities: Iterable[int],
    ) -> PartitionWitness:
        return cls(CapacitatedCovering.from_labels(ground, blocks, capacities))

    @property
    def blocks(self) -> tuple[SubsetMask, ...]:
        return self.covering.blocks

    @property
    def capacities(self) -> tuple[int, ...]:
        return self.covering.capacities


@dataclass(frozen=True)
class IndexedFamily:
    """An ordered family F_1..F_|J| of subsets; duplicates are permitted
    because transversal independence counts indices, not distinct sets."""

    ground: GroundSet
    members: tuple[SubsetMask, ...]

    def __post_init__(self) -> None:
        for m in self.members:
            if m.ground != self.ground:
                raise ValidationError("family members must share one ground set")

    @classmethod
    def from_labels(
        cls, ground: GroundSet, members: Iterable[Iterable[str]]
    ) -> IndexedFamily:
        return cls(ground, tuple(ground.subset(m) for m in members))

    def union_bits(self) -> int:
        u = 0
        for m in self.members:
            u |= m.bits
        return u


class _MatchingOracle:
    """Maximum bipartite flow between elements and capacitated blocks.

    Elements of a query set sit on one side; block i accepts up to caps[i]
    of its own elements.  A set is independent iff a full assignment exists.

    With at most ``_CUT_CAP`` blocks the flow value is computed as the
    minimum cut over block subsets B (max-flow min-cut): the elements whose
    every admissible block lies in B must fit within B's total capacity, and
    the flow equals |X| minus the worst deficiency.  With more blocks the
    oracle falls back to augmenting paths, memoized per instance keyed on
    the query bitmask (the state for X extends the state for X minus its
    highest element), so scanning many subsets in ascending order reuses
    earlier augmentations.
    """

    __slots__ = ("n", "caps", "adj", "_memo", "_cuts")

    def __init__(self, n: int, block_bits: Sequence[int], caps: Sequence[int]):
        self.n = n
        self.caps = tuple(caps)
        m = len(block_bits)
        self._cuts: Optional[tuple[tuple[int, int], ...]] = None
        if m <= _CUT_CAP:
            full = (1 << n) - 1
            cuts = []
            for sel in range(1 << m):
                outside = 0
                capsum = 0
                for i in range(m):
                    if sel >> i & 1:
                        capsum += caps[i]
                    else:
                        outside |= block_bits[i]
                only = full & ~outside
                # Cuts that can never be deficient are dropped up front.
                if only and only.bit_count() > capsum:
                    cuts.append((only, capsum))
            self._cuts = tuple(cuts)
        # The augmenting-path fallback and its adjacency lists are only
        # materialized when the cut path is unavailable.
        self.adj = (
            None
            if self._cuts is not None
            else tuple(
                tuple(
                    i
                    for i, kb in enumerate(block_bits)
                    if (kb >> e) & 1 and caps[i] > 0
                )
                for e in range(n)
            )
        )
        self._memo: Optional[dict[int, tuple[int, tuple[int, ...], tuple]]] = (
            {0: (0, (0,) * len(caps), ())}
            if self._cuts is None and n <= _MEMO_CAP
            else None
        )

    def _augment(self, x: int, loads: list[int], assign: dict[int, int]) -> bool:
        caps = self.caps
        adj = self.adj

        def dfs(u: int, visited: int) -> tuple[bool, int]:
            for i in adj[u]:
                bit = 1 << i
                if visited & bit:
                    continue
                visited |= bit
                if loads[i] < caps[i]:
                    loads[i] += 1
                    assign[u] = i
                    return True, visited
                for y, b in list(assign.items()):
                    if b != i:
                        continue
                    ok, visited = dfs(y, visited)
                    if ok:
                        assign[u] = i
                        return True, visited
            return False, visited

        ok, _ = dfs(x, 0)
        return ok

    def _state(self, bits: int) -> tuple[int, tuple[int, ...], tuple]:
        memo = self._memo
        if memo is not None:
            cached = memo.get(bits)
            if cached is not None:
                return cached
            x = bits.bit_length() - 1
            size, loads_t, assign_t = self._state(bits & ~(1 << x))
            loads = list(loads_t)
            assign = dict(assign_t)
            if self._augment(x, loads, assign):
                size += 1
            state = (size, tuple(loads), tuple(assign.items()))
            memo[bits] = state
            return state
        loads = [0] * len(self.caps)
        assign: dict[int, int] = {}
        size = 0
        rest = bits
        while rest:
            low = rest & -rest
            rest ^= low
            if self._augment(low.bit_length() - 1, loads, assign):
                size += 1
        return (size, tuple(loads), tuple(assign.items()))

    def matching_size(self, bits: int) -> int:
        cuts = self._cuts
        if cuts is not None:
            deficiency = 0
            for only, capsum in cuts:
                d = (bits & only).bit_count() - capsum
                if d > deficiency:
                    deficiency = d
            return bits.bit_count() - deficiency
        return self._state(bits)[0]

    def saturates(self, bits: int) -> bool:
        cuts = self._cuts
        if cuts is not None:
            for only, capsum in cuts:
                if (bits & only).bit_count() > capsum:
                    return False
            return True
        return self._state(bits)[0] == bits.bit_count()

    def saturation_fn(self):
        """The saturation test with per-call attribute lookups hoisted."""
        cuts = self._cuts
        if cuts is None:
            return self.saturates

        def indep(bits: int) -> bool:
            for only, capsum in cuts:
                if (bits & only).bit_count() > capsum:
                    return False
            return True

        return indep


def k_rank_matroid(ground: GroundSet, block: SubsetMask, k: int) -> Matroid:
    """The matroid whose independent sets are the subsets of ``block`` of
    size at most ``k``; its loops are exactly U minus the block."""
    if k < 0:
        raise ValidationError("k must be nonnegative")
    bb = block.bits

    def indep(bits: int) -> bool:
        return bits & ~bb == 0 and bits.bit_count() <= k

    def rank(bits: int) -> int:
        return min((bits & bb).bit_count(), k)

    return Matroid(ground, indep, rank_hint=rank, provenance="k-rank",
                   source=(block, k))


def partition_matroid(p: PartitionWitness) -> Matroid:
    """Independent sets meet each partition block in at most its capacity."""
    blocks = tuple(b.bits for b in p.blocks)
    caps = p.capacities
    pairs = tuple(zip(blocks, caps))

    def indep(bits: int) -> bool:
        for bb, k in pairs:
            if (bits & bb).bit_count() > k:
                return False
        return True

    def rank(bits: int) -> int:
        return sum(min((bits & bb).bit_count(), k) for bb, k in pairs)

    return Matroid(p.covering.ground, indep, rank_hint=rank,
                   provenance="partition", source=p)


def union_matroids(ms: Sequence[Matroid], cap: int = DEFAULT_ENUM_CAP) -> Matroid:
    """Union of matroids on one ground set, by brute-force assignment.

    A set is independent iff each of its elements can be routed to one
    component index so that every per-index part is independent there.
    Assigning each element to exactly one index suffices because subsets of
    independent sets are independent.
    """
    if not ms:
        raise ValidationError("union of zero matroids is undefined")
    ground = ms[0].ground
    for m in ms[1:]:
        if m.ground != ground:
            raise ValidationError("union components must share a ground set")
    check_enum_cap(ground.n, cap)
    oracles = tuple(m.indep_bits for m in ms)

    def indep(bits: int) -> bool:
        elems = []
        rest = bits
        while rest:
            low = rest & -rest
            rest ^= low
            elems.append(low)
        parts = [0] * len(oracles)

        def assign(idx: int) -> bool:
            if idx == len(elems):
                return True
            low = elems[idx]
            for i, oracle in enumerate(oracles):
                cand = parts[i] | low
                if oracle(cand):
                    parts[i] = cand
                    if assign(idx + 1):
                        return True
                    parts[i] ^= low
            return False

        return assign(0)

    return Matroid(ground, indep, provenance="union", source=tuple(ms))


def covering_matroid(c: CapacitatedCovering) -> Matroid:
    """The union of the k-rank matroids of the covering's blocks.

    Independence is decided by capacitated bipartite matching feasibility
    (polynomial; no powerset scan), which is equivalent to the union oracle
    and cross-checked against it in the test suite.  The closed-form rank is
    the maximum matching size.
    """
    engine = _MatchingOracle(
        c.ground.n, [b.bits for b in c.blocks], c.capacities
    )
    return Matroid(
        c.ground,
        engine.saturation_fn(),
        rank_hint=engine.matching_size,
        provenance="covering",
        source=c,
    )


def covering_matroid_slice(c: CapacitatedCovering, i: int) -> Matroid:
    """Covering matroid with every capacity zeroed except the i-th; equal,
    as a family, to the k-rank matroid of block i."""
    if not 0 <= i < c.m:
        raise IndexError(f"block index {i} out of range for {c.m} blocks")
    caps = [0] * c.m
    caps[i] = c.capacities[i]
    return covering_matroid(c.with_capacities(caps))


def naive_covering_family(
    c: CapacitatedCovering, cap: int = DEFAULT_ENUM_CAP
) -> SetFamily:
    """The explicit family {X : |X ∩ K_i| ≤ k_i for all i}.

    Not a matroid in general; feed it to ``check_independence_axioms``.
    """
    check_enum_cap(c.ground.n, cap)
    pairs = tuple((b.bits, k) for b, k in zip(c.blocks, c.capacities))
    members = []
    for bits in range(1 << c.ground.n):
        if all((bits & bb).bit_count() <= k for bb, k in pairs):
            members.append(bits)
    return SetFamily(c.ground, members)


def is_partial_transversal(f: IndexedFamily, t: SubsetMask) -> bool:
    """True iff some injection maps each element of T to a distinct index j
    with the element inside F_j; decided by bipartite matching."""
    engine = _MatchingOracle(
        f.ground.n, [m.bits for m in f.members], [1] * len(f.members)
    )
    return engine.saturates(t.bits)


def transversal_matroid(f: IndexedFamily) -> Matroid:
    """The matroid of partial transversals of the indexed family."""
    engine = _MatchingOracle(
        f.ground.n, [m.bits for m in f.members], [1] * len(f.members)
    )
    return Matroid(
        f.ground,
        engine.saturates,
        rank_hint=engine.matching_size,
        provenance="transversal",
        source=f,
    )


def transversal_as_covering(f: IndexedFamily) -> CapacitatedCovering:
    """Present a transversal matroid as a covering matroid.

    Each family member becomes a capacity-1 block; duplicate members merge
    into one block whose capacity is the multiplicity (the union of equal
    capacity-1 k-rank matroids saturates to a single higher capacity).
    Elements outside the family's union form one extra capacity-0 block,
    emitted only when such elements exist so all blocks stay nonempty.
    Empty family members contribute nothing and are dropped.
    """
    counts: dict[int, int] = {}
    for m in f.members:
        if m.bits:
            counts[m.bits] = counts.get(m.bits, 0) + 1
    blocks = list(counts)
    caps = [counts[b] for b in blocks]
    uncovered = f.ground.full_mask & ~f.union_bits()
    if uncovered:
        blocks.append(uncovered)
        caps.append(0)
    if not blocks:
        # family of empty sets over a universe with no uncovered part is
        # impossible (the universe is nonempty), so blocks is never empty
        raise ValidationError("cannot build a covering from an empty family")
    return CapacitatedCovering(
        f.ground, tuple(SubsetMask(f.ground, b) for b in blocks), tuple(caps)
    )


def covering_as_transversal(c: CapacitatedCovering) -> Optional[IndexedFamily]:
    """Blocks as an indexed family when all capacities are 1, yielding the
    same matroid; ``None`` when some capacity differs (the covering ↔
    transversal equivalence holds only for all-ones capacities)."""
    if any(k != 1 for k in c.capacities):
        return None
    return IndexedFamily(c.ground, c.blocks)


def partition_circuit_matroid(p: PartitionWitness) -> Matroid:
    """The matroid whose circuits are exactly the partition blocks:
    independent sets meet each block P in at most |P| - 1 elements.
    Stated capacities on the witness are ignored."""
    sized = PartitionWitness(
        p.covering.with_capacities([b.cardinality - 1 for b in p.blocks])
    )
    m = partition_matroid(sized)
    return Matroid(
        m.ground,
        m.indep_bits,
        rank_hint=m.rank_hint,
        provenance="partition-circuit",
        source=sized,
    )


def partition_dual_params(p: PartitionWitness) -> tuple[int, ...]:
    """Capacities (|P_i| - min(|P_i|, k_i)) such that the partition matroid
    with these parameters is the dual of the one induced by ``p``."""
    return tuple(
        b.cardinality - min(b.cardinality, k)
        for b, k in zip(p.blocks, p.capacities)
    )
