"""Generic matroid over an independence oracle.

Rank, closure, circuits, bases and the dual are all derived from the
oracle.  Greedy rank is correct only because the oracle satisfies the
independence axioms; handles are therefore produced by the construction
functions or by :func:`check_independence_axioms`-vetted families.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Optional

from .core import (
    DEFAULT_ENUM_CAP,
    GroundSet,
    SetFamily,
    SizeLimitError,
    SubsetMask,
    ValidationError,
    check_enum_cap,
)

DEFAULT_ISO_CAP = 8

MATROID = "matroid"
VIOLATES_I1 = "violates_I1"
VIOLATES_I2 = "violates_I2"
VIOLATES_I3 = "violates_I3"


@dataclass(frozen=True)
class AxiomCertificate:
    """Verdict of an independence-axiom check, with witnesses on failure.

    * ``violates_I2`` carries (I, I') with I' ⊆ I, I independent, I' not.
    * ``violates_I3`` carries (I1, I2) with |I1| < |I2| such that no element
      of I2 - I1 extends I1 inside the family.
    """

    verdict: str
    witnesses: tuple[SubsetMask, ...] = ()

    @property
    def is_matroid(self) -> bool:
        return self.verdict == MATROID

    def __str__(self) -> str:
        if self.is_matroid:
            return "matroid"
        if self.verdict == VIOLATES_I1:
            return "violates I1: ∅ ∉ I"
        if self.verdict == VIOLATES_I2:
            i, sub = self.witnesses
            return f"violates I2: I={i}, I'={sub}"
        i1, i2 = self.witnesses
        return f"violates I3: I1={i1}, I2={i2}"


class Matroid:
    """A ground set plus an independence oracle over index bitmasks.

    ``indep_bits`` decides independence of an integer bitmask; ``rank_hint``
    is an optional closed-form rank function, audited against greedy rank at
    construction time.
    """

    __slots__ = ("ground", "indep_bits", "rank_hint", "provenance", "source")

    def __init__(
        self,
        ground: GroundSet,
        indep_bits: Callable[[int], bool],
        rank_hint: Optional[Callable[[int], int]] = None,
        provenance: str = "oracle",
        source: object = None,
    ):
        if not indep_bits(0):
            raise ValidationError("independence oracle rejects ∅ (axiom I1)")
        self.ground = ground
        self.indep_bits = indep_bits
        self.rank_hint = rank_hint
        self.provenance = provenance
        self.source = source

    @classmethod
    def from_family(cls, family: SetFamily, provenance: str = "explicit") -> Matroid:
        """A handle backed by an explicit independent family.

        The family is not re-checked here; run
        :func:`check_independence_axioms` first for untrusted input.
        """
        bitset = family.bitset()
        return cls(family.ground, bitset.__contains__, provenance=provenance)

    # -- basic queries ----------------------------------------------------

    def independent(self, x: SubsetMask) -> bool:
        return self.indep_bits(x.bits)

    def greedy_rank_bits(self, bits: int) -> int:
        """Greedy rank: scan in index order, keep elements preserving
        independence."""
        kept = 0
        rest = bits
        while rest:
            low = rest & -rest
            rest ^= low
            if self.indep_bits(kept | low):
                kept |= low
        return kept.bit_count()

    def rank_bits(self, bits: int) -> int:
        if self.rank_hint is not None:
            return self.rank_hint(bits)
        return self.greedy_rank_bits(bits)

    def rank(self, x: SubsetMask) -> int:
        return self.rank_bits(x.bits)

    def closure(self, x: SubsetMask) -> SubsetMask:
        """All elements whose addition leaves the rank unchanged."""
        r = self.rank_bits(x.bits)
        out = x.bits
        rest = self.ground.full_mask & ~x.bits
        while rest:
            low = rest & -rest
            rest ^= low
            if self.rank_bits(x.bits | low) == r:
                out |= low
        return SubsetMask(self.ground, out)

    def loops(self) -> SubsetMask:
        return self.closure(self.ground.empty())

    # -- enumerations -----------------------------------------------------

    def independent_family(self, cap: int = DEFAULT_ENUM_CAP) -> SetFamily:
        check_enum_cap(self.ground.n, cap)
        indep = self.indep_bits
        return SetFamily(
            self.ground, [b for b in range(1 << self.ground.n) if indep(b)]
        )

    def circuits(self, cap: int = DEFAULT_ENUM_CAP) -> SetFamily:
        """Minimal dependent sets, by ascending-cardinality enumeration.

        Supersets of found circuits are pruned, so the dependent family is
        never materialized.
        """
        check_enum_cap(self.ground.n, cap)
        n = self.ground.n
        indep = self.indep_bits
        found: list[int] = []
        by_size: list[list[int]] = [[] for _ in range(n + 1)]
        for b in range(1 << n):
            by_size[b.bit_count()].append(b)
        for size in range(1, n + 1):
            for b in by_size[size]:
                if any(c & ~b == 0 for c in found):
                    continue
                if not indep(b):
                    found.append(b)
        return SetFamily(self.ground, found)

    def bases(self, cap: int = DEFAULT_ENUM_CAP) -> SetFamily:
        """Maximal independent sets; all have cardinality rank(U)."""
        check_enum_cap(self.ground.n, cap)
        r = self.rank_bits(self.ground.full_mask)
        indep = self.indep_bits
        return SetFamily(
            self.ground,
            [b for b in range(1 << self.ground.n) if b.bit_count() == r and indep(b)],
        )

    # -- duality ----------------------------------------------------------

    def dual(self) -> Matroid:
        """Dual matroid via the rank identity r*(X) = |X| + r(U-X) - r(U).

        Equivalently: X is dual-independent iff X avoids some base, i.e.
        iff r(U-X) = r(U).
        """
        full = self.ground.full_mask
        r_full = self.rank_bits(full)
        rank_bits = self.rank_bits

        def dual_indep(bits: int) -> bool:
            return rank_bits(full & ~bits) == r_full

        def dual_rank(bits: int) -> int:
            return bits.bit_count() + rank_bits(full & ~bits) - r_full

        return Matroid(
            self.ground,
            dual_indep,
            rank_hint=dual_rank,
            provenance=f"dual({self.provenance})",
            source=self,
        )

    def is_identically_self_dual(self, cap: int = DEFAULT_ENUM_CAP) -> bool:
        """True iff M and M* have the same independent family (not merely
        isomorphic)."""
        return (
            self.independent_family(cap).bitset()
            == self.dual().independent_family(cap).bitset()
        )

    # -- misc -------------------------------------------------------------

    def audit_rank_hint(self, samples: int = 100, seed: int = 0) -> None:
        """Spot-check the closed-form rank against greedy rank."""
        if self.rank_hint is None:
            return
        rng = random.Random(seed)
        full = self.ground.full_mask
        for _ in range(samples):
            bits = rng.randrange(full + 1)
            if self.rank_hint(bits) != self.greedy_rank_bits(bits):
                raise ValidationError(
                    f"rank_hint disagrees with greedy rank on bitmask {bits:#x}"
                )

    def __repr__(self) -> str:
        return f"Matroid(n={self.ground.n}, provenance={self.provenance!r})"


def check_independence_axioms(
    family: SetFamily, cap: int = DEFAULT_ENUM_CAP
) -> AxiomCertificate:
    """Check I1, I2, I3 in order, reporting the first violated axiom with
    witnesses that are minimal in canonical order."""
    check_enum_cap(family.ground.n, cap)
    bitset = family.bitset()
    if 0 not in bitset:
        return AxiomCertificate(VIOLATES_I1)
    # I2: every subset of a member is a member.  Subsets of each member are
    # scanned in canonical order so the reported witness is deterministic.
    for member in family.members:
        bits = member.bits
        sub = (bits - 1) & bits
        missing = []
        while sub:
            if sub not in bitset:
                missing.append(sub)
            sub = (sub - 1) & bits
        if missing:
            worst = min(missing, key=lambda b: (b.bit_count(), SubsetMask(family.ground, b).indices()))
            return AxiomCertificate(
                VIOLATES_I2, (member, SubsetMask(family.ground, worst))
            )
    # I3: exchange property, pairs scanned in canonical order.
    members = family.members
    for i1 in members:
        for i2 in members:
            if i1.cardinality >= i2.cardinality:
                continue
            diff = i2.bits & ~i1.bits
            ok = False
            rest = diff
            while rest:
                low = rest & -rest
                rest ^= low
                if (i1.bits | low) in bitset:
                    ok = True
                    break
            if not ok:
                return AxiomCertificate(VIOLATES_I3, (i1, i2))
    return AxiomCertificate(MATROID)


def are_isomorphic(
    m1: Matroid, m2: Matroid, cap: int = DEFAULT_ISO_CAP
) -> tuple[bool, Optional[dict[str, str]]]:
    """Search for a label bijection mapping one independent family onto the
    other.  Cheap invariants (size, rank, circuit-size multiset) prune the
    factorial search."""
    if m1.ground.n > cap or m2.ground.n > cap:
        raise SizeLimitError(
            f"isomorphism search is capped at n ≤ {cap}"
        )
    if m1.ground.n != m2.ground.n:
        return False, None
    fam1 = m1.independent_family()
    fam2 = m2.independent_family()
    if len(fam1) != len(fam2):
        return False, None
    if m1.rank_bits(m1.ground.full_mask) != m2.rank_bits(m2.ground.full_mask):
        return False, None
    sizes1 = sorted(c.cardinality for c in m1.circuits())
    sizes2 = sorted(c.cardinality for c in m2.circuits())
    if sizes1 != sizes2:
        return False, None
    n = m1.ground.n
    bits1 = sorted(fam1.bitset())
    target = fam2.bitset()
    for perm in permutations(range(n)):
        ok = True
        for b in bits1:
            image = 0
            rest = b
            while rest:
                low = rest & -rest
                rest ^= low
                image |= 1 << perm[low.bit_length() - 1]
            if image not in target:
                ok = False
                break
        if ok:
            witness = {
                m1.ground.labels[i]: m2.ground.labels[perm[i]] for i in range(n)
            }
            return True, witness
    return False, None
