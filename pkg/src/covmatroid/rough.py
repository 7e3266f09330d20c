"""Second-type covering-based rough approximations, computed directly from
the covering and, separately, through the k-rank matroids its blocks induce.

The direct and matroidal operators are deliberately distinct entry points so
they can be diffed: their agreement (or any counterexample) is surfaced by
:func:`approximation_findings` rather than patched over.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import GroundSet, SetFamily, SubsetMask, ValidationError
from .constructions import (
    CapacitatedCovering,
    covering_matroid_slice,
    k_rank_matroid,
)
from .matroid import Matroid


@dataclass(frozen=True)
class ApproximationSpace:
    """A universe together with a covering of it."""

    ground: GroundSet
    covering: SetFamily

    def __post_init__(self) -> None:
        if self.covering.ground != self.ground:
            raise ValidationError("covering must live on the space's ground set")
        union = 0
        for block in self.covering:
            if not block.bits:
                raise ValidationError("covering blocks must be nonempty")
            union |= block.bits
        if union != self.ground.full_mask:
            raise ValidationError("covering blocks must union to the universe")


def neighborhood(space: ApproximationSpace, x: str) -> SubsetMask:
    """Intersection of all covering blocks containing x; nonempty since the
    covering covers the universe."""
    bit = 1 << space.ground.index(x)
    out = space.ground.full_mask
    for block in space.covering:
        if block.bits & bit:
            out &= block.bits
    return SubsetMask(space.ground, out)


def lower_approx(space: ApproximationSpace, x: SubsetMask) -> SubsetMask:
    """Union of covering blocks contained in X."""
    out = 0
    for block in space.covering:
        if block.bits & ~x.bits == 0:
            out |= block.bits
    return SubsetMask(space.ground, out)


def upper_approx(space: ApproximationSpace, x: SubsetMask) -> SubsetMask:
    """Union of covering blocks meeting X."""
    out = 0
    for block in space.covering:
        if block.bits & x.bits:
            out |= block.bits
    return SubsetMask(space.ground, out)


@dataclass(frozen=True)
class MatroidalSpace:
    """A covering with positive capacities plus the per-block k-rank
    matroids used by the matroidal forms of the approximation operators.

    Capacities must all be at least 1: the matroidal representations are
    stated only for positive integers, and a zero capacity would silently
    degrade them.
    """

    covering: CapacitatedCovering
    slices: tuple[Matroid, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if any(k < 1 for k in self.covering.capacities):
            raise ValidationError("matroidal operators require all capacities ≥ 1")
        object.__setattr__(
            self,
            "slices",
            tuple(
                k_rank_matroid(self.covering.ground, b, k)
                for b, k in zip(self.covering.blocks, self.covering.capacities)
            ),
        )

    @property
    def ground(self) -> GroundSet:
        return self.covering.ground

    def space(self) -> ApproximationSpace:
        return ApproximationSpace(self.ground, self.covering.block_family())


def matroidal_block(ms: MatroidalSpace, i: int, slices: tuple[Matroid, ...] | None = None) -> SubsetMask:
    """Block K_i recovered as the complement of the i-th slice's closure of
    the empty set (the slice's non-loops)."""
    slc = (slices or ms.slices)[i]
    return slc.closure(ms.ground.empty()).complement()


def matroidal_membership(
    ms: MatroidalSpace, x: str, i: int
) -> tuple[bool, bool, bool]:
    """The equivalent membership conditions for x against block i:
    (x ∈ K_i, {x} independent in slice i, slice-i rank of {x} is 1)."""
    bit = 1 << ms.ground.index(x)
    slc = ms.slices[i]
    return (
        bool(ms.covering.blocks[i].bits & bit),
        slc.indep_bits(bit),
        slc.rank_bits(bit) == 1,
    )


def matroidal_neighborhood(
    ms: MatroidalSpace, x: str, slices: tuple[Matroid, ...] | None = None
) -> SubsetMask:
    """Neighborhood of x as an intersection of recovered blocks over the
    slices giving {x} rank 1."""
    bit = 1 << ms.ground.index(x)
    out = ms.ground.full_mask
    slcs = slices or ms.slices
    for i, slc in enumerate(slcs):
        if slc.rank_bits(bit) == 1:
            out &= matroidal_block(ms, i, slcs).bits
    return SubsetMask(ms.ground, out)


def matroidal_lower(
    ms: MatroidalSpace, x: SubsetMask, slices: tuple[Matroid, ...] | None = None
) -> SubsetMask:
    """Matroidal form of the lower approximation: union of recovered blocks
    over slices whose rank of X equals their rank of K_i.

    This evaluates the published formula exactly as stated; see
    :func:`approximation_findings` for where it can differ from the direct
    lower approximation.
    """
    out = 0
    slcs = slices or ms.slices
    for i, slc in enumerate(slcs):
        if slc.rank_bits(x.bits) == slc.rank_bits(ms.covering.blocks[i].bits):
            out |= matroidal_block(ms, i, slcs).bits
    return SubsetMask(ms.ground, out)


def matroidal_upper(
    ms: MatroidalSpace, x: SubsetMask, slices: tuple[Matroid, ...] | None = None
) -> SubsetMask:
    """Matroidal form of the upper approximation: union of recovered blocks
    over slices giving X positive rank."""
    out = 0
    slcs = slices or ms.slices
    for i, slc in enumerate(slcs):
        if slc.rank_bits(x.bits) > 0:
            out |= matroidal_block(ms, i, slcs).bits
    return SubsetMask(ms.ground, out)


def slice_via_covering_matroid(ms: MatroidalSpace, i: int) -> Matroid:
    """The i-th slice obtained from the covering matroid with all other
    capacities zeroed; interchangeable with the direct k-rank slice."""
    return covering_matroid_slice(ms.covering, i)


@dataclass(frozen=True)
class Finding:
    """A concrete input on which a matroidal operator disagrees with its
    direct counterpart."""

    operator: str
    subset: Optional[SubsetMask]
    element: Optional[str]
    direct: SubsetMask
    matroidal: SubsetMask

    def __str__(self) -> str:
        where = f"X={self.subset}" if self.subset is not None else f"x={self.element}"
        return (
            f"{self.operator} mismatch at {where}: "
            f"direct={self.direct} matroidal={self.matroidal}"
        )


def approximation_findings(
    ms: MatroidalSpace, x: SubsetMask, via_covering: bool = False
) -> list[Finding]:
    """Diff the matroidal operators against the direct ones on X.

    With ``via_covering`` the slices are re-derived from zeroed covering
    matroids before comparing.  An empty list means full agreement.
    """
    space = ms.space()
    slices = (
        tuple(slice_via_covering_matroid(ms, i) for i in range(ms.covering.m))
        if via_covering
        else ms.slices
    )
    findings = []
    sl = lower_approx(space, x)
    msl = matroidal_lower(ms, x, slices)
    if sl.bits != msl.bits:
        findings.append(Finding("lower", x, None, sl, msl))
    sh = upper_approx(space, x)
    msh = matroidal_upper(ms, x, slices)
    if sh.bits != msh.bits:
        findings.append(Finding("upper", x, None, sh, msh))
    return findings
