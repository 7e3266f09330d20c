"""Ground sets, subset masks and set families.

Elements are referenced internally by index 0..n-1; labels appear only at
construction and printing boundaries.  Subsets are stored as integer
bitmasks, so all set arithmetic is plain bit arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

#: Default upper bound on ground-set size for powerset-scanning operations.
DEFAULT_ENUM_CAP = 22


class ValidationError(ValueError):
    """A value failed construction-time validation."""


class SizeLimitError(RuntimeError):
    """An enumeration-heavy operation refused a too-large ground set."""


def check_enum_cap(n: int, cap: int = DEFAULT_ENUM_CAP) -> None:
    if n > cap:
        raise SizeLimitError(
            f"ground set has {n} elements; enumeration is capped at {cap}"
        )


class GroundSet:
    """A non-empty finite universe with stable, distinct element labels."""

    __slots__ = ("labels", "n", "full_mask", "_index")

    def __init__(self, labels: Iterable[str]):
        self.labels: tuple[str, ...] = tuple(labels)
        if not self.labels:
            raise ValidationError("ground set must be non-empty")
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise ValidationError("ground set labels must be distinct")
        self.n: int = len(self.labels)
        self.full_mask: int = (1 << self.n) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValidationError(f"unknown element {label!r}") from None

    def subset(self, labels: Iterable[str] = ()) -> SubsetMask:
        bits = 0
        for lab in labels:
            bits |= 1 << self.index(lab)
        return SubsetMask(self, bits)

    def mask(self, bits: int) -> SubsetMask:
        return SubsetMask(self, bits)

    def full(self) -> SubsetMask:
        return SubsetMask(self, self.full_mask)

    def empty(self) -> SubsetMask:
        return SubsetMask(self, 0)

    def singleton(self, label: str) -> SubsetMask:
        return SubsetMask(self, 1 << self.index(label))

    def subsets(self) -> Iterator[SubsetMask]:
        """All subsets in canonical order (cardinality, then index-lex)."""
        for bits in sorted(range(1 << self.n), key=_canonical_bits_key):
            yield SubsetMask(self, bits)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"GroundSet({list(self.labels)!r})"


def _indices(bits: int) -> tuple[int, ...]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return tuple(out)


def _canonical_bits_key(bits: int) -> tuple[int, tuple[int, ...]]:
    return (bits.bit_count(), _indices(bits))


@dataclass(frozen=True)
class SubsetMask:
    """One subset of a ground set, stored as an index bitmask."""

    ground: GroundSet
    bits: int

    def __post_init__(self) -> None:
        if self.bits & ~self.ground.full_mask:
            raise ValidationError("subset refers to indices outside the ground set")

    @property
    def cardinality(self) -> int:
        return self.bits.bit_count()

    def indices(self) -> tuple[int, ...]:
        return _indices(self.bits)

    def labels(self) -> tuple[str, ...]:
        return tuple(self.ground.labels[i] for i in self.indices())

    def complement(self) -> SubsetMask:
        return SubsetMask(self.ground, self.bits ^ self.ground.full_mask)

    def contains(self, label: str) -> bool:
        return bool(self.bits >> self.ground.index(label) & 1)

    def issubset(self, other: SubsetMask) -> bool:
        return self.bits & ~other.bits == 0

    def __or__(self, other: SubsetMask) -> SubsetMask:
        return SubsetMask(self.ground, self.bits | other.bits)

    def __and__(self, other: SubsetMask) -> SubsetMask:
        return SubsetMask(self.ground, self.bits & other.bits)

    def __sub__(self, other: SubsetMask) -> SubsetMask:
        return SubsetMask(self.ground, self.bits & ~other.bits)

    def __len__(self) -> int:
        return self.cardinality

    def __bool__(self) -> bool:
        return self.bits != 0

    def canonical_key(self) -> tuple[int, tuple[int, ...]]:
        return _canonical_bits_key(self.bits)

    def __repr__(self) -> str:
        return format_set(self)


def format_set(x: SubsetMask) -> str:
    """Deterministic human-readable rendering, e.g. ``{a,b}``; empty is ``∅``."""
    if not x.bits:
        return "∅"
    return "{" + ",".join(x.labels()) + "}"


class SetFamily:
    """A finite collection of distinct subsets of one ground set.

    Members are canonically ordered by (cardinality, index-lexicographic),
    so equal families compare equal structurally and serialize identically.
    """

    __slots__ = ("ground", "members", "_bitset")

    def __init__(self, ground: GroundSet, members: Iterable[SubsetMask | int]):
        self.ground = ground
        masks = []
        for m in members:
            if isinstance(m, SubsetMask):
                if m.ground != ground:
                    raise ValidationError("family members must share one ground set")
                masks.append(m.bits)
            else:
                masks.append(int(m))
        bitset = set(masks)
        if len(bitset) != len(masks):
            raise ValidationError("duplicate members are forbidden in a set family")
        self._bitset = frozenset(bitset)
        self.members: tuple[SubsetMask, ...] = tuple(
            SubsetMask(ground, b) for b in sorted(bitset, key=_canonical_bits_key)
        )

    @classmethod
    def from_labels(cls, ground: GroundSet, sets: Iterable[Iterable[str]]) -> SetFamily:
        return cls(ground, [ground.subset(s) for s in sets])

    def __contains__(self, x: SubsetMask) -> bool:
        return x.bits in self._bitset

    def contains_bits(self, bits: int) -> bool:
        return bits in self._bitset

    def bitset(self) -> frozenset[int]:
        return self._bitset

    def union_mask(self) -> SubsetMask:
        u = 0
        for m in self.members:
            u |= m.bits
        return SubsetMask(self.ground, u)

    def __iter__(self) -> Iterator[SubsetMask]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SetFamily)
            and self.ground == other.ground
            and self._bitset == other._bitset
        )

    def __hash__(self) -> int:
        return hash((self.ground, self._bitset))

    def __repr__(self) -> str:
        return "{" + ", ".join(format_set(m) for m in self.members) + "}"


def family_min(a: SetFamily) -> SetFamily:
    """The ⊆-minimal members of the family."""
    mins = [
        x
        for x in a.members
        if not any(y.bits != x.bits and y.bits & ~x.bits == 0 for y in a.members)
    ]
    return SetFamily(a.ground, mins)


def family_max(a: SetFamily) -> SetFamily:
    """The ⊆-maximal members of the family."""
    maxs = [
        x
        for x in a.members
        if not any(y.bits != x.bits and x.bits & ~y.bits == 0 for y in a.members)
    ]
    return SetFamily(a.ground, maxs)


def opp_predicate(a: SetFamily) -> Callable[[SubsetMask], bool]:
    """Membership predicate for the complement family {X ⊆ U : X ∉ A}.

    The complement family is never materialized (it has 2^n - |A| members).
    """
    bitset = a.bitset()

    def pred(x: SubsetMask) -> bool:
        return x.bits not in bitset

    return pred
