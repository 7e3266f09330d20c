"""Classification predicates for the special-matroid taxonomy: 2-circuit,
partition-circuit, double-circuit and identically self-dual matroids, with
witness partitions that regenerate the classified matroid."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import DEFAULT_ENUM_CAP, SetFamily, SubsetMask, ValidationError
from .constructions import (
    CapacitatedCovering,
    PartitionWitness,
    partition_circuit_matroid,
    partition_matroid,
)
from .matroid import Matroid


class VerificationError(RuntimeError):
    """A recovered witness failed to regenerate the classified matroid."""

    def __init__(self, message: str, differing: Optional[SubsetMask] = None):
        super().__init__(message)
        self.differing = differing


@dataclass(frozen=True)
class ClassificationReport:
    """Flags and witnesses for one matroid.

    Any attached witness, fed back through its construction, reproduces the
    classified matroid's independent family exactly.  A matroid with no
    circuits is vacuously 2-circuit; ``circuit_size_multiset`` lets callers
    tell the vacuous case apart.
    """

    is_matroid: bool
    is_2_circuit: bool
    is_partition_circuit: bool
    is_double_circuit: bool
    is_identically_self_dual: bool
    circuit_size_multiset: tuple[int, ...]
    two_circuit_witness: Optional[PartitionWitness] = None
    partition_circuit_witness: Optional[PartitionWitness] = None

    def __post_init__(self) -> None:
        if self.is_double_circuit and not (
            self.is_2_circuit and self.is_identically_self_dual
        ):
            raise VerificationError(
                "double-circuit matroid must be 2-circuit and identically self-dual"
            )


def is_2_circuit(m: Matroid, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """True iff every circuit has cardinality 2 (vacuously true when there
    are no circuits)."""
    return all(c.cardinality == 2 for c in m.circuits(cap))


def recover_partition_from_2circuit(
    m: Matroid, cap: int = DEFAULT_ENUM_CAP
) -> PartitionWitness:
    """Recover the partition whose all-ones partition matroid equals M.

    Circuit-free elements become singleton classes.  The recovered witness
    is verified by regenerating the matroid and diffing independent
    families; a mismatch raises :class:`VerificationError` carrying the
    first differing subset in canonical order.
    """
    circuits = m.circuits(cap)
    if any(c.cardinality != 2 for c in circuits):
        raise ValidationError("matroid has a circuit of size ≠ 2")
    n = m.ground.n
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for c in circuits:
        i, j = c.indices()
        parent[find(i)] = find(j)
    classes: dict[int, int] = {}
    for e in range(n):
        root = find(e)
        classes[root] = classes.get(root, 0) | (1 << e)
    witness = PartitionWitness(
        CapacitatedCovering(
            m.ground,
            tuple(SubsetMask(m.ground, b) for b in sorted(classes.values())),
            tuple(1 for _ in classes),
        )
    )
    _verify_witness(m, partition_matroid(witness), cap)
    return witness


def _verify_witness(m: Matroid, regen: Matroid, cap: int) -> None:
    fam = m.independent_family(cap)
    fam2 = regen.independent_family(cap)
    if fam.bitset() != fam2.bitset():
        diff = sorted(
            fam.bitset() ^ fam2.bitset(),
            key=lambda b: (b.bit_count(), b),
        )[0]
        raise VerificationError(
            "witness does not regenerate the matroid",
            SubsetMask(m.ground, diff),
        )


def is_partition_circuit(
    m: Matroid, cap: int = DEFAULT_ENUM_CAP
) -> tuple[bool, Optional[PartitionWitness]]:
    """True iff the circuits are pairwise disjoint and cover the universe;
    on success returns the circuit family as a verified partition witness."""
    circuits = m.circuits(cap)
    union = 0
    for c in circuits:
        if union & c.bits:
            return False, None
        union |= c.bits
    if union != m.ground.full_mask:
        return False, None
    witness = PartitionWitness(
        CapacitatedCovering(
            m.ground, circuits.members, tuple(0 for _ in circuits.members)
        )
    )
    _verify_witness(m, partition_circuit_matroid(witness), cap)
    return True, witness


def is_double_circuit(m: Matroid, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """True iff all circuits of M and of its dual have cardinality 2."""
    return is_2_circuit(m, cap) and is_2_circuit(m.dual(), cap)


def classify(m: Matroid, cap: int = DEFAULT_ENUM_CAP) -> ClassificationReport:
    """Run all taxonomy predicates and collect witnesses."""
    circuits = m.circuits(cap)
    sizes = tuple(sorted(c.cardinality for c in circuits))
    two_circuit = all(s == 2 for s in sizes)
    two_witness = recover_partition_from_2circuit(m, cap) if two_circuit else None
    pc, pc_witness = is_partition_circuit(m, cap)
    self_dual = m.is_identically_self_dual(cap)
    double = two_circuit and is_2_circuit(m.dual(), cap)
    return ClassificationReport(
        is_matroid=True,
        is_2_circuit=two_circuit,
        is_partition_circuit=pc,
        is_double_circuit=double,
        is_identically_self_dual=self_dual,
        circuit_size_multiset=sizes,
        two_circuit_witness=two_witness,
        partition_circuit_witness=pc_witness,
    )
