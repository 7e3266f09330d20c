import pytest

from covmatroid import (
    GroundSet,
    Matroid,
    PartitionWitness,
    ValidationError,
    classify,
    is_2_circuit,
    is_double_circuit,
    is_partition_circuit,
    partition_matroid,
    recover_partition_from_2circuit,
    CapacitatedCovering,
    covering_matroid,
    partition_circuit_matroid,
)


def free_matroid(n):
    g = GroundSet(f"x{i}" for i in range(n))
    return Matroid(g, lambda bits: True, rank_hint=int.bit_count,
                   provenance="free")


def all_ones_partition(ground, blocks):
    return partition_matroid(
        PartitionWitness.from_labels(ground, blocks, [1] * len(blocks))
    )


def example2_matroid():
    g = GroundSet("abc")
    return covering_matroid(
        CapacitatedCovering.from_labels(g, [["a", "b"], ["b", "c"]], [1, 1])
    )


class TestIs2Circuit:
    def test_all_ones_partition_matroid(self):
        g = GroundSet("abcde")
        assert is_2_circuit(all_ones_partition(g, [["a", "b", "c"], ["d", "e"]]))

    def test_free_matroid_vacuously(self):
        assert is_2_circuit(free_matroid(3))

    def test_example2_is_not(self):
        assert not is_2_circuit(example2_matroid())


class TestRecoverPartition:
    def test_recovers_pair_partition(self):
        g = GroundSet("abcd")
        m = all_ones_partition(g, [["a", "b"], ["c", "d"]])
        witness = recover_partition_from_2circuit(m)
        assert [repr(b) for b in witness.blocks] == ["{a,b}", "{c,d}"]

    def test_free_matroid_gives_singletons(self):
        m = free_matroid(3)
        witness = recover_partition_from_2circuit(m)
        assert all(b.cardinality == 1 for b in witness.blocks)

    def test_loop_matroid_rejected(self):
        g = GroundSet("ab")
        m = Matroid(g, lambda bits: bits & 1 == 0, provenance="loopy")
        with pytest.raises(ValidationError):
            recover_partition_from_2circuit(m)

    def test_recovered_partition_matches_original_up_to_singletons(self):
        g = GroundSet("abcde")
        blocks = [["a", "c"], ["b"], ["d", "e"]]
        witness = recover_partition_from_2circuit(all_ones_partition(g, blocks))
        labels = sorted(tuple(b.labels()) for b in witness.blocks)
        assert labels == [("a", "c"), ("b",), ("d", "e")]


class TestIsPartitionCircuit:
    def test_pair_partition_circuits(self):
        g = GroundSet("abcd")
        p = PartitionWitness.from_labels(g, [["a", "b"], ["c", "d"]], [1, 1])
        ok, witness = is_partition_circuit(partition_circuit_matroid(p))
        assert ok
        assert [repr(b) for b in witness.blocks] == ["{a,b}", "{c,d}"]

    def test_free_matroid_is_not(self):
        ok, witness = is_partition_circuit(free_matroid(2))
        assert not ok and witness is None

    def test_example2_single_block(self):
        ok, witness = is_partition_circuit(example2_matroid())
        assert ok
        assert [repr(b) for b in witness.blocks] == ["{a,b,c}"]


class TestIsDoubleCircuit:
    def test_pair_partition(self):
        g = GroundSet("abcd")
        assert is_double_circuit(all_ones_partition(g, [["a", "b"], ["c", "d"]]))

    def test_triple_block_is_not(self):
        g = GroundSet("abc")
        assert not is_double_circuit(all_ones_partition(g, [["a", "b", "c"]]))

    def test_free_matroid_is_not(self):
        assert not is_double_circuit(free_matroid(2))


class TestClassify:
    def test_pair_partition_report(self):
        g = GroundSet("abcd")
        report = classify(all_ones_partition(g, [["a", "b"], ["c", "d"]]))
        assert report.is_matroid
        assert report.is_2_circuit
        assert report.is_partition_circuit
        assert report.is_double_circuit
        assert report.is_identically_self_dual
        assert report.circuit_size_multiset == (2, 2)
        assert report.two_circuit_witness is not None
        assert report.partition_circuit_witness is not None

    def test_example2_report(self):
        report = classify(example2_matroid())
        assert report.is_matroid
        assert not report.is_2_circuit
        assert report.is_partition_circuit
        assert not report.is_double_circuit
        assert not report.is_identically_self_dual
        assert report.circuit_size_multiset == (3,)

    def test_rank0_singleton_report(self):
        g = GroundSet("a")
        m = Matroid(g, lambda bits: bits == 0, provenance="rank0")
        report = classify(m)
        # the lone circuit {a} is the one-block partition of U, so the
        # matroid is partition-circuit; every other special flag fails
        assert report.circuit_size_multiset == (1,)
        assert not report.is_2_circuit
        assert report.is_partition_circuit
        assert not report.is_double_circuit
        assert not report.is_identically_self_dual

    def test_witnesses_regenerate_the_matroid(self):
        g = GroundSet("abcdef")
        m = all_ones_partition(g, [["a", "b"], ["c", "d"], ["e", "f"]])
        report = classify(m)
        regen = partition_matroid(report.two_circuit_witness)
        assert (regen.independent_family().bitset()
                == m.independent_family().bitset())
        regen2 = partition_circuit_matroid(report.partition_circuit_witness)
        assert (regen2.independent_family().bitset()
                == m.independent_family().bitset())
