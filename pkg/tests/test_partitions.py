import json

import pytest

from germkit.partitions import (
    Composition,
    Partition,
    canonical_order,
    composition_from_subset,
    d_of,
    dominance_compare,
    dominance_leq,
    dominance_lt,
    dual,
    enumerate_partitions,
    induce_partition,
    minimal_elements,
    scale_partition,
    sort_to_partition,
    subset_from_composition,
)


def P(*parts):
    return Partition(parts)


class TestPartitionType:
    def test_validation(self):
        with pytest.raises(ValueError):
            Partition([])
        with pytest.raises(ValueError):
            Partition([0])
        with pytest.raises(ValueError):
            Partition([1, 2])
        with pytest.raises(ValueError):
            Partition([3, -1])

    def test_equality_is_part_list_equality(self):
        assert P(3, 1) == P(3, 1)
        assert P(3, 1) != P(2, 2)
        assert P(2) != Composition([2])

    def test_immutable(self):
        lam = P(3, 1)
        with pytest.raises(AttributeError):
            lam.parts = (4,)

    def test_json_round_trip(self):
        lam = P(3, 1, 1)
        assert lam.to_json() == [3, 1, 1]
        assert Partition.from_json(json.loads(json.dumps(lam.to_json()))) == lam
        with pytest.raises(ValueError):
            Partition.from_json({"composition": [1]})

    def test_composition_wire_format_is_distinct(self):
        c = Composition([1, 3, 2])
        assert c.to_json() == {"composition": [1, 3, 2]}
        assert Composition.from_json(c.to_json()) == c
        with pytest.raises(ValueError):
            Composition.from_json([1, 3, 2])


class TestEnumeration:
    def test_n2_complete(self):
        assert enumerate_partitions(2) == [P(2), P(1, 1)]

    def test_counts(self):
        assert len(enumerate_partitions(5)) == 7
        assert len(enumerate_partitions(6)) == 11

    def test_order_is_lexicographically_decreasing(self):
        for n in range(1, 11):
            parts = enumerate_partitions(n)
            keys = [p.parts for p in parts]
            assert keys == sorted(keys, reverse=True)
            assert parts[0] == Partition([n])
            assert parts[-1] == Partition([1] * n)

    def test_no_duplicates_and_correct_n(self):
        for n in range(1, 11):
            parts = enumerate_partitions(n)
            assert len(set(parts)) == len(parts)
            assert all(lam.n == n for lam in parts)

    def test_n0_rejected(self):
        with pytest.raises(ValueError):
            enumerate_partitions(0)

    def test_canonical_order_matches_enumeration(self):
        parts = enumerate_partitions(7)
        shuffled = list(reversed(parts))
        assert canonical_order(shuffled) == parts


class TestDual:
    def test_examples(self):
        assert dual(P(4)) == P(1, 1, 1, 1)
        assert dual(P(2, 1)) == P(2, 1)
        assert dual(P(3, 1)) == P(2, 1, 1)

    def test_involution_up_to_12(self):
        for n in range(1, 13):
            for lam in enumerate_partitions(n):
                assert dual(dual(lam)) == lam

    def test_antitone_up_to_10(self):
        # mu <= lam iff dual(lam) <= dual(mu)
        for n in range(1, 11):
            parts = enumerate_partitions(n)
            for mu in parts:
                for lam in parts:
                    assert dominance_leq(mu, lam) == dominance_leq(dual(lam), dual(mu))


class TestDominance:
    def test_examples(self):
        assert dominance_leq(P(1, 1), P(2))
        assert not dominance_leq(P(2), P(1, 1))
        assert not dominance_leq(P(3, 3), P(4, 1, 1))
        assert not dominance_leq(P(4, 1, 1), P(3, 3))
        assert dominance_leq(P(2, 2, 1, 1), P(3, 2, 1))

    def test_mismatched_n_raises(self):
        with pytest.raises(ValueError):
            dominance_leq(P(2), P(2, 1))
        with pytest.raises(ValueError):
            dominance_compare(P(2), P(3))

    def test_three_valued_compare(self):
        assert dominance_compare(P(1, 1), P(2)) == -1
        assert dominance_compare(P(2), P(1, 1)) == 1
        assert dominance_compare(P(2, 1), P(2, 1)) == 0
        assert dominance_compare(P(3, 3), P(4, 1, 1)) is None

    def test_partial_order_axioms_up_to_8(self):
        for n in range(1, 9):
            parts = enumerate_partitions(n)
            for a in parts:
                assert dominance_leq(a, a)
            for a in parts:
                for b in parts:
                    if dominance_leq(a, b) and dominance_leq(b, a):
                        assert a == b
            for a in parts:
                below_a = [b for b in parts if dominance_leq(b, a)]
                for b in below_a:
                    for c in parts:
                        if dominance_leq(c, b):
                            assert dominance_leq(c, a)

    def test_unique_max_and_min(self):
        for n in range(1, 11):
            parts = enumerate_partitions(n)
            top, bottom = Partition([n]), Partition([1] * n)
            for lam in parts:
                assert dominance_leq(lam, top)
                assert dominance_leq(bottom, lam)
                if lam != top:
                    assert not dominance_leq(top, lam)
                if lam != bottom:
                    assert not dominance_leq(lam, bottom)


class TestDOf:
    def test_examples(self):
        assert d_of(P(2, 1)) == 2
        assert d_of(P(3, 3)) == 9
        assert d_of(P(4, 1, 1)) == 9

    def test_extremes(self):
        for n in range(1, 9):
            assert d_of(Partition([n])) == 0
            assert d_of(Partition([1] * n)) == n * (n - 1) // 2

    def test_monotone_up_to_10(self):
        # mu <= lam implies d_mu >= d_lam
        for n in range(1, 11):
            parts = enumerate_partitions(n)
            for mu in parts:
                for lam in parts:
                    if dominance_leq(mu, lam):
                        assert d_of(mu) >= d_of(lam)

    def test_injectivity_below_6_fails_at_6(self):
        for n in range(1, 6):
            values = [d_of(lam) for lam in enumerate_partitions(n)]
            assert len(set(values)) == len(values)
        values6 = [d_of(lam) for lam in enumerate_partitions(6)]
        assert len(set(values6)) < len(values6)


class TestCompositions:
    def test_sort_to_partition(self):
        assert sort_to_partition(Composition([1, 3, 2])) == P(3, 2, 1)
        assert sort_to_partition(Composition([2, 2])) == P(2, 2)
        assert sort_to_partition(Composition([1, 1, 4])) == P(4, 1, 1)

    def test_from_subset_examples(self):
        assert composition_from_subset([], 4) == Composition([4])
        assert composition_from_subset(range(1, 6), 6) == Composition([1] * 6)
        assert composition_from_subset([2, 3], 5) == Composition([2, 1, 2])

    def test_from_subset_errors(self):
        with pytest.raises(ValueError):
            composition_from_subset([0], 4)
        with pytest.raises(ValueError):
            composition_from_subset([4], 4)
        with pytest.raises(ValueError):
            composition_from_subset([2, 2], 4)

    def test_bijection_up_to_10(self):
        from itertools import combinations

        for n in range(1, 11):
            seen = set()
            for r in range(n):
                for subset in combinations(range(1, n), r):
                    comp = composition_from_subset(subset, n)
                    assert subset_from_composition(comp) == subset
                    assert comp.n == n
                    seen.add(comp)
            assert len(seen) == 2 ** (n - 1)


class TestInduceScaleMinimal:
    def test_induce(self):
        assert induce_partition([P(2, 1), P(2)]) == P(2, 2, 1)
        assert induce_partition([P(1), P(1)]) == P(1, 1)
        assert induce_partition([P(3), P(2, 2)]) == P(3, 2, 2)
        with pytest.raises(ValueError):
            induce_partition([])

    def test_scale(self):
        assert scale_partition(P(2, 1), 3) == P(6, 3)
        assert scale_partition(P(1, 1), 2) == P(2, 2)
        assert scale_partition(P(3, 2), 1) == P(3, 2)
        with pytest.raises(ValueError):
            scale_partition(P(2), 0)

    def test_minimal_elements(self):
        assert minimal_elements({P(2), P(1, 1)}) == {P(1, 1)}
        assert minimal_elements({P(3, 3), P(4, 1, 1)}) == {P(3, 3), P(4, 1, 1)}
        assert minimal_elements({P(2, 1)}) == {P(2, 1)}
        assert minimal_elements(set()) == set()
        with pytest.raises(ValueError):
            minimal_elements({P(2), P(2, 1)})

    def test_minimal_elements_against_definition(self):
        parts = enumerate_partitions(6)
        subset = {parts[i] for i in (0, 2, 4, 7, 10)}
        expected = {
            lam for lam in subset if not any(dominance_lt(mu, lam) for mu in subset)
        }
        assert minimal_elements(subset) == expected
