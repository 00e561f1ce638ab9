from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pgc import CycleDecomposition, Permutation, RandomSource, conjugate
from pgc.errors import LcmOverflowError

from oracles import order_by_repetition, power_by_repetition

perm64 = st.permutations(range(64)).map(Permutation)


def random_perm(seed: int, n: int = 64) -> Permutation:
    return Permutation.random(n, RandomSource(seed))


class TestConstruction:
    def test_identity(self):
        assert Permutation.identity(3).image == (0, 1, 2)

    def test_identity_rejects_zero_degree(self):
        with pytest.raises(ValueError):
            Permutation.identity(0)

    @pytest.mark.parametrize("bad", [[], [0, 0], [1, 2], [0, 2], [0, 1, "2"], [-1, 0]])
    def test_rejects_non_bijections(self, bad):
        with pytest.raises(ValueError):
            Permutation(bad)

    def test_from_cycles(self):
        assert Permutation.from_cycles(5, [(0, 1), (2, 3, 4)]).image == (1, 0, 3, 4, 2)

    def test_from_cycles_empty_list_is_identity(self):
        assert Permutation.from_cycles(4, []) == Permutation.identity(4)

    def test_from_cycles_rejects_overlap(self):
        with pytest.raises(ValueError):
            Permutation.from_cycles(5, [(0, 1), (1, 2)])

    def test_from_cycles_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Permutation.from_cycles(3, [(0, 3)])


class TestGroupOps:
    def test_compose_applies_right_factor_first(self):
        assert (Permutation([1, 2, 0]) * Permutation([0, 2, 1])).image == (1, 0, 2)

    def test_compose_identity_laws(self):
        p = random_perm(1, 5)
        e = Permutation.identity(5)
        assert p * e == p
        assert e * p == p

    def test_compose_degree_mismatch(self):
        with pytest.raises(ValueError):
            Permutation([1, 0]) * Permutation([1, 0, 2])

    def test_inverse(self):
        assert Permutation([1, 2, 0]).inverse().image == (2, 0, 1)

    def test_identity_is_self_inverse(self):
        assert Permutation.identity(6).inverse() == Permutation.identity(6)

    def test_inverse_is_involution(self):
        for seed in range(100):
            p = random_perm(seed)
            assert p.inverse().inverse() == p

    @given(perm64, perm64, perm64)
    def test_associativity(self, p, q, r):
        assert (p * q) * r == p * (q * r)

    @given(perm64)
    def test_two_sided_inverse(self, p):
        e = Permutation.identity(64)
        assert p * p.inverse() == e
        assert p.inverse() * p == e


class TestPower:
    def test_three_cycle_cubed(self):
        assert Permutation([1, 2, 0]) ** 3 == Permutation.identity(3)

    def test_square(self):
        assert (Permutation([1, 2, 0]) ** 2).image == (2, 0, 1)

    def test_identity_huge_exponent(self):
        assert Permutation.identity(4) ** 10**9 == Permutation.identity(4)

    def test_negative_one_is_inverse(self):
        for seed in range(100):
            p = random_perm(seed)
            assert p**-1 == p.inverse()

    def test_matches_repeated_composition_on_all_of_s5(self):
        for image in permutations(range(5)):
            p = Permutation(image)
            for e in range(31):
                assert p**e == power_by_repetition(p, e)

    def test_negative_exponents_match_inverse_powers(self):
        p = random_perm(3, 12)
        for e in range(-25, 0):
            assert p**e == power_by_repetition(p, e)

    @given(perm64, st.integers(-(2**63), 2**63), st.integers(-(2**63), 2**63))
    @settings(max_examples=50)
    def test_power_addition_law(self, p, a, b):
        assert p ** (a + b) == (p**a) * (p**b)


class TestCycles:
    def test_decomposition(self):
        dec = Permutation([1, 0, 3, 4, 2]).cycles()
        assert dec.cycles == ((0, 1), (2, 3, 4))
        assert dec.degree == 5

    def test_identity_decomposes_to_fixed_points(self):
        assert Permutation.identity(4).cycles().cycles == ((0,), (1,), (2,), (3,))

    def test_roundtrip_through_cycles(self):
        for seed in range(100):
            p = random_perm(seed)
            assert p.cycles().to_permutation() == p

    def test_decomposition_is_canonical(self):
        # built from rotated, shuffled cycles; decomposition must normalize
        p = Permutation.from_cycles(6, [(4, 2, 5), (1, 0)])
        assert p.cycles().cycles == ((0, 1), (2, 5, 4), (3,))

    def test_cycle_lengths_partition_degree(self):
        for seed in range(20):
            p = random_perm(seed, 31)
            assert sum(p.cycles().cycle_lengths()) == 31

    def test_validation_rejects_non_canonical(self):
        with pytest.raises(ValueError):
            CycleDecomposition(3, ((1, 0), (2,)))
        with pytest.raises(ValueError):
            CycleDecomposition(3, ((0, 1),))


class TestOrder:
    def test_order_of_two_three_cycle_type(self):
        assert Permutation([1, 0, 3, 4, 2]).order() == 6

    def test_order_of_identity(self):
        assert Permutation.identity(7).order() == 1

    def test_order_matches_brute_force(self):
        for seed in range(30):
            p = random_perm(seed, 10)
            assert p.order() == order_by_repetition(p)

    def test_power_to_order_is_identity_and_minimal(self):
        for seed in range(30):
            p = random_perm(seed, 16)
            n = p.order()
            assert p**n == Permutation.identity(16)
            assert all(p**e != Permutation.identity(16) for e in range(1, min(n, 50)))

    def test_order_divides_group_order(self):
        import math

        for seed in range(100):
            assert math.factorial(8) % random_perm(seed, 8).order() == 0

    def test_order_overflow_is_detected(self):
        # distinct primes summing to ~500 push the lcm past 64 bits
        primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61]
        p = Permutation.from_cycles(
            sum(primes),
            [tuple(range(sum(primes[:i]), sum(primes[:i]) + primes[i])) for i in range(len(primes))],
        )
        with pytest.raises(LcmOverflowError):
            p.order()


class TestConjugation:
    def test_identity_conjugator_is_noop(self):
        y = random_perm(5)
        assert conjugate(Permutation.identity(64), y) == y

    def test_conjugating_identity_gives_identity(self):
        x = random_perm(6)
        assert conjugate(x, Permutation.identity(64)) == Permutation.identity(64)

    def test_matches_definition(self):
        for seed in range(50):
            x, y = random_perm(seed, 12), random_perm(seed + 1000, 12)
            assert conjugate(x, y) == x * y * x.inverse()

    def test_preserves_cycle_type(self):
        for seed in range(100):
            x, y = random_perm(seed), random_perm(seed + 5000)
            assert conjugate(x, y).cycle_type() == y.cycle_type()

    @given(perm64, perm64, perm64)
    def test_is_homomorphism(self, x, y1, y2):
        assert conjugate(x, y1 * y2) == conjugate(x, y1) * conjugate(x, y2)

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            conjugate(Permutation([1, 0]), Permutation([1, 0, 2]))


class TestVectorAction:
    def test_identity_action(self):
        assert Permutation.identity(3).apply((7, 8, 9)) == (7, 8, 9)

    def test_moves_cell_i_to_position_p_of_i(self):
        assert Permutation([1, 2, 0]).apply((10, 20, 30)) == (30, 10, 20)

    def test_inverse_action_restores(self):
        rng = RandomSource(99)
        for seed in range(100):
            p = random_perm(seed)
            v = tuple(rng.uniform_below(2**32) for _ in range(64))
            assert p.inverse().apply(p.apply(v)) == v

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            Permutation([1, 0]).apply((1, 2, 3))


class TestRandomPermutation:
    def test_degree_one(self):
        assert Permutation.random(1, RandomSource(0)).image == (0,)

    def test_deterministic_under_seed(self):
        assert Permutation.random(64, RandomSource(42)) == Permutation.random(64, RandomSource(42))

    def test_s4_frequencies_are_uniform(self):
        rng = RandomSource(2024)
        counts = Counter(Permutation.random(4, rng).image for _ in range(10_000))
        assert len(counts) == 24
        for count in counts.values():
            assert abs(count / 10_000 - 1 / 24) < 0.02
