"""The brute-force references themselves, cross-checked the slow way."""

import itertools

import pytest

from latsum import IntegerBasis, TooLargeError
from latsum.instance import SplitMix64
from latsum.oracle import (
    affine_cube_count,
    brute_force_subset_sum,
    coefficient_bound_for_radius,
    shortest_vector_brute,
)


class TestSubsetSum:
    def test_single_solution(self):
        assert brute_force_subset_sum([3, 5], 8) == [(1, 1)]

    def test_duplicate_weights(self):
        assert brute_force_subset_sum([2, 2], 2) == [(0, 1), (1, 0)]

    def test_tolerance_window(self):
        # both 15 and 17 are within 1 of 16
        assert brute_force_subset_sum([3, 5, 12], 16, 1) == [(0, 1, 1), (1, 0, 1)]

    def test_no_solution(self):
        assert brute_force_subset_sum([4, 6], 5) == []

    def test_empty_subset(self):
        assert brute_force_subset_sum([7, 9], 0) == [(0, 0)]

    def test_matches_naive_enumeration(self):
        rng = SplitMix64(31)
        for _ in range(10):
            n = 3 + rng.below(8)
            weights = [rng.bits(10) + 1 for _ in range(n)]
            target = sum(w for w in weights if rng.bits(1))
            tol = rng.below(3)
            naive = sorted(
                e
                for e in itertools.product((0, 1), repeat=n)
                if abs(sum(w * b for w, b in zip(weights, e)) - target) <= tol
            )
            assert brute_force_subset_sum(weights, target, tol) == naive

    def test_size_limit(self):
        with pytest.raises(TooLargeError):
            brute_force_subset_sum([1] * 35, 1)

    def test_negative_tolerance(self):
        with pytest.raises(ValueError):
            brute_force_subset_sum([1], 1, -1)


class TestShortestVector:
    def test_identity(self):
        basis = IntegerBasis(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        _, n2 = shortest_vector_brute(basis, 2)
        assert n2 == 1

    def test_two_dim(self):
        _, n2 = shortest_vector_brute(IntegerBasis(((2, 0), (1, 2))), 5)
        assert n2 == 4

    def test_python_and_numpy_paths_agree(self):
        rng = SplitMix64(17)
        from latsum.oracle import _enumerate_numpy, _enumerate_python
        import numpy as np

        for _ in range(5):
            cols = [[rng.bits(6) - 32 for _ in range(3)] for _ in range(3)]
            if all(any(x for x in c) for c in cols):
                np_res = _enumerate_numpy(np.array(cols, dtype=np.int64), 3)
                py_res = _enumerate_python(cols, 3)
                assert np_res[1] == py_res[1]

    def test_huge_entries_use_exact_path(self):
        big = 10**30
        basis = IntegerBasis(((big, 0), (1, 1)))
        vec, n2 = shortest_vector_brute(basis, 2)
        assert n2 == 2  # (1, 1) beats the huge column

    def test_dimension_limit(self):
        basis = IntegerBasis(tuple(
            tuple(1 if i == j else 0 for i in range(7)) for j in range(7)
        ))
        with pytest.raises(TooLargeError):
            shortest_vector_brute(basis, 1)

    def test_certified_bound_contains_minimum(self):
        from latsum import lll_reduce

        rng = SplitMix64(23)
        for _ in range(10):
            basis = IntegerBasis(tuple(
                tuple(rng.bits(12) - 2048 for _ in range(4)) for _ in range(4)
            ))
            try:
                reduced = lll_reduce(basis)
            except Exception:
                continue
            radius_sq = min(sum(x * x for x in c) for c in reduced.columns)
            bound = coefficient_bound_for_radius(reduced, radius_sq)
            _, n2 = shortest_vector_brute(reduced, bound)
            # enlarging the box must not find anything shorter
            _, n2_wide = shortest_vector_brute(reduced, bound + 2)
            assert n2 == n2_wide


class TestAffineCubeCount:
    def test_diagonal(self):
        assert affine_cube_count(2, 3, [1, -1], 0) == 3

    def test_empty(self):
        assert affine_cube_count(2, 3, [1, 1], 100) == 0

    def test_bound_holds_on_seeded_batch(self):
        rng = SplitMix64(91)
        for _ in range(60):
            n = 2 + rng.below(3)
            side = 2 + rng.below(5)
            coeffs = [rng.below(11) - 5 for _ in range(n)]
            if all(c == 0 for c in coeffs):
                coeffs[0] = 1
            point = [1 + rng.below(side) for _ in range(n)]
            rhs = sum(c * z for c, z in zip(coeffs, point))
            assert affine_cube_count(n, side, coeffs, rhs) <= side ** (n - 1)

    def test_matches_itertools_enumeration(self):
        count = affine_cube_count(3, 4, [2, -1, 1], 3)
        slow = sum(
            1
            for z in itertools.product(range(1, 5), repeat=3)
            if 2 * z[0] - z[1] + z[2] == 3
        )
        assert count == slow

    def test_zero_coefficients_rejected(self):
        with pytest.raises(ValueError):
            affine_cube_count(2, 2, [0, 0], 0)

    def test_size_limits(self):
        with pytest.raises(TooLargeError):
            affine_cube_count(6, 2, [1] * 6, 0)
        with pytest.raises(TooLargeError):
            affine_cube_count(2, 9, [1, 1], 0)
