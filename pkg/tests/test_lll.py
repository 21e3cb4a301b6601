"""Exact reduction: Gram-Schmidt, LLL postconditions, lattice equality."""

from fractions import Fraction

import pytest

from latsum import (
    DependentColumnsError,
    IntegerBasis,
    ReductionParams,
    ShapeMismatchError,
    gram_determinant,
    gram_schmidt,
    is_size_reduced,
    lll_reduce,
    same_lattice,
    satisfies_lovasz,
)
from latsum.instance import SplitMix64
from latsum.oracle import coefficient_bound_for_radius, shortest_vector_brute


def norm_sq(v):
    return sum(x * x for x in v)


def random_basis(rng, d, rows, bits=16):
    """Seeded random independent columns with entries in [-2^bits, 2^bits]."""
    while True:
        cols = tuple(
            tuple(rng.bits(bits + 1) - (1 << bits) for _ in range(rows))
            for _ in range(d)
        )
        basis = IntegerBasis(cols)
        try:
            gram_schmidt(basis)
            return basis
        except DependentColumnsError:
            continue


class TestGramSchmidt:
    def test_orthonormal_input(self):
        state = gram_schmidt(IntegerBasis(((1, 0), (0, 1))))
        assert state.mu == ((1, 0), (0, 1))
        assert state.bstar_norms_sq == (1, 1)

    def test_hand_computed_mu(self):
        state = gram_schmidt(IntegerBasis(((1, 0), (1, 1))))
        assert state.mu[1][0] == 1
        assert state.bstar_norms_sq == (1, 1)

    def test_reconstruction_identity(self):
        # b_i must equal sum_j mu[i][j] * bstar_j, exactly
        rng = SplitMix64(404)
        basis = random_basis(rng, 4, 4)
        state = gram_schmidt(basis)
        bstar = []
        for i in range(4):
            v = [Fraction(x) for x in basis.columns[i]]
            for j in range(i):
                v = [a - state.mu[i][j] * b for a, b in zip(v, bstar[j])]
            bstar.append(v)
            assert norm_sq(v) == state.bstar_norms_sq[i]
        for i in range(4):
            rebuilt = [
                sum(state.mu[i][j] * bstar[j][r] for j in range(i + 1))
                for r in range(4)
            ]
            assert rebuilt == [Fraction(x) for x in basis.columns[i]]

    def test_dependent_columns_rejected(self):
        with pytest.raises(DependentColumnsError):
            gram_schmidt(IntegerBasis(((1, 2), (2, 4))))

    def test_mu_diagonal_is_one(self):
        rng = SplitMix64(11)
        state = gram_schmidt(random_basis(rng, 5, 6))
        assert all(state.mu[i][i] == 1 for i in range(5))


class TestReduce:
    def test_identity_fixed_point(self):
        ident = IntegerBasis(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        assert lll_reduce(ident) == ident

    def test_single_column_unchanged(self):
        one = IntegerBasis(((6, -9, 3),))
        assert lll_reduce(one) == one

    def test_two_dim_example(self):
        basis = IntegerBasis(((201, 37), (1648, 296)))
        reduced = lll_reduce(basis)
        vec, l1_sq = shortest_vector_brute(basis, 50)
        assert l1_sq == 1370  # enumeration over |c_i| <= 50
        assert same_lattice(basis, reduced)
        assert is_size_reduced(reduced)
        assert satisfies_lovasz(reduced)
        # delta=3/4 guarantee: within 2^((d-1)/2) of the lattice minimum
        assert norm_sq(reduced.columns[0]) <= 2 * l1_sq

    def test_zero_column_rejected(self):
        with pytest.raises(DependentColumnsError):
            lll_reduce(IntegerBasis(((0, 0), (1, 2))))

    def test_deterministic(self):
        rng = SplitMix64(77)
        basis = random_basis(rng, 5, 5)
        assert lll_reduce(basis) == lll_reduce(basis)

    def test_delta_validation(self):
        with pytest.raises(ValueError):
            ReductionParams(Fraction(1, 4))
        with pytest.raises(ValueError):
            ReductionParams(Fraction(1))

    def test_budget_exceeded(self):
        from latsum import ReductionTimeoutError, gen_instance, InstanceParams, build_basis, Variant

        _, obs = gen_instance(InstanceParams(12, 72, 5))
        basis = build_basis(obs, Variant("classic"))
        with pytest.raises(ReductionTimeoutError):
            lll_reduce(basis, max_seconds=0.0)

    def test_random_bases_postconditions(self):
        # smaller sibling of the acceptance property suite
        rng = SplitMix64(2024)
        for i in range(40):
            d = 2 + i % 5
            rows = d + (i % 3 == 0)
            basis = random_basis(rng, d, rows)
            reduced = lll_reduce(basis)
            assert same_lattice(basis, reduced)
            assert is_size_reduced(reduced)
            assert satisfies_lovasz(reduced)
            assert gram_determinant(basis) == gram_determinant(reduced)
            radius_sq = min(norm_sq(c) for c in reduced.columns)
            bound = coefficient_bound_for_radius(reduced, radius_sq)
            _, l1_sq = shortest_vector_brute(reduced, bound)
            assert norm_sq(reduced.columns[0]) <= 2 ** (d - 1) * l1_sq


class TestCheckers:
    def test_identity_passes_both(self):
        ident = IntegerBasis(((1, 0), (0, 1)))
        assert is_size_reduced(ident)
        assert satisfies_lovasz(ident)

    def test_large_mu_not_size_reduced(self):
        assert not is_size_reduced(IntegerBasis(((1, 0), (100, 1))))

    def test_reduce_output_always_passes(self):
        rng = SplitMix64(55)
        for _ in range(10):
            reduced = lll_reduce(random_basis(rng, 4, 4))
            assert is_size_reduced(reduced)
            assert satisfies_lovasz(reduced)


class TestSameLattice:
    def test_reflexive(self):
        rng = SplitMix64(8)
        basis = random_basis(rng, 3, 3)
        assert same_lattice(basis, basis)

    def test_negated_column(self):
        a = IntegerBasis(((1, 0), (0, 1)))
        b = IntegerBasis(((1, 0), (0, -1)))
        assert same_lattice(a, b)

    def test_index_two_sublattice(self):
        a = IntegerBasis(((1, 0), (0, 1)))
        b = IntegerBasis(((2, 0), (0, 2)))
        assert not same_lattice(a, b)

    def test_shape_mismatch(self):
        a = IntegerBasis(((1, 0), (0, 1)))
        b = IntegerBasis(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        with pytest.raises(ShapeMismatchError):
            same_lattice(a, b)


def test_gram_determinant_triangular():
    basis = IntegerBasis.from_rows([[3, 1, 4], [0, 2, 5], [0, 0, 7]])
    assert gram_determinant(basis) == (3 * 2 * 7) ** 2


def test_basis_validation():
    with pytest.raises(ValueError):
        IntegerBasis(())
    with pytest.raises(ValueError):
        IntegerBasis(((1, 2), (3,)))
