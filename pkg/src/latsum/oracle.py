"""Independent brute-force references used by the test suites.

These deliberately share no code with the solver pipeline: subset-sum
answers come from meet-in-the-middle enumeration, shortest vectors from
exhaustive coefficient search, and the affine counting bound from a full
scan of the discrete cube.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left, bisect_right
from math import isqrt

import numpy as np

from .errors import TooLargeError
from .lll import IntegerBasis, gram_matrix, integer_determinant

MAX_SUBSET_N = 34
MAX_BRUTE_DIM = 6
MAX_CUBE_N = 5
MAX_CUBE_SIDE = 8


def _half_sums(weights: list[int]) -> list[tuple[int, int]]:
    """All (subset sum, bitmask) pairs for the given weights, sorted by sum."""
    sums = [0] * (1 << len(weights))
    for mask in range(1, len(sums)):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + weights[low.bit_length() - 1]
    return sorted((s, m) for m, s in enumerate(sums))


def brute_force_subset_sum(
    weights, target: int, tolerance: int = 0
) -> list[tuple[int, ...]]:
    """Every e in {0,1}^n with |sum(w_i e_i) - target| <= tolerance.

    Meet-in-the-middle, so n up to 34 is fine on a desk machine.  The
    result is sorted lexicographically.
    """
    w = [int(x) for x in weights]
    n = len(w)
    if n > MAX_SUBSET_N:
        raise TooLargeError(f"n={n} exceeds the subset-sum oracle limit {MAX_SUBSET_N}")
    if tolerance < 0:
        raise ValueError("tolerance must be nonnegative")
    h = n // 2
    left, right = w[:h], w[h:]
    rsums = _half_sums(right)
    keys = [s for s, _ in rsums]
    out = []
    for lmask in range(1 << h):
        lsum = sum(left[i] for i in range(h) if lmask >> i & 1)
        lo = bisect_left(keys, target - tolerance - lsum)
        hi = bisect_right(keys, target + tolerance - lsum)
        for _, rmask in rsums[lo:hi]:
            mask = lmask | rmask << h
            out.append(tuple(mask >> i & 1 for i in range(n)))
    out.sort()
    return out


def _enumerate_numpy(cols: np.ndarray, bound: int):
    """Min nonzero norm over the coefficient box, first nonzero coeff > 0."""
    d = cols.shape[0]
    best_n2 = None
    best_vec = None
    full = np.arange(-bound, bound + 1, dtype=np.int64)
    pos = np.arange(1, bound + 1, dtype=np.int64)
    for first in range(d):
        axes = [pos] + [full] * (d - 1 - first)
        grids = np.meshgrid(*axes, indexing="ij")
        coeffs = np.zeros((grids[0].size, d), dtype=np.int64)
        for a, g in enumerate(grids):
            coeffs[:, first + a] = g.reshape(-1)
        vecs = coeffs @ cols
        norms = np.einsum("ij,ij->i", vecs, vecs)
        i = int(np.argmin(norms))
        if best_n2 is None or norms[i] < best_n2:
            best_n2 = int(norms[i])
            best_vec = tuple(int(x) for x in vecs[i])
    return best_vec, best_n2


def _enumerate_python(columns, bound: int):
    d = len(columns)
    best_n2 = None
    best_vec = None
    for first in range(d):
        tail = columns[first + 1 :]
        for c0 in range(1, bound + 1):
            base = [c0 * x for x in columns[first]]
            for cs in itertools.product(range(-bound, bound + 1), repeat=d - 1 - first):
                v = base[:]
                for c, col in zip(cs, tail):
                    if c:
                        for r, x in enumerate(col):
                            v[r] += c * x
                n2 = sum(x * x for x in v)
                if best_n2 is None or n2 < best_n2:
                    best_n2 = n2
                    best_vec = tuple(v)
    return best_vec, best_n2


def shortest_vector_brute(
    basis: IntegerBasis, coeff_bound: int
) -> tuple[tuple[int, ...], int]:
    """Minimum-norm nonzero combination with coefficients in [-b, b].

    Exhaustive by definition; correctness of the result as the true
    lattice minimum is the caller's responsibility via coeff_bound (see
    coefficient_bound_for_radius).  Sign-normalized: the first nonzero
    coefficient of the reported combination is positive.
    """
    if basis.cols > MAX_BRUTE_DIM:
        raise TooLargeError(f"cols={basis.cols} exceeds the SVP oracle limit {MAX_BRUTE_DIM}")
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be positive")
    max_entry = max((abs(x) for c in basis.columns for x in c), default=0)
    # int64 is exact as long as no intermediate overflows
    if max_entry and basis.cols * coeff_bound * max_entry < 2**30:
        cols = np.array([list(c) for c in basis.columns], dtype=np.int64)
        vec, n2 = _enumerate_numpy(cols, coeff_bound)
    else:
        vec, n2 = _enumerate_python([list(c) for c in basis.columns], coeff_bound)
    return vec, n2


def coefficient_bound_for_radius(basis: IntegerBasis, radius_sq: int) -> int:
    """Smallest box |c_i| <= bound certified to contain every lattice
    vector of squared norm <= radius_sq, via the dual-basis (Cramer)
    inequality |c_i|^2 <= radius_sq * (G^-1)_ii with G the Gram matrix.
    """
    g = gram_matrix(basis)
    det = integer_determinant(g)
    if det <= 0:
        raise ValueError("basis must have independent columns")
    d = basis.cols
    bound = 1
    for i in range(d):
        minor = [
            [g[r][c] for c in range(d) if c != i] for r in range(d) if r != i
        ]
        cof = integer_determinant(minor) if d > 1 else 1
        bound = max(bound, isqrt(radius_sq * cof // det))
    return bound


def affine_cube_count(n: int, side: int, coefficients, rhs: int) -> int:
    """|{z in {1..side}^n : sum a_i z_i = rhs}| by exhaustive scan."""
    a = [int(x) for x in coefficients]
    if len(a) != n:
        raise ValueError("need exactly n coefficients")
    if all(x == 0 for x in a):
        raise ValueError("coefficients must not all be zero")
    if n > MAX_CUBE_N or side > MAX_CUBE_SIDE:
        raise TooLargeError(
            f"n={n}, side={side} exceeds the cube oracle limits "
            f"({MAX_CUBE_N}, {MAX_CUBE_SIDE})"
        )
    grids = np.indices((side,) * n, dtype=np.int64) + 1
    total = np.zeros((side,) * n, dtype=np.int64)
    for ai, g in zip(a, grids):
        total += ai * g
    return int(np.count_nonzero(total == rhs))
