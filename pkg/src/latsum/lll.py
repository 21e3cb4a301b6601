"""Exact LLL lattice basis reduction over arbitrary-precision integers.

Everything here is exact: the reduction loop runs on integers only
(fraction-free Gram-Schmidt bookkeeping), and the checkers use exact
rationals.  No floating point enters at any stage.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DependentColumnsError, ReductionTimeoutError, ShapeMismatchError


@dataclass(frozen=True)
class IntegerBasis:
    """Lattice basis; each inner tuple is one basis vector (a column).

    Columns need not form a square matrix: rows may exceed cols.  The
    columns must be linearly independent over the rationals, which is
    verified lazily by the operations that need Gram-Schmidt data.
    """

    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.columns:
            raise ValueError("basis needs at least one column")
        cols = tuple(tuple(int(x) for x in c) for c in self.columns)
        rows = len(cols[0])
        if rows == 0 or any(len(c) != rows for c in cols):
            raise ValueError("columns must be nonempty and of equal length")
        object.__setattr__(self, "columns", cols)

    @property
    def rows(self) -> int:
        return len(self.columns[0])

    @property
    def cols(self) -> int:
        return len(self.columns)

    @classmethod
    def from_rows(cls, rows) -> "IntegerBasis":
        """Build a basis from a row-major matrix (rows of the generator)."""
        return cls(tuple(zip(*rows)))

    def to_rows(self) -> list[list[int]]:
        return [list(r) for r in zip(*self.columns)]


@dataclass(frozen=True)
class ReductionParams:
    """LLL parameters.  delta = 3/4 gives the classic 2^((d-1)/2) factor."""

    delta: Fraction = Fraction(3, 4)

    def __post_init__(self) -> None:
        d = Fraction(self.delta)
        if not Fraction(1, 4) < d < 1:
            raise ValueError(f"delta must lie in (1/4, 1), got {d}")
        object.__setattr__(self, "delta", d)


@dataclass(frozen=True)
class GramSchmidtState:
    """Exact Gram-Schmidt data: mu coefficients and squared b* norms.

    mu is square lower-triangular (cols x cols) with unit diagonal;
    mu[i][j] is the projection coefficient of b_i onto b*_j.
    """

    mu: tuple[tuple[Fraction, ...], ...]
    bstar_norms_sq: tuple[Fraction, ...] = field(default=())


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def gram_schmidt(basis: IntegerBasis) -> GramSchmidtState:
    """Exact rational Gram-Schmidt orthogonalization of the columns.

    Raises DependentColumnsError if any orthogonalized vector vanishes.
    """
    d = basis.cols
    cols = [[Fraction(x) for x in c] for c in basis.columns]
    bstar: list[list[Fraction]] = []
    norms: list[Fraction] = []
    mu = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        v = cols[i][:]
        for j in range(i):
            m = _dot(cols[i], bstar[j]) / norms[j]
            mu[i][j] = m
            v = [a - m * b for a, b in zip(v, bstar[j])]
        mu[i][i] = Fraction(1)
        n2 = _dot(v, v)
        if n2 == 0:
            raise DependentColumnsError(f"column {i} is dependent on earlier columns")
        bstar.append(v)
        norms.append(n2)
    return GramSchmidtState(tuple(tuple(r) for r in mu), tuple(norms))


def is_size_reduced(basis: IntegerBasis) -> bool:
    """True iff all Gram-Schmidt coefficients satisfy |mu_ij| <= 1/2 for i > j."""
    state = gram_schmidt(basis)
    half = Fraction(1, 2)
    return all(
        abs(state.mu[i][j]) <= half
        for i in range(basis.cols)
        for j in range(i)
    )


def satisfies_lovasz(basis: IntegerBasis, params: ReductionParams | None = None) -> bool:
    """True iff (delta - mu_{i,i-1}^2) * |b*_{i-1}|^2 <= |b*_i|^2 for all i."""
    params = params or ReductionParams()
    state = gram_schmidt(basis)
    norms = state.bstar_norms_sq
    return all(
        (params.delta - state.mu[i][i - 1] ** 2) * norms[i - 1] <= norms[i]
        for i in range(1, basis.cols)
    )


def lll_reduce(
    basis: IntegerBasis,
    params: ReductionParams | None = None,
    max_seconds: float | None = None,
) -> IntegerBasis:
    """LLL-reduce the basis, exactly.

    Uses the classic fraction-free formulation: the Gram-Schmidt data is
    carried as integers lam[i][j] = D[j+1]*mu[i][j] and D[t] = Gram
    determinant of the first t columns, so every intermediate quantity is
    an exact integer and all divisions below are exact.

    The output generates the same lattice, is size-reduced, and satisfies
    the Lovasz condition for the given delta.  Deterministic: identical
    input yields a bit-identical output.

    max_seconds, when set, aborts long reductions with
    ReductionTimeoutError (checked periodically; the bound is soft).
    """
    params = params or ReductionParams()
    p = params.delta.numerator
    q = params.delta.denominator
    b = [list(c) for c in basis.columns]
    n = len(b)

    deadline = None if max_seconds is None else time.monotonic() + max_seconds

    # D[t] = det Gram(b_0..b_{t-1}); D[0] = 1.  lam[i][j] defined for j < i.
    D = [0] * (n + 1)
    D[0] = 1
    D[1] = _dot(b[0], b[0])
    if D[1] == 0:
        raise DependentColumnsError("column 0 is the zero vector")
    lam = [[0] * n for _ in range(n)]

    def red(k: int, l: int) -> None:
        lk = lam[k]
        dl = D[l + 1]
        if 2 * abs(lk[l]) > dl:
            r = (2 * lk[l] + dl) // (2 * dl)
            bl = b[l]
            bk = b[k]
            b[k] = [a - r * c for a, c in zip(bk, bl)]
            lk[l] -= r * dl
            ll = lam[l]
            for t in range(l):
                lk[t] -= r * ll[t]

    k = 1
    kmax = 0
    steps = 0
    while k < n:
        steps += 1
        if deadline is not None and steps % 64 == 0 and time.monotonic() > deadline:
            raise ReductionTimeoutError(f"reduction exceeded {max_seconds} s")
        if k > kmax:
            kmax = k
            bk = b[k]
            lk = lam[k]
            for j in range(k + 1):
                u = _dot(bk, b[j])
                lj = lam[j]
                for t in range(j):
                    u = (D[t + 1] * u - lk[t] * lj[t]) // D[t]
                if j < k:
                    lk[j] = u
                else:
                    if u <= 0:
                        raise DependentColumnsError(
                            f"column {k} is dependent on earlier columns"
                        )
                    D[k + 1] = u
        red(k, k - 1)
        lkk = lam[k][k - 1]
        if q * D[k + 1] * D[k - 1] < p * D[k] * D[k] - q * lkk * lkk:
            # swap b_k and b_{k-1}, then patch the integer GS data
            b[k], b[k - 1] = b[k - 1], b[k]
            lk, lk1 = lam[k], lam[k - 1]
            for j in range(k - 1):
                lk[j], lk1[j] = lk1[j], lk[j]
            dnew = (D[k - 1] * D[k + 1] + lkk * lkk) // D[k]
            for i in range(k + 1, kmax + 1):
                li = lam[i]
                t = li[k]
                li[k] = (D[k + 1] * li[k - 1] - lkk * t) // D[k]
                li[k - 1] = (dnew * t + lkk * li[k]) // D[k + 1]
            D[k] = dnew
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1

    return IntegerBasis(tuple(tuple(c) for c in b))


def gram_matrix(basis: IntegerBasis) -> list[list[int]]:
    """G = B^T B as an integer matrix (cols x cols)."""
    cols = basis.columns
    d = basis.cols
    return [[_dot(cols[i], cols[j]) for j in range(d)] for i in range(d)]


def integer_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ShapeMismatchError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for i in range(n - 1):
        if a[i][i] == 0:
            for r in range(i + 1, n):
                if a[r][i] != 0:
                    a[i], a[r] = a[r], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
            a[r][i] = 0
        prev = a[i][i]
    return sign * a[n - 1][n - 1]


def gram_determinant(basis: IntegerBasis) -> int:
    """det(B^T B), an exact integer invariant of the generated lattice."""
    return integer_determinant(gram_matrix(basis))


def _spans_integrally(a: IntegerBasis, b: IntegerBasis) -> bool:
    """True iff every column of b is an integer combination of a's columns."""
    rows, d = a.rows, a.cols
    # augmented system [A | B] over exact rationals
    m = [
        [Fraction(a.columns[j][r]) for j in range(d)]
        + [Fraction(b.columns[j][r]) for j in range(b.cols)]
        for r in range(rows)
    ]
    width = d + b.cols
    pivot_rows: list[int] = []
    r0 = 0
    for c in range(d):
        pivot = next((r for r in range(r0, rows) if m[r][c] != 0), None)
        if pivot is None:
            raise DependentColumnsError("reference basis has dependent columns")
        m[r0], m[pivot] = m[pivot], m[r0]
        inv = 1 / m[r0][c]
        m[r0] = [x * inv for x in m[r0]]
        for r in range(rows):
            if r != r0 and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[r0])]
        pivot_rows.append(r0)
        r0 += 1
    # rows past the pivots must vanish on the B side, else B leaves the span
    for r in range(r0, rows):
        if any(m[r][c] != 0 for c in range(d, width)):
            return False
    # solved coefficients sit in the pivot rows; all must be integers
    return all(
        m[pr][c].denominator == 1 for pr in pivot_rows for c in range(d, width)
    )


def same_lattice(a: IntegerBasis, b: IntegerBasis) -> bool:
    """True iff a and b generate the same integer lattice.

    Checks, exactly, that each basis is an integer combination of the
    other (rational solve plus integrality test in both directions).
    """
    if a.rows != b.rows or a.cols != b.cols:
        raise ShapeMismatchError(
            f"shape mismatch: {a.rows}x{a.cols} vs {b.rows}x{b.cols}"
        )
    return _spans_integrally(a, b) and _spans_integrally(b, a)
