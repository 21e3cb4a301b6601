"""End-to-end pipeline: flip, build, reduce, extract, verify.

A reduced-basis column is a solution candidate when its payload
coordinates are all 0 or a common k != 0 (the scale factor), and the
first coordinate is within the noise tolerance times |k|.  Every
candidate is verified against the original instance before being
reported, so the pipeline never returns an unverified vector.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .construct import (
    CLASSIC,
    EXTRA_ROW,
    FlipRecord,
    Variant,
    apply_flip,
    build_basis,
    unflip_solution,
)
from .errors import LengthMismatchError, ShapeMismatchError
from .instance import ObservedInstance
from .lll import IntegerBasis, ReductionParams, lll_reduce

SOLVED = "solved"
NO_CANDIDATE = "no_candidate"


@dataclass(frozen=True)
class CandidatePattern:
    """Row layout to match against: shape plus allowed first-coordinate
    slack (0 when noiseless, n under the {-1,0,1} noise model)."""

    shape: str = CLASSIC
    noise_tolerance: int = 0

    def __post_init__(self) -> None:
        if self.shape not in (CLASSIC, EXTRA_ROW):
            raise ValueError(f"unknown shape: {self.shape!r}")
        if self.noise_tolerance < 0:
            raise ValueError("noise_tolerance must be nonnegative")


@dataclass(frozen=True)
class SolveReport:
    status: str
    e: tuple[int, ...] | None
    matched_column: int | None
    k: int | None
    flipped: bool
    norm_bound_m: int
    first_vector_norm_sq: int
    wall_time: float

    @property
    def solved(self) -> bool:
        return self.status == SOLVED

    @property
    def first_norm_within_m(self) -> bool:
        return self.first_vector_norm_sq <= self.norm_bound_m**2


def norm_bound(n: int, shape: str, noisy: bool) -> int:
    """The variant's m: ceil(c * 2^(n/2) * sqrt(n)) with c = 1 for the
    classic shape, 2 for the extra row, 3 under noise."""
    c = 3 if noisy else (2 if shape == EXTRA_ROW else 1)
    t = c * c * n << n
    r = isqrt(t)
    return r if r * r == t else r + 1


def _column_candidate(column, header: int, tolerance: int):
    """(k, e) for one column, or None.  Sign-invariant: k is reported
    positive regardless of the column's orientation."""
    payload = column[header:]
    if header == 2:
        k = column[1]
        if k == 0:
            return None
    else:
        nonzero = {v for v in payload if v}
        if len(nonzero) != 1:
            return None
        k = nonzero.pop()
    if any(v != 0 and v != k for v in payload):
        return None
    if abs(column[0]) > tolerance * abs(k):
        return None
    e = tuple(1 if v else 0 for v in payload)
    return abs(k), e


def extract_candidates(
    reduced: IntegerBasis, pattern: CandidatePattern
) -> list[tuple[int, int, tuple[int, ...]]]:
    """All columns matching k*[0; e] (classic) or k*[f0; 1; e] (extra row)
    with |f0| <= tolerance, as (column index, k, e), in column order."""
    header = 2 if pattern.shape == EXTRA_ROW else 1
    if reduced.rows != reduced.cols + header - 1:
        raise ShapeMismatchError(
            f"{reduced.rows}x{reduced.cols} basis does not fit shape {pattern.shape!r}"
        )
    out = []
    for idx, col in enumerate(reduced.columns):
        hit = _column_candidate(col, header, pattern.noise_tolerance)
        if hit is not None:
            out.append((idx, hit[0], hit[1]))
    return out


def verify(observed: ObservedInstance, e, tolerance: int = 0) -> bool:
    """|sum(w_i e_i) - B0| <= tolerance, exactly."""
    if len(e) != observed.n:
        raise LengthMismatchError(f"expected {observed.n} entries, got {len(e)}")
    if tolerance < 0:
        raise ValueError("tolerance must be nonnegative")
    total = sum(w for w, ei in zip(observed.weights, e) if ei)
    return abs(total - observed.B0) <= tolerance


def solve(
    observed: ObservedInstance,
    variant: Variant,
    noisy: bool = False,
    delta: Fraction = Fraction(3, 4),
    max_seconds: float | None = None,
) -> SolveReport:
    """Run the full pipeline for one instance and variant.

    Scans every reduced-basis column (not only the first), unflips each
    candidate, and returns the first one that verifies against the
    original instance at the pipeline tolerance (0 noiseless, n noisy).
    """
    start = time.perf_counter()
    if variant.flip:
        work, record = apply_flip(observed)
    else:
        work, record = observed, FlipRecord(False, observed.B0)
    basis = build_basis(work, variant)
    m = norm_bound(observed.n, variant.shape, noisy)
    if all(v == 0 for v in basis.columns[0]):
        # classic shape with a zero target: the generator is singular and
        # the empty solution has no lattice encoding, so the method has
        # nothing to find
        return SolveReport(
            NO_CANDIDATE, None, None, None, record.flipped, m, 0,
            time.perf_counter() - start,
        )
    reduced = lll_reduce(basis, ReductionParams(delta), max_seconds=max_seconds)
    tolerance = observed.n if noisy else 0
    candidates = extract_candidates(
        reduced, CandidatePattern(variant.shape, tolerance)
    )
    first = reduced.columns[0]
    first_norm_sq = sum(x * x for x in first)
    for idx, k, e in candidates:
        solution = unflip_solution(e, record)
        if verify(observed, solution, tolerance):
            return SolveReport(
                SOLVED,
                solution,
                idx,
                k,
                record.flipped,
                m,
                first_norm_sq,
                time.perf_counter() - start,
            )
    return SolveReport(
        NO_CANDIDATE,
        None,
        None,
        None,
        record.flipped,
        m,
        first_norm_sq,
        time.perf_counter() - start,
    )
