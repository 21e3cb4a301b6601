"""Generator matrices for the subset-sum lattices, plus test-and-flip.

Two shapes exist: the classic (n+1)x(n+1) matrix whose top row carries
the target and negated weights over an identity block, and the
(n+2)x(n+1) variant with an extra (1, 0, ..., 0) second row that records
the target's coefficient in the lattice vector itself.  Either shape can
have its top row scaled by a large constant p > n*2^(n/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .instance import ObservedInstance
from .lll import IntegerBasis

CLASSIC = "classic"
EXTRA_ROW = "extra_row"


@dataclass(frozen=True)
class Variant:
    """One point in the construction space: shape x constant x flip."""

    shape: str = CLASSIC
    with_constant: bool = False
    flip: bool = False

    def __post_init__(self) -> None:
        if self.shape not in (CLASSIC, EXTRA_ROW):
            raise ValueError(f"unknown shape: {self.shape!r}")

    def to_string(self) -> str:
        base = "classic" if self.shape == CLASSIC else "extrarow"
        if self.flip:
            base += "+flip"
        if self.with_constant:
            base += "+p"
        return base

    @classmethod
    def from_string(cls, text: str) -> "Variant":
        parts = text.split("+")
        shapes = {"classic": CLASSIC, "extrarow": EXTRA_ROW}
        if not parts or parts[0] not in shapes:
            raise ValueError(f"bad variant string: {text!r}")
        flags = parts[1:]
        if any(f not in ("flip", "p") for f in flags) or len(flags) != len(set(flags)):
            raise ValueError(f"bad variant string: {text!r}")
        return cls(shapes[parts[0]], with_constant="p" in flags, flip="flip" in flags)


# the six experimental methods: flip / no flip / extra row, each with and
# without the large constant
SIX_METHODS = (
    "classic+flip+p",
    "classic+flip",
    "classic+p",
    "classic",
    "extrarow+p",
    "extrarow",
)

WITH_P_METHODS = tuple(m for m in SIX_METHODS if m.endswith("+p"))
WITHOUT_P_METHODS = tuple(m for m in SIX_METHODS if not m.endswith("+p"))


@dataclass(frozen=True)
class FlipRecord:
    """Whether the target was complemented, and the original target."""

    flipped: bool
    original_B0: int


def large_constant(n: int) -> int:
    """Smallest integer strictly greater than n * 2^(n/2), exactly.

    p > n*2^(n/2) iff p^2 > n^2 * 2^n, and n^2 * 2^n is a perfect square
    only for even n, so isqrt + 1 is correct for both parities.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return isqrt(n * n << n) + 1


def apply_flip(observed: ObservedInstance) -> tuple[ObservedInstance, FlipRecord]:
    """Complement the target when B0 < (sum of weights) / 2.

    The flipped problem has a solution iff the original does (with the
    complementary e); idempotent on its own output.
    """
    total = sum(observed.weights)
    if 2 * observed.B0 >= total:
        return observed, FlipRecord(False, observed.B0)
    flipped = ObservedInstance(observed.n, total - observed.B0, observed.weights)
    return flipped, FlipRecord(True, observed.B0)


def unflip_solution(e, record: FlipRecord) -> tuple[int, ...]:
    """Map a solution of the flipped problem back to the original."""
    if record.flipped:
        return tuple(1 - v for v in e)
    return tuple(e)


def build_basis(observed: ObservedInstance, variant: Variant) -> IntegerBasis:
    """Column generator matrix for the chosen shape and constant.

    Flipping is not applied here; callers flip first when the variant
    asks for it.  Noisy instances use the same construction with the
    observed (perturbed) weights in the top row.
    """
    n = observed.n
    scale = large_constant(n) if variant.with_constant else 1
    header = 2 if variant.shape == EXTRA_ROW else 1
    rows = n + header
    cols = []
    first = [0] * rows
    first[0] = scale * observed.B0
    if variant.shape == EXTRA_ROW:
        first[1] = 1
    cols.append(tuple(first))
    for j, w in enumerate(observed.weights):
        col = [0] * rows
        col[0] = -scale * w
        col[header + j] = 1
        cols.append(tuple(col))
    return IntegerBasis(tuple(cols))
