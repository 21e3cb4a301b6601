"""Subset-sum solving by exact lattice basis reduction.

Implements the classic knapsack lattice and its variants (large constant
on/off, test-and-flip on/off, extra target-coefficient row), an exact
integer LLL, a noise-tolerant extraction step, and a reproducible
experiment harness.
"""

from .construct import (
    SIX_METHODS,
    FlipRecord,
    Variant,
    apply_flip,
    build_basis,
    large_constant,
    unflip_solution,
)
from .errors import (
    AlreadyNoisyError,
    DependentColumnsError,
    InstanceParseError,
    LatsumError,
    LengthMismatchError,
    ReductionTimeoutError,
    ShapeMismatchError,
    TooLargeError,
)
from .instance import (
    GroundTruth,
    InstanceParams,
    InstanceRecord,
    ObservedInstance,
    SplitMix64,
    add_noise,
    gen_instance,
    load,
    save,
    theoretical_exponent,
)
from .lll import (
    GramSchmidtState,
    IntegerBasis,
    ReductionParams,
    gram_determinant,
    gram_schmidt,
    is_size_reduced,
    lll_reduce,
    same_lattice,
    satisfies_lovasz,
)
from .solver import (
    CandidatePattern,
    SolveReport,
    extract_candidates,
    norm_bound,
    solve,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "AlreadyNoisyError",
    "CandidatePattern",
    "DependentColumnsError",
    "FlipRecord",
    "GramSchmidtState",
    "GroundTruth",
    "InstanceParams",
    "InstanceParseError",
    "InstanceRecord",
    "IntegerBasis",
    "LatsumError",
    "LengthMismatchError",
    "ObservedInstance",
    "ReductionParams",
    "ReductionTimeoutError",
    "ShapeMismatchError",
    "SIX_METHODS",
    "SolveReport",
    "SplitMix64",
    "TooLargeError",
    "Variant",
    "add_noise",
    "apply_flip",
    "build_basis",
    "extract_candidates",
    "gen_instance",
    "gram_determinant",
    "gram_schmidt",
    "is_size_reduced",
    "large_constant",
    "lll_reduce",
    "load",
    "norm_bound",
    "same_lattice",
    "satisfies_lovasz",
    "save",
    "solve",
    "theoretical_exponent",
    "unflip_solution",
    "verify",
]
