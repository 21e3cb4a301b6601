"""Random subset-sum instances: generation, noise, and (de)serialization.

Weights are drawn uniformly from [1, 2^exponent] using a fully pinned
64-bit generator (SplitMix64), so identical parameters reproduce the
same instance on any platform.  Files are JSON with big integers as
decimal strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import AlreadyNoisyError, InstanceParseError

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """The standard SplitMix64 sequence: state += golden gamma, then the
    published xor-shift-multiply mix.  Word stream is the reference for
    every random draw in this package."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def bits(self, k: int) -> int:
        """k random bits assembled little-endian from whole 64-bit words."""
        if k < 1:
            raise ValueError("k must be positive")
        v = 0
        shift = 0
        for _ in range((k + 63) // 64):
            v |= self.next_u64() << shift
            shift += 64
        return v & ((1 << k) - 1)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection on bit_length(n-1) bits."""
        if n < 1:
            raise ValueError("n must be positive")
        if n == 1:
            return 0
        k = (n - 1).bit_length()
        while True:
            v = self.bits(k)
            if v < n:
                return v


@dataclass(frozen=True)
class InstanceParams:
    """Generation parameters.  exponent is the bit-length target: weights
    are uniform on [1, 2^exponent].  hamming_weight=None means each e_i is
    an independent fair coin; an integer fixes |e| exactly."""

    n: int
    exponent: int
    seed: int
    hamming_weight: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.exponent < 1:
            raise ValueError("exponent must be >= 1")
        if self.hamming_weight is not None and not 0 <= self.hamming_weight <= self.n:
            raise ValueError("hamming_weight must be in [0, n]")

    @classmethod
    def from_epsilon(
        cls, n: int, epsilon, seed: int, hamming_weight: int | None = None
    ) -> "InstanceParams":
        """Theoretical density mode: exponent = ceil((1/2 + eps) * n^2)."""
        eps = Fraction(str(epsilon)) if isinstance(epsilon, float) else Fraction(epsilon)
        if eps <= 0:
            raise ValueError("epsilon must be positive")
        c = Fraction(1, 2) + eps
        exponent = -((-c.numerator * n * n) // c.denominator)
        return cls(n, int(exponent), seed, hamming_weight)


def theoretical_exponent(n: int) -> int:
    """ceil(n^2 / 2), the prescribed magnitude at the base density c = 1/2."""
    return (n * n + 1) // 2


@dataclass(frozen=True)
class GroundTruth:
    """Hidden solution and clean data; only generators and harnesses see it."""

    e: tuple[int, ...]
    clean_weights: tuple[int, ...]
    noise: tuple[int, ...]

    @property
    def noiseless(self) -> bool:
        return all(v == 0 for v in self.noise)


@dataclass(frozen=True)
class ObservedInstance:
    """What the solver is given: dimension, exact target, observed weights."""

    n: int
    B0: int
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.weights) != self.n:
            raise ValueError("weights length must equal n >= 1")
        if self.B0 < 0 or any(w < 0 for w in self.weights):
            raise ValueError("B0 and weights must be nonnegative")


def gen_instance(params: InstanceParams) -> tuple[GroundTruth, ObservedInstance]:
    """Draw a random instance: weights first (n draws of `exponent` bits,
    each +1), then the solution vector.  Deterministic given the seed."""
    rng = SplitMix64(params.seed)
    n = params.n
    weights = tuple(rng.bits(params.exponent) + 1 for _ in range(n))
    if params.hamming_weight is None:
        e = tuple(rng.bits(1) for _ in range(n))
    else:
        idx = list(range(n))
        for i in range(n - 1, 0, -1):
            j = rng.below(i + 1)
            idx[i], idx[j] = idx[j], idx[i]
        chosen = set(idx[: params.hamming_weight])
        e = tuple(1 if i in chosen else 0 for i in range(n))
    b0 = sum(w for w, ei in zip(weights, e) if ei)
    truth = GroundTruth(e, weights, (0,) * n)
    return truth, ObservedInstance(n, b0, weights)


def add_noise(
    truth: GroundTruth, observed: ObservedInstance, seed: int
) -> tuple[GroundTruth, ObservedInstance]:
    """Perturb each weight by an independent uniform draw from {-1, 0, 1}.

    B0 stays exact.  Raises AlreadyNoisyError on input that already
    carries noise."""
    if not truth.noiseless or truth.clean_weights != observed.weights:
        raise AlreadyNoisyError("instance already carries noise")
    rng = SplitMix64(seed)
    noise = tuple(rng.below(3) - 1 for _ in range(observed.n))
    noisy = GroundTruth(truth.e, truth.clean_weights, noise)
    weights = tuple(w + d for w, d in zip(truth.clean_weights, noise))
    return noisy, ObservedInstance(observed.n, observed.B0, weights)


@dataclass(frozen=True)
class InstanceRecord:
    """An instance plus its provenance, as stored on disk."""

    exponent: int
    seed: int
    observed: ObservedInstance
    truth: GroundTruth | None = None


_REQUIRED_KEYS = {"n", "exponent", "seed", "B0", "weights"}
_OPTIONAL_KEYS = {"e", "clean_weights", "noise"}


def save(record: InstanceRecord, path) -> None:
    """Write the record as JSON; weights and B0 as decimal strings."""
    obs = record.observed
    doc: dict = {
        "n": obs.n,
        "exponent": record.exponent,
        "seed": record.seed,
        "B0": str(obs.B0),
        "weights": [str(w) for w in obs.weights],
    }
    if record.truth is not None:
        doc["e"] = list(record.truth.e)
        doc["clean_weights"] = [str(w) for w in record.truth.clean_weights]
        doc["noise"] = list(record.truth.noise)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def _decimal(value, what: str) -> int:
    if not isinstance(value, str):
        raise InstanceParseError(f"{what} must be a decimal string")
    try:
        return int(value, 10)
    except ValueError as exc:
        raise InstanceParseError(f"{what} is not a decimal integer: {value!r}") from exc


def _int_list(value, what: str, n: int, allowed) -> tuple[int, ...]:
    if not isinstance(value, list) or len(value) != n:
        raise InstanceParseError(f"{what} must be a list of length {n}")
    out = []
    for v in value:
        if isinstance(v, bool) or not isinstance(v, int) or v not in allowed:
            raise InstanceParseError(f"{what} entries must be in {sorted(allowed)}")
        out.append(v)
    return tuple(out)


def load(path) -> InstanceRecord:
    """Read an instance file back; validates structure and consistency."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InstanceParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InstanceParseError("top level must be a JSON object")
    keys = set(doc)
    unknown = keys - _REQUIRED_KEYS - _OPTIONAL_KEYS
    if unknown:
        raise InstanceParseError(f"unknown keys: {sorted(unknown)}")
    missing = _REQUIRED_KEYS - keys
    if missing:
        raise InstanceParseError(f"missing keys: {sorted(missing)}")
    n = doc["n"]
    exponent = doc["exponent"]
    seed = doc["seed"]
    for name, v in (("n", n), ("exponent", exponent), ("seed", seed)):
        if isinstance(v, bool) or not isinstance(v, int):
            raise InstanceParseError(f"{name} must be an integer")
    if n < 1 or exponent < 1 or seed < 0:
        raise InstanceParseError("n, exponent must be >= 1 and seed >= 0")
    b0 = _decimal(doc["B0"], "B0")
    if not isinstance(doc["weights"], list) or len(doc["weights"]) != n:
        raise InstanceParseError(f"weights must be a list of length {n}")
    weights = tuple(_decimal(w, "weights entry") for w in doc["weights"])
    if b0 < 0 or any(w < 0 for w in weights):
        raise InstanceParseError("B0 and weights must be nonnegative")
    observed = ObservedInstance(n, b0, weights)

    truth = None
    if "e" in doc:
        e = _int_list(doc["e"], "e", n, {0, 1})
        noise = (
            _int_list(doc["noise"], "noise", n, {-1, 0, 1})
            if "noise" in doc
            else (0,) * n
        )
        if "clean_weights" in doc:
            if not isinstance(doc["clean_weights"], list) or len(doc["clean_weights"]) != n:
                raise InstanceParseError(f"clean_weights must be a list of length {n}")
            clean = tuple(_decimal(w, "clean_weights entry") for w in doc["clean_weights"])
        else:
            clean = tuple(w - d for w, d in zip(weights, noise))
        if any(not 1 <= w <= (1 << exponent) for w in clean):
            raise InstanceParseError("clean weights must lie in [1, 2^exponent]")
        if tuple(c + d for c, d in zip(clean, noise)) != weights:
            raise InstanceParseError("weights != clean_weights + noise")
        if sum(c for c, ei in zip(clean, e) if ei) != b0:
            raise InstanceParseError("B0 does not equal the e-subset sum")
        truth = GroundTruth(e, clean, noise)
    elif "clean_weights" in doc or "noise" in doc:
        raise InstanceParseError("clean_weights/noise require e")

    return InstanceRecord(exponent, seed, observed, truth)
