"""Bipolar hypervector algebra.

Vectors are numpy int8 arrays with every component exactly -1 or +1, all
sharing one global dimension (default 10,000). At that dimension two
independent random vectors are nearly orthogonal (cosine concentrates
around 0 with std 1/sqrt(D)), which is what the rest of the pipeline
builds on. Operations provided here: random generation, circular rotation
(position encoding), component-wise majority vote (bundling), and
cosine/Hamming similarity.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np
from numpy.typing import NDArray

from .errors import (
    DimensionMismatchError,
    EmptyBundleError,
    InvalidDimensionError,
)

__all__ = [
    "DEFAULT_DIM",
    "HV",
    "cosine",
    "derive_rng",
    "derive_seed",
    "hamming",
    "majority_bundle",
    "random_hypervector",
    "rotate",
]

DEFAULT_DIM = 10_000

HV = NDArray[np.int8]


def derive_rng(*keys: int) -> np.random.Generator:
    """Deterministic generator for a tuple of integer keys.

    The same keys always produce the same stream, independent of how many
    other streams exist or in which order workers consume them. Callers
    key streams by (seed, purpose, index) so parallel schedules cannot
    change results.
    """
    return np.random.default_rng(np.random.SeedSequence(list(keys)))


def derive_seed(*keys: int) -> int:
    """Collapse a key tuple into a single 64-bit seed."""
    return int(np.random.SeedSequence(list(keys)).generate_state(1, np.uint64)[0])


def random_hypervector(dim: int, rng: np.random.Generator) -> HV:
    """Draw a vector with iid components, -1 or +1 with probability 1/2."""
    if dim < 1:
        raise InvalidDimensionError(f"dim must be >= 1, got {dim}")
    return (rng.integers(0, 2, size=dim, dtype=np.int8) << 1) - 1


def rotate(v: HV, shifts: int) -> HV:
    """Circular rotation by ``shifts`` positions toward higher indices.

    Rotation is a coordinate permutation: it preserves norms and pairwise
    similarities, and rotating by the dimension is the identity.
    """
    if shifts < 0:
        raise ValueError(f"shifts must be non-negative, got {shifts}")
    return np.roll(v, shifts % v.shape[0])


def majority_bundle(
    vs: Sequence[HV] | NDArray[np.int8],
    tie_rng: np.random.Generator | None = None,
) -> HV:
    """Component-wise majority vote over a non-empty sequence of vectors.

    The result is similar to every constituent. For even-length input a
    component can sum to zero; such ties are resolved by an unbiased draw
    from ``tie_rng`` (a fixed sign would bias bundles toward a constant
    vector).

    Raises:
        EmptyBundleError: no input vectors.
        DimensionMismatchError: constituents of different dimensions.
        ValueError: a tie occurred but no tie_rng was supplied.
    """
    if len(vs) == 0:
        raise EmptyBundleError("cannot bundle zero vectors")
    try:
        stacked = np.asarray(vs, dtype=np.int8)
    except ValueError as exc:
        raise DimensionMismatchError("constituent dimensions differ") from exc
    if stacked.ndim != 2:
        raise DimensionMismatchError("constituent dimensions differ")
    totals = stacked.sum(axis=0, dtype=np.int32)
    out = np.sign(totals).astype(np.int8)
    ties = out == 0
    n_ties = int(np.count_nonzero(ties))
    if n_ties:
        if tie_rng is None:
            raise ValueError("even-length bundle produced ties but no tie_rng given")
        out[ties] = (tie_rng.integers(0, 2, size=n_ties, dtype=np.int8) << 1) - 1
    return out


def cosine(a: HV, b: HV) -> float:
    """Cosine similarity; for bipolar vectors this is dot(a, b) / D."""
    if a.shape != b.shape:
        raise DimensionMismatchError(f"dims differ: {a.shape} vs {b.shape}")
    dot = int(np.dot(a.astype(np.int32), b.astype(np.int32)))
    return dot / a.shape[0]


def hamming(a: HV, b: HV) -> int:
    """Number of components at which the two vectors differ."""
    if a.shape != b.shape:
        raise DimensionMismatchError(f"dims differ: {a.shape} vs {b.shape}")
    return int(np.count_nonzero(a != b))


def stack(vs: Iterable[HV]) -> NDArray[np.int8]:
    """Row-stack vectors into an (n, D) int8 matrix."""
    return np.vstack([np.asarray(v, dtype=np.int8) for v in vs])
