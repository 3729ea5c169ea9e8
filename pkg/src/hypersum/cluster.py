"""Summary selection as k-medoids clustering of sentence embeddings.

Distances are squared Euclidean, which for bipolar vectors is an integer:
||a - b||^2 = 2D(1 - cos(a, b)) = 4 * hamming(a, b). Because every vector
has norm sqrt(D), ranking by squared Euclidean distance and ranking by
cosine are the same, so "nearest medoid" can be computed with integer
arithmetic throughout.

Three selectors:

* alternating k-medoids - Voronoi iteration: assign each point to its
  nearest medoid, then re-pick each cluster's medoid as the member
  minimizing the sum of squared distances to its cluster.
* PAM swap descent (fastpam / fasterpam) - greedy improvement of the
  global objective (sum of distances to nearest medoid) by swapping a
  medoid with a non-medoid; the eager variant applies the first improving
  swap, the non-eager variant the best swap per sweep.
* lead-n - the positional baseline: first k non-blank utterances.

All tie-breaks are deterministic (lowest index wins) so a fixed seed
reproduces results exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Sequence

import numpy as np
from numpy.typing import NDArray

from .errors import DimensionMismatchError, InfeasibleKError, InvalidKError
from .hypervector import HV
from .tokenize import TokenizedUtterance, word_tokenize

if TYPE_CHECKING:
    from .corpus import Document

__all__ = [
    "ClusterResult",
    "alternating_kmedoids",
    "fastpam",
    "fasterpam",
    "lead_n",
    "pairwise_sq_distances",
    "squared_distance",
]

MEDOID_UPDATES = ("member-argmin", "nearest-to-mean")

DEFAULT_MAX_ITERS = 100


@dataclass
class ClusterResult:
    medoid_indices: list[int]            # ascending utterance indices
    labels: NDArray[np.intp] | None      # cluster id per embedding, None for lead-n
    iterations: int
    objective: int


def squared_distance(a, b) -> int:
    """Integer squared Euclidean distance between two bipolar vectors."""
    va: HV = getattr(a, "vector", a)
    vb: HV = getattr(b, "vector", b)
    if va.shape != vb.shape:
        raise DimensionMismatchError(f"dims differ: {va.shape} vs {vb.shape}")
    return 4 * int(np.count_nonzero(va != vb))


def _as_matrix(embeddings) -> tuple[NDArray[np.int8], list[int]]:
    """Accept a row matrix or a sequence of SentenceEmbedding.

    Returns the (n, D) matrix plus the utterance index of each row.
    """
    if isinstance(embeddings, np.ndarray):
        x = np.asarray(embeddings, dtype=np.int8)
        return x, list(range(x.shape[0]))
    x = np.vstack([e.vector for e in embeddings])
    return x, [e.utterance_index for e in embeddings]


def _float_view(x: NDArray[np.int8]) -> NDArray[np.floating]:
    # float32 matmul over +-1 entries is exact while partial sums stay
    # below 2^24; beyond that fall back to float64 (exact below 2^53).
    return x.astype(np.float32 if x.shape[1] < 2**24 else np.float64)


def _dots(xf: NDArray[np.floating], cols: Sequence[int]) -> NDArray[np.int64]:
    return (xf @ xf[list(cols)].T).astype(np.int64)


def pairwise_sq_distances(x: NDArray[np.int8]) -> NDArray[np.int64]:
    """Full integer matrix of squared Euclidean distances."""
    xf = _float_view(x)
    dim = x.shape[1]
    return 2 * (dim - _dots(xf, range(x.shape[0])))


def _check_k(k: int, n: int) -> None:
    if k < 1:
        raise InvalidKError(f"k must be >= 1, got {k}")
    if k > n:
        raise InfeasibleKError(f"k={k} exceeds {n} available points")


def _final_labels(
    dist_to_meds: NDArray[np.int64], meds: list[int]
) -> NDArray[np.intp]:
    # Nearest medoid, ties to the lowest cluster index; medoid rows always
    # label to their own cluster so no converged cluster can be empty.
    labels = np.argmin(dist_to_meds, axis=1)
    for ci, m in enumerate(meds):
        labels[m] = ci
    return labels


def _finish(
    x: NDArray[np.int8],
    meds: list[int],
    row_to_utt: list[int],
    iterations: int,
) -> ClusterResult:
    xf = _float_view(x)
    order = np.argsort(np.array([row_to_utt[m] for m in meds], dtype=np.int64),
                       kind="stable")
    meds_sorted = [meds[i] for i in order]
    d2 = 2 * (x.shape[1] - _dots(xf, meds_sorted))
    labels = _final_labels(d2, meds_sorted)
    objective = int(d2[np.arange(x.shape[0]), labels].sum())
    return ClusterResult(
        medoid_indices=[row_to_utt[m] for m in meds_sorted],
        labels=labels,
        iterations=iterations,
        objective=objective,
    )


def alternating_kmedoids(
    embeddings,
    k: int,
    seed: int | np.random.Generator,
    max_iters: int = DEFAULT_MAX_ITERS,
    medoid_update: str = "member-argmin",
) -> ClusterResult:
    """Voronoi-iteration k-medoids from a uniform random initialization.

    The medoid update keeps medoids inside the input set. Two rules are
    available: ``member-argmin`` picks the cluster member minimizing the
    summed squared distance to its cluster, ``nearest-to-mean`` picks the
    member closest to the cluster mean. For equal-norm bipolar vectors
    both reduce to the same argmax against the cluster's component sum,
    so they select identical medoids; both are kept so either definition
    can be audited directly.
    """
    if medoid_update not in MEDOID_UPDATES:
        raise ValueError(f"medoid_update must be one of {MEDOID_UPDATES}")
    x, row_to_utt = _as_matrix(embeddings)
    n, dim = x.shape
    _check_k(k, n)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    xf = _float_view(x)

    meds = [int(m) for m in rng.choice(n, size=k, replace=False)]
    iterations = 0
    for _ in range(max_iters):
        iterations += 1
        d2 = 2 * (dim - _dots(xf, meds))
        labels = np.argmin(d2, axis=1)

        # Empty-cluster repair: reseed onto the point worst served by the
        # current medoids, lowest cluster index first.
        present = set(np.unique(labels).tolist())
        for ci in range(k):
            if ci in present:
                continue
            dmin = d2.min(axis=1)
            dmin[meds] = -1
            meds[ci] = int(np.argmax(dmin))
            d2 = 2 * (dim - _dots(xf, meds))
            labels = np.argmin(d2, axis=1)
            present = set(np.unique(labels).tolist())

        new_meds = list(meds)
        for ci in range(k):
            members = np.flatnonzero(labels == ci)
            new_meds[ci] = members[_pick_medoid(x, members, medoid_update)]
        new_meds = [int(m) for m in new_meds]
        if new_meds == meds:
            break
        meds = new_meds

    return _finish(x, meds, row_to_utt, iterations)


def _pick_medoid(
    x: NDArray[np.int8],
    members: NDArray[np.intp],
    medoid_update: str,
) -> int:
    colsum = x[members].sum(axis=0, dtype=np.int64)
    if medoid_update == "member-argmin":
        # sum_j ||x - u_j||^2 = 2cD - 2 x . colsum, so the argmin over the
        # cluster is the member with the largest dot against colsum.
        scores = x[members].astype(np.int64) @ colsum
        return int(np.argmax(scores))
    mean = colsum.astype(np.float64) / len(members)
    d = ((x[members].astype(np.float64) - mean) ** 2).sum(axis=1)
    return int(np.argmin(d))


def _nearest_two(
    dm: NDArray[np.int64], meds: list[int]
) -> tuple[NDArray[np.intp], NDArray[np.int64], NDArray[np.int64]]:
    sub = dm[:, meds]
    if len(meds) == 1:
        nearest = np.zeros(dm.shape[0], dtype=np.intp)
        d1 = sub[:, 0].copy()
        d2 = np.full(dm.shape[0], np.iinfo(np.int64).max // 4, dtype=np.int64)
        return nearest, d1, d2
    part = np.argpartition(sub, 1, axis=1)
    rows = np.arange(dm.shape[0])
    first, second = part[:, 0], part[:, 1]
    swap = (sub[rows, first] > sub[rows, second]) | (
        (sub[rows, first] == sub[rows, second]) & (first > second)
    )
    first2 = np.where(swap, second, first)
    second2 = np.where(swap, first, second)
    return first2.astype(np.intp), sub[rows, first2], sub[rows, second2]


def _swap_deltas(
    dm: NDArray[np.int64],
    cand: int,
    nearest: NDArray[np.intp],
    d1: NDArray[np.int64],
    d2: NDArray[np.int64],
    k: int,
) -> NDArray[np.int64]:
    """Objective change for swapping each current medoid with ``cand``.

    Single pass over the points: the gain of adding the candidate is
    shared across all removals, and each point contributes its removal
    correction only to its own nearest medoid.
    """
    dc = dm[:, cand]
    gain = np.minimum(dc - d1, 0)
    correction = np.minimum(dc, d2) - d1 - gain
    # Values stay far below 2^53, so float64 bincount accumulates exactly.
    acc = np.bincount(nearest, weights=correction.astype(np.float64), minlength=k)
    return (int(gain.sum()) + acc).astype(np.int64)


def _pam_descent(
    dm: NDArray[np.int64],
    k: int,
    rng: np.random.Generator,
    eager: bool,
    max_iters: int,
) -> tuple[list[int], int]:
    # max_iters caps accepted swaps; descent normally stops much earlier
    # because the integer objective strictly decreases at every swap.
    n = dm.shape[0]
    meds = [int(m) for m in rng.choice(n, size=k, replace=False)]
    nearest, d1, d2 = _nearest_two(dm, meds)
    swaps = 0
    if eager:
        is_med = np.zeros(n, dtype=bool)
        is_med[meds] = True
        since_swap = 0
        cand = 0
        while since_swap < n and swaps < max_iters:
            if not is_med[cand]:
                deltas = _swap_deltas(dm, cand, nearest, d1, d2, k)
                best = int(np.argmin(deltas))
                if deltas[best] < 0:
                    is_med[meds[best]] = False
                    meds[best] = cand
                    is_med[cand] = True
                    nearest, d1, d2 = _nearest_two(dm, meds)
                    swaps += 1
                    since_swap = 0
            since_swap += 1
            cand = (cand + 1) % n
        return meds, swaps
    while swaps < max_iters:
        best_delta, best_pair = 0, None
        for cand in range(n):
            if cand in meds:
                continue
            deltas = _swap_deltas(dm, cand, nearest, d1, d2, k)
            i = int(np.argmin(deltas))
            if deltas[i] < best_delta:
                best_delta, best_pair = int(deltas[i]), (i, cand)
        if best_pair is None:
            break
        i, cand = best_pair
        meds[i] = cand
        nearest, d1, d2 = _nearest_two(dm, meds)
        swaps += 1
    return meds, swaps


def fasterpam(
    embeddings,
    k: int,
    seed: int | np.random.Generator,
    max_iters: int = DEFAULT_MAX_ITERS,
) -> ClusterResult:
    """Eager PAM swap descent; objective never increases across swaps."""
    return _pam(embeddings, k, seed, eager=True, max_iters=max_iters)


def fastpam(
    embeddings,
    k: int,
    seed: int | np.random.Generator,
    max_iters: int = DEFAULT_MAX_ITERS,
) -> ClusterResult:
    """PAM swap descent applying the single best swap per sweep."""
    return _pam(embeddings, k, seed, eager=False, max_iters=max_iters)


def _pam(embeddings, k, seed, eager: bool, max_iters: int) -> ClusterResult:
    x, row_to_utt = _as_matrix(embeddings)
    _check_k(k, x.shape[0])
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    dm = pairwise_sq_distances(x)
    meds, swaps = _pam_descent(dm, k, rng, eager, max_iters)
    return _finish(x, meds, row_to_utt, iterations=swaps)


def lead_n(
    doc: "Document",
    k: int,
    tokenizer: Callable[[str, int], TokenizedUtterance] = word_tokenize,
) -> ClusterResult:
    """Positional baseline: the first k non-blank utterances, in order."""
    non_blank = [i for i, text in enumerate(doc.utterances)
                 if len(tokenizer(text, i)) > 0]
    _check_k(k, len(non_blank))
    return ClusterResult(medoid_indices=non_blank[:k], labels=None,
                         iterations=0, objective=0)
