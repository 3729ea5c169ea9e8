"""Brute-force reference implementations for validating optimized paths.

Everything here is written for transparency, not speed, and deliberately
shares no code with the production modules beyond the domain types: the
distance arithmetic, n-gram counting, and subsequence tables are all
re-derived from their definitions. Ports in other languages can score
against these as ground truth.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import OracleBudgetError

__all__ = ["bundle_similarity_oracle", "exhaustive_kmedoids", "naive_rouge"]

MAX_MEDOID_SETS = 10**6
MAX_ROUGE_LENGTH = 10**4


def exhaustive_kmedoids(points, k: int) -> tuple[list[int], int]:
    """Globally optimal medoid set by full enumeration of C(n, k) choices.

    Objective is the sum over points of the squared Euclidean distance to
    the nearest medoid. Ties between medoid sets resolve to the first set
    in lexicographic order. Refuses instances beyond its enumeration
    budget.
    """
    if isinstance(points, np.ndarray):
        x = points
    else:
        x = np.vstack([getattr(p, "vector", p) for p in points])
    n = x.shape[0]
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}, got k={k}")
    if math.comb(n, k) > MAX_MEDOID_SETS:
        raise OracleBudgetError(
            f"C({n},{k}) = {math.comb(n, k)} exceeds budget {MAX_MEDOID_SETS}"
        )
    dist = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            d = 4 * int(np.count_nonzero(x[i] != x[j]))
            dist[i, j] = d
            dist[j, i] = d
    best_set: tuple[int, ...] | None = None
    best_obj = None
    for medoids in combinations(range(n), k):
        obj = int(dist[:, medoids].min(axis=1).sum())
        if best_obj is None or obj < best_obj:
            best_obj = obj
            best_set = medoids
    assert best_set is not None and best_obj is not None
    return list(best_set), best_obj


def _count_ngrams(tokens: Sequence[str], n: int) -> dict[tuple[str, ...], int]:
    counts: dict[tuple[str, ...], int] = {}
    for i in range(len(tokens) - n + 1):
        gram = tuple(tokens[i : i + n])
        counts[gram] = counts.get(gram, 0) + 1
    return counts


def _lcs_table(a: Sequence[str], b: Sequence[str]) -> int:
    table = [[0] * (len(b) + 1) for _ in range(len(a) + 1)]
    for i in range(1, len(a) + 1):
        for j in range(1, len(b) + 1):
            if a[i - 1] == b[j - 1]:
                table[i][j] = table[i - 1][j - 1] + 1
            else:
                table[i][j] = max(table[i - 1][j], table[i][j - 1])
    return table[len(a)][len(b)]


def naive_rouge(
    candidate: Sequence[str], reference: Sequence[str], variant: str
) -> tuple[float, float, float]:
    """Reference scorer; variant is 'rouge1', 'rouge2', or 'rougeL'."""
    if max(len(candidate), len(reference)) > MAX_ROUGE_LENGTH:
        raise OracleBudgetError("sequence too long for the quadratic oracle")
    if variant in ("rouge1", "rouge2"):
        n = 1 if variant == "rouge1" else 2
        cand = _count_ngrams(candidate, n)
        ref = _count_ngrams(reference, n)
        overlap = sum(min(c, ref[g]) for g, c in cand.items() if g in ref)
        cand_total = sum(cand.values())
        ref_total = sum(ref.values())
    elif variant == "rougeL":
        overlap = _lcs_table(candidate, reference)
        cand_total = len(candidate)
        ref_total = len(reference)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    p = overlap / cand_total if cand_total else 0.0
    r = overlap / ref_total if ref_total else 0.0
    f1 = 0.0 if p + r == 0 else 2 * p * r / (p + r)
    return (p, r, f1)


def bundle_similarity_oracle(
    l: int, trials: int, dim: int, seed: int = 0
) -> tuple[float, float]:
    """Monte Carlo estimate of cosine(majority bundle, one constituent).

    Draws ``trials`` independent bundles of ``l`` random bipolar vectors
    and measures the cosine between each bundle and its first constituent.
    For odd ``l`` the expected value is the central binomial probability
    C(l-1, (l-1)//2) / 2^(l-1). Returns (mean, std).
    """
    if l < 1:
        raise ValueError(f"bundle size must be >= 1, got {l}")
    rng = np.random.default_rng(seed)
    sims = np.empty(trials, dtype=np.float64)
    for t in range(trials):
        vs = rng.integers(0, 2, size=(l, dim)).astype(np.int32) * 2 - 1
        totals = vs.sum(axis=0)
        bundle = np.where(totals > 0, 1, np.where(totals < 0, -1, 0)).astype(np.int32)
        ties = bundle == 0
        if ties.any():
            bundle[ties] = rng.integers(0, 2, size=int(ties.sum())).astype(np.int32) * 2 - 1
        sims[t] = float(np.dot(bundle, vs[0])) / dim
    return float(sims.mean()), float(sims.std())
