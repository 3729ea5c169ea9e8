"""Overlap metrics between candidate and reference summaries.

ROUGE-1/2 use clipped multiset n-gram overlap; ROUGE-L uses the longest
common subsequence over the whole summary. Both sides are normalized with
the same tokenizer as the embedding pipeline (lowercase, edge punctuation
stripped), with no stemming or stopword removal. The reported headline
number is F1; precision and recall are always carried along.

An empty reference yields zero scores with a flag rather than an error,
since noisy corpora contain such documents.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import MissingReferenceError
from .tokenize import TokenizedUtterance, word_tokenize

__all__ = [
    "PRF",
    "RougeReport",
    "lcs_length",
    "macro_average",
    "rouge_l",
    "rouge_n",
    "score_summary",
    "score_tokens",
]


class PRF(NamedTuple):
    precision: float
    recall: float
    f1: float


ZERO = PRF(0.0, 0.0, 0.0)


@dataclass
class RougeReport:
    r1: PRF
    r2: PRF
    rl: PRF
    empty_reference: bool = False

    def to_dict(self) -> dict:
        return {
            "r1": list(self.r1),
            "r2": list(self.r2),
            "rl": list(self.rl),
            "empty_reference": self.empty_reference,
        }


def _f1(p: float, r: float) -> float:
    return 0.0 if p + r == 0 else 2 * p * r / (p + r)


def _prf(overlap: int, cand_total: int, ref_total: int) -> PRF:
    p = overlap / cand_total if cand_total else 0.0
    r = overlap / ref_total if ref_total else 0.0
    return PRF(p, r, _f1(p, r))


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(zip(*(tokens[i:] for i in range(n))))


def rouge_n(candidate: Sequence[str], reference: Sequence[str], n: int) -> PRF:
    """Clipped n-gram overlap: each reference n-gram matches at most its count."""
    if n not in (1, 2):
        raise ValueError(f"n must be 1 or 2, got {n}")
    cand = _ngrams(candidate, n)
    ref = _ngrams(reference, n)
    overlap = sum((cand & ref).values())
    return _prf(overlap, sum(cand.values()), sum(ref.values()))


def lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    """Longest common subsequence length, O(len(a) * len(b))."""
    if not a or not b:
        return 0
    # Map tokens to int ids so the inner comparison vectorizes.
    ids: dict[str, int] = {}
    a_ids = np.array([ids.setdefault(t, len(ids)) for t in a], dtype=np.int32)
    b_ids = np.array([ids.setdefault(t, len(ids)) for t in b], dtype=np.int32)
    prev = np.zeros(len(b) + 1, dtype=np.int32)
    cur = np.zeros(len(b) + 1, dtype=np.int32)
    for x in a_ids:
        cur[1:] = np.maximum(prev[1:], prev[:-1] + (b_ids == x))
        np.maximum.accumulate(cur, out=cur)
        prev, cur = cur, prev
    return int(prev[-1])


def rouge_l(candidate: Sequence[str], reference: Sequence[str]) -> PRF:
    """LCS-based overlap over the whole summary."""
    l = lcs_length(candidate, reference)
    return _prf(l, len(candidate), len(reference))


def score_tokens(candidate: Sequence[str], reference: Sequence[str]) -> RougeReport:
    """Full report for pre-tokenized candidate and reference."""
    if not reference:
        return RougeReport(r1=ZERO, r2=ZERO, rl=ZERO, empty_reference=True)
    return RougeReport(
        r1=rouge_n(candidate, reference, 1),
        r2=rouge_n(candidate, reference, 2),
        rl=rouge_l(candidate, reference),
    )


def score_summary(
    selected_indices: Sequence[int],
    doc,
    tokenizer: Callable[[str, int], TokenizedUtterance] = word_tokenize,
) -> RougeReport:
    """Score the selected utterances of a document against its reference.

    The candidate is the selected utterances concatenated in ascending
    index order; both sides go through the shared tokenizer.
    """
    refs = doc.reference_texts()
    if refs is None:
        raise MissingReferenceError(f"document {doc.id!r} has no reference summary")
    candidate = " ".join(doc.utterances[i] for i in sorted(selected_indices))
    reference = " ".join(refs)
    return score_tokens(tokenizer(candidate, 0).tokens, tokenizer(reference, 0).tokens)


def macro_average(reports: Sequence[RougeReport]) -> RougeReport:
    """Arithmetic mean of each metric component across documents."""
    if not reports:
        raise ValueError("cannot average zero reports")

    def mean(get) -> PRF:
        return PRF(*(sum(get(r)[i] for r in reports) / len(reports) for i in range(3)))

    return RougeReport(
        r1=mean(lambda r: r.r1),
        r2=mean(lambda r: r.r2),
        rl=mean(lambda r: r.rl),
        empty_reference=any(r.empty_reference for r in reports),
    )
