"""Synthetic corpora with planted ground truth.

Each document contains k clusters of near-duplicate sentences built over
disjoint per-cluster vocabularies: one unmodified base sentence per
cluster plus members that differ from it in a single word slot. The base
sentences are the reference summary, so a selector that finds the planted
structure should pick exactly one sentence per cluster and score close to
1.0 against the reference. Also provides a wide-vocabulary document for
exercising fixed-capacity codebook overflow.
"""

from __future__ import annotations

import numpy as np

from .corpus import Document
from .hypervector import derive_rng

__all__ = ["synthetic_corpus", "synthetic_document", "vocabulary_stress_document"]


def synthetic_document(
    doc_id: str,
    clusters: int,
    members_per_cluster: int = 6,
    words_per_utterance: int = 10,
    vocab_per_cluster: int = 40,
    seed: int = 0,
) -> Document:
    """One document with ``clusters`` planted near-duplicate groups."""
    if words_per_utterance > vocab_per_cluster:
        raise ValueError("cluster vocabulary smaller than utterance length")
    rng = derive_rng(seed, 90)
    sentences: list[list[str]] = []
    cluster_of: list[int] = []
    base_slots: list[int] = []
    for c in range(clusters):
        pool = [f"c{c:02d}w{t:03d}" for t in range(vocab_per_cluster)]
        base = [pool[t] for t in rng.choice(vocab_per_cluster,
                                            size=words_per_utterance, replace=False)]
        base_slots.append(len(sentences))
        sentences.append(base)
        cluster_of.append(c)
        for _ in range(members_per_cluster - 1):
            member = list(base)
            pos = int(rng.integers(0, words_per_utterance))
            member[pos] = pool[int(rng.integers(0, vocab_per_cluster))]
            sentences.append(member)
            cluster_of.append(c)

    order = rng.permutation(len(sentences))
    utterances = [" ".join(sentences[i]) for i in order]
    position_of = {int(old): new for new, old in enumerate(order)}
    summary_indices = sorted(position_of[s] for s in base_slots)
    doc = Document(id=doc_id, utterances=utterances, summary_indices=summary_indices)
    # Ground truth for tests: which planted cluster each utterance belongs to.
    doc.planted_clusters = [cluster_of[int(old)] for old in order]  # type: ignore[attr-defined]
    return doc


def synthetic_corpus(
    num_docs: int,
    clusters: int | list[int] = 3,
    members_per_cluster: int = 6,
    words_per_utterance: int = 10,
    vocab_per_cluster: int = 40,
    seed: int = 0,
) -> list[Document]:
    """Documents with planted clusters; ``clusters`` may cycle over a list."""
    ks = clusters if isinstance(clusters, list) else [clusters]
    return [
        synthetic_document(
            doc_id=f"doc{i:04d}",
            clusters=ks[i % len(ks)],
            members_per_cluster=members_per_cluster,
            words_per_utterance=words_per_utterance,
            vocab_per_cluster=vocab_per_cluster,
            seed=int(np.random.SeedSequence([seed, i]).generate_state(1)[0]),
        )
        for i in range(num_docs)
    ]


def vocabulary_stress_document(
    distinct_words: int,
    words_per_utterance: int = 10,
    seed: int = 0,
) -> Document:
    """A document whose vocabulary is exactly ``distinct_words`` fresh tokens."""
    rng = derive_rng(seed, 91)
    words = [f"v{t:05d}" for t in range(distinct_words)]
    utterances = []
    for start in range(0, distinct_words, words_per_utterance):
        chunk = words[start : start + words_per_utterance]
        utterances.append(" ".join(chunk))
    k = max(1, len(utterances) // 10)
    indices = sorted(int(i) for i in rng.choice(len(utterances), size=k, replace=False))
    return Document(id="stress", utterances=utterances, summary_indices=indices)
