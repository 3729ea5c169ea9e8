"""Sentence embeddings from position-encoded word vectors.

An utterance of l tokens becomes one hypervector: token j's codebook
vector is rotated l-j-1 positions (the last word is unrotated), and the
rotated vectors are combined by majority vote. The result stays similar
to each correctly-rotated constituent while two utterances without shared
words are nearly orthogonal, so plain geometric clustering downstream is
meaningful.

Majority ties (even token counts) are resolved from a stream keyed by
(seed, token content), which makes embedding both schedule-independent
and stable under repetition: the same sentence embeds identically
wherever it appears in the document.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .codebook import Codebook
from .errors import EmptyDocumentError, EmptyUtteranceError
from .hypervector import HV, derive_rng, majority_bundle, rotate
from .tokenize import TokenizedUtterance

__all__ = ["SentenceEmbedding", "dump_embeddings", "embed_document",
           "embed_utterance", "tie_stream"]

_TIE_STREAM = 1


@dataclass(frozen=True)
class SentenceEmbedding:
    vector: HV
    utterance_index: int
    token_count: int


def tie_stream(seed: int, tokens: TokenizedUtterance) -> np.random.Generator:
    """Tie-break stream for one utterance, keyed by seed and token content."""
    digest = hashlib.blake2b("\x00".join(tokens.tokens).encode("utf-8"),
                             digest_size=8).digest()
    return derive_rng(seed, _TIE_STREAM, int.from_bytes(digest, "big"))


def embed_utterance(
    tokens: TokenizedUtterance,
    book: Codebook,
    tie_rng: np.random.Generator,
) -> SentenceEmbedding:
    """Embed one tokenized utterance against a shared codebook.

    Raises EmptyUtteranceError for token-free input; callers decide the
    policy for blanks (the document pipeline keeps them out of clustering
    without renumbering anything).
    """
    l = len(tokens)
    if l == 0:
        raise EmptyUtteranceError(f"utterance {tokens.source_index} has no tokens")
    rotated = np.empty((l, book.dim), dtype=np.int8)
    for j, token in enumerate(tokens.tokens):
        rotated[j] = rotate(book.assign(token), l - j - 1)
    vector = majority_bundle(rotated, tie_rng)
    return SentenceEmbedding(vector=vector, utterance_index=tokens.source_index,
                             token_count=l)


def embed_document(
    tokenized: list[TokenizedUtterance],
    book: Codebook,
    seed: int,
) -> list[SentenceEmbedding]:
    """Embed every non-blank utterance of a document under one codebook.

    Blank utterances are skipped but keep their original indices, so
    selected summary positions always line up with the source document.
    """
    out = []
    for utt in tokenized:
        if len(utt) == 0:
            continue
        out.append(embed_utterance(utt, book, tie_stream(seed, utt)))
    if not out:
        raise EmptyDocumentError("document has no non-blank utterances")
    return out


def dump_embeddings(embeddings: list[SentenceEmbedding], path: str) -> None:
    """Write embeddings as an (n, D) .npy matrix, rows in utterance order."""
    np.save(path, np.vstack([e.vector for e in embeddings]))
