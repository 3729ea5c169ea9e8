"""Dialogue-transcript corpora: loading, validation, statistics.

Canonical format is JSON lines, one document per line:

    {"id": "...", "utterances": ["...", ...],
     "summary_indices": [3, 17, ...]}      # or
    {"id": "...", "utterances": [...], "summary_text": ["...", ...]}

``summary_indices`` points at utterances of the document itself (enables
exact-match diagnostics); ``summary_text`` is free text used only for
overlap scoring. The reference length of whichever form is present is the
document's oracle summary size. Loading never reorders utterances, and
blank utterances are kept in place (dropping them would shift every
index against the reference).

Converters for the public meeting/livestream benchmark distributions are
deliberately not bundled; point the loader at your own prepared JSONL
files (see README).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable

from .errors import CorpusParseError, CorpusValidationError
from .tokenize import TokenizedUtterance, word_tokenize

__all__ = ["CorpusStats", "Document", "corpus_stats", "load_corpus", "save_corpus"]


@dataclass
class Document:
    id: str
    utterances: list[str]
    summary_indices: list[int] | None = None
    summary_text: list[str] | None = None
    blank_indices: list[int] = field(default_factory=list)

    def __post_init__(self):
        self.blank_indices = [i for i, u in enumerate(self.utterances)
                              if not u.strip()]

    @property
    def oracle_k(self) -> int | None:
        if self.summary_indices is not None:
            return len(self.summary_indices)
        if self.summary_text is not None:
            return len(self.summary_text)
        return None

    @property
    def has_reference(self) -> bool:
        return self.oracle_k is not None

    def reference_texts(self) -> list[str] | None:
        if self.summary_text is not None:
            return self.summary_text
        if self.summary_indices is not None:
            return [self.utterances[i] for i in self.summary_indices]
        return None

    def non_blank_indices(
        self, tokenizer: Callable[[str, int], TokenizedUtterance] = word_tokenize
    ) -> list[int]:
        return [i for i, u in enumerate(self.utterances) if len(tokenizer(u, i)) > 0]


def _validate(doc_id: str, raw: dict) -> Document:
    utterances = raw.get("utterances")
    if not isinstance(utterances, list) or not utterances:
        raise CorpusValidationError(doc_id, "utterances must be a non-empty array")
    if not all(isinstance(u, str) for u in utterances):
        raise CorpusValidationError(doc_id, "utterances must all be strings")
    indices = raw.get("summary_indices")
    text = raw.get("summary_text")
    if indices is not None:
        if not all(isinstance(i, int) for i in indices):
            raise CorpusValidationError(doc_id, "summary_indices must be integers")
        bad = [i for i in indices if not 0 <= i < len(utterances)]
        if bad:
            raise CorpusValidationError(
                doc_id, f"summary index {bad[0]} out of range [0, {len(utterances)})"
            )
        if len(indices) > len(utterances):
            raise CorpusValidationError(doc_id, "reference longer than document")
    if text is not None and not all(isinstance(t, str) for t in text):
        raise CorpusValidationError(doc_id, "summary_text must all be strings")
    return Document(id=doc_id, utterances=list(utterances),
                    summary_indices=list(indices) if indices is not None else None,
                    summary_text=list(text) if text is not None else None)


def load_corpus(path: str | Path) -> list[Document]:
    """Read and validate a JSONL corpus; errors carry line numbers."""
    docs = []
    with open(path, encoding="utf-8") as fp:
        for lineno, line in enumerate(fp, start=1):
            if not line.strip():
                continue
            try:
                raw = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusParseError(lineno, f"invalid JSON ({exc.msg})") from exc
            if not isinstance(raw, dict):
                raise CorpusParseError(lineno, "record is not a JSON object")
            doc_id = raw.get("id")
            if not isinstance(doc_id, str) or not doc_id:
                raise CorpusParseError(lineno, "missing or non-string 'id'")
            docs.append(_validate(doc_id, raw))
    return docs


def save_corpus(docs: Iterable[Document], path: str | Path) -> None:
    """Write documents back out in the canonical JSONL form."""
    with open(path, "w", encoding="utf-8") as fp:
        for doc in docs:
            record: dict = {"id": doc.id, "utterances": doc.utterances}
            if doc.summary_indices is not None:
                record["summary_indices"] = doc.summary_indices
            if doc.summary_text is not None:
                record["summary_text"] = doc.summary_text
            fp.write(json.dumps(record, ensure_ascii=False) + "\n")


@dataclass
class CorpusStats:
    utts_per_sample: float
    words_per_utt: float
    extraction_ratio: float | None

    def to_dict(self) -> dict:
        return {
            "utts_per_sample": self.utts_per_sample,
            "words_per_utt": self.words_per_utt,
            "extraction_ratio": self.extraction_ratio,
        }


def corpus_stats(
    docs: list[Document],
    tokenizer: Callable[[str, int], TokenizedUtterance] = word_tokenize,
) -> CorpusStats:
    """Average utterances per document, words per utterance, and the mean
    ratio of reference length to document length (absent without references)."""
    if not docs:
        raise ValueError("empty corpus")
    total_utts = sum(len(d.utterances) for d in docs)
    total_words = sum(len(tokenizer(u, i))
                      for d in docs for i, u in enumerate(d.utterances))
    ratios = [d.oracle_k / len(d.utterances) for d in docs if d.has_reference]
    # fsum keeps the average exactly order-independent across document shuffles
    return CorpusStats(
        utts_per_sample=total_utts / len(docs),
        words_per_utt=total_words / total_utts,
        extraction_ratio=math.fsum(ratios) / len(ratios) if ratios else None,
    )
