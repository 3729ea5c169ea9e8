"""Utterance tokenization.

One built-in tokenizer: lowercase, split on whitespace, strip punctuation
from token edges (internal punctuation like apostrophes is kept). The same
normalization is reused by the overlap metrics so that what gets embedded
is exactly what gets scored. Any callable ``str -> list[str]`` can be
registered as an alternative tokenizer.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from typing import Callable

__all__ = ["TOKENIZERS", "TokenizedUtterance", "word_tokenize"]


def _is_edge_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def _strip_edges(token: str) -> str:
    start, end = 0, len(token)
    while start < end and _is_edge_punct(token[start]):
        start += 1
    while end > start and _is_edge_punct(token[end - 1]):
        end -= 1
    return token[start:end]


@dataclass(frozen=True)
class TokenizedUtterance:
    tokens: tuple[str, ...]
    source_index: int

    def __len__(self) -> int:
        return len(self.tokens)


def word_tokenize(text: str, source_index: int = 0) -> TokenizedUtterance:
    """Split into lowercase word tokens; empty only for blank/punctuation input."""
    tokens = []
    for raw in text.lower().split():
        stripped = _strip_edges(raw)
        if stripped:
            tokens.append(stripped)
    return TokenizedUtterance(tokens=tuple(tokens), source_index=source_index)


TOKENIZERS: dict[str, Callable[[str, int], TokenizedUtterance]] = {
    "word": word_tokenize,
}
