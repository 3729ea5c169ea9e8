"""Extractive summarization with hyperdimensional sentence embeddings.

Pipeline: tokenize utterances, map words to bipolar hypervectors via a
codebook, position-encode and majority-bundle each utterance into one
vector, then pick k cluster medoids as the summary. Includes ROUGE
scoring, corpus tooling, a deterministic CLI, and brute-force oracles
for validating the optimized paths.
"""

from .cluster import (
    ClusterResult,
    alternating_kmedoids,
    fastpam,
    fasterpam,
    lead_n,
    squared_distance,
)
from .codebook import Codebook, circular_vector, level_vector, thermometer_vector
from .config import RunConfig
from .corpus import CorpusStats, Document, corpus_stats, load_corpus, save_corpus
from .embed import SentenceEmbedding, embed_document, embed_utterance
from .hypervector import (
    DEFAULT_DIM,
    cosine,
    derive_rng,
    hamming,
    majority_bundle,
    random_hypervector,
    rotate,
)
from .pipeline import evaluate_corpus, summarize_corpus, summarize_document
from .rouge import RougeReport, rouge_l, rouge_n, score_summary
from .tokenize import TokenizedUtterance, word_tokenize

__version__ = "0.1.0"

__all__ = [
    "ClusterResult",
    "Codebook",
    "CorpusStats",
    "DEFAULT_DIM",
    "Document",
    "RougeReport",
    "RunConfig",
    "SentenceEmbedding",
    "TokenizedUtterance",
    "alternating_kmedoids",
    "circular_vector",
    "corpus_stats",
    "cosine",
    "derive_rng",
    "embed_document",
    "embed_utterance",
    "evaluate_corpus",
    "fastpam",
    "fasterpam",
    "hamming",
    "lead_n",
    "level_vector",
    "load_corpus",
    "majority_bundle",
    "random_hypervector",
    "rotate",
    "rouge_l",
    "rouge_n",
    "save_corpus",
    "score_summary",
    "squared_distance",
    "summarize_corpus",
    "summarize_document",
    "thermometer_vector",
    "word_tokenize",
]
