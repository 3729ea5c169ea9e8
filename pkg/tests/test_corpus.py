"""Corpus loading, validation, round-trips, statistics, synthetic data."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypersum.corpus import Document, corpus_stats, load_corpus, save_corpus
from hypersum.errors import CorpusParseError, CorpusValidationError
from hypersum.synthetic import synthetic_corpus, synthetic_document


def write_lines(path, lines):
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def test_load_well_formed(tmp_path):
    path = tmp_path / "c.jsonl"
    write_lines(path, [
        json.dumps({"id": "a", "utterances": ["one two", "three"],
                    "summary_indices": [0]}),
        json.dumps({"id": "b", "utterances": ["x"], "summary_text": ["x y"]}),
    ])
    docs = load_corpus(path)
    assert len(docs) == 2
    assert docs[0].oracle_k == 1
    assert docs[0].reference_texts() == ["one two"]
    assert docs[1].reference_texts() == ["x y"]


def test_parse_error_carries_line_number(tmp_path):
    path = tmp_path / "c.jsonl"
    write_lines(path, [
        json.dumps({"id": "a", "utterances": ["ok"]}),
        "{not json",
    ])
    with pytest.raises(CorpusParseError, match="line 2"):
        load_corpus(path)


def test_out_of_range_reference_names_document(tmp_path):
    path = tmp_path / "c.jsonl"
    write_lines(path, [
        json.dumps({"id": "bad-doc", "utterances": ["a"] * 10,
                    "summary_indices": [999]}),
    ])
    with pytest.raises(CorpusValidationError, match="bad-doc"):
        load_corpus(path)


def test_empty_utterances_rejected(tmp_path):
    path = tmp_path / "c.jsonl"
    write_lines(path, [json.dumps({"id": "a", "utterances": []})])
    with pytest.raises(CorpusValidationError):
        load_corpus(path)


def test_missing_id_rejected(tmp_path):
    path = tmp_path / "c.jsonl"
    write_lines(path, [json.dumps({"utterances": ["a"]})])
    with pytest.raises(CorpusParseError, match="'id'"):
        load_corpus(path)


def test_blank_utterances_flagged_and_kept():
    doc = Document(id="d", utterances=["a", "", "  ", "b"])
    assert doc.blank_indices == [1, 2]
    assert len(doc.utterances) == 4
    assert doc.non_blank_indices() == [0, 3]


docs_strategy = st.lists(
    st.builds(
        lambda i, utts, ref: Document(
            id=f"doc{i}",
            utterances=utts,
            summary_indices=sorted(set(r % len(utts) for r in ref)) or None,
        ),
        st.integers(0, 99),
        st.lists(st.text(alphabet="abc xyz.!", min_size=0, max_size=20),
                 min_size=1, max_size=6),
        st.lists(st.integers(0, 100), min_size=0, max_size=3),
    ),
    min_size=1, max_size=5,
)


@given(docs_strategy)
@settings(max_examples=60, deadline=None)
def test_round_trip(tmp_path_factory, docs):
    path = tmp_path_factory.mktemp("rt") / "c.jsonl"
    save_corpus(docs, path)
    loaded = load_corpus(path)
    assert len(loaded) == len(docs)
    for a, b in zip(docs, loaded):
        assert a.id == b.id
        assert a.utterances == b.utterances
        assert a.summary_indices == b.summary_indices
        assert a.summary_text == b.summary_text


def test_stats_direct_arithmetic():
    doc = Document(id="d", utterances=["w w w"] * 4, summary_indices=[0])
    stats = corpus_stats([doc])
    assert stats.utts_per_sample == 4.0
    assert stats.words_per_utt == 3.0
    assert stats.extraction_ratio == 0.25


def test_stats_absent_ratio_without_references():
    stats = corpus_stats([Document(id="d", utterances=["a b", "c"])])
    assert stats.extraction_ratio is None
    assert stats.words_per_utt == 1.5


def test_stats_invariant_to_document_order():
    docs = synthetic_corpus(6, clusters=[2, 3], seed=1)
    forward = corpus_stats(docs)
    backward = corpus_stats(list(reversed(docs)))
    assert forward == backward


def test_synthetic_document_structure():
    doc = synthetic_document("d", clusters=3, members_per_cluster=5, seed=0)
    assert len(doc.utterances) == 15
    assert doc.oracle_k == 3
    planted = doc.planted_clusters
    assert sorted(set(planted)) == [0, 1, 2]
    # the reference sentences cover each planted cluster exactly once
    assert sorted(planted[i] for i in doc.summary_indices) == [0, 1, 2]
    # cluster vocabularies are disjoint by construction
    words0 = {w for i, u in enumerate(doc.utterances) if planted[i] == 0
              for w in u.split()}
    words1 = {w for i, u in enumerate(doc.utterances) if planted[i] == 1
              for w in u.split()}
    assert not words0 & words1


def test_synthetic_corpus_is_seed_deterministic():
    a = synthetic_corpus(3, clusters=2, seed=5)
    b = synthetic_corpus(3, clusters=2, seed=5)
    assert [d.utterances for d in a] == [d.utterances for d in b]
