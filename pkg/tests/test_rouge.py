"""Overlap metrics against hand counts, the naive oracle, and properties."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypersum.corpus import Document
from hypersum.errors import MissingReferenceError
from hypersum.oracle import naive_rouge
from hypersum.rouge import (
    lcs_length,
    macro_average,
    rouge_l,
    rouge_n,
    score_summary,
    score_tokens,
)

words = st.lists(st.sampled_from("the a cat dog sat ran big red on".split()),
                 min_size=0, max_size=12)


def test_rouge1_hand_counted():
    p, r, f1 = rouge_n("the cat sat".split(), "the cat ran".split(), 1)
    assert (p, r) == (2 / 3, 2 / 3)
    assert f1 == pytest.approx(2 / 3, abs=1e-15)


def test_identical_and_disjoint():
    assert rouge_n(["x", "y"], ["x", "y"], 1) == (1.0, 1.0, 1.0)
    assert rouge_n(["x", "y"], ["x", "y"], 2) == (1.0, 1.0, 1.0)
    assert rouge_n(["a"], ["b"], 1) == (0.0, 0.0, 0.0)
    assert rouge_l(["a", "b"], ["a", "b"]) == (1.0, 1.0, 1.0)
    assert rouge_l([], ["a"]) == (0.0, 0.0, 0.0)
    assert rouge_l(["a"], []) == (0.0, 0.0, 0.0)


def test_multiset_clipping():
    # candidate repeats "the" three times; reference has it twice.
    p, r, _ = rouge_n(["the", "the", "the"], ["the", "the", "cat"], 1)
    assert p == 2 / 3
    assert r == 2 / 3


def test_lcs_hand_example():
    assert lcs_length("a b c d".split(), "a c b d".split()) == 3
    p, r, _ = rouge_l("a b c d".split(), "a c b d".split())
    assert (p, r) == (3 / 4, 3 / 4)


def test_empty_reference_flagged_not_raised():
    report = score_tokens(["a", "b"], [])
    assert report.empty_reference
    assert report.r1 == (0.0, 0.0, 0.0)


@given(words, words)
@settings(max_examples=150, deadline=None)
def test_matches_naive_oracle(cand, ref):
    for variant, fast in (("rouge1", lambda: rouge_n(cand, ref, 1)),
                          ("rouge2", lambda: rouge_n(cand, ref, 2)),
                          ("rougeL", lambda: rouge_l(cand, ref))):
        slow = naive_rouge(cand, ref, variant)
        for got, want in zip(fast(), slow):
            assert got == pytest.approx(want, abs=1e-12)


@given(words, words)
@settings(max_examples=100, deadline=None)
def test_swap_symmetry(cand, ref):
    p1, r1, f1 = rouge_l(cand, ref)
    p2, r2, f2 = rouge_l(ref, cand)
    assert (p1, r1) == (r2, p2)
    assert f1 == pytest.approx(f2, abs=1e-15)


@given(words, st.lists(st.sampled_from("cat dog sat".split()), min_size=1, max_size=3))
@settings(max_examples=100, deadline=None)
def test_appending_reference_tokens_never_decreases_recall(cand, extra):
    ref = ["the", "cat", "sat", "on", "the", "dog"]
    before = rouge_n(cand, ref, 1).recall
    after = rouge_n(cand + extra, ref, 1).recall
    assert after >= before


def test_score_summary_exact_match_is_one():
    doc = Document(id="d", utterances=["The cat sat.", "A dog ran!", "Red sky."],
                   summary_indices=[0, 2])
    report = score_summary([2, 0], doc)
    assert report.r1.f1 == 1.0
    assert report.r2.f1 == 1.0
    assert report.rl.f1 == 1.0


def test_score_summary_requires_reference():
    doc = Document(id="d", utterances=["a", "b"])
    with pytest.raises(MissingReferenceError):
        score_summary([0], doc)


def test_score_summary_with_text_reference():
    doc = Document(id="d", utterances=["the cat sat", "dogs bark"],
                   summary_text=["the cat ran"])
    report = score_summary([0], doc)
    assert report.r1.f1 == pytest.approx(2 / 3, abs=1e-15)


def test_macro_average_is_arithmetic_mean():
    rng = np.random.default_rng(0)
    reports = []
    for _ in range(5):
        cand = [str(i) for i in rng.integers(0, 6, size=8)]
        ref = [str(i) for i in rng.integers(0, 6, size=8)]
        reports.append(score_tokens(cand, ref))
    macro = macro_average(reports)
    mean_f1 = sum(r.r1.f1 for r in reports) / 5
    assert macro.r1.f1 == pytest.approx(mean_f1, abs=1e-12)
    mean_rl = sum(r.rl.f1 for r in reports) / 5
    assert macro.rl.f1 == pytest.approx(mean_rl, abs=1e-12)


def test_long_sequences_against_oracle():
    rng = np.random.default_rng(1)
    cand = [str(int(i)) for i in rng.integers(0, 30, size=300)]
    ref = [str(int(i)) for i in rng.integers(0, 30, size=250)]
    assert lcs_length(cand, ref) / len(cand) == naive_rouge(cand, ref, "rougeL")[0]


def test_matches_external_scorer_when_available():
    # Cross-check against an established scorer under matched settings
    # (no stemming, alnum tokens so both tokenizers agree). Skips where
    # the package is not installed.
    rouge_scorer = pytest.importorskip("rouge_score.rouge_scorer")
    scorer = rouge_scorer.RougeScorer(["rouge1", "rouge2", "rougeL"],
                                      use_stemmer=False)
    rng = np.random.default_rng(9)
    vocab = ["cat", "dog", "sat", "ran", "the", "big", "red", "fox"]
    for _ in range(50):
        cand = [vocab[int(i)] for i in rng.integers(0, 8, size=rng.integers(1, 15))]
        ref = [vocab[int(i)] for i in rng.integers(0, 8, size=rng.integers(1, 15))]
        theirs = scorer.score(" ".join(ref), " ".join(cand))
        assert rouge_n(cand, ref, 1).f1 == pytest.approx(
            theirs["rouge1"].fmeasure, abs=1e-6)
        assert rouge_n(cand, ref, 2).f1 == pytest.approx(
            theirs["rouge2"].fmeasure, abs=1e-6)
        assert rouge_l(cand, ref).f1 == pytest.approx(
            theirs["rougeL"].fmeasure, abs=1e-6)
