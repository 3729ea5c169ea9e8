"""Word tokenizer behavior and idempotence."""

from hypothesis import given, settings
from hypothesis import strategies as st

from hypersum.tokenize import word_tokenize


def test_basic_examples():
    assert word_tokenize("Hello, world!").tokens == ("hello", "world")
    assert word_tokenize("").tokens == ()
    assert word_tokenize("it's a test").tokens == ("it's", "a", "test")


def test_punctuation_only_tokens_vanish():
    assert word_tokenize("-- ... !!").tokens == ()
    assert word_tokenize("well -- yes").tokens == ("well", "yes")


def test_internal_punctuation_kept():
    assert word_tokenize("state-of-the-art (really)").tokens == (
        "state-of-the-art", "really")


def test_source_index_carried():
    assert word_tokenize("hi", 7).source_index == 7


@given(st.text(max_size=80))
@settings(max_examples=200, deadline=None)
def test_idempotent_on_rejoined_output(text):
    once = word_tokenize(text).tokens
    twice = word_tokenize(" ".join(once)).tokens
    assert twice == once
