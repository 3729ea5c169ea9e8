"""Internal consistency of the brute-force reference implementations."""

import numpy as np
import pytest

from hypersum.errors import OracleBudgetError
from hypersum.oracle import bundle_similarity_oracle, exhaustive_kmedoids, naive_rouge


def test_single_point():
    x = np.ones((1, 16), dtype=np.int8)
    medoids, obj = exhaustive_kmedoids(x, 1)
    assert medoids == [0]
    assert obj == 0


def test_budget_refused():
    x = np.ones((60, 8), dtype=np.int8)
    with pytest.raises(OracleBudgetError):
        exhaustive_kmedoids(x, 6)  # C(60,6) > 1e6


def test_input_order_invariance():
    rng = np.random.default_rng(3)
    x = (rng.integers(0, 2, size=(10, 64), dtype=np.int8) << 1) - 1
    _, obj1 = exhaustive_kmedoids(x, 2)
    perm = rng.permutation(10)
    _, obj2 = exhaustive_kmedoids(x[perm], 2)
    assert obj1 == obj2


def test_duplicated_points_unique_objective():
    rng = np.random.default_rng(4)
    base = (rng.integers(0, 2, size=(1, 32), dtype=np.int8) << 1) - 1
    other = -base
    x = np.vstack([base, base, other])
    medoids, obj = exhaustive_kmedoids(x, 1)
    assert medoids[0] in (0, 1)
    assert obj == 4 * 32  # the flipped point is 4D away from either duplicate


def test_naive_rouge_identities():
    assert naive_rouge(["a", "b"], ["a", "b"], "rouge1") == (1.0, 1.0, 1.0)
    assert naive_rouge([], ["a"], "rouge1") == (0.0, 0.0, 0.0)
    assert naive_rouge(["a"], ["b"], "rougeL") == (0.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        naive_rouge(["a"], ["a"], "rougeW")


def test_bundle_similarity_oracle_l1():
    mean, std = bundle_similarity_oracle(1, trials=5, dim=2000, seed=0)
    assert mean == 1.0
    assert std == 0.0


def test_bundle_similarity_oracle_matches_binomial():
    mean3, _ = bundle_similarity_oracle(3, trials=80, dim=10_000, seed=1)
    mean5, _ = bundle_similarity_oracle(5, trials=80, dim=10_000, seed=2)
    assert mean3 == pytest.approx(0.5, abs=0.02)
    assert mean5 == pytest.approx(0.375, abs=0.02)
