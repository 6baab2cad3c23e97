import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from featurehash.addhash import randomize
from featurehash.vecspace import FeatureVector, cosine, l2_normalize, orthogonality_stats, raw_cosine

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)
vectors = arrays(np.float64, st.integers(1, 32), elements=finite)


def unit(i, dim=4):
    v = np.zeros(dim)
    v[i] = 1.0
    return FeatureVector(v, normalized=True)


def random_tokens(count, seed):
    rng = np.random.default_rng(seed)
    return ["".join(chr(c) for c in rng.integers(97, 123, size=12)) for _ in range(count)]


def test_normalize_345():
    v = l2_normalize(FeatureVector([3.0, 4.0]))
    assert v.normalized
    np.testing.assert_allclose(v.values, [0.6, 0.8], atol=1e-15)


def test_zero_vector_passes_through():
    v = l2_normalize(FeatureVector.zeros(8, normalized=False))
    assert v.normalized and v.is_zero


def test_unit_vector_unchanged():
    v = unit(2)
    assert np.max(np.abs(l2_normalize(v).values - v.values)) <= 1e-15


@given(vectors)
def test_normalize_idempotent(values):
    once = l2_normalize(FeatureVector(values))
    twice = l2_normalize(once)
    assert np.max(np.abs(once.values - twice.values)) <= 1e-15
    if np.linalg.norm(values) > 1e-12:
        assert abs(once.norm() - 1.0) <= 1e-9


@given(vectors)
def test_self_cosine_is_one(values):
    v = l2_normalize(FeatureVector(values))
    if np.linalg.norm(values) > 1e-12:
        assert abs(cosine(v, v) - 1.0) <= 1e-12


@given(st.integers(1, 16).flatmap(lambda n: st.tuples(arrays(np.float64, n, elements=finite),
                                                       arrays(np.float64, n, elements=finite))))
def test_cosine_symmetric_and_bounded(pair):
    u, v = (l2_normalize(FeatureVector(x)) for x in pair)
    assert cosine(u, v) == cosine(v, u)
    assert -1.0 <= cosine(u, v) <= 1.0


def test_basis_cosines():
    assert cosine(unit(0), unit(0)) == 1.0
    assert cosine(unit(0), unit(1)) == 0.0


def test_cosine_dimension_mismatch():
    with pytest.raises(ValueError):
        cosine(unit(0, 4), unit(0, 8))


def test_raw_cosine_exact_for_identical_counts():
    a = np.array([3, -1, 0, 7, 2])
    assert raw_cosine(a, a) == 1.0
    assert raw_cosine(a, np.zeros(5, dtype=int)) == 0.0


def test_orthogonality_needs_two_distinct_tokens():
    with pytest.raises(ValueError):
        orthogonality_stats(["aa", "aa"], 32, randomize)


@pytest.mark.parametrize(
    "dim, mean_tol, std_lo, std_hi",
    [(1024, 0.004, 0.028, 0.035), (256, 0.004 * 2, 0.056, 0.069)],
)
def test_orthogonality_stats_bounds(dim, mean_tol, std_lo, std_hi):
    stats = orthogonality_stats(random_tokens(1000, seed=dim), dim, randomize)
    assert stats.pairs == 1000 * 999 // 2
    assert abs(stats.mean) <= mean_tol
    assert std_lo <= stats.std <= std_hi
