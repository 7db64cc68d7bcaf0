import math

import numpy as np
import pytest

from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.service.similarity import (
	cosine_similarity,
	get_similarity,
	pearson_similarity,
	rbf_similarity,
	spearman_similarity,
)
from vexen_cluster.infraestructure.output.cache.memory import InMemorySimilarityCache
from vexen_cluster.shared.exceptions import InvalidMethodError


def pair(a, b) -> DataMatrix:
	return DataMatrix(np.array([a, b], dtype=np.float64))


@pytest.mark.parametrize(
	("a", "b", "expected"),
	[
		([1, 2, 3], [2, 4, 6], 1.0),
		([1, 2, 3], [3, 2, 1], -1.0),
		([1, 0, 1, 0], [0, 1, 0, 1], -1.0),
	],
)
def test_pearson_pairs(a, b, expected):
	assert pearson_similarity(pair(a, b)).values[0, 1] == pytest.approx(expected, abs=1e-12)


def test_single_feature_gives_all_ones():
	x = DataMatrix(np.array([[1.0], [5.0], [-2.0]]))
	for fn in (pearson_similarity, spearman_similarity):
		np.testing.assert_array_equal(fn(x).values, np.ones((3, 3)))


def test_constant_row_is_sanitised(log):
	s = pearson_similarity(pair([1, 1, 1], [1, 2, 3]), log)
	np.testing.assert_array_equal(s.values, np.eye(2))
	assert any("non-finite" in m for m in log.messages())


@pytest.mark.parametrize(
	("a", "b", "expected"),
	[
		([1, 2, 3], [10, 20, 30], 1.0),
		([1, 2, 3], [3, 2, 1], -1.0),
		([1, 5, 2], [2, 9, 3], 1.0),
	],
)
def test_spearman_pairs(a, b, expected):
	assert spearman_similarity(pair(a, b)).values[0, 1] == pytest.approx(expected, abs=1e-12)


def test_spearman_ignores_monotone_transforms():
	rng = np.random.default_rng(3)
	values = rng.uniform(0.5, 3.0, size=(6, 5))
	before = spearman_similarity(DataMatrix(values)).values
	after = spearman_similarity(DataMatrix(np.exp(values) + 1)).values
	np.testing.assert_allclose(before, after, atol=1e-12)


def test_rbf_values_and_translation_invariance():
	s = rbf_similarity(pair([0, 0], [1, 0]))
	assert s.values[0, 1] == pytest.approx(math.exp(-1), abs=1e-7)
	assert s.values[0, 0] == 1.0

	rng = np.random.default_rng(5)
	values = rng.normal(size=(8, 3))
	np.testing.assert_allclose(
		rbf_similarity(DataMatrix(values)).values,
		rbf_similarity(DataMatrix(values + 7.5)).values,
		atol=1e-9,
	)
	assert rbf_similarity(pair([0, 0], [3, 0]), gamma=100.0).values[0, 1] < 1e-300


def test_rbf_rejects_non_positive_gamma():
	with pytest.raises(ValueError):
		rbf_similarity(pair([0, 0], [1, 0]), gamma=0.0)


@pytest.mark.parametrize(
	("a", "b", "expected"),
	[
		([1, 0], [0, 1], 0.0),
		([1, 1], [2, 2], 1.0),
		([1, 0], [-1, 0], -1.0),
	],
)
def test_cosine_pairs(a, b, expected):
	assert cosine_similarity(pair(a, b)).values[0, 1] == pytest.approx(expected, abs=1e-12)


def test_cosine_zero_norm_row(log):
	x = DataMatrix(np.array([[0.0, 0.0], [1.0, 2.0], [2.0, 4.0]]))
	s = cosine_similarity(x, log).values
	np.testing.assert_array_equal(s[0], [1.0, 0.0, 0.0])
	assert s[1, 2] == pytest.approx(1.0)
	assert any("zero-norm" in m for m in log.messages())


def test_get_similarity_caches_per_method(log):
	cache = InMemorySimilarityCache()
	x = DataMatrix(np.random.default_rng(1).normal(size=(5, 3)))

	first = get_similarity(x, "cosine", cache, log)
	second = get_similarity(x, "cosine", cache, log)
	get_similarity(x, "kernel", cache, log)

	assert second is first
	assert cache.hits == 1
	assert len(cache) == 2
	assert "Retrieved cosine similarity matrix from cache." in log.messages()


def test_get_similarity_rejects_unknown_method(log):
	x = DataMatrix(np.eye(3))
	with pytest.raises(InvalidMethodError, match="Invalid similarity method: manhattan"):
		get_similarity(x, "manhattan", InMemorySimilarityCache(), log)
