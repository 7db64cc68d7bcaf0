import numpy as np
import pytest

from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.service.preprocessing import (
	enforce_max_features,
	fit_pca,
	inverse_transform_pca,
	random_sample,
	standardize,
	transform_pca,
)
from vexen_cluster.shared.exceptions import DegenerateSampleError, InvalidTargetError


def test_standardize_columns():
	x = DataMatrix(np.array([[1.0, 5.0], [2.0, 5.0], [3.0, 5.0]]))
	z = standardize(x).values
	np.testing.assert_allclose(z[:, 0], [-1.22474487, 0.0, 1.22474487], atol=1e-6)
	np.testing.assert_array_equal(z[:, 1], [0.0, 0.0, 0.0])
	np.testing.assert_allclose(standardize(standardize(x)).values, z, atol=1e-9)


def test_pca_on_a_line_keeps_one_component():
	t = np.linspace(-1, 1, 20)
	model = fit_pca(DataMatrix(np.column_stack([t, 2 * t])), 0.95)
	assert model.n_components == 1


def test_pca_components_are_sorted_and_sign_fixed():
	rng = np.random.default_rng(0)
	base = rng.normal(size=(200, 2))
	x = DataMatrix(np.column_stack([base, base[:, 0] + base[:, 1]]))
	model = fit_pca(x, 3)

	assert np.all(np.diff(model.explained_variance) <= 0)
	assert model.explained_variance[2] == pytest.approx(0.0, abs=1e-9)
	assert model.explained_variance_ratio.sum() == pytest.approx(1.0)
	pivots = np.argmax(np.abs(model.component_matrix), axis=0)
	assert np.all(model.component_matrix[pivots, np.arange(3)] > 0)


def test_pca_isotropic_sample_has_similar_variances():
	x = DataMatrix(np.random.default_rng(11).normal(size=(2000, 2)))
	first, second = fit_pca(x, 2).explained_variance
	assert second / first > 0.8


def test_transform_round_trip_and_centering():
	rng = np.random.default_rng(4)
	x = DataMatrix(rng.normal(size=(30, 4)))
	model = fit_pca(x, 4)
	projected = transform_pca(model, x)
	np.testing.assert_allclose(inverse_transform_pca(model, projected).values, x.values, atol=1e-8)

	mean = DataMatrix(model.mean.reshape(1, -1))
	np.testing.assert_allclose(transform_pca(model, mean).values, 0.0, atol=1e-12)

	first = fit_pca(x, 1)
	variance = transform_pca(first, x).values[:, 0].var(ddof=1)
	assert variance == pytest.approx(first.explained_variance[0])


def test_pca_rejects_too_many_components():
	x = DataMatrix(np.random.default_rng(0).normal(size=(3, 5)))
	with pytest.raises(InvalidTargetError):
		fit_pca(x, 3)


def test_random_sample_is_seeded_and_distinct(log):
	x = DataMatrix(np.arange(200, dtype=np.float64).reshape(100, 2))
	sample, kept = random_sample(x, 0.5, np.random.default_rng(9), log)
	_, again = random_sample(x, 0.5, np.random.default_rng(9))

	assert sample.n_rows == 50
	assert len(set(kept.tolist())) == 50
	np.testing.assert_array_equal(kept, again)
	assert "Data reduced to 50 samples using random sampling." in log.messages()

	_, everything = random_sample(x, 1.0, np.random.default_rng(0))
	np.testing.assert_array_equal(everything, np.arange(100))


def test_random_sample_keeping_nothing_raises():
	x = DataMatrix(np.ones((3, 2)))
	with pytest.raises(DegenerateSampleError):
		random_sample(x, 0.1, np.random.default_rng(0))


def test_enforce_max_features(log):
	rng = np.random.default_rng(2)
	small = DataMatrix(rng.normal(size=(10, 4)))
	assert enforce_max_features(small, 100, log) is small
	assert len(log) == 0

	wide = DataMatrix(rng.normal(size=(150, 200)))
	assert enforce_max_features(wide, 100, log).n_cols == 100
	assert log.messages() == ["Reducing features from 200 to 100 using PCA"]

	deficient = DataMatrix(rng.normal(size=(150, 3)) @ rng.normal(size=(3, 200)))
	assert enforce_max_features(deficient, 100, log).n_cols == 100
