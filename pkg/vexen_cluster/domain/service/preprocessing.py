"""Standardisation, PCA and approximation applied before similarity computation."""

import numpy as np
from numpy.typing import NDArray

from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.entity.pca_model import PcaModel
from vexen_cluster.domain.repository.result_cache_port import IResultCachePort
from vexen_cluster.domain.service.hashing import fingerprint
from vexen_cluster.domain.vo.approximation_method import ApproximationMethod
from vexen_cluster.shared.exceptions import (
	ApproximationNotAvailableError,
	DegenerateSampleError,
	InvalidDataError,
	InvalidTargetError,
)

DEFAULT_VARIANCE_FRACTION = 0.95
EIGENVALUE_CLAMP = 1e-10


def standardize(x: DataMatrix) -> DataMatrix:
	"""Zero mean, unit population standard deviation per column; constant columns become 0"""
	values = x.values
	mean = values.mean(axis=0)
	std = values.std(axis=0)
	centered = values - mean
	scaled = np.divide(centered, std, out=np.zeros_like(centered), where=std > 0)
	return DataMatrix(scaled)


def _resolve_components(target: int | float, eigenvalues: NDArray[np.float64]) -> int:
	"""Number of components for a count or a variance fraction"""
	if isinstance(target, float) and 0 < target < 1:
		total = eigenvalues.sum()
		if total <= 0:
			return 1
		cumulative = np.cumsum(eigenvalues) / total
		return int(np.searchsorted(cumulative, target - 1e-12) + 1)
	return int(target)


def _eigen_decomposition(
	values: NDArray[np.float64],
) -> tuple[NDArray[np.float64], NDArray[np.float64], NDArray[np.float64]]:
	"""Mean, descending eigenvalues and sign-fixed eigenvectors of the sample covariance"""
	mean = values.mean(axis=0)
	centered = values - mean
	covariance = centered.T @ centered / (values.shape[0] - 1)
	eigenvalues, eigenvectors = np.linalg.eigh(covariance)
	order = np.argsort(eigenvalues, kind="stable")[::-1]
	eigenvalues = eigenvalues[order]
	eigenvectors = eigenvectors[:, order]
	eigenvalues = np.where(eigenvalues < EIGENVALUE_CLAMP, 0.0, eigenvalues)
	# largest-magnitude entry of every component is positive
	pivot = np.argmax(np.abs(eigenvectors), axis=0)
	signs = np.sign(eigenvectors[pivot, np.arange(eigenvectors.shape[1])])
	signs[signs == 0] = 1.0
	return mean, eigenvalues, eigenvectors * signs


def fit_pca(x: DataMatrix, target: int | float = DEFAULT_VARIANCE_FRACTION) -> PcaModel:
	"""
	Fit principal axes.

	Args:
		x: Data with at least two rows
		target: Component count r, or variance fraction f in (0, 1); the
			smallest r whose cumulative explained-variance ratio reaches f
			is kept

	Returns:
		Fitted PcaModel

	Raises:
		InvalidTargetError: If r > min(n - 1, d) or the target is not positive
	"""
	if x.n_rows < 2:
		raise InvalidTargetError("PCA needs at least two rows")
	if isinstance(target, float) and not target.is_integer():
		if not 0 < target < 1:
			raise InvalidTargetError(f"Variance fraction must lie in (0, 1), got {target}")
	else:
		target = int(target)
		limit = min(x.n_rows - 1, x.n_cols)
		if not 1 <= target <= limit:
			raise InvalidTargetError(
				f"Cannot keep {target} components; at most min(n-1, d) = {limit}"
			)
	return _fit(x, target)


def _fit(x: DataMatrix, target: int | float) -> PcaModel:
	mean, eigenvalues, eigenvectors = _eigen_decomposition(x.values)
	r = min(_resolve_components(target, eigenvalues), eigenvectors.shape[1])
	return PcaModel(
		mean=mean,
		component_matrix=eigenvectors[:, :r],
		explained_variance=eigenvalues[:r],
		total_variance=float(eigenvalues.sum()),
	)


def transform_pca(model: PcaModel, x: DataMatrix) -> DataMatrix:
	"""
	Project onto the principal axes.

	Raises:
		InvalidDataError: If x does not have the model's feature count
	"""
	if x.n_cols != model.n_features:
		raise InvalidDataError(
			f"PCA model expects {model.n_features} features, got {x.n_cols}"
		)
	return DataMatrix((x.values - model.mean) @ model.component_matrix)


def inverse_transform_pca(model: PcaModel, projected: DataMatrix) -> DataMatrix:
	"""Map projected data back to the original feature space"""
	return DataMatrix(projected.values @ model.component_matrix.T + model.mean)


def random_sample(
	x: DataMatrix, sample_size: float, rng: np.random.Generator, log: DecisionLog | None = None
) -> tuple[DataMatrix, NDArray[np.intp]]:
	"""
	Keep int(n * sample_size) distinct rows, drawn without replacement.

	Kept indices are returned in ascending order.

	Raises:
		DegenerateSampleError: If no row would be kept
	"""
	if not 0 < sample_size <= 1:
		raise DegenerateSampleError(f"sample_size must lie in (0, 1], got {sample_size}")
	k = int(x.n_rows * sample_size)
	if k < 1:
		raise DegenerateSampleError(
			f"Sampling {sample_size} of {x.n_rows} rows keeps no observation"
		)
	indices = np.sort(rng.choice(x.n_rows, size=k, replace=False)).astype(np.intp)
	if log is not None:
		log.record(f"Data reduced to {k} samples using random sampling.")
	return x.take_rows(indices), indices


def enforce_max_features(x: DataMatrix, max_features: int, log: DecisionLog) -> DataMatrix:
	"""
	Reduce to exactly max_features principal components when d exceeds it.

	The data is not standardised first. Trailing components of rank-deficient
	data carry zero variance.
	"""
	if x.n_cols <= max_features:
		return x
	log.record(f"Reducing features from {x.n_cols} to {max_features} using PCA")
	if x.n_rows < 2:
		return DataMatrix(x.values[:, :max_features])
	model = _fit(x, max_features)
	return transform_pca(model, x)


def apply_pca(
	x: DataMatrix,
	n_components: int | float | None,
	cache: IResultCachePort,
	log: DecisionLog,
) -> DataMatrix:
	"""
	Standardise, then project with PCA; results are cached by the standardised data.

	Args:
		x: Observations
		n_components: Component count or variance fraction; defaults to 0.95
		cache: Memo keyed by ("PCA", fingerprint, target)
		log: Decision log
	"""
	scaled = standardize(x)
	target = n_components if n_components is not None else DEFAULT_VARIANCE_FRACTION
	key = ("PCA", fingerprint(scaled).digest, target)
	cached = cache.get(key)
	if cached is not None:
		log.record("Retrieved PCA results from cache.")
		return cached
	if scaled.n_rows < 2:
		return scaled
	model = _fit(scaled, target)
	result = transform_pca(model, scaled)
	cache.put(key, result)
	log.record(
		f"Computed and cached PCA results. Reduced dimensions to {model.n_components}."
	)
	return result


def apply_approximation(
	x: DataMatrix,
	method: ApproximationMethod,
	sample_size: float,
	n_components: int | float | None,
	rng: np.random.Generator,
	log: DecisionLog,
) -> tuple[DataMatrix, NDArray[np.intp] | None]:
	"""
	Reduce the sample count or the dimensionality before clustering.

	Returns:
		Tuple of (reduced data, kept row indices or None when all rows are kept)

	Raises:
		ApproximationNotAvailableError: For the reserved t-SNE and UMAP methods
	"""
	if method is ApproximationMethod.RANDOM_SAMPLING:
		sampled, indices = random_sample(x, sample_size, rng, log)
		return sampled, indices
	if method is ApproximationMethod.PCA:
		if x.n_rows < 2:
			return x, None
		target = n_components if n_components is not None else DEFAULT_VARIANCE_FRACTION
		if isinstance(target, int):
			target = min(target, x.n_rows - 1, x.n_cols)
		model = _fit(x, target)
		log.record(f"Data reduced to {model.n_components} dimensions using PCA.")
		return transform_pca(model, x), None
	raise ApproximationNotAvailableError(
		f"Approximation method '{method}' is reserved and not implemented"
	)
