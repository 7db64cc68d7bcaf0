"""Observation-level similarity matrices with content-hash caching."""

import logging
from collections.abc import Callable

import numpy as np
from numpy.typing import NDArray
from scipy.spatial.distance import cdist
from scipy.stats import rankdata

from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.entity.similarity_matrix import SimilarityMatrix
from vexen_cluster.domain.repository.similarity_cache_port import ISimilarityCachePort
from vexen_cluster.domain.service.hashing import fingerprint
from vexen_cluster.domain.vo.similarity_method import SimilarityMethod

logger = logging.getLogger(__name__)

DEFAULT_GAMMA = 1.0


def _sanitize(
	values: NDArray[np.float64], method: SimilarityMethod, log: DecisionLog | None
) -> NDArray[np.float64]:
	"""Symmetrise, replace non-finite entries and pin the diagonal to 1"""
	values = np.array(values, dtype=np.float64)
	bad = ~np.isfinite(values)
	if bad.any():
		values[bad] = 0.0
		message = (
			f"Replaced {int(bad.sum())} non-finite {method} similarity entries "
			"(zero-variance observations) with 0."
		)
		if log is not None:
			log.record(message)
		else:
			logger.debug(message)
	values = (values + values.T) / 2.0
	np.fill_diagonal(values, 1.0)
	return values


def _ones(n: int, method: SimilarityMethod) -> SimilarityMatrix:
	return SimilarityMatrix(np.ones((n, n)), method)


def pearson_similarity(x: DataMatrix, log: DecisionLog | None = None) -> SimilarityMatrix:
	"""
	Pearson correlation between rows.

	Single-feature data yields the all-ones matrix.
	"""
	if x.n_cols < 2:
		return _ones(x.n_rows, SimilarityMethod.CORRELATION)
	with np.errstate(divide="ignore", invalid="ignore"):
		values = np.corrcoef(x.values)
	values = np.atleast_2d(values)
	return SimilarityMatrix(
		_sanitize(values, SimilarityMethod.CORRELATION, log), SimilarityMethod.CORRELATION
	)


def spearman_similarity(x: DataMatrix, log: DecisionLog | None = None) -> SimilarityMatrix:
	"""
	Spearman rank correlation between rows.

	Each row is ranked on its own, ties get the average rank.
	"""
	if x.n_cols < 2:
		return _ones(x.n_rows, SimilarityMethod.SPEARMAN)
	ranks = rankdata(x.values, method="average", axis=1)
	with np.errstate(divide="ignore", invalid="ignore"):
		values = np.corrcoef(ranks)
	values = np.atleast_2d(values)
	return SimilarityMatrix(
		_sanitize(values, SimilarityMethod.SPEARMAN, log), SimilarityMethod.SPEARMAN
	)


def rbf_similarity(x: DataMatrix, gamma: float = DEFAULT_GAMMA) -> SimilarityMatrix:
	"""
	Gaussian kernel exp(-gamma * ||x_i - x_j||^2).

	Raises:
		ValueError: If gamma is not positive
	"""
	if gamma <= 0:
		raise ValueError(f"gamma must be positive, got {gamma}")
	squared = cdist(x.values, x.values, metric="sqeuclidean")
	values = np.exp(-gamma * squared)
	values = (values + values.T) / 2.0
	np.fill_diagonal(values, 1.0)
	return SimilarityMatrix(values, SimilarityMethod.KERNEL)


def cosine_similarity(x: DataMatrix, log: DecisionLog | None = None) -> SimilarityMatrix:
	"""
	Cosine of the angle between rows.

	A zero-norm row has similarity 0 to every other row and 1 to itself.
	"""
	norms = np.linalg.norm(x.values, axis=1)
	zero = norms == 0.0
	safe = np.where(zero, 1.0, norms)
	unit = x.values / safe[:, None]
	values = np.clip(unit @ unit.T, -1.0, 1.0)
	if zero.any():
		values[zero, :] = 0.0
		values[:, zero] = 0.0
		message = f"{int(zero.sum())} zero-norm observations get cosine similarity 0."
		if log is not None:
			log.record(message)
		else:
			logger.debug(message)
	return SimilarityMatrix(
		_sanitize(values, SimilarityMethod.COSINE, log), SimilarityMethod.COSINE
	)


Calculator = Callable[[DataMatrix, DecisionLog | None], SimilarityMatrix]

_CALCULATORS: dict[SimilarityMethod, Calculator] = {
	SimilarityMethod.CORRELATION: pearson_similarity,
	SimilarityMethod.SPEARMAN: spearman_similarity,
	SimilarityMethod.KERNEL: lambda x, _log: rbf_similarity(x),
	SimilarityMethod.COSINE: cosine_similarity,
}


def compute_similarity(
	x: DataMatrix, method: str | SimilarityMethod, log: DecisionLog | None = None
) -> SimilarityMatrix:
	"""
	Compute a similarity matrix without caching.

	Raises:
		InvalidMethodError: If the method is unknown
	"""
	return _CALCULATORS[SimilarityMethod.parse(method)](x, log)


def get_similarity(
	x: DataMatrix,
	method: str | SimilarityMethod,
	cache: ISimilarityCachePort,
	log: DecisionLog,
) -> SimilarityMatrix:
	"""
	Calculate or retrieve a cached similarity matrix.

	Args:
		x: Observations
		method: Similarity method
		cache: Cache keyed by (fingerprint, method)
		log: Decision log

	Returns:
		The n x n similarity matrix

	Raises:
		InvalidMethodError: If the method is unknown
	"""
	method = SimilarityMethod.parse(method)
	key = fingerprint(x)
	cached = cache.get(key, method)
	if cached is not None:
		log.record(f"Retrieved {method} similarity matrix from cache.")
		return cached
	matrix = compute_similarity(x, method, log)
	cache.put(key, method, matrix)
	log.record(f"Computed and cached {method} similarity matrix.")
	return matrix
