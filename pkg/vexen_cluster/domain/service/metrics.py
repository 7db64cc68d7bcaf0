"""Internal and external cluster validation metrics (Euclidean, natural log)."""

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.spatial.distance import pdist
from sklearn.metrics import (
	calinski_harabasz_score,
	davies_bouldin_score,
	homogeneity_completeness_v_measure,
	silhouette_score,
)

from vexen_cluster.domain.entity.cluster_labels import ClusterLabels, canonicalize_labels
from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.shared.exceptions import InvalidDataError, UndefinedMetricError


def _as_labels(labels: ClusterLabels | ArrayLike) -> NDArray[np.int64]:
	if isinstance(labels, ClusterLabels):
		return canonicalize_labels(labels.assignments).assignments
	return canonicalize_labels(labels).assignments


def _checked(x: DataMatrix, labels: ClusterLabels | ArrayLike) -> tuple[NDArray[np.int64], int]:
	assignments = _as_labels(labels)
	if assignments.size != x.n_rows:
		raise InvalidDataError(
			f"Got {assignments.size} labels for {x.n_rows} observations"
		)
	k = int(assignments.max()) + 1
	if not 1 < k < x.n_rows:
		raise UndefinedMetricError(
			f"Internal metrics need 1 < n_clusters < n, got {k} clusters for {x.n_rows} points"
		)
	return assignments, k


def _centroids(x: DataMatrix, assignments: NDArray[np.int64], k: int) -> NDArray[np.float64]:
	sums = np.zeros((k, x.n_cols))
	np.add.at(sums, assignments, x.values)
	return sums / np.bincount(assignments, minlength=k)[:, None]


def silhouette(x: DataMatrix, labels: ClusterLabels | ArrayLike) -> float:
	"""
	Mean silhouette coefficient.

	Singleton clusters contribute 0.

	Raises:
		UndefinedMetricError: Unless 1 < n_clusters < n
	"""
	assignments, _ = _checked(x, labels)
	return float(silhouette_score(x.values, assignments, metric="euclidean"))


def calinski_harabasz(x: DataMatrix, labels: ClusterLabels | ArrayLike) -> float:
	"""
	Variance ratio criterion.

	Raises:
		UndefinedMetricError: Unless 1 < n_clusters < n, or when the within
			scatter is zero
	"""
	assignments, k = _checked(x, labels)
	centroids = _centroids(x, assignments, k)
	# sklearn reports 1.0 here instead of failing
	if not np.any(x.values != centroids[assignments]):
		raise UndefinedMetricError("Within-cluster scatter is zero")
	return float(calinski_harabasz_score(x.values, assignments))


def davies_bouldin(x: DataMatrix, labels: ClusterLabels | ArrayLike) -> float:
	"""
	Mean over clusters of the worst (s_i + s_j) / d(c_i, c_j) ratio.

	Raises:
		UndefinedMetricError: Unless 1 < n_clusters < n, or when two
			centroids coincide
	"""
	assignments, k = _checked(x, labels)
	# sklearn skips coincident pairs silently
	if np.any(pdist(_centroids(x, assignments, k)) == 0.0):
		raise UndefinedMetricError("Two cluster centroids coincide")
	return float(davies_bouldin_score(x.values, assignments))


def _external(
	truth: ClusterLabels | ArrayLike, pred: ClusterLabels | ArrayLike
) -> tuple[float, float, float]:
	"""(homogeneity, completeness, v_measure) with truth as the classes"""
	classes = _as_labels(truth)
	clusters = _as_labels(pred)
	if classes.size != clusters.size:
		raise InvalidDataError(
			f"Label sequences differ in length: {classes.size} vs {clusters.size}"
		)
	h, c, v = homogeneity_completeness_v_measure(classes, clusters)
	return float(h), float(c), float(v)


def homogeneity(truth: ClusterLabels | ArrayLike, pred: ClusterLabels | ArrayLike) -> float:
	"""1 - H(C|K)/H(C); 1 when the classes carry no entropy"""
	return _external(truth, pred)[0]


def completeness(truth: ClusterLabels | ArrayLike, pred: ClusterLabels | ArrayLike) -> float:
	"""1 - H(K|C)/H(K); 1 when the clusters carry no entropy"""
	return _external(truth, pred)[1]


def v_measure(truth: ClusterLabels | ArrayLike, pred: ClusterLabels | ArrayLike) -> float:
	"""Harmonic mean of homogeneity and completeness"""
	return _external(truth, pred)[2]
