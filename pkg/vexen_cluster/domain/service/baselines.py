"""Reference clustering algorithms: k-means, DBSCAN and complete-linkage agglomeration."""

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components
from scipy.spatial.distance import cdist

from vexen_cluster.domain.entity.cluster_labels import ClusterLabels, canonicalize_labels
from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.service.linkage import complete_linkage
from vexen_cluster.shared.exceptions import InvalidDataError

DEFAULT_MAX_ITER = 300
DEFAULT_N_INIT = 10
DEFAULT_MIN_SAMPLES = 5


@dataclass(frozen=True)
class KMeansResult:
	"""
	Attributes:
		labels: Canonical labels of the best restart
		inertia: Within-cluster sum of squares of the best restart
		history: Inertia after every assignment step of the best restart
	"""

	labels: ClusterLabels
	inertia: float
	history: tuple[float, ...] = field(default_factory=tuple)


def _kmeans_plus_plus(
	values: NDArray[np.float64], k: int, rng: np.random.Generator
) -> NDArray[np.float64]:
	n = values.shape[0]
	chosen = [int(rng.integers(n))]
	closest = cdist(values, values[chosen], metric="sqeuclidean").ravel()
	for _ in range(1, k):
		total = closest.sum()
		if total > 0:
			index = int(rng.choice(n, p=closest / total))
		else:
			index = int(rng.integers(n))
		chosen.append(index)
		closest = np.minimum(
			closest, cdist(values, values[[index]], metric="sqeuclidean").ravel()
		)
	return values[chosen].copy()


def _lloyd(
	values: NDArray[np.float64], centers: NDArray[np.float64], max_iter: int
) -> tuple[NDArray[np.int64], float, list[float]]:
	k = centers.shape[0]
	history: list[float] = []
	assignments: NDArray[np.int64] | None = None
	inertia = np.inf
	for _ in range(max_iter):
		distances = cdist(values, centers, metric="sqeuclidean")
		updated = distances.argmin(axis=1)
		inertia = float(distances[np.arange(values.shape[0]), updated].sum())
		history.append(inertia)
		if assignments is not None and np.array_equal(updated, assignments):
			break
		assignments = updated
		point_cost = distances[np.arange(values.shape[0]), assignments]
		for cluster in range(k):
			members = assignments == cluster
			if members.any():
				centers[cluster] = values[members].mean(axis=0)
			else:
				# empty cluster takes the point farthest from its center
				farthest = int(point_cost.argmax())
				centers[cluster] = values[farthest]
				point_cost[farthest] = 0.0
	assert assignments is not None
	return assignments, inertia, history


def kmeans(
	x: DataMatrix,
	k: int,
	seed: int = 0,
	max_iter: int = DEFAULT_MAX_ITER,
	n_init: int = DEFAULT_N_INIT,
) -> KMeansResult:
	"""
	Lloyd's algorithm with k-means++ seeding; the restart with the lowest inertia wins.

	Raises:
		InvalidDataError: If k is not in [1, n]
	"""
	if not 1 <= k <= x.n_rows:
		raise InvalidDataError(f"k must lie in [1, {x.n_rows}], got {k}")
	rng = np.random.default_rng(seed)
	best: KMeansResult | None = None
	for _ in range(max(n_init, 1)):
		centers = _kmeans_plus_plus(x.values, k, rng)
		assignments, inertia, history = _lloyd(x.values, centers, max_iter)
		if best is None or inertia < best.inertia:
			best = KMeansResult(canonicalize_labels(assignments), inertia, tuple(history))
	assert best is not None
	return best


def dbscan(x: DataMatrix, eps: float, min_samples: int = DEFAULT_MIN_SAMPLES) -> ClusterLabels:
	"""
	Density-based clustering.

	Core points (at least min_samples points, themselves included, within
	eps) connected through eps-neighbourhoods form clusters. A border point
	joins the cluster of its nearest core point. Every noise point becomes
	its own singleton cluster.
	"""
	if eps <= 0:
		raise InvalidDataError(f"eps must be positive, got {eps}")
	if min_samples < 1:
		raise InvalidDataError(f"min_samples must be >= 1, got {min_samples}")
	distances = cdist(x.values, x.values)
	within = distances <= eps
	core = within.sum(axis=1) >= min_samples
	n = x.n_rows
	raw = np.full(n, -1, dtype=np.int64)
	core_index = np.flatnonzero(core)
	n_core_clusters = 0
	if core_index.size:
		graph = csr_matrix(within[np.ix_(core_index, core_index)])
		n_core_clusters, components = connected_components(graph, directed=False)
		raw[core_index] = components
		border = np.flatnonzero(~core & within[:, core].any(axis=1))
		if border.size:
			nearest = core_index[distances[np.ix_(border, core_index)].argmin(axis=1)]
			raw[border] = raw[nearest]
	noise = np.flatnonzero(raw < 0)
	raw[noise] = n_core_clusters + np.arange(noise.size)
	return canonicalize_labels(raw)


def agglomerative(x: DataMatrix, k: int) -> ClusterLabels:
	"""Complete-linkage agglomeration on Euclidean distances, cut at k clusters"""
	if not 1 <= k <= x.n_rows:
		raise InvalidDataError(f"k must lie in [1, {x.n_rows}], got {k}")
	return canonicalize_labels(complete_linkage(cdist(x.values, x.values), k))
