"""Complete-linkage agglomeration and the similarity-to-distance cut."""

import numpy as np
from numpy.typing import NDArray

from vexen_cluster.domain.entity.cluster_labels import ClusterLabels, canonicalize_labels
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.entity.similarity_matrix import SimilarityMatrix


class _LinkageState:
	"""
	Complete-linkage bookkeeping over a fixed index space.

	Cluster ids are their smallest member. For every live row i,
	``row_min[i]``/``row_arg[i]`` hold the smallest distance to a live j > i
	and the smallest such j.
	"""

	def __init__(self, distances: NDArray[np.float64]):
		self.n = distances.shape[0]
		self.d = np.array(distances, dtype=np.float64, copy=True)
		self.alive = np.ones(self.n, dtype=bool)
		self.owner = np.arange(self.n)
		self.row_min = np.full(self.n, np.inf)
		self.row_arg = np.full(self.n, self.n)
		for i in range(self.n):
			self._refresh(i)

	def _refresh(self, i: int) -> None:
		partners = np.flatnonzero(self.alive[i + 1 :]) + i + 1
		if not self.alive[i] or partners.size == 0:
			self.row_min[i] = np.inf
			self.row_arg[i] = self.n
			return
		row = self.d[i, partners]
		best = int(np.argmin(row))
		self.row_min[i] = row[best]
		self.row_arg[i] = partners[best]

	def closest_pair(self) -> tuple[int, int]:
		a = int(np.argmin(self.row_min))
		return a, int(self.row_arg[a])

	def merge(self, a: int, b: int) -> None:
		merged = np.maximum(self.d[a, :], self.d[b, :])
		self.d[a, :] = merged
		self.d[:, a] = merged
		self.alive[b] = False
		self.owner[self.owner == b] = a
		self._refresh(a)
		self._refresh(b)
		# distances to a only grew, so rows pointing elsewhere keep their minimum
		for i in np.flatnonzero((self.row_arg == a) | (self.row_arg == b)):
			if i != a:
				self._refresh(int(i))


def complete_linkage(distances: NDArray[np.float64], k: int) -> NDArray[np.int64]:
	"""
	Agglomerate under complete linkage until k clusters remain.

	The pair with the smallest maximum pairwise distance merges first; ties
	go to the lexicographically smallest (i, j).

	Args:
		distances: Symmetric n x n distance matrix
		k: Number of clusters to keep, at least 1

	Returns:
		Raw labels (cluster ids are the smallest member index)
	"""
	if k < 1:
		raise ValueError(f"k must be positive, got {k}")
	n = distances.shape[0]
	state = _LinkageState(distances)
	for _ in range(max(n - k, 0)):
		state.merge(*state.closest_pair())
	return state.owner.astype(np.int64)


def similarity_to_distance(s: SimilarityMatrix) -> NDArray[np.float64]:
	"""1 - clip(S, -1, 1), symmetrised, clamped at 0, with a zero diagonal"""
	distances = 1.0 - np.clip(s.values, -1.0, 1.0)
	np.fill_diagonal(distances, 0.0)
	distances = (distances + distances.T) / 2.0
	return np.maximum(distances, 0.0)


def linkage_cut(s: SimilarityMatrix, k: int, log: DecisionLog | None = None) -> ClusterLabels:
	"""
	Cut a complete-linkage tree over 1 - S into exactly k clusters.

	A degenerate distance matrix (all zeros) yields a single cluster.
	"""
	distances = similarity_to_distance(s)
	if not np.any(distances):
		if log is not None:
			log.record("Distance matrix is degenerate; assigning all points to one cluster.")
		return ClusterLabels(np.zeros(s.size, dtype=np.int64))
	if log is not None:
		log.record(f"Hierarchical clustering with complete linkage into {k} clusters.")
	return canonicalize_labels(complete_linkage(distances, k))
