"""Pairwise-average merge test, iterative merging and dynamic threshold search."""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from vexen_cluster.domain.entity.cluster_labels import ClusterLabels, canonicalize_labels
from vexen_cluster.domain.entity.similarity_matrix import SimilarityMatrix

DEFAULT_THRESHOLD = 0.5
DEFAULT_DECAY_RATE = 0.9
DEFAULT_MAX_ITERATIONS = 10


def should_merge(c1: ArrayLike, c2: ArrayLike, s: SimilarityMatrix, t: float) -> bool:
	"""
	True iff the mean similarity over all cross pairs exceeds t (strictly).

	Args:
		c1: Observation indices of the first cluster
		c2: Observation indices of the second cluster
		s: Similarity matrix
		t: Threshold
	"""
	block = s.values[np.ix_(np.asarray(c1, dtype=np.intp), np.asarray(c2, dtype=np.intp))]
	return bool(block.sum() / block.size > t)


class _MergeState:
	"""
	Cluster-level similarity sums for the greedy merge loop.

	Clusters are identified by their smallest member, so ascending id order
	is the canonical label order. ``first[i]`` holds the smallest live
	partner j > i that clears the threshold, or n when there is none.
	"""

	def __init__(self, values: NDArray[np.float64], threshold: float):
		self.n = values.shape[0]
		self.threshold = threshold
		self.sums = np.array(values, dtype=np.float64, copy=True)
		self.sizes = np.ones(self.n)
		self.alive = np.ones(self.n, dtype=bool)
		self.owner = np.arange(self.n)
		eligible = np.triu(self.sums > threshold, k=1)
		self.first = np.where(eligible.any(axis=1), eligible.argmax(axis=1), self.n)

	def _first_eligible(self, i: int) -> int:
		partners = np.flatnonzero(self.alive[i + 1 :]) + i + 1
		if partners.size == 0:
			return self.n
		means = self.sums[i, partners] / (self.sizes[i] * self.sizes[partners])
		hits = np.flatnonzero(means > self.threshold)
		return int(partners[hits[0]]) if hits.size else self.n

	def next_pair(self) -> tuple[int, int] | None:
		pending = np.flatnonzero(self.first < self.n)
		if pending.size == 0:
			return None
		a = int(pending[0])
		return a, int(self.first[a])

	def merge(self, a: int, b: int) -> None:
		self.sums[a, :] += self.sums[b, :]
		self.sums[:, a] += self.sums[:, b]
		self.sizes[a] += self.sizes[b]
		self.alive[b] = False
		self.first[b] = self.n
		self.owner[self.owner == b] = a
		self.first[a] = self._first_eligible(a)
		# every pair before (a, b) was ineligible; only pairs ending in a changed
		before = np.flatnonzero(self.alive[:a])
		if before.size:
			means = self.sums[before, a] / (self.sizes[before] * self.sizes[a])
			self.first[before] = np.where(means > self.threshold, a, self.n)
		for i in np.flatnonzero(self.first == b):
			self.first[i] = self._first_eligible(int(i))


def merge_clusters(s: SimilarityMatrix, t: float = DEFAULT_THRESHOLD) -> ClusterLabels:
	"""
	Greedy agglomeration from singletons.

	Cluster pairs are scanned in ascending (label_i, label_j) order of the
	current canonical labels; the first pair passing should_merge is merged
	and the scan restarts. Stops when a full scan finds no merge.

	Args:
		s: Similarity matrix
		t: Merge threshold

	Returns:
		Canonical labels
	"""
	if s.size <= 1:
		return ClusterLabels(np.zeros(max(s.size, 1), dtype=np.int64))
	state = _MergeState(s.values, float(t))
	while (pair := state.next_pair()) is not None:
		state.merge(*pair)
	return canonicalize_labels(state.owner)


def dynamic_threshold(
	s: SimilarityMatrix,
	initial: float = DEFAULT_THRESHOLD,
	decay_rate: float = DEFAULT_DECAY_RATE,
	max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> float:
	"""
	Decay the threshold until the cluster count stops changing.

	Returns the first threshold whose cluster count equals the previous
	iteration's, or the last threshold tried after max_iterations.
	"""
	if not 0 < decay_rate < 1:
		raise ValueError(f"decay_rate must lie in (0, 1), got {decay_rate}")
	if max_iterations < 1:
		raise ValueError(f"max_iterations must be positive, got {max_iterations}")
	threshold = float(initial)
	previous: int | None = None
	for iteration in range(max_iterations):
		count = merge_clusters(s, threshold).n_clusters
		if previous is not None and count == previous:
			return threshold
		previous = count
		if iteration < max_iterations - 1:
			threshold *= decay_rate
	return threshold
