"""Hierarchical refinement: merge, condense, adjust the threshold, repeat."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from vexen_cluster.domain.entity.cluster_labels import ClusterLabels, canonicalize_labels
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.entity.similarity_matrix import SimilarityMatrix
from vexen_cluster.domain.service.merging import merge_clusters

VARIANCE_DECAY = 0.9
CHANGE_GAIN = 0.2


@dataclass(frozen=True)
class LevelTrace:
	"""Outcome of one level"""

	level: int
	threshold: float
	n_clusters: int
	condensed: NDArray[np.float64] | None


def condense_similarity(s: SimilarityMatrix, labels: ClusterLabels) -> SimilarityMatrix:
	"""
	Cluster-level similarity: entry (a, b) is the mean of S[i, j] over i in a, j in b.

	Diagonal entries average the full within-cluster block, self-pairs included.
	"""
	k = labels.n_clusters
	membership = np.zeros((labels.assignments.size, k))
	membership[np.arange(labels.assignments.size), labels.assignments] = 1.0
	sums = membership.T @ s.values @ membership
	sizes = membership.sum(axis=0)
	return SimilarityMatrix(sums / np.outer(sizes, sizes), s.method)


def adjust_threshold(
	threshold: float,
	variance: float,
	previous_variance: float,
	previous_clusters: int,
	n_clusters: int,
) -> float:
	"""Lower t when the condensed variance dropped, raise it by the cluster-change rate"""
	if variance < previous_variance:
		threshold *= VARIANCE_DECAY
	rate = abs(previous_clusters - n_clusters) / max(previous_clusters, 1)
	return min(1.0, threshold * (1.0 + CHANGE_GAIN * min(rate, 1.0)))


def multi_level_clustering(
	s: SimilarityMatrix,
	initial_threshold: float = 0.5,
	levels: int = 3,
	log: DecisionLog | None = None,
	history: list[LevelTrace] | None = None,
) -> ClusterLabels:
	"""
	Repeatedly merge on a condensed similarity matrix.

	Every level merges the current matrix, composes the result onto the
	original observations and condenses S over the new clusters. It stops
	early when the cluster count does not change or everything merged.

	Args:
		s: Observation similarity matrix
		initial_threshold: Threshold of the first level
		levels: Maximum number of levels
		log: Optional decision log
		history: Optional list that receives one LevelTrace per level

	Returns:
		Canonical labels over the original observations
	"""
	if levels < 1:
		raise ValueError(f"levels must be >= 1, got {levels}")
	labels = np.arange(s.size)
	current = s
	threshold = float(initial_threshold)
	previous_clusters = s.size
	previous_variance = float(np.var(s.values))
	for level in range(1, levels + 1):
		sub = merge_clusters(current, threshold)
		labels = sub.assignments[labels]
		n_clusters = sub.n_clusters
		if log is not None:
			log.record(f"Level {level}: threshold {threshold}, {n_clusters} clusters.")
		if n_clusters == previous_clusters:
			if history is not None:
				history.append(LevelTrace(level, threshold, n_clusters, None))
			break
		condensed = condense_similarity(s, canonicalize_labels(labels))
		if history is not None:
			history.append(LevelTrace(level, threshold, n_clusters, condensed.values))
		if condensed.size == 1:
			break
		variance = float(np.var(condensed.values))
		threshold = adjust_threshold(
			threshold, variance, previous_variance, previous_clusters, n_clusters
		)
		previous_variance = variance
		previous_clusters = n_clusters
		current = condensed
	return canonicalize_labels(labels)
