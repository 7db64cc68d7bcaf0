"""Cluster-from-similarity dispatch use case."""

from dataclasses import dataclass

import numpy as np

from vexen_cluster.application.dto.config_dto import SpinexConfig
from vexen_cluster.domain.entity.cluster_labels import ClusterLabels
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.entity.similarity_matrix import SimilarityMatrix
from vexen_cluster.domain.service.linkage import linkage_cut
from vexen_cluster.domain.service.merging import DEFAULT_THRESHOLD, merge_clusters
from vexen_cluster.domain.service.multi_level import multi_level_clustering


@dataclass
class ClusterFromSimilarityUseCase:
	"""Use case turning a similarity matrix into labels; never raises"""

	config: SpinexConfig
	log: DecisionLog

	def __call__(
		self, s: SimilarityMatrix, n: int, threshold: float | None = None
	) -> ClusterLabels:
		"""
		Dispatch in order: scalar matrix, multi-level, complete-linkage cut, merging.

		Args:
			s: Similarity matrix
			n: Number of observations
			threshold: Merge threshold; 0.5 when None

		Returns:
			Canonical labels of the n observations
		"""
		if s.is_scalar():
			self.log.record("Similarity matrix is scalar; all points in one cluster.")
			return ClusterLabels(np.zeros(n, dtype=np.int64))

		fallback = float(threshold) if threshold is not None else DEFAULT_THRESHOLD

		if self.config.use_multi_level:
			params = self.config.multi_level
			self.log.record("Using multi-level clustering")
			try:
				return multi_level_clustering(
					s, params.initial_threshold, params.levels, log=self.log
				)
			except Exception as e:
				self.log.record(
					f"Multi-level clustering failed ({e}); merging with threshold {fallback}."
				)
				return merge_clusters(s, fallback)

		k = self.config.n_clusters
		if k is not None and k < n and s.has_distinct_values():
			try:
				return linkage_cut(s, k, self.log)
			except Exception as e:
				self.log.record(f"Hierarchical clustering failed ({e}); falling back to merging.")

		self.log.record(f"Merging clusters with threshold {fallback}")
		return merge_clusters(s, fallback)
