"""Clustering algorithm port interface."""

from abc import ABC, abstractmethod

from vexen_cluster.domain.entity.cluster_labels import ClusterLabels
from vexen_cluster.domain.entity.data_matrix import DataMatrix


class IClusteringAlgorithmPort(ABC):
	"""Interface for algorithms the benchmark harness can run"""

	@property
	@abstractmethod
	def name(self) -> str:
		"""Name used in reports"""
		pass

	@abstractmethod
	def fit_predict(
		self, x: DataMatrix, seed: int, truth: ClusterLabels | None = None
	) -> ClusterLabels:
		"""
		Cluster a data matrix.

		Args:
			x: Observations
			seed: Seed for every stochastic step
			truth: Ground truth, only passed to algorithms that evaluate with it

		Returns:
			Canonical cluster labels, one per row of x
		"""
		pass
