"""Reference algorithms as benchmark algorithms."""

from vexen_cluster.application.dto.bench_dto import BaselineConfig
from vexen_cluster.domain.entity.cluster_labels import ClusterLabels
from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.provider.clustering_algorithm_port import IClusteringAlgorithmPort
from vexen_cluster.domain.service.baselines import agglomerative, dbscan, kmeans


def _cluster_count(
	configured: int, x: DataMatrix, truth: ClusterLabels | None, use_truth: bool
) -> int:
	k = truth.n_clusters if use_truth and truth is not None else configured
	return min(k, x.n_rows)


class KMeansProvider(IClusteringAlgorithmPort):
	"""k-means++ with Lloyd iterations, best of n_init restarts"""

	def __init__(self, config: BaselineConfig | None = None):
		self.config = config or BaselineConfig()

	@property
	def name(self) -> str:
		return "kmeans"

	def fit_predict(
		self, x: DataMatrix, seed: int, truth: ClusterLabels | None = None
	) -> ClusterLabels:
		k = _cluster_count(self.config.kmeans_k, x, truth, self.config.k_from_truth)
		result = kmeans(
			x, k, seed=seed, max_iter=self.config.kmeans_max_iter, n_init=self.config.kmeans_n_init
		)
		return result.labels


class DbscanProvider(IClusteringAlgorithmPort):
	"""Density clustering; noise points become singleton clusters"""

	def __init__(self, config: BaselineConfig | None = None):
		self.config = config or BaselineConfig()

	@property
	def name(self) -> str:
		return "dbscan"

	def fit_predict(
		self, x: DataMatrix, seed: int, truth: ClusterLabels | None = None
	) -> ClusterLabels:
		return dbscan(x, self.config.dbscan_eps, self.config.dbscan_min_samples)


class AgglomerativeProvider(IClusteringAlgorithmPort):
	"""Complete linkage on Euclidean distances"""

	def __init__(self, config: BaselineConfig | None = None):
		self.config = config or BaselineConfig()

	@property
	def name(self) -> str:
		return "agglomerative"

	def fit_predict(
		self, x: DataMatrix, seed: int, truth: ClusterLabels | None = None
	) -> ClusterLabels:
		k = _cluster_count(self.config.agglomerative_k, x, truth, self.config.k_from_truth)
		return agglomerative(x, k)
