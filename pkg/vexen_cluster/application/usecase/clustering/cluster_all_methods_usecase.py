"""All-methods clustering use case."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from vexen_cluster.application.dto.clustering_dto import MethodResult
from vexen_cluster.application.dto.config_dto import SpinexConfig
from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.vo.similarity_method import SimilarityMethod

from .cluster_with_method_usecase import ClusterWithMethodUseCase


@dataclass
class ClusterAllMethodsUseCase:
	"""Use case for clustering with every configured similarity method"""

	config: SpinexConfig
	log: DecisionLog
	cluster_with_method: ClusterWithMethodUseCase

	def use_threads(self, n_rows: int, n_tasks: int) -> bool:
		return self.config.use_parallel and n_rows >= self.config.parallel_threshold and n_tasks > 1

	def __call__(self, x: DataMatrix) -> dict[SimilarityMethod, MethodResult]:
		"""
		Execute cluster_with_method for each configured method.

		Returns:
			Results keyed by method, in configured order
		"""
		methods = self.config.methods
		if self.use_threads(x.n_rows, len(methods)):
			self.log.record(f"Clustering {len(methods)} similarity methods in parallel.")
			with ThreadPoolExecutor(max_workers=self.config.max_workers) as pool:
				results = list(pool.map(lambda m: self.cluster_with_method(x, m), methods))
		else:
			results = [self.cluster_with_method(x, m) for m in methods]
		return dict(zip(methods, results, strict=True))
