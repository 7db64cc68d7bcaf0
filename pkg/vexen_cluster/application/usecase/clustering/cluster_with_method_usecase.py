"""Single-method clustering use case."""

from dataclasses import dataclass

from vexen_cluster.application.dto.clustering_dto import MethodResult
from vexen_cluster.application.dto.config_dto import SpinexConfig
from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.repository.result_cache_port import IResultCachePort
from vexen_cluster.domain.repository.similarity_cache_port import ISimilarityCachePort
from vexen_cluster.domain.service.preprocessing import apply_pca
from vexen_cluster.domain.service.similarity import get_similarity
from vexen_cluster.domain.service.threshold import set_threshold
from vexen_cluster.domain.vo.similarity_method import SimilarityMethod
from vexen_cluster.shared.exceptions import InvalidMethodError

from .cluster_from_similarity_usecase import ClusterFromSimilarityUseCase


@dataclass
class ClusterWithMethodUseCase:
	"""Use case for clustering with one similarity method"""

	config: SpinexConfig
	similarity_cache: ISimilarityCachePort
	pca_cache: IResultCachePort
	log: DecisionLog
	cluster_from_similarity: ClusterFromSimilarityUseCase

	def prepare(self, x: DataMatrix) -> DataMatrix:
		"""Data the similarity is computed on: PCA-projected when use_pca is set"""
		if self.config.use_pca:
			return apply_pca(x, self.config.n_components, self.pca_cache, self.log)
		return x

	def __call__(self, x: DataMatrix, method: str | SimilarityMethod) -> MethodResult:
		"""
		Execute optional PCA, similarity, threshold selection and clustering.

		Raises:
			InvalidMethodError: If the method is unknown or not configured
		"""
		valid = ", ".join(m.value for m in self.config.methods)
		try:
			parsed = SimilarityMethod.parse(method)
		except InvalidMethodError:
			raise InvalidMethodError(
				f"Invalid similarity method: {method}. Choose from {valid}"
			) from None
		if parsed not in self.config.methods:
			raise InvalidMethodError(
				f"Similarity method {parsed} is not configured. Choose from {valid}"
			)

		data = self.prepare(x)
		self.log.record(f"Data shape for {parsed}: {data.shape}")
		s = get_similarity(data, parsed, self.similarity_cache, self.log)
		self.log.record(f"Similarity matrix shape for {parsed}: {s.values.shape}")
		threshold = set_threshold(s, self.config.threshold_spec, self.log)
		labels = self.cluster_from_similarity(s, data.n_rows, threshold)
		return MethodResult(method=parsed, labels=labels)
