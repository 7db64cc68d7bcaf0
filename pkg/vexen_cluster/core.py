"""vexen-cluster public API."""

from numpy.typing import ArrayLike

from vexen_cluster.application.dto.clustering_dto import FitPredictResult, ScoredMethod
from vexen_cluster.application.dto.config_dto import SpinexConfig
from vexen_cluster.application.dto.explain_dto import ExplainabilityReport
from vexen_cluster.application.service.clustering_service import ClusteringService
from vexen_cluster.domain.entity.cluster_labels import ClusterLabels
from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.repository.result_cache_port import IResultCachePort
from vexen_cluster.domain.repository.similarity_cache_port import ISimilarityCachePort
from vexen_cluster.domain.vo.similarity_method import SimilarityMethod
from vexen_cluster.infraestructure.output.cache.memory import (
	InMemoryResultCache,
	InMemorySimilarityCache,
)

__all__ = ["SpinexClustering", "SpinexConfig"]


class SpinexClustering:
	"""
	Similarity-based clustering with explainable decisions.

	Example:
		>>> from vexen_cluster.core import SpinexClustering, SpinexConfig
		>>>
		>>> model = SpinexClustering(SpinexConfig(n_clusters=3, threshold="90%"))
		>>> labels = model.fit_predict(data)
		>>> print(model.best_method_, labels.n_clusters)
		>>> for message in model.get_decision_log():
		...     print(message)
	"""

	def __init__(
		self,
		config: SpinexConfig | None = None,
		similarity_cache: ISimilarityCachePort | None = None,
		result_cache: IResultCachePort | None = None,
	):
		"""
		Initialize the clustering facade.

		Args:
			config: Engine configuration; defaults when omitted
			similarity_cache: Similarity cache; in-memory when omitted
			result_cache: Memo for PCA projections and metrics; in-memory when omitted
		"""
		self.config = config or SpinexConfig()
		self.similarity_cache = similarity_cache or InMemorySimilarityCache()
		self.result_cache = result_cache or InMemoryResultCache()
		self.decision_log = DecisionLog()
		self.explainability_results = ExplainabilityReport()
		self.best_method_: SimilarityMethod | None = None
		self.labels_: ClusterLabels | None = None
		self.candidates_: list[ScoredMethod] = []
		self._service = ClusteringService(
			config=self.config,
			similarity_cache=self.similarity_cache,
			pca_cache=self.result_cache,
			metrics_cache=self.result_cache,
			log=self.decision_log,
		)

	@classmethod
	def with_redis(
		cls, config: SpinexConfig | None = None, redis_url: str = "redis://localhost:6379/0"
	) -> "SpinexClustering":
		"""Build a facade whose similarity cache lives in Redis (needs the ``redis`` extra)"""
		from vexen_cluster.infraestructure.output.cache.redis import RedisSimilarityCache

		return cls(config, similarity_cache=RedisSimilarityCache(redis_url=redis_url))

	@property
	def service(self) -> ClusteringService:
		"""
		Get the clustering service.

		Returns:
			ClusteringService sharing this facade's caches and decision log
		"""
		return self._service

	def fit(self, data: ArrayLike | DataMatrix) -> FitPredictResult:
		"""Run the pipeline and store its outcome on the facade"""
		result = self._service.fit_predict(data)
		self.labels_ = result.labels
		self.best_method_ = result.best_method
		self.candidates_ = result.candidates
		self.explainability_results = result.explainability
		return result

	def fit_predict(self, data: ArrayLike | DataMatrix) -> ClusterLabels:
		"""
		Cluster the data.

		Args:
			data: 1-D (one feature) or 2-D observations

		Returns:
			Canonical labels, one per row

		Raises:
			InvalidDataError: For input with more than two dimensions
		"""
		return self.fit(data).labels

	def get_decision_log(self) -> list[str]:
		"""Messages of the decision log in append order"""
		return self.decision_log.messages()

	def get_explainability_results(self) -> ExplainabilityReport:
		"""Explainability report of the last fit"""
		return self.explainability_results
