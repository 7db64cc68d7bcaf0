"""Clustering service for orchestrating the SPINEX pipeline."""

from dataclasses import dataclass, field

from numpy.typing import ArrayLike

from vexen_cluster.application.dto.clustering_dto import (
	BestClustering,
	FitPredictResult,
	MethodResult,
)
from vexen_cluster.application.dto.config_dto import SpinexConfig
from vexen_cluster.application.dto.explain_dto import ExplainabilityReport
from vexen_cluster.application.usecase.clustering import ClusteringUseCaseFactory
from vexen_cluster.domain.entity.cluster_labels import ClusterLabels
from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.entity.metrics_record import MetricsRecord
from vexen_cluster.domain.entity.similarity_matrix import SimilarityMatrix
from vexen_cluster.domain.repository.result_cache_port import IResultCachePort
from vexen_cluster.domain.repository.similarity_cache_port import ISimilarityCachePort
from vexen_cluster.domain.vo.similarity_method import SimilarityMethod


@dataclass
class ClusteringService:
	"""Service for similarity-based clustering operations"""

	config: SpinexConfig
	similarity_cache: ISimilarityCachePort
	pca_cache: IResultCachePort
	metrics_cache: IResultCachePort
	log: DecisionLog
	usecases: ClusteringUseCaseFactory = field(init=False)

	def __post_init__(self):
		"""Initialize use case factory"""
		self.usecases = ClusteringUseCaseFactory(
			config=self.config,
			similarity_cache=self.similarity_cache,
			pca_cache=self.pca_cache,
			metrics_cache=self.metrics_cache,
			log=self.log,
		)

	def fit_predict(self, data: ArrayLike | DataMatrix) -> FitPredictResult:
		"""
		Cluster a dataset end to end.

		Example:
			>>> result = service.fit_predict(np.random.default_rng(0).normal(size=(50, 3)))
			>>> print(result.best_method, result.labels.n_clusters)
		"""
		return self.usecases.fit_predict(data)

	def cluster_with_method(self, x: DataMatrix, method: str | SimilarityMethod) -> MethodResult:
		"""Cluster with a single configured similarity method"""
		return self.usecases.cluster_with_method(x, method)

	def cluster_all_methods(self, x: DataMatrix) -> dict[SimilarityMethod, MethodResult]:
		"""Cluster with every configured similarity method"""
		return self.usecases.cluster_all_methods(x)

	def cluster_from_similarity(
		self, s: SimilarityMatrix, n: int, threshold: float | None = None
	) -> ClusterLabels:
		"""Turn a similarity matrix into labels"""
		return self.usecases.cluster_from_similarity(s, n, threshold)

	def find_best(self, x: DataMatrix, ground_truth: ClusterLabels | None = None) -> BestClustering:
		"""Pick the method with the highest composite score"""
		return self.usecases.find_best(x, ground_truth)

	def evaluate(
		self,
		x: DataMatrix,
		labels: ClusterLabels,
		method: str,
		tier: int | None = None,
		ground_truth: ClusterLabels | None = None,
	) -> MetricsRecord:
		"""Compute the validation metrics of a labelling; tier defaults to the configured one"""
		tier = self.config.evaluation_tier if tier is None else tier
		return self.usecases.evaluate(x, labels, method, tier, ground_truth)

	def explain(
		self, x: DataMatrix, observations: list[int] | None = None, all_methods: bool = False
	) -> ExplainabilityReport:
		"""Build the explainability report"""
		return self.usecases.build_report(x, observations, all_methods)
