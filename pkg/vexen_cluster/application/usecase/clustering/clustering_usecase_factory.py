"""Factory for clustering use cases."""

from dataclasses import dataclass, field

from vexen_cluster.application.dto.config_dto import SpinexConfig
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.repository.result_cache_port import IResultCachePort
from vexen_cluster.domain.repository.similarity_cache_port import ISimilarityCachePort

from .build_report_usecase import BuildReportUseCase
from .cluster_all_methods_usecase import ClusterAllMethodsUseCase
from .cluster_from_similarity_usecase import ClusterFromSimilarityUseCase
from .cluster_with_method_usecase import ClusterWithMethodUseCase
from .evaluate_usecase import EvaluateUseCase
from .find_best_usecase import FindBestUseCase
from .fit_predict_usecase import FitPredictUseCase


@dataclass
class ClusteringUseCaseFactory:
	"""Factory for creating clustering use cases sharing caches and one decision log"""

	config: SpinexConfig
	similarity_cache: ISimilarityCachePort
	pca_cache: IResultCachePort
	metrics_cache: IResultCachePort
	log: DecisionLog

	cluster_from_similarity: ClusterFromSimilarityUseCase = field(init=False)
	cluster_with_method: ClusterWithMethodUseCase = field(init=False)
	cluster_all_methods: ClusterAllMethodsUseCase = field(init=False)
	evaluate: EvaluateUseCase = field(init=False)
	find_best: FindBestUseCase = field(init=False)
	build_report: BuildReportUseCase = field(init=False)
	fit_predict: FitPredictUseCase = field(init=False)

	def __post_init__(self):
		"""Initialize all use cases"""
		self.cluster_from_similarity = ClusterFromSimilarityUseCase(
			config=self.config, log=self.log
		)
		self.cluster_with_method = ClusterWithMethodUseCase(
			config=self.config,
			similarity_cache=self.similarity_cache,
			pca_cache=self.pca_cache,
			log=self.log,
			cluster_from_similarity=self.cluster_from_similarity,
		)
		self.cluster_all_methods = ClusterAllMethodsUseCase(
			config=self.config, log=self.log, cluster_with_method=self.cluster_with_method
		)
		self.evaluate = EvaluateUseCase(metrics_cache=self.metrics_cache, log=self.log)
		self.find_best = FindBestUseCase(
			config=self.config,
			log=self.log,
			cluster_all_methods=self.cluster_all_methods,
			evaluate=self.evaluate,
		)
		self.build_report = BuildReportUseCase(
			config=self.config, similarity_cache=self.similarity_cache, log=self.log
		)
		self.fit_predict = FitPredictUseCase(
			config=self.config,
			similarity_cache=self.similarity_cache,
			log=self.log,
			find_best=self.find_best,
			cluster_with_method=self.cluster_with_method,
			cluster_from_similarity=self.cluster_from_similarity,
			build_report=self.build_report,
		)
