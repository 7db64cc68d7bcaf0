"""Best-method selection use case."""

from dataclasses import dataclass

from vexen_cluster.application.dto.clustering_dto import BestClustering, ScoredMethod
from vexen_cluster.application.dto.config_dto import SpinexConfig
from vexen_cluster.domain.entity.cluster_labels import ClusterLabels
from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.service.scoring import composite_score

from .cluster_all_methods_usecase import ClusterAllMethodsUseCase
from .evaluate_usecase import EvaluateUseCase


@dataclass
class FindBestUseCase:
	"""Use case picking the similarity method with the highest composite score"""

	config: SpinexConfig
	log: DecisionLog
	cluster_all_methods: ClusterAllMethodsUseCase
	evaluate: EvaluateUseCase

	def __call__(self, x: DataMatrix, ground_truth: ClusterLabels | None = None) -> BestClustering:
		"""
		Execute every configured method and keep the best.

		A single configured method wins without evaluation. Otherwise ties
		go to the method listed first.
		"""
		results = self.cluster_all_methods(x)
		methods = self.config.methods
		if len(methods) == 1:
			only = results[methods[0]]
			return BestClustering(only.labels, only.method, [ScoredMethod(only)])

		tier = self.config.evaluation_tier
		candidates: list[ScoredMethod] = []
		for method in methods:
			result = results[method]
			metrics = self.evaluate(x, result.labels, method, tier, ground_truth)
			score = composite_score(metrics, tier)
			self.log.record(f"Composite score for {method}: {score}")
			candidates.append(ScoredMethod(result, metrics, score))

		best = candidates[0]
		for candidate in candidates[1:]:
			if candidate.score > best.score:
				best = candidate
		return BestClustering(best.result.labels, best.result.method, candidates)
