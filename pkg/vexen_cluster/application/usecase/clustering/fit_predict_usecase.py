"""Full clustering pipeline use case."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.spatial.distance import cdist

from vexen_cluster.application.dto.clustering_dto import FitPredictResult
from vexen_cluster.application.dto.config_dto import SpinexConfig
from vexen_cluster.application.dto.explain_dto import ExplainabilityReport
from vexen_cluster.domain.entity.cluster_labels import ClusterLabels, canonicalize_labels
from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.repository.similarity_cache_port import ISimilarityCachePort
from vexen_cluster.domain.service.preprocessing import apply_approximation, enforce_max_features
from vexen_cluster.domain.service.similarity import get_similarity
from vexen_cluster.shared.exceptions import InvalidDataError

from .build_report_usecase import BuildReportUseCase
from .cluster_from_similarity_usecase import ClusterFromSimilarityUseCase
from .cluster_with_method_usecase import ClusterWithMethodUseCase
from .find_best_usecase import FindBestUseCase


def assign_to_nearest(
	x: DataMatrix, kept: NDArray[np.intp], sample_labels: ClusterLabels
) -> ClusterLabels:
	"""Give every row the label of its nearest (Euclidean) kept row"""
	nearest = cdist(x.values, x.values[kept]).argmin(axis=1)
	labels = sample_labels.assignments[nearest]
	# kept rows keep their own label even when duplicated
	labels[kept] = sample_labels.assignments
	return canonicalize_labels(labels)


@dataclass
class FitPredictUseCase:
	"""Use case orchestrating preprocessing, method selection and explainability"""

	config: SpinexConfig
	similarity_cache: ISimilarityCachePort
	log: DecisionLog
	find_best: FindBestUseCase
	cluster_with_method: ClusterWithMethodUseCase
	cluster_from_similarity: ClusterFromSimilarityUseCase
	build_report: BuildReportUseCase

	def __call__(self, data: ArrayLike | DataMatrix) -> FitPredictResult:
		"""
		Execute the pipeline.

		Args:
			data: 1-D (one feature) or 2-D observations

		Returns:
			FitPredictResult with canonical labels for every input row

		Raises:
			InvalidDataError: For input with more than two dimensions
		"""
		x = data if isinstance(data, DataMatrix) else DataMatrix.from_array(data)
		truth = self.config.truth
		if truth is not None and len(truth) != x.n_rows:
			raise InvalidDataError(
				f"ground_truth has {len(truth)} labels for {x.n_rows} observations"
			)
		x = enforce_max_features(x, self.config.max_features, self.log)

		work, kept = x, None
		if self.config.use_approximation:
			rng = np.random.default_rng(self.config.rng_seed)
			work, kept = apply_approximation(
				x,
				self.config.approximation_method,
				self.config.sample_size,
				self.config.n_components,
				rng,
				self.log,
			)
		if truth is not None and kept is not None:
			truth = canonicalize_labels(truth.assignments[kept])

		best = self.find_best(work, truth)
		labels = best.labels
		if self.config.use_multi_level:
			prepared = self.cluster_with_method.prepare(work)
			s = get_similarity(prepared, best.method, self.similarity_cache, self.log)
			labels = self.cluster_from_similarity(s, prepared.n_rows, None)
		self.log.record(f"Best clustering method: {best.method}")

		if kept is not None:
			labels = assign_to_nearest(x, kept, labels)
			self.log.record(
				f"Assigned {x.n_rows - kept.size} unsampled observations to their nearest sample."
			)

		report = ExplainabilityReport()
		if self.config.explainability_enabled:
			report = self.build_report(x)
		return FitPredictResult(labels, best.method, best.candidates, report)
