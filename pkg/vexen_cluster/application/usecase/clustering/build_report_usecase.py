"""Explainability report use case."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from vexen_cluster.application.dto.config_dto import SpinexConfig
from vexen_cluster.application.dto.explain_dto import (
	ExplainabilityReport,
	NeighborAnalysis,
	ObservationReport,
	SimilarityAnalysis,
)
from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.entity.similarity_matrix import SimilarityMatrix
from vexen_cluster.domain.repository.similarity_cache_port import ISimilarityCachePort
from vexen_cluster.domain.service.explainability import (
	nearest_neighbors,
	similarity_contribution,
)
from vexen_cluster.domain.service.similarity import get_similarity
from vexen_cluster.domain.vo.similarity_method import SimilarityMethod


@dataclass
class BuildReportUseCase:
	"""Use case assembling per-observation explainability entries"""

	config: SpinexConfig
	similarity_cache: ISimilarityCachePort
	log: DecisionLog

	def __call__(
		self,
		x: DataMatrix,
		observations: list[int] | None = None,
		all_methods: bool = False,
	) -> ExplainabilityReport:
		"""
		Execute the analyses enabled in the configuration.

		Args:
			x: Observations
			observations: Indices to report on; every row when None
			all_methods: Also rank neighbours under every configured method

		Returns:
			Report keyed by observation index; empty when both analyses are off
		"""
		if not self.config.explainability_enabled:
			return ExplainabilityReport()

		indices = list(range(x.n_rows)) if observations is None else list(observations)
		pearson = None
		if self.config.enable_similarity_analysis:
			pearson = get_similarity(
				x, SimilarityMethod.CORRELATION, self.similarity_cache, self.log
			)

		neighbor_matrices: dict[SimilarityMethod, SimilarityMatrix] = {}
		k = min(self.config.n_neighbors, x.n_rows - 1)
		if self.config.enable_neighbor_analysis and k >= 1:
			methods = self.config.methods if all_methods else self.config.methods[:1]
			for method in methods:
				neighbor_matrices[method] = get_similarity(
					x, method, self.similarity_cache, self.log
				)
		primary = self.config.methods[0]

		def analyse(i: int) -> ObservationReport:
			entry = ObservationReport()
			if pearson is not None:
				similarities, contributions = similarity_contribution(x, i, pearson)
				entry.similarity_analysis = SimilarityAnalysis(similarities, contributions)
			for method, s in neighbor_matrices.items():
				neighbors, differences = nearest_neighbors(x, i, s, k)
				analysis = NeighborAnalysis(method.value, neighbors, differences)
				if method == primary:
					entry.neighbor_analysis = analysis
				if all_methods:
					entry.neighbor_analysis_by_method[method.value] = analysis
			return entry

		if self.config.use_parallel and x.n_rows >= self.config.parallel_threshold:
			with ThreadPoolExecutor(max_workers=self.config.max_workers) as pool:
				entries = list(pool.map(analyse, indices))
		else:
			entries = [analyse(i) for i in indices]
		self.log.record(f"Explainability analysis completed for {len(indices)} observations.")
		return ExplainabilityReport(dict(zip(indices, entries, strict=True)))
