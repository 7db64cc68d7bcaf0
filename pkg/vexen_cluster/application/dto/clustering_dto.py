"""DTOs for clustering results."""

from dataclasses import dataclass, field

from vexen_cluster.application.dto.explain_dto import ExplainabilityReport
from vexen_cluster.domain.entity.cluster_labels import ClusterLabels
from vexen_cluster.domain.entity.metrics_record import MetricsRecord
from vexen_cluster.domain.vo.similarity_method import SimilarityMethod


@dataclass
class MethodResult:
	"""Clustering produced by one similarity method"""

	method: SimilarityMethod
	labels: ClusterLabels

	@property
	def n_clusters(self) -> int:
		return self.labels.n_clusters


@dataclass
class ScoredMethod:
	"""A method result with its metrics and composite score"""

	result: MethodResult
	metrics: MetricsRecord | None = None
	score: float | None = None


@dataclass
class BestClustering:
	"""
	Winner of find_best.

	Attributes:
		labels: Labels of the winning method
		method: Winning method
		candidates: Every evaluated method, in configured order
	"""

	labels: ClusterLabels
	method: SimilarityMethod
	candidates: list[ScoredMethod] = field(default_factory=list)


@dataclass
class FitPredictResult:
	"""
	Outcome of the full fit_predict pipeline.

	Attributes:
		labels: Canonical labels of every input row
		best_method: Winning similarity method
		candidates: Scored methods considered by find_best
		explainability: Per-observation report, empty when disabled
	"""

	labels: ClusterLabels
	best_method: SimilarityMethod
	candidates: list[ScoredMethod] = field(default_factory=list)
	explainability: ExplainabilityReport = field(default_factory=ExplainabilityReport)
