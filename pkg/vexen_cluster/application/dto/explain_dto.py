"""DTOs for explainability reports."""

from dataclasses import dataclass, field
from typing import Any

import numpy as np
from numpy.typing import NDArray


@dataclass
class SimilarityAnalysis:
	"""
	Attributes:
		similarities: Pearson similarity of the observation to every row
		contributions: Shape (d, n); contributions[f][j] = |x[j, f] - x[i, f]|
	"""

	similarities: NDArray[np.float64]
	contributions: NDArray[np.float64]

	def to_dict(self) -> dict[str, Any]:
		return {
			"similarities": self.similarities.tolist(),
			"contributions": {
				str(f): row.tolist() for f, row in enumerate(self.contributions)
			},
		}


@dataclass
class NeighborAnalysis:
	"""
	Attributes:
		method: Similarity method the neighbours were ranked by
		nearest_neighbors: Neighbour indices, most similar first
		neighbor_contributions: Shape (k, d) absolute feature differences
	"""

	method: str
	nearest_neighbors: list[int]
	neighbor_contributions: NDArray[np.float64]

	def to_dict(self) -> dict[str, Any]:
		return {
			"method": self.method,
			"nearest_neighbors": list(self.nearest_neighbors),
			"neighbor_contributions": {
				str(j): row.tolist()
				for j, row in zip(self.nearest_neighbors, self.neighbor_contributions, strict=True)
			},
		}


@dataclass
class ObservationReport:
	"""Explainability entries of one observation"""

	similarity_analysis: SimilarityAnalysis | None = None
	neighbor_analysis: NeighborAnalysis | None = None
	neighbor_analysis_by_method: dict[str, NeighborAnalysis] = field(default_factory=dict)

	def to_dict(self) -> dict[str, Any]:
		result: dict[str, Any] = {}
		if self.similarity_analysis is not None:
			result["similarity_analysis"] = self.similarity_analysis.to_dict()
		if self.neighbor_analysis is not None:
			result["neighbor_analysis"] = self.neighbor_analysis.to_dict()
		if self.neighbor_analysis_by_method:
			result["neighbor_analysis_by_method"] = {
				method: analysis.to_dict()
				for method, analysis in self.neighbor_analysis_by_method.items()
			}
		return result


@dataclass
class ExplainabilityReport:
	"""Per-observation explainability results keyed by observation index"""

	observations: dict[int, ObservationReport] = field(default_factory=dict)

	def __len__(self) -> int:
		return len(self.observations)

	def __getitem__(self, index: int) -> ObservationReport:
		return self.observations[index]

	def __contains__(self, index: object) -> bool:
		return index in self.observations

	def to_dict(self) -> dict[str, Any]:
		"""JSON-compatible tree ordered by observation index"""
		return {str(i): self.observations[i].to_dict() for i in sorted(self.observations)}
