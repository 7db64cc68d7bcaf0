"""Labeled dataset entity."""

from dataclasses import dataclass, field
from typing import Any

from vexen_cluster.domain.entity.cluster_labels import ClusterLabels
from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.shared.exceptions import DatasetError


@dataclass(frozen=True)
class LabeledDataset:
	"""
	A data matrix with optional ground truth.

	Attributes:
		name: Dataset name
		x: Observations
		truth: Ground-truth labels, if known
		seed: Seed the dataset was generated with (0 for loaded data)
		params: Generator parameters
	"""

	name: str
	x: DataMatrix
	truth: ClusterLabels | None = None
	seed: int = 0
	params: dict[str, Any] = field(default_factory=dict)

	def __post_init__(self):
		if self.truth is not None and len(self.truth) != self.x.n_rows:
			raise DatasetError(
				f"Ground truth has {len(self.truth)} labels for {self.x.n_rows} rows"
			)

	@property
	def n_clusters(self) -> int | None:
		return self.truth.n_clusters if self.truth is not None else None
