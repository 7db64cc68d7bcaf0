"""Similarity matrix entity."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from vexen_cluster.domain.vo.similarity_method import SimilarityMethod


@dataclass(frozen=True, eq=False)
class SimilarityMatrix:
	"""
	Square, symmetric table of observation similarities.

	Attributes:
		values: Read-only float64 array of shape (n, n)
		method: Measure the matrix was computed with
	"""

	values: NDArray[np.float64]
	method: SimilarityMethod

	def __post_init__(self):
		values = np.asarray(self.values, dtype=np.float64)
		# 0-d and 1-d results are promoted to 2-d
		if values.ndim == 0:
			values = values.reshape(1, 1)
		elif values.ndim == 1:
			values = values.reshape(1, -1)
		if values.flags.writeable:
			values = values.copy()
			values.setflags(write=False)
		object.__setattr__(self, "values", values)

	@property
	def size(self) -> int:
		return int(self.values.shape[0])

	def is_scalar(self) -> bool:
		"""True for a single-element matrix"""
		return self.values.size == 1

	def has_distinct_values(self) -> bool:
		"""True if the matrix holds more than one distinct value"""
		return np.unique(self.values).size > 1

	def off_diagonal(self) -> NDArray[np.float64]:
		"""Flattened off-diagonal entries"""
		mask = ~np.eye(self.size, dtype=bool)
		return self.values[mask]
