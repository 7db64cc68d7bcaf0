"""Fitted PCA model entity."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray


@dataclass(frozen=True, eq=False)
class PcaModel:
	"""
	Principal axes of a data matrix.

	Attributes:
		mean: Column means, shape (d,)
		component_matrix: Orthonormal columns, shape (d, r)
		explained_variance: Eigenvalues, non-increasing, shape (r,)
		total_variance: Sum of all eigenvalues of the covariance
	"""

	mean: NDArray[np.float64]
	component_matrix: NDArray[np.float64]
	explained_variance: NDArray[np.float64]
	total_variance: float

	@property
	def n_components(self) -> int:
		return int(self.component_matrix.shape[1])

	@property
	def n_features(self) -> int:
		return int(self.component_matrix.shape[0])

	@property
	def explained_variance_ratio(self) -> NDArray[np.float64]:
		if self.total_variance <= 0:
			return np.zeros_like(self.explained_variance)
		return self.explained_variance / self.total_variance
