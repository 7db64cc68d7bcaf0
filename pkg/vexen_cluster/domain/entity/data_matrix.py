"""Data matrix entity: n observations by d features."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from vexen_cluster.shared.exceptions import InvalidDataError


@dataclass(frozen=True, eq=False)
class DataMatrix:
	"""
	Fully materialised matrix of finite reals.

	Attributes:
		values: Read-only float64 array of shape (n_rows, n_cols)
	"""

	values: NDArray[np.float64]

	def __post_init__(self):
		"""Validate shape and finiteness, then freeze the buffer"""
		values = np.array(self.values, dtype=np.float64, order="C", copy=True)
		if values.ndim != 2:
			raise InvalidDataError(f"DataMatrix must be 2-D, got {values.ndim}-D")
		if values.shape[0] < 1 or values.shape[1] < 1:
			raise InvalidDataError(
				f"DataMatrix needs at least one row and column, got {values.shape}"
			)
		if not np.all(np.isfinite(values)):
			row, col = np.argwhere(~np.isfinite(values))[0]
			raise InvalidDataError(f"Non-finite value at row {row}, column {col}")
		values.setflags(write=False)
		object.__setattr__(self, "values", values)

	@classmethod
	def from_array(cls, data: ArrayLike) -> "DataMatrix":
		"""
		Build a matrix from 1-D or 2-D input.

		1-D input is treated as n observations of a single feature.

		Raises:
			InvalidDataError: If the input has more than two dimensions
		"""
		array = np.asarray(data, dtype=np.float64)
		if array.ndim == 1:
			array = array.reshape(-1, 1)
		elif array.ndim > 2:
			raise InvalidDataError("Input array X should be 1D or 2D.")
		return cls(array)

	@property
	def n_rows(self) -> int:
		return int(self.values.shape[0])

	@property
	def n_cols(self) -> int:
		return int(self.values.shape[1])

	@property
	def shape(self) -> tuple[int, int]:
		return self.n_rows, self.n_cols

	def take_rows(self, indices: ArrayLike) -> "DataMatrix":
		"""Return the sub-matrix made of the given rows"""
		return DataMatrix(self.values[np.asarray(indices, dtype=np.intp)])

	def __len__(self) -> int:
		return self.n_rows

	def __eq__(self, other: object) -> bool:
		if not isinstance(other, DataMatrix):
			return NotImplemented
		return self.shape == other.shape and bool(np.array_equal(self.values, other.values))

	def __hash__(self) -> int:
		return hash((self.shape, self.values.tobytes()))
