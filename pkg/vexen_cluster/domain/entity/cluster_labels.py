"""Cluster label entity and canonicalisation."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from vexen_cluster.shared.exceptions import InvalidDataError


def canonicalize_labels(raw: ArrayLike) -> "ClusterLabels":
	"""
	Relabel so that first occurrences read 0, 1, 2, ...

	Args:
		raw: Non-empty sequence of integer labels

	Returns:
		ClusterLabels with the same partition as raw

	Example:
		>>> canonicalize_labels([5, 5, 2, 9, 2]).assignments.tolist()
		[0, 0, 1, 2, 1]
	"""
	values = np.asarray(raw).ravel()
	if values.size == 0:
		raise InvalidDataError("Cannot canonicalize an empty label sequence")
	_, first_index, inverse = np.unique(values, return_index=True, return_inverse=True)
	# rank of each distinct label by position of its first occurrence
	order = np.argsort(first_index, kind="stable")
	rank = np.empty_like(order)
	rank[order] = np.arange(order.size)
	return ClusterLabels(rank[inverse.ravel()].astype(np.int64))


@dataclass(frozen=True, eq=False)
class ClusterLabels:
	"""
	Cluster assignment of n observations.

	Labels are any non-negative ids. canonicalize_labels yields the
	first-occurrence form; same_partition ignores the difference.

	Attributes:
		assignments: Read-only int64 array of non-negative ids
	"""

	assignments: NDArray[np.int64]

	def __post_init__(self):
		values = np.asarray(self.assignments, dtype=np.int64).ravel()
		if values.size == 0:
			raise InvalidDataError("ClusterLabels cannot be empty")
		if values.min() < 0:
			raise InvalidDataError("Cluster labels must be non-negative")
		values = values.copy()
		values.setflags(write=False)
		object.__setattr__(self, "assignments", values)

	@property
	def n_clusters(self) -> int:
		return int(np.unique(self.assignments).size)

	def __len__(self) -> int:
		return int(self.assignments.size)

	def tolist(self) -> list[int]:
		return [int(v) for v in self.assignments]

	def members(self) -> list[NDArray[np.intp]]:
		"""Index arrays of every cluster, ordered by ascending label id"""
		return [np.flatnonzero(self.assignments == label) for label in np.unique(self.assignments)]

	def same_partition(self, other: "ClusterLabels") -> bool:
		"""True if both labellings induce the same partition"""
		if len(self) != len(other):
			return False
		return np.array_equal(
			canonicalize_labels(self.assignments).assignments,
			canonicalize_labels(other.assignments).assignments,
		)

	def __eq__(self, other: object) -> bool:
		if not isinstance(other, ClusterLabels):
			return NotImplemented
		return np.array_equal(self.assignments, other.assignments)

	def __hash__(self) -> int:
		return hash(self.assignments.tobytes())
