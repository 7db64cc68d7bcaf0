"""Similarity cache port (interface) for content-addressed matrix reuse."""

from abc import ABC, abstractmethod

from vexen_cluster.domain.entity.similarity_matrix import SimilarityMatrix
from vexen_cluster.domain.vo.fingerprint import MatrixFingerprint
from vexen_cluster.domain.vo.similarity_method import SimilarityMethod


class ISimilarityCachePort(ABC):
	"""
	Interface for similarity matrix caching.

	Entries are keyed by (data fingerprint, method). A hit must return a
	matrix bit-identical to the stored one. Implementations must allow
	concurrent readers; two workers inserting the same key is harmless
	because the values are deterministic.
	"""

	@abstractmethod
	def get(
		self, fingerprint: MatrixFingerprint, method: SimilarityMethod
	) -> SimilarityMatrix | None:
		"""
		Retrieve a cached matrix and update the hit/miss counters.

		Args:
			fingerprint: Fingerprint of the source data
			method: Similarity method

		Returns:
			The cached matrix, or None on a miss
		"""
		pass

	@abstractmethod
	def put(
		self, fingerprint: MatrixFingerprint, method: SimilarityMethod, matrix: SimilarityMatrix
	) -> None:
		"""
		Store a matrix.

		Args:
			fingerprint: Fingerprint of the source data
			method: Similarity method
			matrix: Matrix to cache
		"""
		pass

	@property
	@abstractmethod
	def hits(self) -> int:
		"""Number of successful lookups"""
		pass

	@property
	@abstractmethod
	def misses(self) -> int:
		"""Number of failed lookups"""
		pass

	@abstractmethod
	def clear(self) -> None:
		"""Drop every entry and reset the counters."""
		pass
