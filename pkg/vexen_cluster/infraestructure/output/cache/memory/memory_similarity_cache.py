"""In-memory implementation of the similarity cache."""

import threading

from vexen_cluster.domain.entity.similarity_matrix import SimilarityMatrix
from vexen_cluster.domain.repository.similarity_cache_port import ISimilarityCachePort
from vexen_cluster.domain.vo.fingerprint import MatrixFingerprint
from vexen_cluster.domain.vo.similarity_method import SimilarityMethod


class InMemorySimilarityCache(ISimilarityCachePort):
	"""
	Lock-protected dictionary of similarity matrices.

	Stored matrices are read-only, so hits hand out the stored object itself.
	"""

	def __init__(self):
		self._entries: dict[tuple[str, SimilarityMethod], SimilarityMatrix] = {}
		self._lock = threading.Lock()
		self._hits = 0
		self._misses = 0

	def get(
		self, fingerprint: MatrixFingerprint, method: SimilarityMethod
	) -> SimilarityMatrix | None:
		with self._lock:
			matrix = self._entries.get((fingerprint.digest, method))
			if matrix is None:
				self._misses += 1
			else:
				self._hits += 1
			return matrix

	def put(
		self, fingerprint: MatrixFingerprint, method: SimilarityMethod, matrix: SimilarityMatrix
	) -> None:
		with self._lock:
			self._entries.setdefault((fingerprint.digest, method), matrix)

	@property
	def hits(self) -> int:
		with self._lock:
			return self._hits

	@property
	def misses(self) -> int:
		with self._lock:
			return self._misses

	def clear(self) -> None:
		with self._lock:
			self._entries.clear()
			self._hits = 0
			self._misses = 0

	def __len__(self) -> int:
		with self._lock:
			return len(self._entries)
