import numpy as np
import pytest

from vexen_cluster.domain.entity.similarity_matrix import SimilarityMatrix
from vexen_cluster.domain.service.hashing import fingerprint_array
from vexen_cluster.domain.vo.fingerprint import MatrixFingerprint
from vexen_cluster.domain.vo.similarity_method import SimilarityMethod
from vexen_cluster.infraestructure.output.cache.memory import (
	InMemoryResultCache,
	InMemorySimilarityCache,
)


def test_fingerprint_depends_on_shape_and_values():
	a = fingerprint_array([[1.0, 2.0], [3.0, 4.0]])
	assert a == fingerprint_array(np.array([[1, 2], [3, 4]]))
	assert a != fingerprint_array([[1.0, 2.0, 3.0, 4.0]])
	assert a != fingerprint_array([[1.0, 2.0], [3.0, 4.5]])
	assert fingerprint_array([1.0, 2.0]) == fingerprint_array([[1.0], [2.0]])


def test_fingerprint_rejects_malformed_digest():
	with pytest.raises(ValueError):
		MatrixFingerprint("not-a-digest")


def test_similarity_cache_keeps_first_writer_and_counts():
	cache = InMemorySimilarityCache()
	key = fingerprint_array(np.eye(2))
	first = SimilarityMatrix(np.eye(2), SimilarityMethod.COSINE)
	second = SimilarityMatrix(np.ones((2, 2)), SimilarityMethod.COSINE)

	assert cache.get(key, SimilarityMethod.COSINE) is None
	cache.put(key, SimilarityMethod.COSINE, first)
	cache.put(key, SimilarityMethod.COSINE, second)

	assert cache.get(key, SimilarityMethod.COSINE) is first
	assert cache.get(key, SimilarityMethod.CORRELATION) is None
	assert (cache.hits, cache.misses, len(cache)) == (1, 2, 1)

	cache.clear()
	assert (cache.hits, cache.misses, len(cache)) == (0, 0, 0)


def test_result_cache_keeps_first_writer():
	cache = InMemoryResultCache()
	cache.put(("metrics", "abc"), 1)
	cache.put(("metrics", "abc"), 2)
	assert cache.get(("metrics", "abc")) == 1
	assert ("metrics", "abc") in cache
	assert cache.get("missing") is None


class FakeRedis:
	"""Dictionary standing in for a Redis client"""

	def __init__(self):
		self.store: dict[str, bytes] = {}

	def get(self, key):
		return self.store.get(key)

	def set(self, key, value, ex=None, nx=False):
		if nx and key in self.store:
			return None
		self.store[key] = value
		return True

	def scan_iter(self, match):
		prefix = match.rstrip("*")
		return [k for k in self.store if k.startswith(prefix)]

	def delete(self, *keys):
		for key in keys:
			self.store.pop(key, None)

	def close(self):
		pass


def test_redis_cache_stores_matrices_as_little_endian_doubles():
	pytest.importorskip("redis")
	from vexen_cluster.infraestructure.output.cache.redis import RedisSimilarityCache

	cache = RedisSimilarityCache(prefix="test")
	cache._client = FakeRedis()
	values = np.array([[1.0, 0.25, -0.5], [0.25, 1.0, 0.0], [-0.5, 0.0, 1.0]])
	matrix = SimilarityMatrix(values, SimilarityMethod.KERNEL)
	key = fingerprint_array(values)

	payload = RedisSimilarityCache.encode(matrix)
	assert len(payload) == 8 + 9 * 8
	assert int.from_bytes(payload[:8], "little") == 3

	assert cache.get(key, SimilarityMethod.KERNEL) is None
	cache.put(key, SimilarityMethod.KERNEL, matrix)
	cache.put(key, SimilarityMethod.KERNEL, SimilarityMatrix(np.eye(3), SimilarityMethod.KERNEL))
	restored = cache.get(key, SimilarityMethod.KERNEL)

	assert restored is not None
	np.testing.assert_array_equal(restored.values, values)
	assert restored.method is SimilarityMethod.KERNEL
	assert (cache.hits, cache.misses) == (1, 1)

	cache.clear()
	assert cache.get(key, SimilarityMethod.KERNEL) is None
