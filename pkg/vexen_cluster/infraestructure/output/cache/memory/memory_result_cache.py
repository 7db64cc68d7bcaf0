"""In-memory implementation of the result cache."""

import threading
from collections.abc import Hashable
from typing import Any

from vexen_cluster.domain.repository.result_cache_port import IResultCachePort


class InMemoryResultCache(IResultCachePort):
	"""Unbounded, lock-protected memo; the first stored value for a key wins"""

	def __init__(self):
		self._entries: dict[Hashable, Any] = {}
		self._lock = threading.Lock()

	def get(self, key: Hashable) -> Any | None:
		with self._lock:
			return self._entries.get(key)

	def put(self, key: Hashable, value: Any) -> None:
		with self._lock:
			self._entries.setdefault(key, value)

	def __contains__(self, key: Hashable) -> bool:
		with self._lock:
			return key in self._entries

	def __len__(self) -> int:
		with self._lock:
			return len(self._entries)
