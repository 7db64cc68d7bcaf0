"""Result cache port for memoised PCA projections and metrics."""

from abc import ABC, abstractmethod
from collections.abc import Hashable
from typing import Any


class IResultCachePort(ABC):
	"""Interface for a key-value memo of intermediate results"""

	@abstractmethod
	def get(self, key: Hashable) -> Any | None:
		"""Return the cached value or None"""
		pass

	@abstractmethod
	def put(self, key: Hashable, value: Any) -> None:
		"""Store a value"""
		pass

	@abstractmethod
	def __contains__(self, key: Hashable) -> bool:
		pass

	@abstractmethod
	def __len__(self) -> int:
		pass
