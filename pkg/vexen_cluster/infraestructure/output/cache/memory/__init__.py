"""In-memory cache implementations."""

from .memory_result_cache import InMemoryResultCache
from .memory_similarity_cache import InMemorySimilarityCache

__all__ = ["InMemoryResultCache", "InMemorySimilarityCache"]
