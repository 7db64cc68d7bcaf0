"""Redis cache implementation."""

from .redis_similarity_cache import RedisSimilarityCache

__all__ = ["RedisSimilarityCache"]
