"""Domain repository ports."""

from .result_cache_port import IResultCachePort
from .run_repository_port import IRunRepositoryPort
from .similarity_cache_port import ISimilarityCachePort

__all__ = [
	"IResultCachePort",
	"IRunRepositoryPort",
	"ISimilarityCachePort",
]
