"""Application services."""

from .bench_service import BenchService
from .clustering_service import ClusteringService

__all__ = ["BenchService", "ClusteringService"]
