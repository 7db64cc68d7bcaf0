"""Clustering and benchmark use cases."""

from .bench import BenchUseCaseFactory
from .clustering import ClusteringUseCaseFactory

__all__ = ["BenchUseCaseFactory", "ClusteringUseCaseFactory"]
