"""Domain provider ports."""

from .clustering_algorithm_port import IClusteringAlgorithmPort
from .dataset_source_port import IDatasetSourcePort

__all__ = ["IClusteringAlgorithmPort", "IDatasetSourcePort"]
