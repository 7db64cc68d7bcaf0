"""Dataset source port interface."""

from abc import ABC, abstractmethod

from vexen_cluster.domain.entity.labeled_dataset import LabeledDataset


class IDatasetSourcePort(ABC):
	"""Interface for the datasets the benchmark harness runs on"""

	@abstractmethod
	def named(self, name: str, seed: int) -> LabeledDataset:
		"""
		Get a named dataset.

		Args:
			name: Dataset name
			seed: Generation seed

		Returns:
			The dataset

		Raises:
			DatasetError: If the name is unknown
		"""
		pass

	@abstractmethod
	def blobs(self, n: int, d: int, seed: int) -> LabeledDataset:
		"""Seeded Gaussian blobs of shape (n, d) for timing runs"""
		pass
