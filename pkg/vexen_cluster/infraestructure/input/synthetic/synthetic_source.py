"""Synthetic implementation of the dataset source."""

from vexen_cluster.domain.entity.labeled_dataset import LabeledDataset
from vexen_cluster.domain.provider.dataset_source_port import IDatasetSourcePort
from vexen_cluster.infraestructure.input.synthetic.generators import make_blobs
from vexen_cluster.infraestructure.input.synthetic.registry import make_named

TIMING_CENTERS = 4


class SyntheticDatasetSource(IDatasetSourcePort):
	"""Named datasets from the registry, timing data from make_blobs"""

	def named(self, name: str, seed: int) -> LabeledDataset:
		return make_named(name, seed)

	def blobs(self, n: int, d: int, seed: int) -> LabeledDataset:
		return make_blobs(n, d, centers=min(TIMING_CENTERS, n), std=1.0, seed=seed)
