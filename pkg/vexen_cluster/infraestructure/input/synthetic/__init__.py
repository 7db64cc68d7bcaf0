"""Synthetic dataset generators."""

from vexen_cluster.infraestructure.input.synthetic.generators import (
	make_blobs,
	make_circles,
	make_moons,
)
from vexen_cluster.infraestructure.input.synthetic.registry import (
	NAMED_DATASETS,
	dataset_names,
	make_named,
	resolve_name,
)
from vexen_cluster.infraestructure.input.synthetic.synthetic_source import SyntheticDatasetSource

__all__ = [
	"NAMED_DATASETS",
	"SyntheticDatasetSource",
	"dataset_names",
	"make_blobs",
	"make_circles",
	"make_moons",
	"make_named",
	"resolve_name",
]
