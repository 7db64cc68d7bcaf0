"""Named synthetic datasets and their generator parameters."""

import dataclasses
import logging
from collections.abc import Callable

from vexen_cluster.domain.entity.labeled_dataset import LabeledDataset
from vexen_cluster.infraestructure.input.synthetic import generators as gen
from vexen_cluster.shared.exceptions import DatasetError

logger = logging.getLogger(__name__)

DatasetFactory = Callable[[int], LabeledDataset]

# Unspecified sizes default to gen.DEFAULT_SAMPLES rows and gen.DEFAULT_FEATURES features
NAMED_DATASETS: dict[str, DatasetFactory] = {
	"Aggregated Clusters": lambda seed: gen.make_blobs(300, 2, 8, 0.3, seed=seed),
	"Anisotropic": lambda seed: gen.make_anisotropic(400, 6, 3, [0.5, 1.5, 0.5], seed),
	"Blobs": lambda seed: gen.make_blobs(100, 4, 4, 1.0, seed=seed),
	"Broken Rings": lambda seed: gen.make_concentric_rings(
		300, [1.0, 2.0, 3.0], 0.1, seed, gap=1.0
	),
	"Checkerboard": lambda seed: gen.make_checkerboard(300, 9, seed),
	"Circles": lambda seed: gen.make_circles(250, 0.05, seed=seed),
	"Concentric Spheres": lambda seed: gen.make_concentric_rings(
		300, [1.0, 0.6, 0.3], 0.02, seed
	),
	"Disjoint Clusters": lambda seed: gen.make_blobs(
		300, 2, [[-10.0, -10.0], [0.0, 10.0], [10.0, -10.0]], 1.0, seed=seed
	),
	"Feature Entanglement": lambda seed: gen.make_xor(300, seed),
	"Friedman's Function": lambda seed: gen.make_friedman(1000, seed),
	"Gaussian Mixture": lambda seed: gen.make_blobs(
		500, 3, 5, [0.5, 1.0, 1.5, 2.0, 2.5], seed=seed
	),
	"Hierarchical Clusters": lambda seed: gen.make_blobs(
		[120, 60, 90, 30],
		3,
		[[0.0, 0.0, 0.0], [5.0, 5.0, 5.0], [5.0, -5.0, 0.0], [-5.0, 5.0, -5.0]],
		[0.5, 1.0, 0.3, 0.8],
		seed=seed,
	),
	"High Dimensional Blobs": lambda seed: gen.make_blobs(300, 10, 5, 1.0, seed=seed),
	"Highly Correlated Features": lambda seed: gen.make_correlated(300, 2, 0.1, seed),
	"Interlocking Moons": lambda seed: gen.make_moons(800, 0.2, seed),
	"Manifold Learning Dataset": lambda seed: gen.make_swiss_roll_3d(300, 0.1, seed),
	"Moons": lambda seed: gen.make_moons(200, 0.1, seed),
	"Nested Clusters": lambda seed: gen.make_blobs(
		350, 2, [[0.0, 0.0], [1.5, 1.5], [-1.5, 1.5]], [0.5, 0.2, 0.3], seed=seed
	),
	"No structure": lambda seed: gen.make_uniform(300, 2, 1.0, seed),
	"Non-spherical Gaussian Mixture": lambda seed: gen.make_blobs(
		300, 2, 3, [1.0, 2.0, 3.0], seed=seed
	),
	"Overlapping Circles": lambda seed: gen.make_circles(500, 0.1, seed=seed),
	"Periodic Patterns": lambda seed: gen.make_periodic(300, 4, 0.05, seed),
	"Random Uniform Scatter": lambda seed: gen.make_uniform(1000, 2, 100.0, seed),
	"Random Walk Clusters": lambda seed: gen.make_random_walk(1000, 2, seed),
	"Shifting Variance Clusters": lambda seed: gen.make_blobs(
		300, 2, 3, [0.5, 1.5, 2.5], seed=seed
	),
	"Simple Blobs": lambda seed: gen.make_blobs(300, 2, 4, 1.0, seed=seed),
	"Sine Wave Clusters": lambda seed: gen.make_sine_waves(200, 4, 0.1, seed),
	"Sparse High-Dimensional": lambda seed: gen.make_sparse_binary(200, 100, 0.05, seed),
	"Spirals": lambda seed: gen.make_spirals(300, 2, 0.0, seed),
	"Stretched Blobs": lambda seed: gen.make_blobs(
		300, 2, 3, 0.5, center_box=(20.0, 100.0), seed=seed
	),
	"Swiss Roll": lambda seed: gen.make_swiss_roll_2d(300, 0.1, seed),
	"Varied Density": lambda seed: gen.make_blobs(100, 12, 3, [1.0, 2.5, 0.5], seed=seed),
	"Winding Function Clusters": lambda seed: gen.make_winding(200, 2, seed),
}

_BY_KEY = {name.casefold(): name for name in NAMED_DATASETS}


def dataset_names() -> list[str]:
	"""Registered dataset names in alphabetical order"""
	return sorted(NAMED_DATASETS)


def resolve_name(name: str) -> str:
	"""
	Map a case-insensitive dataset name to its registered spelling.

	Raises:
		DatasetError: If the name is not registered
	"""
	canonical = _BY_KEY.get(name.strip().casefold())
	if canonical is None:
		known = ", ".join(dataset_names())
		raise DatasetError(f"Unknown dataset: {name!r}. Known datasets: {known}")
	return canonical


def make_named(name: str, seed: int = 0) -> LabeledDataset:
	"""
	Generate a registered dataset.

	Args:
		name: Registered name, matched case-insensitively
		seed: Random seed

	Returns:
		LabeledDataset named after the registry entry

	Raises:
		DatasetError: If the name is not registered
	"""
	canonical = resolve_name(name)
	dataset = NAMED_DATASETS[canonical](seed)
	logger.debug("Generated %s with shape %s (seed=%d)", canonical, dataset.x.shape, seed)
	return dataclasses.replace(dataset, name=canonical)
