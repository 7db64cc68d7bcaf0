"""Seeded synthetic dataset generators."""

from collections.abc import Sequence

import numpy as np
from numpy.typing import NDArray
from sklearn import datasets as skdatasets

from vexen_cluster.domain.entity.cluster_labels import ClusterLabels
from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.entity.labeled_dataset import LabeledDataset
from vexen_cluster.shared.exceptions import DatasetError

DEFAULT_SAMPLES = 300
DEFAULT_FEATURES = 2
DEFAULT_CENTER_BOX = (-10.0, 10.0)
ANISOTROPY = np.array([[0.6, -0.6], [-0.4, 0.8]])


def _dataset(
	name: str,
	x: NDArray[np.float64],
	truth: NDArray[np.int64] | None,
	seed: int,
	**params,
) -> LabeledDataset:
	labels: ClusterLabels | None = None
	if truth is not None:
		# keep generator ids (center index, arc id) rather than first-occurrence order
		labels = ClusterLabels(np.asarray(truth, dtype=np.int64))
	return LabeledDataset(name=name, x=DataMatrix(x), truth=labels, seed=seed, params=params)


def make_blobs(
	n: int | Sequence[int] = DEFAULT_SAMPLES,
	d: int = DEFAULT_FEATURES,
	centers: int | Sequence[Sequence[float]] = 3,
	std: float | Sequence[float] = 1.0,
	center_box: tuple[float, float] = DEFAULT_CENTER_BOX,
	seed: int = 0,
	name: str = "blobs",
) -> LabeledDataset:
	"""
	Isotropic Gaussian blobs; truth is the center index.

	Args:
		n: Total samples (balanced to within one) or samples per center
		d: Features, ignored when centers are explicit
		centers: Number of centers drawn uniformly in center_box^d, or the centers
		std: Standard deviation, shared or one per center
		center_box: Bounds of random centers
		seed: Random seed

	Raises:
		DatasetError: If a per-center list does not match the center count
	"""
	n_centers = centers if isinstance(centers, int) else len(centers)
	if not isinstance(std, int | float) and len(std) != n_centers:
		raise DatasetError(f"Got {len(std)} standard deviations for {n_centers} centers")
	if not isinstance(n, int) and len(n) != n_centers:
		raise DatasetError(f"Got {len(n)} sample counts for {n_centers} centers")
	total = n if isinstance(n, int) else sum(n)
	if total < n_centers or n_centers < 1:
		raise DatasetError(f"Need n >= centers >= 1, got n={total}, centers={n_centers}")
	if isinstance(centers, int):
		# per-center counts take random centers from center_box when centers is None
		center_arg = None if not isinstance(n, int) else centers
	else:
		center_arg = np.asarray(centers, dtype=np.float64)
	x, truth = skdatasets.make_blobs(
		n_samples=n if isinstance(n, int) else list(n),
		n_features=d,
		centers=center_arg,
		cluster_std=std if isinstance(std, int | float) else list(std),
		center_box=center_box,
		random_state=seed,
	)
	return _dataset(
		name, x, truth, seed, n=total, d=x.shape[1], centers=n_centers, std=std,
		center_box=center_box,
	)


def make_moons(n: int = DEFAULT_SAMPLES, noise: float = 0.0, seed: int = 0) -> LabeledDataset:
	"""Two interleaving half circles: (cos t, sin t) and (1 - cos t, 0.5 - sin t)"""
	if n < 2:
		raise DatasetError(f"make_moons needs n >= 2, got {n}")
	x, truth = skdatasets.make_moons(n_samples=n, noise=noise or None, random_state=seed)
	return _dataset("moons", x, truth, seed, n=n, noise=noise)


def make_circles(
	n: int = DEFAULT_SAMPLES, noise: float = 0.0, factor: float = 0.5, seed: int = 0
) -> LabeledDataset:
	"""A unit circle around a circle of radius factor; truth 0 is the outer circle"""
	if n < 2:
		raise DatasetError(f"make_circles needs n >= 2, got {n}")
	if not 0 < factor < 1:
		raise DatasetError(f"factor must lie in (0, 1), got {factor}")
	x, truth = skdatasets.make_circles(
		n_samples=n, noise=noise or None, factor=factor, random_state=seed
	)
	return _dataset("circles", x, truth, seed, n=n, noise=noise, factor=factor)


def make_anisotropic(
	n: int, d: int, centers: int, std: float | Sequence[float], seed: int
) -> LabeledDataset:
	"""Blobs sheared by ANISOTROPY on the first two features"""
	blobs = make_blobs(n=n, d=d, centers=centers, std=std, seed=seed)
	transform = np.eye(d)
	transform[:2, :2] = ANISOTROPY
	return _dataset("anisotropic", blobs.x.values @ transform, blobs.truth.assignments, seed,
		n=n, d=d, centers=centers, std=std)


def make_concentric_rings(
	n: int,
	radii: Sequence[float],
	noise: float,
	seed: int,
	gap: float = 0.0,
) -> LabeledDataset:
	"""
	Rings of the given radii with Gaussian noise.

	A positive gap removes an arc of that many radians from every ring,
	rotated per ring.
	"""
	rng = np.random.default_rng(seed)
	sizes = np.full(len(radii), n // len(radii))
	sizes[: n % len(radii)] += 1
	points, truth = [], []
	for ring, (radius, size) in enumerate(zip(radii, sizes, strict=True)):
		start = ring * 2.0 * np.pi / len(radii)
		angles = start + gap / 2.0 + rng.uniform(0.0, 2.0 * np.pi - gap, size)
		ring_points = radius * np.column_stack([np.cos(angles), np.sin(angles)])
		points.append(ring_points + rng.normal(0.0, noise, ring_points.shape))
		truth.append(np.full(size, ring))
	return _dataset("rings", np.vstack(points), np.concatenate(truth), seed,
		n=n, radii=list(radii), noise=noise, gap=gap)


def make_checkerboard(n: int, grid: int, seed: int) -> LabeledDataset:
	"""Uniform points on a grid x grid board; truth is the square colour"""
	rng = np.random.default_rng(seed)
	x = rng.uniform(0.0, float(grid), size=(n, 2))
	truth = (np.floor(x[:, 0]) + np.floor(x[:, 1])).astype(np.int64) % 2
	return _dataset("checkerboard", x, truth, seed, n=n, grid=grid)


def make_xor(n: int, seed: int) -> LabeledDataset:
	"""Uniform points in [-1, 1]^2; truth is the XOR of the coordinate signs"""
	rng = np.random.default_rng(seed)
	x = rng.uniform(-1.0, 1.0, size=(n, 2))
	truth = ((x[:, 0] > 0) ^ (x[:, 1] > 0)).astype(np.int64)
	return _dataset("xor", x, truth, seed, n=n)


def make_friedman(n: int, seed: int) -> LabeledDataset:
	"""
	Five uniform inputs plus y = 10 sin(pi x1 x2) + 20 (x3 - 0.5)^2 + 10 x4 + 5 x5.

	No ground truth.
	"""
	inputs, y = skdatasets.make_friedman1(n_samples=n, n_features=5, noise=0.0, random_state=seed)
	return _dataset("friedman", np.column_stack([inputs, y]), None, seed, n=n)


def make_uniform(n: int, d: int, scale: float, seed: int) -> LabeledDataset:
	"""Structureless uniform scatter on [0, scale)^d"""
	rng = np.random.default_rng(seed)
	return _dataset("uniform", rng.uniform(0.0, scale, size=(n, d)), None, seed,
		n=n, d=d, scale=scale)


def make_random_walk(n: int, d: int, seed: int) -> LabeledDataset:
	"""Cumulative sums of standard normal steps"""
	rng = np.random.default_rng(seed)
	return _dataset("random_walk", np.cumsum(rng.normal(size=(n, d)), axis=0), None, seed,
		n=n, d=d)


def make_sparse_binary(n: int, d: int, density: float, seed: int) -> LabeledDataset:
	"""Binary matrix with P(1) = density"""
	rng = np.random.default_rng(seed)
	x = (rng.uniform(size=(n, d)) < density).astype(np.float64)
	return _dataset("sparse_binary", x, None, seed, n=n, d=d, density=density)


def make_correlated(n: int, d: int, noise: float, seed: int) -> LabeledDataset:
	"""Every feature is one shared standard normal factor plus additive noise"""
	rng = np.random.default_rng(seed)
	factor = rng.normal(size=(n, 1))
	x = factor + rng.normal(0.0, noise, size=(n, d))
	return _dataset("correlated", x, None, seed, n=n, d=d, noise=noise)


def make_swiss_roll_2d(n: int, noise: float, seed: int) -> LabeledDataset:
	"""Swiss roll projected onto its (x, z) plane; no ground truth"""
	x, _ = skdatasets.make_swiss_roll(n_samples=n, noise=noise, random_state=seed)
	return _dataset("swiss_roll_2d", x[:, [0, 2]], None, seed, n=n, noise=noise)


def make_swiss_roll_3d(n: int, noise: float, seed: int) -> LabeledDataset:
	"""Three-dimensional swiss roll; no ground truth"""
	x, _ = skdatasets.make_swiss_roll(n_samples=n, noise=noise, random_state=seed)
	return _dataset("swiss_roll_3d", x, None, seed, n=n, noise=noise)


def make_spirals(n: int, arms: int, noise: float, seed: int) -> LabeledDataset:
	"""Interleaved Archimedean spirals; truth is the arm"""
	rng = np.random.default_rng(seed)
	arm = np.arange(n) % arms
	t = np.sqrt(rng.uniform(0.0, 1.0, n)) * 3.0 * np.pi + 0.5
	phase = arm * 2.0 * np.pi / arms
	x = np.column_stack([t * np.cos(t + phase), t * np.sin(t + phase)])
	return _dataset("spirals", x + rng.normal(0.0, noise, x.shape), arm, seed,
		n=n, arms=arms, noise=noise)


def make_sine_waves(n: int, waves: int, noise: float, seed: int) -> LabeledDataset:
	"""Sine curves stacked with a vertical offset of 2.5; truth is the curve"""
	rng = np.random.default_rng(seed)
	wave = np.arange(n) % waves
	t = rng.uniform(0.0, 2.0 * np.pi, n)
	x = np.column_stack([t, np.sin(t) + 2.5 * wave])
	return _dataset("sine_waves", x + rng.normal(0.0, noise, x.shape), wave, seed,
		n=n, waves=waves, noise=noise)


def make_winding(n: int, curves: int, seed: int) -> LabeledDataset:
	"""Phase-shifted sinusoids winding around each other; truth is the curve"""
	rng = np.random.default_rng(seed)
	curve = np.arange(n) % curves
	t = rng.uniform(0.0, 4.0 * np.pi, n)
	phase = curve * np.pi / curves
	x = np.column_stack([t, 2.0 * np.sin(t + phase) + 0.5 * np.sin(3.0 * t)])
	return _dataset("winding", x + rng.normal(0.0, 0.05, x.shape), curve, seed, n=n, curves=curves)


def make_periodic(n: int, periods: int, noise: float, seed: int) -> LabeledDataset:
	"""Sawtooth ramps repeating along x; truth is the period index"""
	rng = np.random.default_rng(seed)
	t = rng.uniform(0.0, float(periods), n)
	truth = np.floor(t).astype(np.int64)
	x = np.column_stack([t, (t - truth) * 2.0])
	return _dataset("periodic", x + rng.normal(0.0, noise, x.shape), truth, seed,
		n=n, periods=periods, noise=noise)
